#pragma once

// Independent reference implementations used as test oracles. Nothing here
// calls the embedding search, the canonical code or the classifier.

#include <subrep/poset.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testing {

using subrep::Mask;
using subrep::Poset;

inline std::vector<std::size_t> indices(const Poset& /*p*/, Mask m) {
    std::vector<std::size_t> out;
    subrep::for_each_bit(m, [&](std::size_t i) { out.push_back(i); });
    return out;
}

// Visits injections src -> dst in lexicographic order; stops when f returns true.
template <typename F>
bool for_each_injection(std::size_t k, const std::vector<std::size_t>& dst, F&& f) {
    std::vector<std::size_t> image(k);
    std::vector<bool> used(dst.size(), false);
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == k) {
            return f(image);
        }
        for (std::size_t j = 0; j < dst.size(); ++j) {
            if (!used[j]) {
                used[j] = true;
                image[i] = dst[j];
                if (self(self, i + 1)) {
                    return true;
                }
                used[j] = false;
            }
        }
        return false;
    };
    return rec(rec, 0);
}

// Lexicographically least order embedding of the suborder on `from` into the
// suborder on `into`, by trying every injection.
inline std::optional<std::vector<std::size_t>> brute_embedding(const Poset& a, Mask from, const Poset& b, Mask into) {
    const auto src = indices(a, from);
    const auto dst = indices(b, into);
    if (src.size() > dst.size()) {
        return std::nullopt;
    }
    std::optional<std::vector<std::size_t>> found;
    for_each_injection(src.size(), dst, [&](const std::vector<std::size_t>& img) {
        for (std::size_t i = 0; i < src.size(); ++i) {
            for (std::size_t j = 0; j < src.size(); ++j) {
                if (a.less(src[i], src[j]) != b.less(img[i], img[j])) {
                    return false;
                }
            }
        }
        found = img;
        return true;
    });
    return found;
}

inline bool brute_embeds(const Poset& a, Mask from, const Poset& b, Mask into) {
    return brute_embedding(a, from, b, into).has_value();
}

inline bool brute_embeds(const Poset& a, const Poset& b) {
    return brute_embeds(a, a.all(), b, b.all());
}

inline bool brute_isomorphic(const Poset& a, Mask ma, const Poset& b, Mask mb) {
    return subrep::popcount(ma) == subrep::popcount(mb) && brute_embeds(a, ma, b, mb);
}

inline bool brute_isomorphic(const Poset& a, const Poset& b) {
    return brute_isomorphic(a, a.all(), b, b.all());
}

inline bool pairwise(const Poset& p, Mask m, bool want_comparable) {
    const auto v = indices(p, m);
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (p.comparable(v[i], v[j]) != want_comparable) {
                return false;
            }
        }
    }
    return true;
}

// Largest chain and antichain by scanning every subset.
inline std::pair<std::size_t, std::size_t> brute_height_width(const Poset& p, Mask m) {
    std::size_t h = 0;
    std::size_t w = 0;
    for (Mask s = m;; s = (s - 1) & m) {
        const auto c = static_cast<std::size_t>(subrep::popcount(s));
        if (c > h && pairwise(p, s, true)) {
            h = c;
        }
        if (c > w && pairwise(p, s, false)) {
            w = c;
        }
        if (s == 0) {
            break;
        }
    }
    return {h, w};
}

// Random poset on n points: a random DAG relation over a hidden linear
// extension, then element order and names shuffled.
inline Poset random_poset(std::mt19937_64& rng, std::size_t n, double density = 0.35) {
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) {
        names[i] = "e" + std::to_string(i);
    }
    std::bernoulli_distribution edge(density);
    std::vector<std::pair<std::string, std::string>> rel;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (edge(rng)) {
                rel.emplace_back("e" + std::to_string(i), "e" + std::to_string(j));
            }
        }
    }
    std::shuffle(names.begin(), names.end(), rng);
    return subrep::poset_from_cover(names, rel);
}

// Same order with element positions permuted by `perm` (new index perm[i]
// holds old element i).
inline Poset relabel(const Poset& p, const std::vector<std::size_t>& perm) {
    const std::size_t n = p.size();
    std::vector<std::string> names(n);
    std::vector<Mask> above(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        names[perm[i]] = p.name(i);
        subrep::for_each_bit(p.up(i), [&](std::size_t j) { above[perm[i]] |= subrep::bit(perm[j]); });
    }
    return Poset::from_relation(names, above);
}

inline std::vector<std::size_t> random_perm(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// Every labeled strict order on n points, by testing all relations.
inline std::vector<std::vector<Mask>> labeled_orders(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                slots.emplace_back(i, j);
            }
        }
    }
    std::vector<std::vector<Mask>> out;
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << slots.size()); ++r) {
        std::vector<Mask> above(n, 0);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if ((r >> s) & 1U) {
                above[slots[s].first] |= subrep::bit(slots[s].second);
            }
        }
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            for (std::size_t j = 0; j < n && ok; ++j) {
                if ((above[i] >> j) & 1U) {
                    ok = !((above[j] >> i) & 1U) && (above[j] & ~above[i]) == 0;
                }
            }
        }
        if (ok) {
            out.push_back(std::move(above));
        }
    }
    return out;
}

inline std::vector<std::pair<int, int>> degree_profile(const Poset& p) {
    std::vector<std::pair<int, int>> d;
    for (std::size_t i = 0; i < p.size(); ++i) {
        d.emplace_back(subrep::popcount(p.up(i)), subrep::popcount(p.down(i)));
    }
    std::sort(d.begin(), d.end());
    return d;
}

// Isomorphism classes of n-point posets, deduplicated by brute isomorphism
// (bucketed by degree profile first to keep n = 5 quick).
inline std::vector<Poset> brute_classes(std::size_t n) {
    std::vector<Poset> classes;
    std::vector<std::vector<std::pair<int, int>>> profiles;
    for (auto& above : labeled_orders(n)) {
        Poset p = Poset::from_relation(std::move(above));
        const auto prof = degree_profile(p);
        bool seen = false;
        for (std::size_t c = 0; c < classes.size() && !seen; ++c) {
            seen = profiles[c] == prof && brute_isomorphic(p, classes[c]);
        }
        if (!seen) {
            classes.push_back(std::move(p));
            profiles.push_back(prof);
        }
    }
    return classes;
}

// Searches for a sub-representation straight from the definition: g is
// constant on isomorphism classes of subsets and maps each class into
// itself, so pick one member per class and backtrack on the inclusion rule.
inline bool brute_subrep_exists(const Poset& p) {
    std::vector<std::vector<Mask>> classes;
    for (Mask s = 1; s <= p.all(); ++s) {
        bool placed = false;
        for (auto& c : classes) {
            if (brute_isomorphic(p, s, p, c.front())) {
                c.push_back(s);
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.push_back({s});
        }
    }
    const std::size_t k = classes.size();
    std::vector<std::vector<bool>> emb(k, std::vector<bool>(k));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            emb[a][b] = brute_embeds(p, classes[a].front(), p, classes[b].front());
        }
    }
    std::vector<Mask> pick(k);
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == k) {
            return true;
        }
        for (Mask r : classes[i]) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                ok = emb[i][j] == ((r & ~pick[j]) == 0) && emb[j][i] == ((pick[j] & ~r) == 0);
            }
            if (ok) {
                pick[i] = r;
                if (self(self, i + 1)) {
                    return true;
                }
            }
        }
        return false;
    };
    return rec(rec, 0);
}

// Checks both defining conditions of a sub-representation directly.
// `g(S)` must be defined for every nonempty S.
template <typename G>
bool brute_is_subrep(const Poset& p, G&& g) {
    const Mask all = p.all();
    for (Mask s = 1; s <= all; ++s) {
        const Mask gs = g(s);
        if ((gs & ~all) != 0 || !brute_isomorphic(p, s, p, gs)) {
            return false;
        }
    }
    for (Mask s = 1; s <= all; ++s) {
        for (Mask t = 1; t <= all; ++t) {
            if (brute_embeds(p, s, p, t) != ((g(s) & ~g(t)) == 0)) {
                return false;
            }
        }
    }
    return true;
}

inline Poset from_covers(std::vector<std::string> elems, std::vector<std::pair<std::string, std::string>> covers) {
    return subrep::poset_from_cover(elems, covers);
}

inline Poset chain(std::size_t n) {
    std::vector<std::string> e;
    std::vector<std::pair<std::string, std::string>> c;
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back("x" + std::to_string(i));
        if (i > 0) {
            c.emplace_back(e[i - 1], e[i]);
        }
    }
    return subrep::poset_from_cover(e, c);
}

inline Poset antichain(std::size_t n) {
    std::vector<std::string> e;
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back("x" + std::to_string(i));
    }
    return subrep::poset_from_cover(e, {});
}

} // namespace testing
