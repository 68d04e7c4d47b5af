#include "subrep/poset.hpp"

#include "subrep/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace subrep {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::EmptyPoset: return "EmptyPoset";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotSubRepresentable: return "NotSubRepresentable";
    case ErrorCode::PartialMap: return "PartialMap";
    case ErrorCode::BetaExceedsAlpha: return "BetaExceedsAlpha";
    case ErrorCode::InfinitePinboard: return "InfinitePinboard";
    case ErrorCode::InvalidPinboard: return "InvalidPinboard";
    case ErrorCode::DoesNotFit: return "DoesNotFit";
    case ErrorCode::HostMismatch: return "HostMismatch";
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

bool is_strict_order(const std::vector<Mask>& above) {
    const std::size_t n = above.size();
    if (n > max_elements) {
        return false;
    }
    const Mask universe = full_mask(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (above[i] & ~universe) {
            return false;
        }
        if ((above[i] >> i) & 1U) {
            return false;
        }
        Mask reach = 0;
        for_each_bit(above[i], [&](std::size_t j) { reach |= above[j]; });
        if (reach & ~above[i]) {
            return false;
        }
    }
    // Irreflexive + transitive already implies antisymmetric, but keep the
    // check explicit for malformed input where transitivity also fails.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (((above[i] >> j) & 1U) && ((above[j] >> i) & 1U)) {
                return false;
            }
        }
    }
    return true;
}

Poset Poset::from_relation(std::vector<std::string> names, std::vector<Mask> above) {
    if (names.size() != above.size()) {
        throw Error(ErrorCode::Parse, "relation size does not match element count");
    }
    if (names.size() > max_elements) {
        throw Error(ErrorCode::TooLarge, "at most 64 elements are supported");
    }
    {
        std::vector<std::string> sorted = names;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            throw Error(ErrorCode::DuplicateElement, *dup);
        }
    }
    if (!is_strict_order(above)) {
        throw Error(ErrorCode::CycleDetected, "relation is not a strict partial order");
    }
    Poset p;
    p.names_ = std::move(names);
    p.up_ = std::move(above);
    p.down_.assign(p.up_.size(), 0);
    for (std::size_t i = 0; i < p.up_.size(); ++i) {
        for_each_bit(p.up_[i], [&](std::size_t j) { p.down_[j] |= bit(i); });
    }
    return p;
}

Poset Poset::from_relation(std::vector<Mask> above) {
    std::vector<std::string> names;
    names.reserve(above.size());
    for (std::size_t i = 0; i < above.size(); ++i) {
        names.push_back(std::to_string(i));
    }
    return from_relation(std::move(names), std::move(above));
}

std::optional<std::size_t> Poset::find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Poset::index_of(std::string_view name) const {
    auto idx = find(name);
    if (!idx) {
        throw Error(ErrorCode::UnknownElement, std::string(name));
    }
    return *idx;
}

bool Poset::is_chain(Mask m) const noexcept {
    bool ok = true;
    for_each_bit(m, [&](std::size_t i) {
        Mask others = m & ~bit(i);
        if ((others & (up_[i] | down_[i])) != others) {
            ok = false;
        }
    });
    return ok;
}

bool Poset::is_antichain(Mask m) const noexcept {
    bool ok = true;
    for_each_bit(m, [&](std::size_t i) {
        if (m & up_[i]) {
            ok = false;
        }
    });
    return ok;
}

Poset Poset::induced(Mask m) const {
    std::vector<std::size_t> idx;
    for_each_bit(m & all(), [&](std::size_t i) { idx.push_back(i); });
    std::vector<std::string> names;
    std::vector<Mask> above(idx.size(), 0);
    for (std::size_t a = 0; a < idx.size(); ++a) {
        names.push_back(names_[idx[a]]);
        for (std::size_t b = 0; b < idx.size(); ++b) {
            if (less(idx[a], idx[b])) {
                above[a] |= bit(b);
            }
        }
    }
    Poset p;
    p.names_ = std::move(names);
    p.up_ = std::move(above);
    p.down_.assign(p.up_.size(), 0);
    for (std::size_t i = 0; i < p.up_.size(); ++i) {
        for_each_bit(p.up_[i], [&](std::size_t j) { p.down_[j] |= bit(i); });
    }
    return p;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i) {
        for_each_bit(up_[i], [&](std::size_t j) {
            if ((up_[i] & down_[j]) == 0) {
                out.emplace_back(i, j);
            }
        });
    }
    return out;
}

std::string Poset::format_set(Mask m) const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each_bit(m, [&](std::size_t i) {
        if (!first) {
            os << ',';
        }
        os << names_.at(i);
        first = false;
    });
    os << '}';
    return os.str();
}

Poset poset_from_cover(const std::vector<std::string>& elements,
                       const std::vector<std::pair<std::string, std::string>>& covers) {
    if (elements.size() > max_elements) {
        throw Error(ErrorCode::TooLarge, "at most 64 elements are supported");
    }
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (!index.emplace(elements[i], i).second) {
            throw Error(ErrorCode::DuplicateElement, elements[i]);
        }
    }
    auto lookup = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end()) {
            throw Error(ErrorCode::UnknownElement, name);
        }
        return it->second;
    };
    const std::size_t n = elements.size();
    std::vector<Mask> above(n, 0);
    for (const auto& [lo, hi] : covers) {
        above[lookup(lo)] |= bit(lookup(hi));
    }
    // Warshall closure on bit rows.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if ((above[i] >> k) & 1U) {
                above[i] |= above[k];
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if ((above[i] >> i) & 1U) {
            throw Error(ErrorCode::CycleDetected, "cycle through " + elements[i]);
        }
    }
    return Poset::from_relation(elements, std::move(above));
}

Poset dual(const Poset& p) {
    std::vector<Mask> above(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        above[i] = p.down(i);
    }
    return Poset::from_relation(p.names(), std::move(above));
}

Mask strict_cone(const Poset& p, std::size_t x, Direction direction) {
    if (x >= p.size()) {
        throw Error(ErrorCode::UnknownElement, "index " + std::to_string(x));
    }
    return direction == Direction::Up ? p.up(x) : p.down(x);
}

Mask strict_cone(const Poset& p, std::string_view x, Direction direction) {
    return strict_cone(p, p.index_of(x), direction);
}

std::size_t height(const Poset& p, Mask m) {
    // Longest chain ending at each element; elements processed in order of
    // down-set size, which is a linear extension.
    std::vector<std::size_t> order;
    for_each_bit(m, [&](std::size_t i) { order.push_back(i); });
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return popcount(p.down(a) & m) < popcount(p.down(b) & m);
    });
    std::vector<std::size_t> longest(p.size(), 0);
    std::size_t best = 0;
    for (std::size_t i : order) {
        std::size_t here = 1;
        for_each_bit(p.down(i) & m, [&](std::size_t j) { here = std::max(here, longest[j] + 1); });
        longest[i] = here;
        best = std::max(best, here);
    }
    return best;
}

namespace {

// Maximum independent set in the comparability graph restricted to cand.
std::size_t max_antichain(const Poset& p, Mask cand, std::size_t chosen, std::size_t best) {
    if (cand == 0) {
        return std::max(best, chosen);
    }
    if (chosen + static_cast<std::size_t>(popcount(cand)) <= best) {
        return best;
    }
    std::size_t v = lowest(cand);
    Mask rest = cand & ~bit(v);
    best = max_antichain(p, rest & ~(p.up(v) | p.down(v)), chosen + 1, best);
    // Excluding v only helps if v is comparable to something still open.
    if (rest & (p.up(v) | p.down(v))) {
        best = max_antichain(p, rest, chosen, best);
    }
    return best;
}

} // namespace

std::size_t width(const Poset& p, Mask m) {
    return max_antichain(p, m & p.all(), 0, 0);
}

HeightWidth height_width(const Poset& p) {
    if (p.empty()) {
        throw Error(ErrorCode::EmptyPoset, "height and width need a nonempty poset");
    }
    return {height(p, p.all()), width(p, p.all())};
}

namespace {

// Relation symbol between the elements placed at positions j < i:
// 0 incomparable, 1 earlier below later, 2 earlier above later.
std::uint8_t relation_symbol(const Poset& p, std::size_t earlier, std::size_t later) {
    if (p.less(earlier, later)) {
        return 1;
    }
    if (p.less(later, earlier)) {
        return 2;
    }
    return 0;
}

struct CanonicalSearch {
    const Poset& p;
    std::vector<std::size_t> elems;
    std::vector<std::pair<int, int>> key;       // per element (|down|, |up|) within the subset
    std::vector<std::pair<int, int>> slot_key;  // sorted keys, one per position
    std::vector<std::size_t> placed;
    std::vector<std::uint8_t> current;
    std::vector<std::uint8_t> best;
    bool have_best = false;
    std::vector<bool> used;
    std::vector<std::size_t> twin;  // least position with the same up and down sets

    // Compares the current prefix with the same-length prefix of best.
    // The best code can change during the search, so this is never cached.
    int compare_prefix() const {
        if (!have_best) {
            return -1;
        }
        for (std::size_t i = 0; i < current.size(); ++i) {
            if (current[i] != best[i]) {
                return current[i] < best[i] ? -1 : 1;
            }
        }
        return 0;
    }

    void run(std::size_t pos) {
        if (pos == elems.size()) {
            if (compare_prefix() < 0) {
                best = current;
                have_best = true;
            }
            return;
        }
        for (std::size_t c = 0; c < elems.size(); ++c) {
            if (used[c] || key[c] != slot_key[pos]) {
                continue;
            }
            // Twins are interchangeable: only the first unused one is tried.
            bool earlier_twin = false;
            for (std::size_t t = twin[c]; t < c && !earlier_twin; ++t) {
                earlier_twin = twin[t] == twin[c] && !used[t];
            }
            if (earlier_twin) {
                continue;
            }
            const std::size_t mark = current.size();
            for (std::size_t j = 0; j < pos; ++j) {
                current.push_back(relation_symbol(p, elems[placed[j]], elems[c]));
            }
            if (compare_prefix() <= 0) {
                used[c] = true;
                placed.push_back(c);
                run(pos + 1);
                placed.pop_back();
                used[c] = false;
            }
            current.resize(mark);
        }
    }
};

} // namespace

CanonicalCode canonical_code(const Poset& p, Mask m) {
    m &= p.all();
    const std::size_t n = static_cast<std::size_t>(popcount(m));
    if (n > canonical_code_limit) {
        throw Error(ErrorCode::TooLarge, "canonical_code supports at most 10 elements, got " + std::to_string(n));
    }
    CanonicalSearch search{p, {}, {}, {}, {}, {}, {}, false, std::vector<bool>(n, false), {}};
    for_each_bit(m, [&](std::size_t i) { search.elems.push_back(i); });
    for (std::size_t i : search.elems) {
        search.key.emplace_back(popcount(p.down(i) & m), popcount(p.up(i) & m));
    }
    search.twin.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        search.twin[a] = a;
        for (std::size_t b = 0; b < a; ++b) {
            const std::size_t x = search.elems[a];
            const std::size_t y = search.elems[b];
            if ((p.up(x) & m) == (p.up(y) & m) && (p.down(x) & m) == (p.down(y) & m)) {
                search.twin[a] = search.twin[b];
                break;
            }
        }
    }
    search.slot_key = search.key;
    std::sort(search.slot_key.begin(), search.slot_key.end());
    search.run(0);

    CanonicalCode code;
    code.push_back(static_cast<char>(n));
    for (std::uint8_t s : search.best) {
        code.push_back(static_cast<char>(s));
    }
    return code;
}

CanonicalCode canonical_code(const Poset& p) {
    return canonical_code(p, p.all());
}

std::string to_hex(const CanonicalCode& code) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : code) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

std::vector<Mask> component_masks(const Poset& p) {
    std::vector<Mask> comps;
    Mask seen = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if ((seen >> i) & 1U) {
            continue;
        }
        Mask comp = bit(i);
        Mask frontier = bit(i);
        while (frontier) {
            Mask next = 0;
            for_each_bit(frontier, [&](std::size_t v) { next |= p.up(v) | p.down(v); });
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    auto sort_key = [&](Mask c) {
        CanonicalCode code;
        if (static_cast<std::size_t>(popcount(c)) <= canonical_code_limit) {
            code = canonical_code(p, c);
        } else {
            code.push_back(static_cast<char>(popcount(c)));
        }
        return std::make_pair(code, lowest(c));
    };
    std::vector<std::pair<std::pair<CanonicalCode, std::size_t>, Mask>> keyed;
    for (Mask c : comps) {
        keyed.emplace_back(sort_key(c), c);
    }
    // Larger components first: descending code, then ascending least index.
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) {
            return a.first.first > b.first.first;
        }
        return a.first.second < b.first.second;
    });
    std::vector<Mask> out;
    for (auto& [k, c] : keyed) {
        out.push_back(c);
    }
    return out;
}

std::vector<Poset> components(const Poset& p) {
    std::vector<Poset> out;
    for (Mask c : component_masks(p)) {
        out.push_back(p.induced(c));
    }
    return out;
}

} // namespace subrep
