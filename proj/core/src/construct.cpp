#include "subrep/construct.hpp"

#include "subrep/classify.hpp"
#include "subrep/embed.hpp"
#include "subrep/errors.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace subrep {

std::optional<Mask> SubRepMap::get(Mask subset) const {
    auto it = table_.find(subset);
    if (it == table_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Mask SubRepMap::at(Mask subset) const {
    auto it = table_.find(subset);
    if (it == table_.end()) {
        throw Error(ErrorCode::PartialMap, "g is undefined on " + parent_.format_set(subset));
    }
    return it->second;
}

bool SubRepMap::total() const noexcept {
    const Mask all = parent_.all();
    if (table_.size() != static_cast<std::size_t>(all)) {
        return false;
    }
    return std::all_of(table_.begin(), table_.end(), [&](const auto& kv) { return kv.first != 0 && (kv.first & ~all) == 0; });
}

namespace {

// Elements of m sorted from the bottom up.
std::vector<std::size_t> bottom_up(const Poset& p, Mask m) {
    std::vector<std::size_t> out;
    for_each_bit(m, [&](std::size_t i) { out.push_back(i); });
    std::sort(out.begin(), out.end(),
              [&](std::size_t a, std::size_t b) { return popcount(p.down(a) & m) < popcount(p.down(b) & m); });
    return out;
}

void build_flower(const Poset& p, std::size_t center, SubRepMap& g) {
    // labels[0..k-1]: the antichain above the center in index order;
    // labels[k]: the center; labels[k+1..]: the chain below, top first.
    const Mask antichain = p.up(center);
    const Mask stem = p.down(center) | bit(center);
    std::vector<std::size_t> labels;
    for_each_bit(antichain, [&](std::size_t i) { labels.push_back(i); });
    const std::size_t k = labels.size();
    auto below = bottom_up(p, p.down(center));
    labels.push_back(center);
    labels.insert(labels.end(), below.rbegin(), below.rend());

    auto first_petals = [&](std::size_t r) {
        Mask m = 0;
        for (std::size_t j = 0; j < r; ++j) {
            m |= bit(labels[j]);
        }
        return m;
    };
    // Center plus the next (len - 1) points going down.
    auto stem_top = [&](std::size_t len) {
        Mask m = 0;
        for (std::size_t j = 0; j < len; ++j) {
            m |= bit(labels[k + j]);
        }
        return m;
    };

    for (Mask s = 1; s <= p.all(); ++s) {
        const auto c = static_cast<std::size_t>(popcount(s & stem));
        const auto a = static_cast<std::size_t>(popcount(s & antichain));
        Mask image;
        if (a <= 1) {
            // A chain of c + a points: x_1 on top of the stem.
            const std::size_t len = c + a;
            image = first_petals(1) | stem_top(len - 1);
        } else if (c == 0) {
            image = first_petals(a);
        } else {
            image = first_petals(a) | stem_top(c);
        }
        g.set(s, image);
    }
}

void build_chain_union(const Poset& p, const std::vector<Mask>& chains, SubRepMap& g) {
    std::vector<std::vector<std::size_t>> levels;
    for (Mask c : chains) {
        levels.push_back(bottom_up(p, c));
    }
    std::vector<std::size_t> sizes;
    for (Mask s = 1; s <= p.all(); ++s) {
        sizes.clear();
        for (Mask c : chains) {
            if (auto n = popcount(s & c); n > 0) {
                sizes.push_back(static_cast<std::size_t>(n));
            }
        }
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
        Mask image = 0;
        for (std::size_t r = 0; r < sizes.size(); ++r) {
            for (std::size_t lvl = 0; lvl < sizes[r]; ++lvl) {
                image |= bit(levels[r][lvl]);
            }
        }
        g.set(s, image);
    }
}

} // namespace

SubRepMap build_g(const Poset& p) {
    if (p.empty()) {
        throw Error(ErrorCode::EmptyPoset, "g needs a nonempty poset");
    }
    if (p.size() > build_limit) {
        throw Error(ErrorCode::TooLarge, "build_g tabulates 2^n subsets; n must be at most 20");
    }
    SubRepMap g(p);
    if (auto x = is_flower(p)) {
        build_flower(p, *x, g);
        return g;
    }
    if (auto x = is_coflower(p)) {
        // Embeddability between subsets is unchanged by reversing the order,
        // so the dual's table is a valid g for p.
        const Poset d = dual(p);
        SubRepMap dg(d);
        build_flower(d, *x, dg);
        for (const auto& [s, img] : dg.table()) {
            g.set(s, img);
        }
        return g;
    }
    if (auto chains = is_union_of_chains(p)) {
        build_chain_union(p, *chains, g);
        return g;
    }
    throw Error(ErrorCode::NotSubRepresentable, "neither a flower, a co-flower nor a disjoint union of chains");
}

std::string Violation::describe(const Poset& p, const SubRepMap& g) const {
    std::ostringstream os;
    if (condition == Condition::Equivalence) {
        os << "(ii) " << p.format_set(first) << " and g = " << p.format_set(g.at(first))
           << " are not embeddability-equivalent";
    } else {
        const bool emb = embeds(p, first, second);
        os << "(i) " << p.format_set(first) << (emb ? " embeds in " : " does not embed in ") << p.format_set(second)
           << " but g = " << p.format_set(g.at(first)) << (emb ? " is not contained in " : " is contained in ")
           << p.format_set(g.at(second));
    }
    return os.str();
}

std::vector<Violation> verify_subrep(const Poset& p, const SubRepMap& g) {
    if (p.size() > verify_limit) {
        throw Error(ErrorCode::TooLarge, "verify_subrep is exhaustive over 2^n subsets; n must be at most 14");
    }
    for (Mask s = 1; s <= p.all(); ++s) {
        if (!g.get(s)) {
            throw Error(ErrorCode::PartialMap, "g is undefined on " + p.format_set(s));
        }
    }

    // Embeddability only depends on the isomorphism types, so memoize on
    // canonical codes where they are available.
    const std::size_t count = static_cast<std::size_t>(p.all()) + 1;
    std::vector<CanonicalCode> codes(count);
    for (Mask s = 1; s <= p.all(); ++s) {
        if (static_cast<std::size_t>(popcount(s)) <= canonical_code_limit) {
            codes[s] = canonical_code(p, s);
        }
    }
    std::unordered_map<std::string, bool> memo;
    auto embeds_memo = [&](Mask a, Mask b) {
        if (codes[a].empty() || codes[b].empty()) {
            return embeds(p, a, b);
        }
        std::string key = codes[a];
        key.push_back('\xff');
        key += codes[b];
        auto it = memo.find(key);
        if (it != memo.end()) {
            return it->second;
        }
        bool r = embeds(p, a, b);
        memo.emplace(std::move(key), r);
        return r;
    };

    std::vector<Violation> out;
    for (Mask s = 1; s <= p.all(); ++s) {
        const Mask gs = g.at(s);
        if ((gs & ~p.all()) != 0 || !embeds(p, s, gs) || !embeds(p, gs, s)) {
            out.push_back({s, s, Violation::Condition::Equivalence});
        }
    }
    for (Mask s = 1; s <= p.all(); ++s) {
        const Mask gs = g.at(s);
        for (Mask t = 1; t <= p.all(); ++t) {
            const bool included = (gs & ~g.at(t)) == 0;
            if (embeds_memo(s, t) != included) {
                out.push_back({s, t, Violation::Condition::Inclusion});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        return std::tie(a.first, a.second, a.condition) < std::tie(b.first, b.second, b.condition);
    });
    return out;
}

} // namespace subrep
