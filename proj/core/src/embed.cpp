#include "subrep/embed.hpp"

#include "subrep/errors.hpp"

#include <algorithm>
#include <map>

namespace subrep {

namespace {

// Longest chain ending (Direction::Down) or starting (Direction::Up) at
// each element, within mask m.
std::vector<int> chain_depths(const Poset& p, Mask m, Direction direction) {
    std::vector<std::size_t> order;
    for_each_bit(m, [&](std::size_t i) { order.push_back(i); });
    auto below = [&](std::size_t i) { return direction == Direction::Down ? p.down(i) : p.up(i); };
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return popcount(below(a) & m) < popcount(below(b) & m); });
    std::vector<int> depth(p.size(), 0);
    for (std::size_t i : order) {
        int d = 1;
        for_each_bit(below(i) & m, [&](std::size_t j) { d = std::max(d, depth[j] + 1); });
        depth[i] = d;
    }
    return depth;
}

// Backtracking with forward checking. Variables are source elements in
// index order and values are tried in ascending target index, so the first
// solution found is the lexicographically least one. All pruning only
// removes values that cannot appear in any embedding.
class EmbeddingSearch {
public:
    EmbeddingSearch(const Poset& src, Mask src_mask, const Poset& dst, Mask dst_mask)
        : src_(src), dst_(dst) {
        for_each_bit(src_mask, [&](std::size_t i) { vars_.push_back(i); });
        const auto src_down = chain_depths(src, src_mask, Direction::Down);
        const auto src_up = chain_depths(src, src_mask, Direction::Up);
        const auto dst_down = chain_depths(dst, dst_mask, Direction::Down);
        const auto dst_up = chain_depths(dst, dst_mask, Direction::Up);
        initial_.assign(vars_.size(), 0);
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            const std::size_t u = vars_[k];
            const int below = popcount(src.down(u) & src_mask);
            const int above = popcount(src.up(u) & src_mask);
            Mask dom = 0;
            for_each_bit(dst_mask, [&](std::size_t v) {
                if (popcount(dst.down(v) & dst_mask) >= below && popcount(dst.up(v) & dst_mask) >= above &&
                    dst_down[v] >= src_down[u] && dst_up[v] >= src_up[u]) {
                    dom |= bit(v);
                }
            });
            initial_[k] = dom;
        }
    }

    std::optional<Embedding> solve() {
        if (vars_.empty()) {
            return Embedding{};
        }
        if (static_cast<std::size_t>(popcount(union_of(initial_, 0))) < vars_.size()) {
            return std::nullopt;
        }
        for (Mask d : initial_) {
            if (d == 0) {
                return std::nullopt;
            }
        }
        assignment_.assign(vars_.size(), 0);
        if (search(0, initial_)) {
            return assignment_;
        }
        return std::nullopt;
    }

private:
    static Mask union_of(const std::vector<Mask>& domains, std::size_t from) {
        Mask u = 0;
        for (std::size_t k = from; k < domains.size(); ++k) {
            u |= domains[k];
        }
        return u;
    }

    bool search(std::size_t k, const std::vector<Mask>& domains) {
        if (k == vars_.size()) {
            return true;
        }
        const std::size_t u = vars_[k];
        Mask values = domains[k];
        while (values) {
            const std::size_t v = lowest(values);
            values &= values - 1;
            std::vector<Mask> next(domains);
            bool dead = false;
            for (std::size_t t = k + 1; t < vars_.size() && !dead; ++t) {
                const std::size_t w = vars_[t];
                Mask allowed;
                if (src_.less(u, w)) {
                    allowed = dst_.up(v);
                } else if (src_.less(w, u)) {
                    allowed = dst_.down(v);
                } else {
                    allowed = ~(dst_.up(v) | dst_.down(v) | bit(v));
                }
                next[t] &= allowed;
                dead = next[t] == 0;
            }
            if (dead) {
                continue;
            }
            // Pigeonhole on the remaining variables.
            if (static_cast<std::size_t>(popcount(union_of(next, k + 1))) < vars_.size() - k - 1) {
                continue;
            }
            assignment_[k] = v;
            if (search(k + 1, next)) {
                return true;
            }
        }
        return false;
    }

    const Poset& src_;
    const Poset& dst_;
    std::vector<std::size_t> vars_;
    std::vector<Mask> initial_;
    Embedding assignment_;
};

} // namespace

std::optional<Embedding> find_embedding(const Poset& source, const Poset& target) {
    if (source.size() > target.size()) {
        return std::nullopt;
    }
    return EmbeddingSearch(source, source.all(), target, target.all()).solve();
}

bool embeds(const Poset& source, const Poset& target) {
    return find_embedding(source, target).has_value();
}

std::optional<Embedding> find_embedding(const Poset& parent, Mask from, Mask into) {
    from &= parent.all();
    into &= parent.all();
    if (popcount(from) > popcount(into)) {
        return std::nullopt;
    }
    return EmbeddingSearch(parent, from, parent, into).solve();
}

bool embeds(const Poset& parent, Mask from, Mask into) {
    return find_embedding(parent, from, into).has_value();
}

std::string_view pattern_name(PatternKind kind) noexcept {
    switch (kind) {
    case PatternKind::Vee: return "vee";
    case PatternKind::Wedge: return "wedge";
    case PatternKind::Diamond: return "diamond";
    case PatternKind::TwoChainPlusPoint: return "two-chain-plus-point";
    case PatternKind::WedgePlusPoint: return "wedge-plus-point";
    case PatternKind::VeePlusPoint: return "vee-plus-point";
    case PatternKind::Bowtie: return "bowtie";
    case PatternKind::ChainWithLowSide: return "chain-with-low-side";
    case PatternKind::ChainWithHighSide: return "chain-with-high-side";
    case PatternKind::NShape: return "n-shape";
    }
    return "unknown";
}

std::optional<PatternKind> pattern_from_name(std::string_view name) {
    for (PatternKind k : all_patterns) {
        if (pattern_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

namespace {

Poset build_pattern(PatternKind kind) {
    using Covers = std::vector<std::pair<std::string, std::string>>;
    switch (kind) {
    case PatternKind::Vee:
        return poset_from_cover({"a", "b", "c"}, Covers{{"a", "b"}, {"a", "c"}});
    case PatternKind::Wedge:
        return dual(build_pattern(PatternKind::Vee));
    case PatternKind::Diamond:
        return poset_from_cover({"a", "b", "c", "d"}, Covers{{"b", "a"}, {"b", "c"}, {"a", "d"}, {"c", "d"}});
    case PatternKind::TwoChainPlusPoint:
        return poset_from_cover({"a", "b", "c"}, Covers{{"a", "b"}});
    case PatternKind::WedgePlusPoint:
        return poset_from_cover({"a", "b", "c", "d"}, Covers{{"a", "c"}, {"b", "c"}});
    case PatternKind::VeePlusPoint:
        return poset_from_cover({"a", "b", "c", "d"}, Covers{{"a", "b"}, {"a", "c"}});
    case PatternKind::Bowtie:
        return poset_from_cover({"a", "b", "c", "d"}, Covers{{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
    case PatternKind::ChainWithLowSide:
        return poset_from_cover({"a", "b", "c", "d"}, Covers{{"a", "b"}, {"b", "c"}, {"d", "c"}});
    case PatternKind::ChainWithHighSide:
        return poset_from_cover({"a", "b", "c", "d"}, Covers{{"a", "b"}, {"b", "c"}, {"a", "d"}});
    case PatternKind::NShape:
        return poset_from_cover({"a", "b", "c", "d"}, Covers{{"a", "b"}, {"c", "b"}, {"c", "d"}});
    }
    throw Error(ErrorCode::Parse, "unknown pattern");
}

struct PatternTable {
    std::map<PatternKind, Poset> posets;
    std::vector<PatternKind> obstructions;

    PatternTable() {
        for (PatternKind k : all_patterns) {
            posets.emplace(k, build_pattern(k));
        }
        obstructions = {PatternKind::WedgePlusPoint, PatternKind::VeePlusPoint, PatternKind::Bowtie,
                        PatternKind::ChainWithLowSide, PatternKind::ChainWithHighSide, PatternKind::Diamond,
                        PatternKind::NShape};
        std::sort(obstructions.begin(), obstructions.end(), [&](PatternKind a, PatternKind b) {
            return canonical_code(posets.at(a)) < canonical_code(posets.at(b));
        });
    }
};

const PatternTable& table() {
    static const PatternTable t;
    return t;
}

} // namespace

const Poset& pattern(PatternKind kind) {
    return table().posets.at(kind);
}

std::span<const PatternKind> four_point_obstructions() {
    return table().obstructions;
}

std::optional<Embedding> find_pattern(const Poset& p, PatternKind kind) {
    return find_embedding(pattern(kind), p);
}

bool contains_pattern(const Poset& p, PatternKind kind) {
    return find_pattern(p, kind).has_value();
}

} // namespace subrep
