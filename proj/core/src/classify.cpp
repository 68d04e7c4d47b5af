#include "subrep/classify.hpp"

#include "subrep/errors.hpp"

#include <algorithm>

namespace subrep {

std::string_view verdict_kind_name(VerdictKind kind) noexcept {
    switch (kind) {
    case VerdictKind::Flower: return "Flower";
    case VerdictKind::CoFlower: return "CoFlower";
    case VerdictKind::UnionOfChains: return "UnionOfChains";
    case VerdictKind::PinboardPoset: return "PinboardPoset";
    case VerdictKind::CoPinboardPoset: return "CoPinboardPoset";
    case VerdictKind::NotSubRepresentable: return "NotSubRepresentable";
    }
    return "Unknown";
}

std::optional<VerdictKind> verdict_kind_from_name(std::string_view name) {
    for (auto k : {VerdictKind::Flower, VerdictKind::CoFlower, VerdictKind::UnionOfChains, VerdictKind::PinboardPoset,
                   VerdictKind::CoPinboardPoset, VerdictKind::NotSubRepresentable}) {
        if (verdict_kind_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> is_flower(const Poset& p) {
    for (std::size_t x = 0; x < p.size(); ++x) {
        const Mask below = p.down(x);
        const Mask above = p.up(x);
        if ((below | above | bit(x)) != p.all()) {
            continue;
        }
        if (popcount(above) >= 2 && p.is_antichain(above) && p.is_chain(below)) {
            return x;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> is_coflower(const Poset& p) {
    return is_flower(dual(p));
}

std::optional<std::vector<Mask>> is_union_of_chains(const Poset& p) {
    auto comps = component_masks(p);
    for (Mask c : comps) {
        if (!p.is_chain(c)) {
            return std::nullopt;
        }
    }
    // component_masks is already in canonical order, so equal heights keep it.
    std::stable_sort(comps.begin(), comps.end(), [](Mask a, Mask b) { return popcount(a) > popcount(b); });
    return comps;
}

namespace {

Obstruction find_obstruction(const Poset& p) {
    if (auto e = find_pattern(p, PatternKind::Diamond)) {
        return {{{PatternKind::Diamond, *e}}};
    }
    auto vee = find_pattern(p, PatternKind::Vee);
    auto wedge = find_pattern(p, PatternKind::Wedge);
    if (vee && wedge) {
        return {{{PatternKind::Vee, *vee}, {PatternKind::Wedge, *wedge}}};
    }
    for (PatternKind k : four_point_obstructions()) {
        if (auto e = find_pattern(p, k)) {
            return {{{k, *e}}};
        }
    }
    return {};
}

} // namespace

Verdict classify_finite(const Poset& p) {
    if (p.empty()) {
        throw Error(ErrorCode::EmptyPoset, "cannot classify the empty poset");
    }
    if (auto x = is_flower(p)) {
        return {true, VerdictKind::Flower, FlowerCenter{*x}};
    }
    if (auto x = is_coflower(p)) {
        return {true, VerdictKind::CoFlower, FlowerCenter{*x}};
    }
    if (auto chains = is_union_of_chains(p)) {
        return {true, VerdictKind::UnionOfChains, ChainList{std::move(*chains)}};
    }
    Obstruction obstruction = find_obstruction(p);
    if (obstruction.matches.empty()) {
        return {false, VerdictKind::NotSubRepresentable,
                Reason{"neither a flower, a co-flower nor a disjoint union of chains"}};
    }
    return {false, VerdictKind::NotSubRepresentable, std::move(obstruction)};
}

Verdict classify_chain(const ChainDescriptor& d) {
    return std::visit(
        [](const auto& c) -> Verdict {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, FiniteChain>) {
                if (c.length == 0) {
                    throw Error(ErrorCode::InvalidDescriptor, "a finite chain needs at least one element");
                }
                return {true, VerdictKind::UnionOfChains,
                        Reason{"finite chain of length " + std::to_string(c.length)}};
            } else if constexpr (std::is_same_v<T, WellOrderedChain>) {
                if (c.type.is_zero()) {
                    throw Error(ErrorCode::InvalidDescriptor, "empty chain");
                }
                return {true, VerdictKind::PinboardPoset,
                        Reason{"well-ordered chain of type " + c.type.to_string() +
                               "; subchains map to initial segments"}};
            } else if constexpr (std::is_same_v<T, WellOrderedStarChain>) {
                if (c.type.is_zero()) {
                    throw Error(ErrorCode::InvalidDescriptor, "empty chain");
                }
                return {true, VerdictKind::CoPinboardPoset,
                        Reason{"well-ordered* chain of type " + c.type.to_string() +
                               "*; subchains map to final segments"}};
            } else {
                return {false, VerdictKind::NotSubRepresentable,
                        Reason{"chain " + c.tag + " is neither well-ordered nor well-ordered*: it contains copies of "
                                                  "N and -N"}};
            }
        },
        d);
}

namespace {

void check_width(const CardinalSym& width) {
    if (width < CardinalSym::finite(2)) {
        throw Error(ErrorCode::InvalidDescriptor, "flower antichain width must be at least 2");
    }
}

} // namespace

Verdict classify_descriptor(const PosetDescriptor& d) {
    return std::visit(
        [](const auto& v) -> Verdict {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Poset>) {
                return classify_finite(v);
            } else if constexpr (std::is_same_v<T, ChainDescriptor>) {
                return classify_chain(v);
            } else if constexpr (std::is_same_v<T, PinboardPosetDesc>) {
                if (v.board.starred()) {
                    throw Error(ErrorCode::InvalidDescriptor, "pinboard descriptor holds a co-pinboard");
                }
                auto checked = Pinboard::make(v.board.pairs(), false);
                return {true, VerdictKind::PinboardPoset, Reason{"poset of " + checked.to_string()}};
            } else if constexpr (std::is_same_v<T, CoPinboardPosetDesc>) {
                if (!v.board.starred()) {
                    throw Error(ErrorCode::InvalidDescriptor, "co-pinboard descriptor holds a pinboard");
                }
                auto checked = Pinboard::make(v.board.pairs(), true);
                return {true, VerdictKind::CoPinboardPoset, Reason{"poset of " + checked.to_string()}};
            } else if constexpr (std::is_same_v<T, FlowerDesc>) {
                check_width(v.width);
                return {true, VerdictKind::Flower,
                        Reason{"flower: chain " + v.down_chain.to_string() + "* below an antichain of width " +
                               v.width.to_string()}};
            } else {
                check_width(v.width);
                return {true, VerdictKind::CoFlower,
                        Reason{"co-flower: antichain of width " + v.width.to_string() + " below chain " +
                               v.up_chain.to_string()}};
            }
        },
        d);
}

bool witness_holds(const Poset& p, const Verdict& v) {
    if (const auto* o = std::get_if<Obstruction>(&v.witness)) {
        if (o->matches.empty()) {
            return false;
        }
        for (const auto& m : o->matches) {
            const Poset& pat = pattern(m.kind);
            if (m.embedding.size() != pat.size()) {
                return false;
            }
            for (std::size_t i = 0; i < pat.size(); ++i) {
                if (m.embedding[i] >= p.size()) {
                    return false;
                }
                for (std::size_t j = 0; j < pat.size(); ++j) {
                    if (i != j && m.embedding[i] == m.embedding[j]) {
                        return false;
                    }
                    if (pat.less(i, j) != p.less(m.embedding[i], m.embedding[j])) {
                        return false;
                    }
                }
            }
        }
        return true;
    }
    if (const auto* c = std::get_if<FlowerCenter>(&v.witness)) {
        const Poset q = v.kind == VerdictKind::CoFlower ? dual(p) : p;
        return c->element < q.size() && is_flower(q).has_value() &&
               (q.down(c->element) | q.up(c->element) | bit(c->element)) == q.all();
    }
    return true;
}

} // namespace subrep
