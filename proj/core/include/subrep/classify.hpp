#pragma once

#include "subrep/embed.hpp"
#include "subrep/ordinal.hpp"
#include "subrep/pinboard.hpp"
#include "subrep/poset.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace subrep {

// Chains described by order type.
struct FiniteChain {
    std::uint64_t length = 0;
    friend bool operator==(const FiniteChain&, const FiniteChain&) = default;
};
struct WellOrderedChain {
    OrdinalExpr type;
    friend bool operator==(const WellOrderedChain&, const WellOrderedChain&) = default;
};
// The reverse of a well order: type* for an ordinal type.
struct WellOrderedStarChain {
    OrdinalExpr type;
    friend bool operator==(const WellOrderedStarChain&, const WellOrderedStarChain&) = default;
};
// Neither well-ordered nor well-ordered*: contains copies of N and -N.
// Tags "Z", "Q", "R", "R\Q", or any other label.
struct UnboundedChain {
    std::string tag;
    friend bool operator==(const UnboundedChain&, const UnboundedChain&) = default;
};

using ChainDescriptor = std::variant<FiniteChain, WellOrderedChain, WellOrderedStarChain, UnboundedChain>;

// A chain a* (well-ordered*, possibly empty) with an antichain of the given
// width on top; the co-flower is its dual.
struct FlowerDesc {
    OrdinalExpr down_chain;
    CardinalSym width;
    friend bool operator==(const FlowerDesc&, const FlowerDesc&) = default;
};
struct CoFlowerDesc {
    OrdinalExpr up_chain;
    CardinalSym width;
    friend bool operator==(const CoFlowerDesc&, const CoFlowerDesc&) = default;
};
struct PinboardPosetDesc {
    Pinboard board;
    friend bool operator==(const PinboardPosetDesc&, const PinboardPosetDesc&) = default;
};
struct CoPinboardPosetDesc {
    Pinboard board;  // starred
    friend bool operator==(const CoPinboardPosetDesc&, const CoPinboardPosetDesc&) = default;
};

using PosetDescriptor =
    std::variant<Poset, ChainDescriptor, PinboardPosetDesc, CoPinboardPosetDesc, FlowerDesc, CoFlowerDesc>;

enum class VerdictKind { Flower, CoFlower, UnionOfChains, PinboardPoset, CoPinboardPoset, NotSubRepresentable };

std::string_view verdict_kind_name(VerdictKind kind) noexcept;
std::optional<VerdictKind> verdict_kind_from_name(std::string_view name);

struct FlowerCenter {
    std::size_t element = 0;
    friend bool operator==(const FlowerCenter&, const FlowerCenter&) = default;
};

// Chains of a disjoint union, tallest first.
struct ChainList {
    std::vector<Mask> chains;
    friend bool operator==(const ChainList&, const ChainList&) = default;
};

struct PatternMatch {
    PatternKind kind = PatternKind::Vee;
    Embedding embedding;
    friend bool operator==(const PatternMatch&, const PatternMatch&) = default;
};

// One or more embedded forbidden patterns (diamond alone, vee and wedge
// together, or a single four-point obstruction).
struct Obstruction {
    std::vector<PatternMatch> matches;
    friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

struct Reason {
    std::string text;
    friend bool operator==(const Reason&, const Reason&) = default;
};

using Witness = std::variant<std::monostate, FlowerCenter, ChainList, Obstruction, Reason>;

struct Verdict {
    bool sub_representable = false;
    VerdictKind kind = VerdictKind::NotSubRepresentable;
    Witness witness;
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Center x with D(x) a chain (possibly empty), U(x) an antichain of at least
// two points, and D(x) + x + U(x) covering p; the least such index.
std::optional<std::size_t> is_flower(const Poset& p);
std::optional<std::size_t> is_coflower(const Poset& p);

// Component chains sorted by height, tallest first, when every component
// is a chain.
std::optional<std::vector<Mask>> is_union_of_chains(const Poset& p);

Verdict classify_finite(const Poset& p);
Verdict classify_chain(const ChainDescriptor& d);
Verdict classify_descriptor(const PosetDescriptor& d);

// Checks that an Obstruction witness really embeds into p.
bool witness_holds(const Poset& p, const Verdict& v);

} // namespace subrep
