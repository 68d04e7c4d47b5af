#pragma once

#include "subrep/poset.hpp"

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace subrep {

// An order embedding: entry i is the target index of source element i.
using Embedding = std::vector<std::size_t>;

// P1 embeds into P2 iff P1 is isomorphic to a subset of P2 with the induced
// order, i.e. an injection f with x < y  <=>  f(x) < f(y).
bool embeds(const Poset& source, const Poset& target);

// Lexicographically least embedding in source-index order.
std::optional<Embedding> find_embedding(const Poset& source, const Poset& target);

// Same search between two subsets of one parent poset. The returned
// embedding maps the i-th element of `from` (in index order) to a parent
// index inside `into`.
bool embeds(const Poset& parent, Mask from, Mask into);
std::optional<Embedding> find_embedding(const Poset& parent, Mask from, Mask into);

enum class PatternKind {
    Vee,               // one point below two incomparable points
    Wedge,             // two incomparable points below one
    Diamond,           // bottom, two incomparable middles, top
    TwoChainPlusPoint, // 2-chain and an isolated point
    WedgePlusPoint,
    VeePlusPoint,
    Bowtie,            // two minimal points each below two maximal points
    ChainWithLowSide,  // 3-chain a<b<c plus d<c
    ChainWithHighSide, // 3-chain a<b<c plus a<d
    NShape,            // a<b, c<b, c<d
};

inline constexpr std::array<PatternKind, 10> all_patterns{
    PatternKind::Vee,          PatternKind::Wedge,        PatternKind::Diamond,
    PatternKind::TwoChainPlusPoint, PatternKind::WedgePlusPoint, PatternKind::VeePlusPoint,
    PatternKind::Bowtie,       PatternKind::ChainWithLowSide, PatternKind::ChainWithHighSide,
    PatternKind::NShape,
};

std::string_view pattern_name(PatternKind kind) noexcept;
std::optional<PatternKind> pattern_from_name(std::string_view name);
const Poset& pattern(PatternKind kind);

// The seven four-point posets that are not sub-representable, ordered by
// canonical code.
std::span<const PatternKind> four_point_obstructions();

bool contains_pattern(const Poset& p, PatternKind kind);
std::optional<Embedding> find_pattern(const Poset& p, PatternKind kind);

} // namespace subrep
