#pragma once

#include "subrep/poset.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace subrep {

// The map g on nonempty subsets of a finite poset. Subsets and images are
// masks over the parent's element indices.
class SubRepMap {
public:
    SubRepMap() = default;
    explicit SubRepMap(Poset parent) : parent_(std::move(parent)) {}

    const Poset& parent() const noexcept { return parent_; }
    const std::map<Mask, Mask>& table() const noexcept { return table_; }

    void set(Mask subset, Mask image) { table_[subset] = image; }
    std::optional<Mask> get(Mask subset) const;
    Mask at(Mask subset) const;  // throws PartialMap
    // Defined on every nonempty subset of the parent.
    bool total() const noexcept;

    friend bool operator==(const SubRepMap&, const SubRepMap&) = default;

private:
    Poset parent_;
    std::map<Mask, Mask> table_;
};

inline constexpr std::size_t build_limit = 20;
inline constexpr std::size_t verify_limit = 14;

// Builds g for a finite flower, co-flower or disjoint union of chains.
SubRepMap build_g(const Poset& p);

struct Violation {
    enum class Condition {
        Inclusion,    // S embeds in T  <=>  g(S) is a subset of g(T)
        Equivalence,  // S embeds in g(S) and g(S) embeds in S
    };
    Mask first = 0;
    Mask second = 0;
    Condition condition = Condition::Inclusion;

    std::string describe(const Poset& p, const SubRepMap& g) const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

// Exhaustive check of both defining conditions over all ordered pairs of
// nonempty subsets, in ascending mask order.
std::vector<Violation> verify_subrep(const Poset& p, const SubRepMap& g);

} // namespace subrep
