#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subrep {

// Element sets are bitmasks over element indices, so a finite poset holds
// at most 64 elements. Every exhaustive routine has a much smaller guard.
using Mask = std::uint64_t;
inline constexpr std::size_t max_elements = 64;

inline constexpr Mask bit(std::size_t i) noexcept { return Mask{1} << i; }
inline constexpr Mask full_mask(std::size_t n) noexcept { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
inline int popcount(Mask m) noexcept { return std::popcount(m); }
inline std::size_t lowest(Mask m) noexcept { return static_cast<std::size_t>(std::countr_zero(m)); }

template <typename F>
void for_each_bit(Mask m, F&& f) {
    while (m) {
        f(lowest(m));
        m &= m - 1;
    }
}

// A subset of a fixed parent poset; carries the induced order implicitly.
struct SubsetMask {
    Mask bits = 0;
    std::size_t universe = 0;

    std::size_t size() const noexcept { return static_cast<std::size_t>(popcount(bits)); }
    bool contains(std::size_t i) const noexcept { return (bits >> i) & 1U; }
    bool subset_of(const SubsetMask& other) const noexcept { return (bits & ~other.bits) == 0; }

    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
    friend auto operator<=>(const SubsetMask&, const SubsetMask&) = default;
};

enum class Direction { Up, Down };

// Finite strict partial order on named elements. The relation is stored as
// one "strictly above" and one "strictly below" mask per element; both are
// kept transitively closed.
class Poset {
public:
    Poset() = default;

    // Takes a complete strict order: above[i] has bit j set iff i < j.
    // Validates irreflexivity, antisymmetry, transitivity and unique names.
    static Poset from_relation(std::vector<std::string> names, std::vector<Mask> above);

    // Convenience for tests and tools: elements named "0", "1", ...
    static Poset from_relation(std::vector<Mask> above);

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }
    Mask all() const noexcept { return full_mask(size()); }

    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;  // throws UnknownElement

    bool less(std::size_t i, std::size_t j) const noexcept { return (up_[i] >> j) & 1U; }
    bool comparable(std::size_t i, std::size_t j) const noexcept { return less(i, j) || less(j, i); }
    Mask up(std::size_t i) const noexcept { return up_[i]; }
    Mask down(std::size_t i) const noexcept { return down_[i]; }

    bool is_chain(Mask m) const noexcept;
    bool is_antichain(Mask m) const noexcept;

    // Induced suborder on the elements of m, in index order, names kept.
    Poset induced(Mask m) const;
    SubsetMask subset(Mask m) const noexcept { return {m, size()}; }

    // Cover pairs (i, j): i < j with nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;

    std::string format_set(Mask m) const;

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    std::vector<std::string> names_;
    std::vector<Mask> up_;
    std::vector<Mask> down_;
};

// Builds the transitive closure of a Hasse diagram. Fails on unknown names,
// duplicate names and on any cycle (including a self-cover).
Poset poset_from_cover(const std::vector<std::string>& elements,
                       const std::vector<std::pair<std::string, std::string>>& covers);

Poset dual(const Poset& p);

Mask strict_cone(const Poset& p, std::size_t x, Direction direction);
Mask strict_cone(const Poset& p, std::string_view x, Direction direction);

struct HeightWidth {
    std::size_t height = 0;
    std::size_t width = 0;
    friend bool operator==(const HeightWidth&, const HeightWidth&) = default;
};

// Largest chain and largest antichain, both computed exactly.
HeightWidth height_width(const Poset& p);
std::size_t height(const Poset& p, Mask m);
std::size_t width(const Poset& p, Mask m);

inline constexpr std::size_t canonical_code_limit = 10;

// Byte string that is equal for two posets iff they are order-isomorphic.
using CanonicalCode = std::string;
CanonicalCode canonical_code(const Poset& p);
// Code of the suborder induced on m, without materializing it.
CanonicalCode canonical_code(const Poset& p, Mask m);
std::string to_hex(const CanonicalCode& code);

// Connected components of the comparability graph, as masks of p, ordered
// by descending canonical code (so larger components come first) and then by
// least element index.
std::vector<Mask> component_masks(const Poset& p);
std::vector<Poset> components(const Poset& p);

// Fully checks the strict-order axioms; the constructors already do this,
// the function is exposed for generators in tests.
bool is_strict_order(const std::vector<Mask>& above);

} // namespace subrep
