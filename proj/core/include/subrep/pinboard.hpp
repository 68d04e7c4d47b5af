#pragma once

#include "subrep/ordinal.hpp"
#include "subrep/poset.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace subrep {

// A column of height `height` repeated `freq` times.
struct PinPair {
    OrdinalExpr height;
    CardinalSym freq;
    friend bool operator==(const PinPair&, const PinPair&) = default;
};

// Finite set of (height, frequency) pairs, never both infinite. Heights are
// distinct and kept in decreasing order. A starred board is a co-pinboard:
// every column is read in the reverse order (h* instead of h).
class Pinboard {
public:
    Pinboard() = default;
    static Pinboard make(std::vector<PinPair> pairs, bool starred = false);

    const std::vector<PinPair>& pairs() const noexcept { return pairs_; }
    bool starred() const noexcept { return starred_; }
    bool is_finite() const noexcept;
    std::string to_string() const;

    friend bool operator==(const Pinboard&, const Pinboard&) = default;

private:
    friend Pinboard co_dual(const Pinboard&);
    std::vector<PinPair> pairs_;
    bool starred_ = false;
};

Pinboard co_dual(const Pinboard& pb);

// Disjoint union of freq copies of each height chain. Elements are named
// c{pair}_{copy}_{level}, level 0 at the bottom (at the top for co-forms).
Poset pinboard_poset(const Pinboard& pb);

// Host {(beta, n), (m, gamma)}: n columns of height beta and gamma columns
// of height m. Columns are ordered with the n tall columns first.
class SimplePinboard {
public:
    SimplePinboard() = default;
    // beta and gamma must be infinite, n and m finite.
    static SimplePinboard make(CardinalSym beta, std::uint64_t n, std::uint64_t m, CardinalSym gamma);
    // Finite analog used to check the construction against brute force:
    // beta and gamma are finite bounds with beta > m.
    static SimplePinboard bounded(std::uint64_t beta, std::uint64_t n, std::uint64_t m, std::uint64_t gamma);

    CardinalSym beta() const noexcept { return beta_; }
    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t m() const noexcept { return m_; }
    CardinalSym gamma() const noexcept { return gamma_; }
    bool is_bounded() const noexcept { return beta_.is_finite(); }

    // Tallest height a column of a subset may have.
    OrdinalExpr max_height() const { return initial_ordinal(beta_); }
    // Number of host columns whose height is at least h.
    CardinalSym columns_at_least(const OrdinalExpr& h) const;

    Pinboard as_pinboard() const;
    std::string to_string() const;

    friend bool operator==(const SimplePinboard&, const SimplePinboard&) = default;

private:
    CardinalSym beta_;
    std::uint64_t n_ = 0;
    std::uint64_t m_ = 0;
    CardinalSym gamma_;
};

// A normalized subset of a simple pinboard's poset: heights strictly
// decreasing, every frequency positive, and the columns fit the host.
class PinSubset {
public:
    const std::vector<PinPair>& pairs() const noexcept { return pairs_; }
    const SimplePinboard& host() const noexcept { return host_; }
    bool starred() const noexcept { return starred_; }
    bool empty() const noexcept { return pairs_.empty(); }
    std::string to_string() const;

    friend bool operator==(const PinSubset&, const PinSubset&) = default;

private:
    friend PinSubset normalize_subset(const std::vector<PinPair>&, const SimplePinboard&, bool);
    friend PinSubset co_dual(const PinSubset&);
    std::vector<PinPair> pairs_;
    SimplePinboard host_;
    bool starred_ = false;
};

// Merges equal heights, drops zero entries and entries that cannot change
// the embeddability class, sorts by height, then checks the fit.
PinSubset normalize_subset(const std::vector<PinPair>& raw, const SimplePinboard& host, bool starred = false);

PinSubset co_dual(const PinSubset& y);

// Cumulative column-count criterion on plain pair lists (any order, any
// duplicates): every column of `a` can be matched injectively to a column
// of `b` that is at least as tall.
bool columns_embed(const std::vector<PinPair>& a, const std::vector<PinPair>& b);

struct ThetaRun {
    CardinalSym count;
    OrdinalExpr height;
    OrdinalExpr start;  // first column position, an ordinal
    friend bool operator==(const ThetaRun&, const ThetaRun&) = default;
};

// Columns of the host, in the fixed column order, each cut to an initial
// segment. Positions past the last run have height 0.
class ThetaSegments {
public:
    const std::vector<ThetaRun>& runs() const noexcept { return runs_; }
    const SimplePinboard& host() const noexcept { return host_; }
    bool starred() const noexcept { return starred_; }

    // First position after the run at index i.
    OrdinalExpr run_end(std::size_t i) const;
    // Ordinal length of the prefix of columns with height >= h.
    OrdinalExpr prefix_at_least(const OrdinalExpr& h) const;

    // One line per run in the "h of columns ..." form, then "0 otherwise".
    std::vector<std::string> describe() const;

    friend bool operator==(const ThetaSegments&, const ThetaSegments&) = default;

private:
    friend ThetaSegments theta(const SimplePinboard&, const PinSubset&);
    std::vector<ThetaRun> runs_;
    SimplePinboard host_;
    bool starred_ = false;
};

ThetaSegments theta(const SimplePinboard& host, const PinSubset& y);

// Column-wise containment of the initial segments.
bool theta_subset(const ThetaSegments& a, const ThetaSegments& b);

bool pin_embeds(const PinSubset& y, const PinSubset& y2);

// "pin (w2,5) (w1,2) (6,aleph0) (3,1)"; "copin ..." for co-pinboards.
Pinboard parse_pinboard(std::string_view text);
// Same pair syntax with exactly the shape {(beta, n), (m, gamma)}.
SimplePinboard parse_simple_pinboard(std::string_view text);
// Raw pair list with the pinboard syntax; returns the pairs and the star flag.
std::vector<PinPair> parse_pin_pairs(std::string_view text, bool* starred = nullptr);

} // namespace subrep
