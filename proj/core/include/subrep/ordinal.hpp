#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subrep {

// One summand of an ordinal in the supported fragment: either
// omega_index * multiplicity, or a finite tail.
struct OrdinalTerm {
    enum class Kind : std::uint8_t { Omega, Fin };
    Kind kind = Kind::Fin;
    std::uint32_t index = 0;  // omega index, unused for Fin
    std::uint64_t count = 0;  // multiplicity for Omega, value for Fin; always > 0

    friend bool operator==(const OrdinalTerm&, const OrdinalTerm&) = default;
};

// Ordinals of the form  w_k1*m1 + w_k2*m2 + ... + n  with k1 > k2 > ...
// and a finite tail n. Every value is kept normalized; zero is the empty sum.
class OrdinalExpr {
public:
    OrdinalExpr() = default;

    static OrdinalExpr finite(std::uint64_t n);
    static OrdinalExpr omega(std::uint32_t index, std::uint64_t multiplicity = 1);

    const std::vector<OrdinalTerm>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_finite() const noexcept;
    // Only meaningful when is_finite().
    std::uint64_t finite_value() const noexcept;
    // Largest omega index, or -1 for finite ordinals.
    int leading_index() const noexcept;

    // Appends one term, absorbing every trailing term smaller than it.
    void append(const OrdinalTerm& term);

    std::string to_string() const;

    friend bool operator==(const OrdinalExpr&, const OrdinalExpr&) = default;
    friend std::strong_ordering operator<=>(const OrdinalExpr& a, const OrdinalExpr& b);

private:
    std::vector<OrdinalTerm> terms_;
};

OrdinalExpr ord_sum(const OrdinalExpr& a, const OrdinalExpr& b);
inline OrdinalExpr operator+(const OrdinalExpr& a, const OrdinalExpr& b) { return ord_sum(a, b); }
std::strong_ordering ord_cmp(const OrdinalExpr& a, const OrdinalExpr& b);

// Finite cardinal n or aleph_k.
class CardinalSym {
public:
    constexpr CardinalSym() = default;
    static constexpr CardinalSym finite(std::uint64_t n) { return CardinalSym(false, n); }
    static constexpr CardinalSym aleph(std::uint32_t k) { return CardinalSym(true, k); }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    constexpr bool is_finite() const noexcept { return !infinite_; }
    // Finite value, or aleph index when infinite.
    constexpr std::uint64_t value() const noexcept { return value_; }
    constexpr bool is_zero() const noexcept { return !infinite_ && value_ == 0; }

    std::string to_string() const;

    friend constexpr bool operator==(const CardinalSym&, const CardinalSym&) = default;
    friend constexpr std::strong_ordering operator<=>(const CardinalSym& a, const CardinalSym& b) {
        if (a.infinite_ != b.infinite_) {
            return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return a.value_ <=> b.value_;
    }

private:
    constexpr CardinalSym(bool infinite, std::uint64_t v) : infinite_(infinite), value_(v) {}
    bool infinite_ = false;
    std::uint64_t value_ = 0;
};

CardinalSym card_sum(CardinalSym a, CardinalSym b);
std::strong_ordering card_cmp(CardinalSym a, CardinalSym b);

// The initial ordinal of a cardinal (aleph_k -> w_k, n -> n) and back.
OrdinalExpr initial_ordinal(CardinalSym c);
CardinalSym cardinality(const OrdinalExpr& a);

// Text syntax: "w2", "w1+10", "w0*2+5", "30", "0"; "alephK" also reads as
// the initial ordinal w_K.
OrdinalExpr parse_ordinal(std::string_view text);
// "aleph3", "aleph0", "12"; "wK" also reads as aleph_K.
CardinalSym parse_cardinal(std::string_view text);

enum class ChainMode { WellOrdered, WellOrderedStar };

// Representative chosen for a subchain of order type beta inside a
// well-ordered chain alpha (an initial segment), or inside alpha* (a final
// segment of type beta*).
struct OrdinalSegment {
    ChainMode mode = ChainMode::WellOrdered;
    OrdinalExpr order_type;
    OrdinalExpr host;
    bool whole = false;

    std::string to_string() const;
    friend bool operator==(const OrdinalSegment&, const OrdinalSegment&) = default;
};

OrdinalSegment subrep_ordinal(const OrdinalExpr& alpha, const OrdinalExpr& beta, ChainMode mode);

} // namespace subrep
