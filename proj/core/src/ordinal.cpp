#include "subrep/ordinal.hpp"

#include "subrep/errors.hpp"

#include <charconv>
#include <sstream>

namespace subrep {

namespace {

// Ordering of single terms; Omega terms dominate finite ones.
std::strong_ordering term_cmp(const OrdinalTerm& a, const OrdinalTerm& b) {
    using K = OrdinalTerm::Kind;
    if (a.kind != b.kind) {
        return a.kind == K::Omega ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (a.kind == K::Omega && a.index != b.index) {
        return a.index <=> b.index;
    }
    return a.count <=> b.count;
}

// True if a term of this shape is absorbed when `next` is added after it.
bool absorbed_by(const OrdinalTerm& earlier, const OrdinalTerm& next) {
    using K = OrdinalTerm::Kind;
    if (next.kind == K::Fin) {
        return false;
    }
    return earlier.kind == K::Fin || earlier.index < next.index;
}

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(ErrorCode::Parse, "bad number in '" + std::string(whole) + "'");
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

OrdinalExpr OrdinalExpr::finite(std::uint64_t n) {
    OrdinalExpr e;
    if (n > 0) {
        e.append({OrdinalTerm::Kind::Fin, 0, n});
    }
    return e;
}

OrdinalExpr OrdinalExpr::omega(std::uint32_t index, std::uint64_t multiplicity) {
    OrdinalExpr e;
    if (multiplicity > 0) {
        e.append({OrdinalTerm::Kind::Omega, index, multiplicity});
    }
    return e;
}

bool OrdinalExpr::is_finite() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].kind == OrdinalTerm::Kind::Fin);
}

std::uint64_t OrdinalExpr::finite_value() const noexcept {
    return terms_.empty() ? 0 : terms_[0].count;
}

int OrdinalExpr::leading_index() const noexcept {
    if (terms_.empty() || terms_[0].kind == OrdinalTerm::Kind::Fin) {
        return -1;
    }
    return static_cast<int>(terms_[0].index);
}

void OrdinalExpr::append(const OrdinalTerm& term) {
    if (term.count == 0) {
        return;
    }
    while (!terms_.empty() && absorbed_by(terms_.back(), term)) {
        terms_.pop_back();
    }
    if (!terms_.empty() && terms_.back().kind == term.kind &&
        (term.kind == OrdinalTerm::Kind::Fin || terms_.back().index == term.index)) {
        terms_.back().count += term.count;
        return;
    }
    terms_.push_back(term);
}

std::string OrdinalExpr::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) {
            os << '+';
        }
        first = false;
        if (t.kind == OrdinalTerm::Kind::Fin) {
            os << t.count;
        } else {
            os << 'w' << t.index;
            if (t.count > 1) {
                os << '*' << t.count;
            }
        }
    }
    return os.str();
}

std::strong_ordering operator<=>(const OrdinalExpr& a, const OrdinalExpr& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = term_cmp(a.terms_[i], b.terms_[i]);
        if (c != 0) {
            return c;
        }
    }
    return a.terms_.size() <=> b.terms_.size();
}

OrdinalExpr ord_sum(const OrdinalExpr& a, const OrdinalExpr& b) {
    OrdinalExpr out = a;
    for (const auto& t : b.terms()) {
        out.append(t);
    }
    return out;
}

std::strong_ordering ord_cmp(const OrdinalExpr& a, const OrdinalExpr& b) {
    return a <=> b;
}

std::string CardinalSym::to_string() const {
    return infinite_ ? "aleph" + std::to_string(value_) : std::to_string(value_);
}

CardinalSym card_sum(CardinalSym a, CardinalSym b) {
    if (a.is_infinite() || b.is_infinite()) {
        return std::max(a, b);
    }
    return CardinalSym::finite(a.value() + b.value());
}

std::strong_ordering card_cmp(CardinalSym a, CardinalSym b) {
    return a <=> b;
}

OrdinalExpr initial_ordinal(CardinalSym c) {
    return c.is_infinite() ? OrdinalExpr::omega(static_cast<std::uint32_t>(c.value()))
                           : OrdinalExpr::finite(c.value());
}

CardinalSym cardinality(const OrdinalExpr& a) {
    if (a.is_finite()) {
        return CardinalSym::finite(a.finite_value());
    }
    return CardinalSym::aleph(static_cast<std::uint32_t>(a.leading_index()));
}

OrdinalExpr parse_ordinal(std::string_view text) {
    const std::string_view whole = text;
    text = trim(text);
    if (text.empty()) {
        throw Error(ErrorCode::Parse, "empty ordinal");
    }
    OrdinalExpr out;
    while (true) {
        const auto plus = text.find('+');
        std::string_view term = trim(text.substr(0, plus));
        std::uint64_t mult = 1;
        if (auto star = term.find('*'); star != std::string_view::npos) {
            mult = parse_uint(trim(term.substr(star + 1)), whole);
            term = trim(term.substr(0, star));
        }
        if (term.starts_with("aleph")) {
            term.remove_prefix(5);
            out.append({OrdinalTerm::Kind::Omega, static_cast<std::uint32_t>(parse_uint(term, whole)), mult});
        } else if (term.starts_with("w")) {
            term.remove_prefix(1);
            const auto idx = term.empty() ? 0 : parse_uint(term, whole);
            out.append({OrdinalTerm::Kind::Omega, static_cast<std::uint32_t>(idx), mult});
        } else {
            out.append({OrdinalTerm::Kind::Fin, 0, parse_uint(term, whole) * mult});
        }
        if (plus == std::string_view::npos) {
            break;
        }
        text = text.substr(plus + 1);
    }
    return out;
}

CardinalSym parse_cardinal(std::string_view text) {
    const std::string_view whole = text;
    text = trim(text);
    if (text.starts_with("aleph")) {
        text.remove_prefix(5);
        return CardinalSym::aleph(static_cast<std::uint32_t>(parse_uint(text, whole)));
    }
    if (text.starts_with("w")) {
        text.remove_prefix(1);
        return CardinalSym::aleph(static_cast<std::uint32_t>(text.empty() ? 0 : parse_uint(text, whole)));
    }
    return CardinalSym::finite(parse_uint(text, whole));
}

std::string OrdinalSegment::to_string() const {
    std::ostringstream os;
    if (mode == ChainMode::WellOrdered) {
        os << (whole ? "whole of " : "initial segment ") << (whole ? "" : order_type.to_string() + " of ")
           << host.to_string();
    } else {
        os << (whole ? "whole of " : "final segment ") << (whole ? "" : order_type.to_string() + "* of ")
           << host.to_string() << '*';
    }
    return os.str();
}

OrdinalSegment subrep_ordinal(const OrdinalExpr& alpha, const OrdinalExpr& beta, ChainMode mode) {
    if (beta > alpha) {
        throw Error(ErrorCode::BetaExceedsAlpha, beta.to_string() + " > " + alpha.to_string());
    }
    return OrdinalSegment{mode, beta, alpha, beta == alpha};
}

} // namespace subrep
