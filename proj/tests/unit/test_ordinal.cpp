#include "support.hpp"

#include <subrep/embed.hpp>
#include <subrep/errors.hpp>
#include <subrep/ordinal.hpp>

#include <doctest.h>

#include <array>

using namespace subrep;

namespace {

// Reference model: coefficients of w2, w1, w0 and a finite tail, with
// ordinal addition written out directly from the absorption rule.
struct Model {
    std::array<std::uint64_t, 3> c{};  // c[k] multiplies w_k
    std::uint64_t fin = 0;

    int lead() const {
        for (int k = 2; k >= 0; --k) {
            if (c[static_cast<std::size_t>(k)] != 0) {
                return k;
            }
        }
        return -1;
    }

    friend Model operator+(const Model& a, const Model& b) {
        const int k = b.lead();
        if (k < 0) {
            Model r = a;
            r.fin += b.fin;
            return r;
        }
        Model r;
        for (int j = 0; j < 3; ++j) {
            const auto u = static_cast<std::size_t>(j);
            r.c[u] = j > k ? a.c[u] : j == k ? a.c[u] + b.c[u] : b.c[u];
        }
        r.fin = b.fin;
        return r;
    }

    friend auto operator<=>(const Model& a, const Model& b) {
        return std::tie(a.c[2], a.c[1], a.c[0], a.fin) <=> std::tie(b.c[2], b.c[1], b.c[0], b.fin);
    }
    friend bool operator==(const Model&, const Model&) = default;
};

Model model_of(const OrdinalExpr& e) {
    Model m;
    for (const auto& t : e.terms()) {
        if (t.kind == OrdinalTerm::Kind::Omega) {
            m.c.at(t.index) += t.count;
        } else {
            m.fin += t.count;
        }
    }
    return m;
}

// A random raw term sequence, possibly unnormalized, with its model value.
std::pair<OrdinalExpr, Model> random_ordinal(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, 4);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<std::uint32_t> idx(0, 2);
    std::uniform_int_distribution<std::uint64_t> cnt(1, 3);
    OrdinalExpr e;
    Model m;
    for (int i = len(rng); i > 0; --i) {
        OrdinalTerm t;
        Model piece;
        if (kind(rng) == 0) {
            t.kind = OrdinalTerm::Kind::Fin;
            t.count = cnt(rng);
            piece.fin = t.count;
        } else {
            t.kind = OrdinalTerm::Kind::Omega;
            t.index = idx(rng);
            t.count = cnt(rng);
            piece.c.at(t.index) = t.count;
        }
        e.append(t);
        m = m + piece;
    }
    return {e, m};
}

bool normalized(const OrdinalExpr& e) {
    const auto& ts = e.terms();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i].count == 0) {
            return false;
        }
        if (ts[i].kind == OrdinalTerm::Kind::Fin && i + 1 != ts.size()) {
            return false;
        }
        if (i > 0 && ts[i].kind == OrdinalTerm::Kind::Omega && ts[i - 1].index <= ts[i].index) {
            return false;
        }
    }
    return true;
}

OrdinalExpr ord(const char* s) { return parse_ordinal(s); }

} // namespace

TEST_CASE("ordinal examples") {
    CHECK(ord("5") + ord("w0") == ord("w0"));
    CHECK((ord("w1") + ord("1")).to_string() == "w1+1");
    CHECK(ord("w0") + ord("w0") == OrdinalExpr::omega(0, 2));
    CHECK(ord("w0*2").to_string() == "w0*2");
    CHECK(ord_cmp(ord("w2"), ord("w1+10")) == std::strong_ordering::greater);
    CHECK(ord_cmp(ord("w0+5"), ord("w0")) == std::strong_ordering::greater);
    CHECK(ord_cmp(ord("w1+10"), ord("w1+10")) == std::strong_ordering::equal);
    CHECK(OrdinalExpr{}.to_string() == "0");
    CHECK(ord("w") == ord("w0"));
    CHECK_THROWS_AS(parse_ordinal("x"), Error);
    CHECK_THROWS_AS(parse_ordinal("w1+"), Error);
}

TEST_CASE("cardinal examples") {
    const auto a0 = CardinalSym::aleph(0);
    CHECK(card_sum(a0, CardinalSym::finite(12)) == a0);
    CHECK(card_cmp(CardinalSym::aleph(1), a0) == std::strong_ordering::greater);
    CHECK(card_sum(CardinalSym::finite(2), CardinalSym::finite(3)) == CardinalSym::finite(5));
    CHECK(initial_ordinal(CardinalSym::aleph(1)) == ord("w1"));
    CHECK(cardinality(ord("w1+5")) == CardinalSym::aleph(1));
    CHECK(cardinality(ord("7")) == CardinalSym::finite(7));
    CHECK(parse_cardinal("aleph3") == CardinalSym::aleph(3));
    CHECK(parse_cardinal("12") == CardinalSym::finite(12));
    CHECK(CardinalSym::aleph(0).to_string() == "aleph0");
}

TEST_CASE("ordinal segments") {
    CHECK(subrep_ordinal(ord("w0+5"), ord("3"), ChainMode::WellOrdered).to_string() == "initial segment 3 of w0+5");
    CHECK(subrep_ordinal(ord("w1"), ord("w0"), ChainMode::WellOrdered).to_string() == "initial segment w0 of w1");
    CHECK(subrep_ordinal(ord("w0"), ord("5"), ChainMode::WellOrderedStar).to_string() == "final segment 5* of w0*");
    CHECK(subrep_ordinal(ord("w0"), ord("w0"), ChainMode::WellOrdered).whole);
    CHECK_THROWS_AS(subrep_ordinal(ord("5"), ord("w0"), ChainMode::WellOrdered), Error);
}

TEST_CASE("ordinal kernel matches the reference model on random triples") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 10000; ++trial) {
        const auto [a, ma] = random_ordinal(rng);
        const auto [b, mb] = random_ordinal(rng);
        const auto [c, mc] = random_ordinal(rng);
        REQUIRE(normalized(a));
        CHECK(model_of(a) == ma);
        CHECK(model_of(a + b) == ma + mb);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + OrdinalExpr{} == a);
        CHECK(OrdinalExpr{} + a == a);
        CHECK((ord_cmp(a, b) == (ma <=> mb)));
        if (b < c) {
            CHECK(a + b < a + c);
        }
        if (a <= b) {
            CHECK(a + c <= b + c);
        }
        CHECK(((a < b) + (a == b) + (a > b)) == 1);
        if (a <= b && b <= c) {
            CHECK(a <= c);
        }
        OrdinalExpr again;
        for (const auto& t : a.terms()) {
            again.append(t);
        }
        CHECK(again == a);
        CHECK(parse_ordinal(a.to_string()) == a);
    }
}

TEST_CASE("finite ordinals as chains embed exactly when smaller") {
    for (std::uint64_t a = 1; a <= 12; ++a) {
        for (std::uint64_t b = 1; b <= 12; ++b) {
            const bool le = OrdinalExpr::finite(a) <= OrdinalExpr::finite(b);
            CHECK(embeds(testing::chain(a), testing::chain(b)) == le);
            CHECK(embeds(dual(testing::chain(a)), dual(testing::chain(b))) == le);
        }
    }
}
