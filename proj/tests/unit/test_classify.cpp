#include "support.hpp"

#include <subrep/classify.hpp>
#include <subrep/embed.hpp>
#include <subrep/errors.hpp>
#include <subrep/oracle.hpp>

#include <doctest.h>

using namespace subrep;
using testing::from_covers;

namespace {

Poset flower4() { return from_covers({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"2", "4"}}); }
Poset side_point_chain() { return from_covers({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"4", "3"}}); }
Poset diamond() { return from_covers({"b", "l", "r", "t"}, {{"b", "l"}, {"b", "r"}, {"l", "t"}, {"r", "t"}}); }

bool brute_contains(const Poset& p, const Poset& pat) { return testing::brute_embeds(pat, pat.all(), p, p.all()); }

const Poset& brute_vee() {
    static const Poset v = from_covers({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
    return v;
}

OrdinalExpr ord(const char* s) { return parse_ordinal(s); }

} // namespace

TEST_CASE("flower centers") {
    const Poset p = flower4();
    CHECK(is_flower(p) == p.index_of("2"));
    const Poset claw = from_covers({"o", "a", "b", "c"}, {{"o", "a"}, {"o", "b"}, {"o", "c"}});
    CHECK(is_flower(claw) == claw.index_of("o"));
    CHECK_FALSE(is_flower(diamond()));
    CHECK_FALSE(is_flower(testing::antichain(2)));
    CHECK_FALSE(is_flower(testing::chain(4)));
}

TEST_CASE("co-flower centers") {
    const Poset tail = from_covers({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"c", "d"}});
    CHECK(is_coflower(tail) == tail.index_of("c"));
    CHECK_FALSE(is_coflower(brute_vee()));
    CHECK_FALSE(is_coflower(testing::antichain(2)));
    CHECK(is_flower(brute_vee()).has_value());
}

TEST_CASE("unions of chains") {
    const Poset p = from_covers({"s", "a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    const auto chains = is_union_of_chains(p);
    REQUIRE(chains);
    REQUIRE(chains->size() == 2);
    CHECK(p.format_set((*chains)[0]) == "{a,b,c}");
    CHECK(p.format_set((*chains)[1]) == "{s}");
    const auto a4 = is_union_of_chains(testing::antichain(4));
    REQUIRE(a4);
    CHECK(a4->size() == 4);
    CHECK_FALSE(is_union_of_chains(brute_vee()));
}

TEST_CASE("finite verdicts") {
    const Verdict f3 = classify_finite(side_point_chain());
    CHECK_FALSE(f3.sub_representable);
    CHECK(f3.kind == VerdictKind::NotSubRepresentable);
    // This order has a wedge but no vee, so the witness is one of
    // the four-point obstructions.
    CHECK(brute_contains(side_point_chain(), dual(brute_vee())));
    CHECK_FALSE(brute_contains(side_point_chain(), brute_vee()));
    const auto* obs = std::get_if<Obstruction>(&f3.witness);
    REQUIRE(obs);
    REQUIRE(obs->matches.size() == 1);
    CHECK(obs->matches[0].kind == PatternKind::ChainWithLowSide);
    CHECK(witness_holds(side_point_chain(), f3));

    const Verdict d = classify_finite(diamond());
    const auto* dobs = std::get_if<Obstruction>(&d.witness);
    REQUIRE(dobs);
    CHECK(dobs->matches[0].kind == PatternKind::Diamond);

    CHECK(classify_finite(testing::chain(4)).kind == VerdictKind::UnionOfChains);
    CHECK(classify_finite(flower4()).kind == VerdictKind::Flower);

    const Poset crown = from_covers({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"a", "c"}, {"d", "e"}, {"b", "e"}});
    const Verdict vw = classify_finite(crown);
    CHECK_FALSE(vw.sub_representable);
    CHECK(witness_holds(crown, vw));

    CHECK_THROWS_AS(classify_finite(Poset{}), Error);
}

TEST_CASE("witnesses hold for every class up to five points") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const Poset& p : enumerate_posets(n)) {
            const Verdict v = classify_finite(p);
            CHECK(witness_holds(p, v));
            if (!v.sub_representable) {
                const auto* obs = std::get_if<Obstruction>(&v.witness);
                REQUIRE(obs);
                for (const auto& m : obs->matches) {
                    const Poset& pat = pattern(m.kind);
                    for (std::size_t i = 0; i < pat.size(); ++i) {
                        for (std::size_t j = 0; j < pat.size(); ++j) {
                            CHECK(pat.less(i, j) == p.less(m.embedding[i], m.embedding[j]));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("classifier matches a definition search up to four points") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const Poset& p : testing::brute_classes(n)) {
            CHECK(classify_finite(p).sub_representable == testing::brute_subrep_exists(p));
        }
    }
}

TEST_CASE("verdict is invariant under relabeling and duality") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 400; ++trial) {
        const Poset p = testing::random_poset(rng, 1 + trial % 9, 0.15 + 0.05 * (trial % 6));
        const Verdict v = classify_finite(p);
        const Poset q = testing::relabel(p, testing::random_perm(rng, p.size()));
        const Verdict w = classify_finite(q);
        CHECK(v.sub_representable == w.sub_representable);
        CHECK(v.kind == w.kind);
        CHECK(classify_finite(dual(p)).sub_representable == v.sub_representable);
        CHECK(witness_holds(q, w));
    }
}

TEST_CASE("positive verdicts are hereditary") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const Poset p = testing::random_poset(rng, 3 + trial % 6, 0.3);
        if (!classify_finite(p).sub_representable) {
            continue;
        }
        for (Mask s = 1; s <= p.all(); ++s) {
            CHECK(classify_finite(p.induced(s)).sub_representable);
        }
    }
}

TEST_CASE("chain descriptors") {
    CHECK_FALSE(classify_chain(UnboundedChain{"Z"}).sub_representable);
    CHECK_FALSE(classify_chain(UnboundedChain{"Q"}).sub_representable);
    CHECK_FALSE(classify_chain(UnboundedChain{"R"}).sub_representable);
    CHECK(std::holds_alternative<Reason>(classify_chain(UnboundedChain{"R\\Q"}).witness));
    CHECK(classify_chain(WellOrderedChain{ord("w0")}).sub_representable);
    CHECK(classify_chain(WellOrderedStarChain{ord("w0")}).sub_representable);
    CHECK(classify_chain(FiniteChain{4}).kind == VerdictKind::UnionOfChains);
    CHECK_THROWS_AS(classify_chain(FiniteChain{0}), Error);
}

TEST_CASE("symbolic descriptors") {
    const Pinboard pb = parse_pinboard("pin (w2,5) (w1,2) (6,aleph0) (3,1)");
    CHECK(classify_descriptor(PinboardPosetDesc{pb}).kind == VerdictKind::PinboardPoset);
    CHECK(classify_descriptor(CoPinboardPosetDesc{co_dual(pb)}).kind == VerdictKind::CoPinboardPoset);
    CHECK(classify_descriptor(FlowerDesc{ord("w0"), CardinalSym::aleph(0)}).kind == VerdictKind::Flower);
    CHECK(classify_descriptor(CoFlowerDesc{ord("5"), CardinalSym::finite(3)}).kind == VerdictKind::CoFlower);
    CHECK_FALSE(classify_descriptor(PosetDescriptor{diamond()}).sub_representable);
    CHECK_THROWS_AS(classify_descriptor(FlowerDesc{ord("w0"), CardinalSym::finite(1)}), Error);
    CHECK_THROWS_AS(classify_descriptor(PinboardPosetDesc{co_dual(pb)}), Error);
}

TEST_CASE("verdict kind names round-trip") {
    for (auto k : {VerdictKind::Flower, VerdictKind::CoFlower, VerdictKind::UnionOfChains, VerdictKind::PinboardPoset,
                   VerdictKind::CoPinboardPoset, VerdictKind::NotSubRepresentable}) {
        CHECK(verdict_kind_from_name(verdict_kind_name(k)) == k);
    }
}
