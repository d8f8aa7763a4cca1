#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mccoy/constructions.hpp"
#include "mccoy/ring.hpp"

using namespace mccoy;
using Index = FiniteRing::Index;

TEST_CASE("axioms hold on the basic constructions") {
    for (const auto& ring : {zmod(2), zmod(6), product(zmod(2), zmod(3)),
                             upper_triangular(2, zmod(2)), v_ring(zmod(2))})
        CHECK(verify_axioms(*ring).empty());
}

TEST_CASE("broken tables are reported with a witness") {
    // mutate Z3's multiplication so distributivity fails
    auto z3 = zmod(3);
    auto mul = z3->mul_table();
    mul[1 * 3 + 1] = 2;   // 1*1 := 2
    auto broken = FiniteRing::from_tables("broken", 3, z3->add_table(),
                                          std::move(mul), 0, std::nullopt);
    auto violations = verify_axioms(*broken);
    REQUIRE(!violations.empty());
    CHECK(!violations.front().law.empty());
}

TEST_CASE("element arithmetic rejects cross-ring operands") {
    auto a = Element(zmod(2), 1);
    auto b = Element(zmod(3), 1);
    CHECK_THROWS_AS((void)(a + b), RingError);
    CHECK_THROWS_AS((void)(a * b), RingError);
    CHECK((a + a).index() == 0);
    CHECK((-Element(zmod(3), 1)).index() == 2);
}

TEST_CASE("annihilators match a direct scan") {
    auto t2 = upper_triangular(2, zmod(2));
    const Index e12 = *t2->index_of({0, 1, 0});
    const Index e11 = *t2->index_of({1, 0, 0});

    auto rann = right_annihilator(*t2, {e12, e11});
    std::vector<Index> expect;
    for (Index s = 0; s < t2->size(); ++s)
        if (t2->mul(e12, s) == t2->zero() && t2->mul(e11, s) == t2->zero())
            expect.push_back(s);
    CHECK(rann == expect);
    CHECK(rann == std::vector<Index>{t2->zero()});

    auto lann = left_annihilator(*t2, {e12});
    for (Index s : lann) CHECK(t2->mul(s, e12) == t2->zero());
    // e12 * e12 = 0, so e12 annihilates itself from the left
    CHECK(std::count(lann.begin(), lann.end(), e12) == 1);
}

TEST_CASE("idempotents, units, regular elements") {
    auto z6 = zmod(6);
    CHECK(idempotents(*z6) == std::vector<Index>{0, 1, 3, 4});
    CHECK(units(*z6) == std::vector<Index>{1, 5});
    for (Index a = 0; a < 6; ++a) {
        bool unit = a == 1 || a == 5;
        CHECK(is_regular(*z6, a) == unit);
    }
}

TEST_CASE("rigidity") {
    auto z2 = zmod(2);
    CHECK(is_rigid(*z2, *endo_identity(z2)).holds);

    auto z4 = zmod(4);
    auto r = is_rigid(*z4, *endo_identity(z4));
    CHECK(!r.holds);
    CHECK(r.witness == 2);

    auto r22 = product(z2, z2);
    auto swap = endo_swap(r22);
    auto rs = is_rigid(*r22, *swap);
    CHECK(!rs.holds);
    CHECK(rs.witness != r22->zero());
    CHECK(r22->mul(rs.witness, swap->apply(rs.witness)) == r22->zero());
}

TEST_CASE("ideal lattice of T2(Z2)") {
    auto t2 = upper_triangular(2, zmod(2));
    auto all = ideals(t2);
    REQUIRE(all.size() == 5);
    CHECK(all.front().members.size() == 1);
    CHECK(all.back().members.size() == t2->size());
    // sorted by (size, members)
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1].members.size() <= all[i].members.size());
    for (const auto& ideal : all) CHECK(is_ideal(t2, ideal.members));
}

TEST_CASE("make_ideal validates membership") {
    auto z4 = zmod(4);
    CHECK_THROWS_AS(make_ideal(z4, {0, 1}), RingError);   // 1 generates all
    auto ok = make_ideal(z4, {0, 2});
    CHECK(ok.contains(2));
    CHECK(!ok.contains(1));
}

TEST_CASE("isomorphism search finds CRT and refuses false friends") {
    auto map = find_isomorphism(product(zmod(2), zmod(3)), zmod(6));
    REQUIRE(map.has_value());
    CHECK(is_isomorphism(*product(zmod(2), zmod(3)), *zmod(6), *map));

    CHECK(!find_isomorphism(zmod(4), product(zmod(2), zmod(2))).has_value());
    CHECK(!find_isomorphism(zmod(4), zmod(6)).has_value());

    // noncommutative vs commutative of the same size
    auto t2 = upper_triangular(2, zmod(2));
    CHECK(!find_isomorphism(t2, zmod(8)).has_value());
}

TEST_CASE("opposite ring reverses multiplication and is involutive") {
    auto t2 = upper_triangular(2, zmod(2));
    auto opp = opposite(t2);
    for (Index a = 0; a < t2->size(); ++a)
        for (Index b = 0; b < t2->size(); ++b) {
            CHECK(opp->mul(a, b) == t2->mul(b, a));
            CHECK(opp->add(a, b) == t2->add(a, b));
        }
    CHECK(verify_axioms(*opp).empty());
    auto back = opposite(opp);
    for (Index a = 0; a < t2->size(); ++a)
        for (Index b = 0; b < t2->size(); ++b)
            CHECK(back->mul(a, b) == t2->mul(a, b));
    // a triangular ring is isomorphic to its opposite (transpose flip)
    auto map = find_isomorphism(t2, opp);
    REQUIRE(map.has_value());
    CHECK(is_isomorphism(*t2, *opp, *map));
}

TEST_CASE("endomorphism validation rejects non-homomorphisms") {
    auto z4 = zmod(4);
    // x -> x+1 is not additive-compatible with multiplication
    CHECK_THROWS_AS(Endomorphism(z4, {1, 2, 3, 0}, "shift"), RingError);
    // Frobenius-like squaring works on Z2 but not on Z4
    CHECK_NOTHROW(Endomorphism(zmod(2), {0, 1}, "id"));
    CHECK_THROWS_AS(Endomorphism(z4, {0, 1, 0, 1}, "sq"), RingError);
}

TEST_CASE("endomorphism powers and flags") {
    auto r22 = product(zmod(2), zmod(2));
    auto swap = endo_swap(r22);
    CHECK(swap->injective());
    CHECK(swap->surjective());
    CHECK(!swap->idempotent());
    CHECK(!swap->is_identity());
    for (Index a = 0; a < r22->size(); ++a) {
        CHECK(swap->apply_power(2, a) == a);
        CHECK(swap->apply_power(3, a) == swap->apply(a));
        CHECK(swap->apply_power(0, a) == a);
    }
}

TEST_CASE("structural rings refuse exhaustive operations") {
    auto big = matrix_ring(3, zmod(4));   // 4^9 elements, above the table cap
    CHECK(!big->is_table());
    CHECK_THROWS_AS(idempotents(*big), UnsupportedOperation);
    CHECK_THROWS_AS(verify_axioms(*big), UnsupportedOperation);
    CHECK(verify_axioms(*big, 500).empty());   // sampled spot-check
}
