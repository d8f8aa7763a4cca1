#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mccoy/constructions.hpp"
#include "mccoy/poly.hpp"

using namespace mccoy;
using Index = FiniteRing::Index;

TEST_CASE("degree and zero polynomial") {
    auto z4 = zmod(4);
    CHECK(!Polynomial{z4, {}}.degree().has_value());
    CHECK(!Polynomial{z4, {0, 0}}.degree().has_value());
    CHECK(Polynomial{z4, {0, 0}}.is_zero());
    CHECK(*Polynomial{z4, {1, 0, 2, 0}}.degree() == 2);   // trailing zeros ok
}

TEST_CASE("addition and convolution product") {
    auto z4 = zmod(4);
    Polynomial f{z4, {1, 2}};        // 1 + 2x
    Polynomial g{z4, {3, 2, 1}};     // 3 + 2x + x^2
    auto sum = poly_add(f, g);
    CHECK(sum.coeffs == std::vector<Index>{0, 0, 1});
    auto prod = poly_mul(f, g);
    // (1+2x)(3+2x+x^2) = 3 + (2+6)x + (1+4)x^2 + 2x^3 mod 4
    CHECK(prod.coeffs == std::vector<Index>{3, 0, 1, 2});
}

TEST_CASE("multiplication respects noncommutativity") {
    auto t2 = upper_triangular(2, zmod(2));
    const Index e11 = *t2->index_of({1, 0, 0});
    const Index e12 = *t2->index_of({0, 1, 0});
    Polynomial f{t2, {e11}};
    Polynomial g{t2, {e12}};
    CHECK(poly_mul(f, g).coeffs == std::vector<Index>{e12});
    CHECK(poly_mul(g, f).coeffs == std::vector<Index>{t2->zero()});
}

TEST_CASE("scalar application sides") {
    auto t2 = upper_triangular(2, zmod(2));
    const Index e11 = *t2->index_of({1, 0, 0});
    const Index e12 = *t2->index_of({0, 1, 0});
    Polynomial f{t2, {e11, e12}};
    CHECK(apply_scalar_right(f, e12).coeffs ==
          std::vector<Index>{e12, t2->zero()});
    CHECK(apply_scalar_left(e12, f).coeffs ==
          std::vector<Index>{t2->zero(), t2->zero()});
}

TEST_CASE("mixed-ring arithmetic is rejected") {
    Polynomial f{zmod(2), {1}};
    Polynomial g{zmod(3), {1}};
    CHECK_THROWS_AS(poly_mul(f, g), RingError);
    CHECK_THROWS_AS(poly_add(f, g), RingError);
}

TEST_CASE("rendering") {
    auto z4 = zmod(4);
    CHECK(render(Polynomial{z4, {0, 0}}) == "0");
    CHECK(render(Polynomial{z4, {1, 0, 3}}) == "(1) + (3)*x^2");
    CHECK(render(Polynomial{z4, {0, 2}}) == "(2)*x");
}

TEST_CASE("skew multiplication twists coefficients") {
    auto r22 = product(zmod(2), zmod(2));
    auto swap = endo_swap(r22);
    const Index a10 = *r22->index_of({1, 0});
    const Index a01 = *r22->index_of({0, 1});
    // x * a10 = swap(a10) x = a01 x
    SkewPolynomial x{r22, swap, {r22->zero(), *r22->one()}};
    SkewPolynomial c{r22, swap, {a10}};
    auto prod = skew_mul(x, c);
    CHECK(prod.coeffs == std::vector<Index>{r22->zero(), a01});
    // with the identity endo, skew_mul degenerates to the plain convolution
    auto id = endo_identity(r22);
    SkewPolynomial f{r22, id, {a10, a01}};
    auto sq = skew_mul(f, f);
    Polynomial pf{r22, {a10, a01}};
    CHECK(sq.coeffs == poly_mul(pf, pf).coeffs);
}

TEST_CASE("skew arithmetic rejects mismatched endomorphisms") {
    auto r22 = product(zmod(2), zmod(2));
    SkewPolynomial f{r22, endo_swap(r22), {1}};
    SkewPolynomial g{r22, endo_identity(r22), {1}};
    CHECK_THROWS_AS(skew_mul(f, g), RingError);
}

TEST_CASE("example: fg = 0 in the skew ring but not in the plain ring") {
    auto r22 = product(zmod(2), zmod(2));
    auto swap = endo_swap(r22);
    const Index a10 = *r22->index_of({1, 0});
    const Index a01 = *r22->index_of({0, 1});
    // (a10 + a10 x)(a01 + a10 x) = 0 under the swap twist
    SkewPolynomial f{r22, swap, {a10, a10}};
    SkewPolynomial g{r22, swap, {a01, a10}};
    CHECK(skew_mul(f, g).is_zero());
    Polynomial pf{r22, {a10, a10}};
    Polynomial pg{r22, {a01, a10}};
    CHECK(!poly_mul(pf, pg).is_zero());
}

TEST_CASE("polynomial enumeration covers the space exactly once") {
    auto z4 = zmod(4);
    PolyEnumerator all(z4, 1, false);
    CHECK(all.count() == 16);
    PolyEnumerator nz(z4, 1, true);
    CHECK(nz.count() == 15);

    std::set<std::vector<Index>> seen;
    bool zero_seen = false;
    for (std::uint64_t r = 0; r < nz.count(); ++r) {
        auto v = nz.at(r);
        CHECK(v.size() == 2);
        zero_seen = zero_seen || (v[0] == 0 && v[1] == 0);
        seen.insert(std::move(v));
    }
    CHECK(!zero_seen);
    CHECK(seen.size() == nz.count());

    // order is lexicographic with coeffs[0] most significant
    CHECK(nz.at(0) == std::vector<Index>{0, 1});
    CHECK(nz.at(3) == std::vector<Index>{1, 0});
    CHECK(nz.at(14) == std::vector<Index>{3, 3});

    // sequential interface agrees with random access
    PolyEnumerator seq(z4, 1, true);
    for (std::uint64_t r = 0; r < nz.count(); ++r) {
        auto p = seq.next();
        REQUIRE(p.has_value());
        CHECK(p->coeffs == nz.at(r));
    }
    CHECK(!seq.next().has_value());
}
