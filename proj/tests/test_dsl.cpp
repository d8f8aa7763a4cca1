#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "mccoy/constructions.hpp"
#include "mccoy/dsl.hpp"

using namespace mccoy;
using Index = FiniteRing::Index;

TEST_CASE("every grammar production evaluates") {
    for (const char* text : {
             "Z(6)",
             "prod(Z(2),Z(3),Z(2))",
             "M(2,Z(2))",
             "T(3,Z(2))",
             "Rn(2,Z(4))",
             "V(Z(2))",
             "trunc(Z(4),2)",
             "skewquot(prod(Z(2),Z(2)),swap,2)",
             "skewquot(Rn(2,Z(2)),diagcollapse,2)",
             "skewquot(Z(4),id,3)",
             "corner(T(2,Z(2)),[1,0,0])",
             "quot(T(2,Z(2)),1)",
             "op(M(2,Z(2)))",
         }) {
        auto res = dsl::eval(text);
        CHECK(res.ring != nullptr);
        CHECK(verify_axioms(*res.ring).empty());
    }
}

TEST_CASE("parse and render round-trip") {
    for (const char* text : {
             "Z(6)",
             "prod(Z(2),Z(3))",
             "skewquot(prod(Z(2),Z(2)),swap,2)",
             "corner(V(Z(2)),[1,1,0,0,0,0])",
             "quot(T(2,Z(2)),3)",
             "op(trunc(Z(4),2))",
         }) {
        auto ast = dsl::parse(text);
        CHECK(dsl::render(*ast) == text);
        // whitespace is insignificant
        std::string spaced = text;
        for (std::size_t i = spaced.find(','); i != std::string::npos;
             i = spaced.find(',', i + 2))
            spaced.insert(i + 1, " ");
        CHECK(dsl::render(*dsl::parse(spaced)) == text);
    }
}

TEST_CASE("parse errors carry line and column") {
    try {
        dsl::parse("prod(Z(2),\n  W(3))");
        FAIL("expected a parse error");
    } catch (const dsl::ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 3);
    }
    CHECK_THROWS_AS(dsl::parse("Z(2"), dsl::ParseError);
    CHECK_THROWS_AS(dsl::parse("Z(2) Z(3)"), dsl::ParseError);
    CHECK_THROWS_AS(dsl::parse(""), dsl::ParseError);
    CHECK_THROWS_AS(dsl::parse("corner(Z(2),[)"), dsl::ParseError);
    CHECK_THROWS_AS(dsl::parse("skewquot(Z(2),frobenius,2)"), dsl::ParseError);
}

TEST_CASE("evaluation errors") {
    CHECK_THROWS_AS(dsl::eval("Z(1)"), dsl::EvalError);
    CHECK_THROWS_AS(dsl::eval("quot(Z(4),9)"), dsl::EvalError);
    CHECK_THROWS_AS(dsl::eval("corner(Z(4),[3])"), dsl::EvalError);   // not idempotent
    CHECK_THROWS_AS(dsl::eval("corner(Z(4),[1,2])"), dsl::EvalError); // bad arity
    CHECK_THROWS_AS(dsl::eval("skewquot(Z(4),swap,2)"), dsl::EvalError);
    CHECK_THROWS_AS(dsl::eval("skewquot(prod(Z(2),Z(3)),swap,2)"),
                    dsl::EvalError);
    CHECK_THROWS_AS(dsl::eval("skewquot(Z(4),diagcollapse,2)"), dsl::EvalError);
    CHECK_THROWS_AS(dsl::eval("trunc(Z(4),1)"), dsl::EvalError);
}

TEST_CASE("evaluation is memoized per expression") {
    auto a = dsl::eval("prod(Z(2),Z(2))").ring;
    auto b = dsl::eval("prod( Z(2) , Z(2) )").ring;
    CHECK(a.get() == b.get());
}

TEST_CASE("quot index follows the (size, members) ideal order") {
    auto q1 = dsl::eval("quot(T(2,Z(2)),1)").ring;   // by the 2-element ideal
    CHECK(q1->size() == 4);
    CHECK(find_isomorphism(q1, product(zmod(2), zmod(2))).has_value());
    auto q3 = dsl::eval("quot(T(2,Z(2)),3)").ring;   // by a 4-element ideal
    CHECK(q3->size() == 2);
    auto q0 = dsl::eval("quot(T(2,Z(2)),0)").ring;   // by the zero ideal
    CHECK(q0->size() == 8);
}

TEST_CASE("corner literal uses the base ring codec") {
    auto c = dsl::eval("corner(V(Z(2)),[1,1,0,0,0,0])").ring;
    CHECK(c->size() == 8);
    CHECK(find_isomorphism(c, upper_triangular(2, zmod(2))).has_value());
}

TEST_CASE("skewquot returns the acting endomorphism") {
    auto res = dsl::eval("skewquot(prod(Z(2),Z(2)),swap,2)");
    REQUIRE(res.endo != nullptr);
    CHECK(res.endo->name() == "swap");
    CHECK(!res.endo->is_identity());
    auto plain = dsl::eval("trunc(Z(4),2)");
    REQUIRE(plain.endo != nullptr);
    CHECK(plain.endo->is_identity());
}

TEST_CASE("table endomorphism loads from a file") {
    const char* path = "dsl_endo_table.json";
    {
        std::ofstream out(path);
        out << "[0, 1]\n";   // identity on Z2
    }
    auto expr = std::string("skewquot(Z(2),table(\"") + path + "\"),2)";
    auto res = dsl::eval(expr);
    CHECK(res.ring->size() == 4);
    CHECK(res.endo->is_identity());
    {
        std::ofstream out(path);
        out << "[0, 3, 2, 1]\n";   // not a homomorphism of Z4
    }
    CHECK_THROWS_AS(dsl::eval("skewquot(Z(4),table(\"" + std::string(path) +
                              "\"),2)"),
                    dsl::EvalError);
    std::remove(path);
}
