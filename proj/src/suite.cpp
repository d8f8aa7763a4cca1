#include "mccoy/suite.hpp"

#include <algorithm>
#include <chrono>

#include "mccoy/constructions.hpp"
#include "mccoy/dsl.hpp"

namespace mccoy {
namespace suite {

using Index = FiniteRing::Index;

const std::vector<ZooEntry>& zoo() {
    static const std::vector<ZooEntry> entries = [] {
        std::vector<ZooEntry> out;
        for (const char* expr : {
                 "Z(2)", "Z(3)", "Z(4)", "Z(6)",
                 "prod(Z(2),Z(2))", "prod(Z(2),Z(3))",
                 "T(2,Z(2))", "M(2,Z(2))",
                 "Rn(2,Z(2))", "Rn(2,Z(4))",
                 "V(Z(2))",
                 "trunc(Z(2),2)", "trunc(Z(4),2)", "trunc(Z(2),3)",
                 "skewquot(prod(Z(2),Z(2)),swap,2)",
                 "skewquot(prod(Z(2),Z(2)),swap,3)",
                 "skewquot(Rn(2,Z(2)),diagcollapse,2)",
                 "corner(T(2,Z(2)),[1,0,0])",
                 "quot(T(2,Z(2)),1)",
                 "op(T(2,Z(2)))",
                 "M(2,Z(4))",
             })
            out.push_back({expr, dsl::eval(expr).ring});
        // the three proper ideals of T2(Z2) as rings without identity
        auto t2 = dsl::eval("T(2,Z(2))").ring;
        auto all = ideals(t2);
        for (std::size_t i = 1; i + 1 < all.size(); ++i) {
            auto ring = ideal_as_ring(all[i]);
            out.push_back({"ideal(T(2,Z(2))," + std::to_string(i) + ")", ring});
        }
        return out;
    }();
    return entries;
}

namespace {

struct ItemRun {
    std::vector<CheckLine> checks;

    void check(const std::string& what, bool ok) { checks.push_back({what, ok}); }

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckLine& c) { return c.pass; });
    }
};

bool iso(const RingPtr& a, const RingPtr& b) {
    auto map = find_isomorphism(a, b);
    return map.has_value() && is_isomorphism(*a, *b, *map);
}

void item_lemma21(ItemRun& run, unsigned D, unsigned threads) {
    auto z4 = zmod(4);
    run.check("Z(4) right-mccoy verified",
              !check_right_mccoy(z4, D, threads).refuted);
    run.check("Rn(2,Z(4)) right-mccoy verified",
              !check_right_mccoy(rn_ring(2, z4), D, threads).refuted);
    run.check("Rn(3,Z(2)) right-mccoy verified",
              !check_right_mccoy(rn_ring(3, zmod(2)), D, threads).refuted);
    auto t2 = upper_triangular(2, zmod(2));
    run.check("T(2,Z(2)) right-mccoy refuted at degree 1",
              check_right_mccoy(t2, 1, threads).refuted);
    run.check("Rn(2,T(2,Z(2))) right-mccoy refuted at degree 1",
              check_right_mccoy(rn_ring(2, t2), 1, threads).refuted);
}

void item_thm22(ItemRun& run, unsigned, unsigned threads) {
    for (unsigned long mod : {2ul, 4ul}) {
        auto base = zmod(mod);
        for (unsigned n : {2u, 3u}) {
            for (bool triangular : {false, true}) {
                auto ring = triangular ? upper_triangular(n, base)
                                       : matrix_ring(n, base);
                for (Side side : {Side::Right, Side::Left}) {
                    auto w = thm22_witness(ring, side);
                    auto rep = verify_witness(ring, w);
                    run.check("witness verifies in " + ring->label() + " on the " +
                                  (side == Side::Right ? "right" : "left"),
                              rep.ok);
                }
            }
        }
    }
    run.check("M(2,Z(4)) right-mccoy refuted at degree 1 by search",
              check_right_mccoy(matrix_ring(2, zmod(4)), 1, threads).refuted);
}

void item_ex23(ItemRun& run, unsigned D, unsigned threads) {
    auto v = v_ring(zmod(2));
    run.check("V(Z(2)) right-mccoy verified",
              !check_right_mccoy(v, D, threads).refuted);
    run.check("V(Z(2)) left-mccoy verified",
              !check_left_mccoy(v, D, threads).refuted);
}

void item_rem24(ItemRun& run, unsigned, unsigned threads) {
    auto z2 = zmod(2);
    auto t2 = upper_triangular(2, z2);
    auto idem = idempotents(*t2);
    std::vector<Index> expected{*t2->index_of({0, 0, 0}), *t2->index_of({1, 0, 1}),
                                *t2->index_of({1, 0, 0}), *t2->index_of({0, 0, 1}),
                                *t2->index_of({1, 1, 0}), *t2->index_of({0, 1, 1})};
    std::sort(expected.begin(), expected.end());
    run.check("T(2,Z(2)) has exactly the four listed nontrivial idempotents",
              idem == expected);
    bool corners_ok = true;
    for (Index e : idem) {
        if (e == t2->zero() || e == *t2->one()) continue;
        corners_ok = corners_ok && iso(corner(t2, e), z2);
    }
    run.check("every nontrivial corner of T(2,Z(2)) is isomorphic to Z(2)",
              corners_ok);
    auto v = v_ring(z2);
    auto e = v->index_of({1, 1, 0, 0, 0, 0});
    run.check("corner of V(Z(2)) at e11+e22+e44+e55 is isomorphic to T(2,Z(2))",
              e && iso(corner(v, *e), t2));
    run.check("T(2,Z(2)) right-mccoy refuted at degree 1",
              check_right_mccoy(t2, 1, threads).refuted);
}

void item_prop31(ItemRun& run, unsigned D, unsigned threads) {
    run.check("prod(Z(4),Z(2)) right-mccoy verified",
              !check_right_mccoy(product(zmod(4), zmod(2)), D, threads).refuted);
    run.check("prod(Z(2),Z(3)) isomorphic to Z(6)",
              iso(product(zmod(2), zmod(3)), zmod(6)));
    run.check("prod(T(2,Z(2)),Z(2)) right-mccoy refuted at degree 1",
              check_right_mccoy(product(upper_triangular(2, zmod(2)), zmod(2)), 1,
                                threads)
                  .refuted);
}

void item_ex32(ItemRun& run, unsigned D, unsigned threads) {
    auto z2 = zmod(2);
    auto t2 = upper_triangular(2, z2);
    auto all = ideals(t2);
    run.check("T(2,Z(2)) has exactly 3 nonzero proper ideals", all.size() == 5);

    // codec order (a11, a12, a22); the paper's I, J, K
    std::vector<std::vector<Index>> expected{
        {*t2->index_of({0, 0, 0}), *t2->index_of({0, 1, 0})},                // K
        {*t2->index_of({0, 0, 0}), *t2->index_of({0, 0, 1}),
         *t2->index_of({0, 1, 0}), *t2->index_of({0, 1, 1})},                // J
        {*t2->index_of({0, 0, 0}), *t2->index_of({0, 1, 0}),
         *t2->index_of({1, 0, 0}), *t2->index_of({1, 1, 0})},                // I
    };
    for (auto& m : expected) std::sort(m.begin(), m.end());
    bool members_ok = all.size() == 5;
    if (members_ok) {
        std::vector<std::vector<Index>> got{all[1].members, all[2].members,
                                            all[3].members};
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        members_ok = got == expected;
    }
    run.check("the proper ideals are exactly the three listed", members_ok);

    bool ideal_mccoy = true;
    for (std::size_t i = 1; i + 1 < all.size(); ++i) {
        auto ring = ideal_as_ring(all[i]);
        ideal_mccoy = ideal_mccoy && !check_right_mccoy(ring, D, threads).refuted &&
                      !check_left_mccoy(ring, D, threads).refuted;
    }
    run.check("each proper ideal is McCoy-verified on both sides as a ring "
              "without identity",
              ideal_mccoy);

    // quotients: find I = (F F; 0 0) and K = (0 F; 0 0) by membership
    const Index e11 = *t2->index_of({1, 0, 0});
    const Index e12 = *t2->index_of({0, 1, 0});
    const Ideal* I = nullptr;
    const Ideal* K = nullptr;
    for (std::size_t i = 1; i + 1 < all.size(); ++i) {
        if (all[i].members.size() == 2) K = &all[i];
        if (all[i].members.size() == 4 && all[i].contains(e11)) I = &all[i];
    }
    bool quot_ok = I && K;
    if (quot_ok) {
        auto qi = quotient(t2, *I).ring;
        auto qk = quotient(t2, *K).ring;
        quot_ok = iso(qi, z2) && iso(qk, product(z2, z2)) &&
                  !check_right_mccoy(qi, D, threads).refuted &&
                  !check_right_mccoy(qk, D, threads).refuted;
        (void)e12;
    }
    run.check("R/I is Z(2), R/K is Z(2)+Z(2), both McCoy-verified", quot_ok);
}

void item_thm33(ItemRun& run, unsigned, unsigned) {
    bool all_ok = true;
    for (const auto& entry : zoo()) {
        if (!entry.ring->unital() || !entry.ring->is_table()) continue;
        auto u = units(*entry.ring);
        std::vector<Index> regular;
        for (Index a = 0; a < entry.ring->size(); ++a)
            if (is_regular(*entry.ring, a)) regular.push_back(a);
        all_ok = all_ok && u == regular;
    }
    run.check("regular elements coincide with units on every unital zoo ring",
              all_ok);
}

void item_prop35(ItemRun& run, unsigned D, unsigned threads) {
    auto z4 = zmod(4);
    run.check("trunc(Z(4),2) right-mccoy verified",
              !check_right_mccoy(skew_trunc(z4, endo_identity(z4), 2), D, threads)
                   .refuted);
    auto t2 = upper_triangular(2, zmod(2));
    run.check("trunc(T(2,Z(2)),2) right-mccoy refuted at degree 1",
              check_right_mccoy(skew_trunc(t2, endo_identity(t2), 2), 1, threads)
                  .refuted);
    auto r22 = product(zmod(2), zmod(2));
    auto swap = endo_swap(r22);
    run.check("skewquot(Z2+Z2,swap,2) left-mccoy verified (alpha monic)",
              !check_left_mccoy(skew_trunc(r22, swap, 2), D, threads).refuted);
    auto rn2 = rn_ring(2, zmod(2));
    auto collapse = endo_diag_collapse(rn2);
    run.check("skewquot(Rn(2,Z(2)),diagcollapse,2) left-mccoy verified "
              "(alpha^2 = alpha)",
              !check_left_mccoy(skew_trunc(rn2, collapse, 2), D, threads).refuted);
    run.check("trunc(T(2,Z(2)),2) left-mccoy refuted at degree 1 "
              "(automorphism direction, contrapositive)",
              check_left_mccoy(skew_trunc(t2, endo_identity(t2), 2), 1, threads)
                  .refuted);
}

void item_ex36(ItemRun& run, unsigned D, unsigned threads) {
    auto rn2 = rn_ring(2, zmod(2));
    auto alpha = endo_diag_collapse(rn2);   // validation happens here
    run.check("diag-collapse validates as an endomorphism of Rn(2,Z(2))", true);
    run.check("alpha o alpha = alpha", alpha->idempotent());
    run.check("alpha is not injective", !alpha->injective());
    run.check("alpha is not surjective", !alpha->surjective());
    run.check("skewquot(Rn(2,Z(2)),diagcollapse,2) left-mccoy verified",
              !check_left_mccoy(skew_trunc(rn2, alpha, 2), D, threads).refuted);
}

void item_thm38(ItemRun& run, unsigned D, unsigned threads) {
    auto z4 = zmod(4);
    auto z2 = zmod(2);
    run.check("trunc(Z(4),2) right-mccoy verified",
              !check_right_mccoy(skew_trunc(z4, endo_identity(z4), 2), D, threads)
                   .refuted);
    run.check("trunc(Z(2),3) right-mccoy verified",
              !check_right_mccoy(skew_trunc(z2, endo_identity(z2), 3), D, threads)
                   .refuted);
    auto t2 = upper_triangular(2, zmod(2));
    run.check("trunc(T(2,Z(2)),2) right-mccoy refuted at degree 1",
              check_right_mccoy(skew_trunc(t2, endo_identity(t2), 2), 1, threads)
                  .refuted);
    // bounded polynomial-ring probe with the identity endomorphism:
    // f(y) = 2, g(y) = 2y + 2 over Z4; h = 2 annihilates on the right
    auto id = endo_identity(z4);
    std::vector<SkewPolynomial> f{{z4, id, {2}}};
    std::vector<SkewPolynomial> g{{z4, id, {2}}, {z4, id, {2}}};
    auto probe = probe_polyring_mccoy(z4, id, f, g, 2, Side::Right);
    run.check("identity probe over Z(4) finds the annihilator h = 2",
              probe.found.has_value() && !probe.found->is_zero());
}

void item_cor310(ItemRun& run, unsigned D, unsigned threads) {
    auto z2 = zmod(2);
    auto z4 = zmod(4);
    run.check("Z(2) is rigid under the identity",
              is_rigid(*z2, *endo_identity(z2)).holds);
    auto r4 = is_rigid(*z4, *endo_identity(z4));
    run.check("Z(4) fails rigidity with witness 2", !r4.holds && r4.witness == 2);
    auto r22 = product(z2, z2);
    auto swap = endo_swap(r22);
    auto rs = is_rigid(*r22, *swap);
    const Index one_zero = *r22->index_of({1, 0});
    run.check("Z2+Z2 with swap fails rigidity; (1,0) is a failing element",
              !rs.holds &&
                  r22->mul(one_zero, swap->apply(one_zero)) == r22->zero() &&
                  r22->mul(rs.witness, swap->apply(rs.witness)) == r22->zero() &&
                  rs.witness != r22->zero());
    run.check("trunc(Z(2),3) right-mccoy verified",
              !check_right_mccoy(skew_trunc(z2, endo_identity(z2), 3), D, threads)
                   .refuted);
    bool rigid_implies_reduced = true;
    for (const auto& entry : zoo()) {
        if (!entry.ring->is_table() || entry.ring->size() > 256) continue;
        auto id = endo_identity(entry.ring);
        if (is_rigid(*entry.ring, *id).holds)
            rigid_implies_reduced =
                rigid_implies_reduced && !check_reduced(entry.ring).refuted;
    }
    run.check("identity-rigid zoo rings are reduced", rigid_implies_reduced);
}

void item_ex311(ItemRun& run, unsigned D, unsigned threads) {
    auto r22 = product(zmod(2), zmod(2));
    auto swap = endo_swap(r22);
    const Index a10 = *r22->index_of({1, 0});
    const Index a01 = *r22->index_of({0, 1});
    std::vector<SkewPolynomial> f{{r22, swap, {a10}},
                                  {r22, swap, {r22->zero(), a10}}};
    std::vector<SkewPolynomial> g{{r22, swap, {a01}},
                                  {r22, swap, {r22->zero(), a10}}};
    // the probe recomputes f(y)g(y) = 0 and throws if it fails
    auto right = probe_polyring_mccoy(r22, swap, f, g, 4, Side::Right);
    auto left = probe_polyring_mccoy(r22, swap, f, g, 4, Side::Left);
    run.check("f(y)g(y) = 0 and no right annihilator up to x-degree 4",
              right.none());
    run.check("no left annihilator up to x-degree 4", left.none());
    for (unsigned n : {2u, 3u})
        run.check("skewquot(Z2+Z2,swap," + std::to_string(n) +
                      ") right-mccoy verified",
                  !check_right_mccoy(skew_trunc(r22, swap, n), D, threads).refuted);
}

void item_armendariz_r4(ItemRun& run, unsigned, unsigned threads) {
    auto r4 = rn_ring(4, zmod(2));
    auto arm = check_armendariz(r4, 1, threads);
    bool witness_ok = false;
    if (arm.refuted && arm.witness) {
        const auto& w = *arm.witness;
        Polynomial f{r4, w.f}, g{r4, w.g};
        witness_ok = poly_mul(f, g).is_zero() && w.cross &&
                     r4->mul(w.f[w.cross->first], w.g[w.cross->second]) !=
                         r4->zero();
    }
    run.check("Rn(4,Z(2)) armendariz refuted at degree 1 with a re-verified "
              "witness",
              witness_ok);
    run.check("Rn(4,Z(2)) right-mccoy verified at degree 1",
              !check_right_mccoy(r4, 1, threads).refuted);
}

using ItemFn = void (*)(ItemRun&, unsigned, unsigned);

const std::vector<std::pair<std::string, ItemFn>>& manifest() {
    static const std::vector<std::pair<std::string, ItemFn>> items{
        {"lemma2.1", item_lemma21},
        {"thm2.2", item_thm22},
        {"ex2.3", item_ex23},
        {"rem2.4", item_rem24},
        {"prop3.1", item_prop31},
        {"ex3.2", item_ex32},
        {"thm3.3-finite", item_thm33},
        {"prop3.5", item_prop35},
        {"ex3.6", item_ex36},
        {"thm3.8-trunc", item_thm38},
        {"cor3.10", item_cor310},
        {"ex3.11", item_ex311},
        {"armendariz-r4", item_armendariz_r4},
    };
    return items;
}

}  // namespace

std::vector<std::string> item_keys() {
    std::vector<std::string> keys;
    for (const auto& [key, fn] : manifest()) keys.push_back(key);
    return keys;
}

ItemResult run_item(const std::string& key, unsigned D, unsigned threads) {
    for (const auto& [k, fn] : manifest()) {
        if (k != key) continue;
        auto start = std::chrono::steady_clock::now();
        ItemRun run;
        fn(run, D, threads);
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        return {key, D, run.passed(), std::move(run.checks), elapsed};
    }
    throw RingError("unknown suite item '" + key + "'");
}

std::vector<ItemResult> run_all(unsigned D, unsigned threads) {
    std::vector<ItemResult> out;
    for (const auto& [key, fn] : manifest())
        out.push_back(run_item(key, D, threads));
    return out;
}

nlohmann::ordered_json items_to_json(const std::vector<ItemResult>& items) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& item : items) {
        nlohmann::ordered_json j;
        j["item"] = item.key;
        j["bound"] = item.bound;
        j["passed"] = item.passed;
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& c : item.checks) {
            nlohmann::ordered_json cj;
            cj["description"] = c.description;
            cj["pass"] = c.pass;
            checks.push_back(std::move(cj));
        }
        j["checks"] = std::move(checks);
        j["elapsed_ms"] = item.elapsed_ms;
        doc.push_back(std::move(j));
    }
    return doc;
}

}  // namespace suite
}  // namespace mccoy
