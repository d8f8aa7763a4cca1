#include "mccoy/checker.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "mccoy/constructions.hpp"

namespace mccoy {

using Index = FiniteRing::Index;

std::string property_name(Property p) {
    switch (p) {
        case Property::RightMcCoy: return "right-mccoy";
        case Property::LeftMcCoy: return "left-mccoy";
        case Property::Armendariz: return "armendariz";
        case Property::Reversible: return "reversible";
        case Property::Semicommutative: return "semicommutative";
        case Property::Reduced: return "reduced";
        case Property::Abelian: return "abelian";
    }
    return "?";
}

namespace {

unsigned effective_threads(unsigned threads) {
    if (threads != 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Right annihilators of single elements as bitsets, for the f pre-filter.
struct AnnBits {
    std::size_t words;
    std::vector<std::uint64_t> bits;   // element-major

    explicit AnnBits(const FiniteRing& ring) {
        const auto n = static_cast<Index>(ring.size());
        words = (n + 63) / 64;
        bits.assign(static_cast<std::size_t>(n) * words, 0);
        for (Index a = 0; a < n; ++a)
            for (Index t = 0; t < n; ++t)
                if (ring.mul(a, t) == ring.zero())
                    bits[a * words + t / 64] |= 1ull << (t % 64);
    }

    // popcount of the common right annihilator of the coefficient set
    std::size_t common_size(const std::vector<Index>& coeffs) const {
        std::vector<std::uint64_t> acc(words, ~0ull);
        for (Index a : coeffs)
            for (std::size_t w = 0; w < words; ++w) acc[w] &= bits[a * words + w];
        std::size_t count = 0;
        for (auto w : acc) count += static_cast<std::size_t>(__builtin_popcountll(w));
        return count;
    }
};

// Depth-first search for g with f g = 0, pruning as soon as a fully
// determined convolution coefficient is nonzero. Candidates for b_k come
// from the solution table of a_0 * x = t, so the constraint conv[k] == 0 is
// enforced while b_k is chosen. Returns the lexicographically first g.
struct GSearch {
    const FiniteRing& R;
    const std::vector<Index>& f;        // length D+1
    unsigned D;
    bool armendariz;                    // leaf accept: some a_i b_j != 0
    std::vector<std::vector<Index>> solve;   // t -> ascending b with a0 b = t
    std::vector<Index> conv;            // partial convolution, length 2D+1
    std::vector<Index> g;
    std::optional<std::pair<unsigned, unsigned>> cross;

    GSearch(const FiniteRing& ring, const std::vector<Index>& fc, unsigned depth,
            bool arm)
        : R(ring), f(fc), D(depth), armendariz(arm) {
        const auto n = static_cast<Index>(R.size());
        solve.assign(n, {});
        for (Index b = 0; b < n; ++b) solve[R.mul(f[0], b)].push_back(b);
        conv.assign(2 * D + 1, R.zero());
        g.assign(D + 1, R.zero());
    }

    bool leaf_ok() {
        for (unsigned k = D + 1; k <= 2 * D; ++k)
            if (conv[k] != R.zero()) return false;
        bool nonzero = false;
        for (Index b : g) nonzero |= b != R.zero();
        if (!nonzero) return false;
        if (!armendariz) return true;
        for (unsigned i = 0; i <= D; ++i)
            for (unsigned j = 0; j <= D; ++j)
                if (R.mul(f[i], g[j]) != R.zero()) {
                    cross = {i, j};
                    return true;
                }
        return false;
    }

    bool dfs(unsigned k) {
        if (k > D) return leaf_ok();
        const Index need = R.neg(conv[k]);
        for (Index b : solve[need]) {
            g[k] = b;
            const Index saved = conv[k];
            conv[k] = R.zero();
            for (unsigned i = 1; i <= D; ++i)
                conv[i + k] = R.add(conv[i + k], R.mul(f[i], b));
            if (dfs(k + 1)) return true;
            for (unsigned i = 1; i <= D; ++i)
                conv[i + k] = R.sub(conv[i + k], R.mul(f[i], b));
            conv[k] = saved;
        }
        g[k] = R.zero();
        return false;
    }
};

struct ScanHit {
    std::uint64_t rank;
    Witness witness;
};

// Strided parallel scan over the nonzero f enumeration; keeps the hit with
// minimal f rank so the result is independent of the worker count.
template <typename PerF>
std::optional<Witness> scan_f_space(const RingPtr& ring, unsigned D,
                                    unsigned threads, PerF per_f) {
    PolyEnumerator fenum(ring, D, true);
    const std::uint64_t total = fenum.count();
    const unsigned T =
        static_cast<unsigned>(std::min<std::uint64_t>(effective_threads(threads),
                                                      std::max<std::uint64_t>(total, 1)));
    if (T <= 1) {
        for (std::uint64_t rank = 0; rank < total; ++rank) {
            auto w = per_f(fenum.at(rank));
            if (w) return w;
        }
        return std::nullopt;
    }

    std::atomic<std::uint64_t> best{UINT64_MAX};
    std::mutex mu;
    std::optional<Witness> best_witness;
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < T; ++t)
        workers.emplace_back([&, t] {
            for (std::uint64_t rank = t; rank < total; rank += T) {
                if (rank >= best.load(std::memory_order_relaxed)) break;
                auto w = per_f(fenum.at(rank));
                if (w) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (rank < best.load(std::memory_order_relaxed)) {
                        best.store(rank, std::memory_order_relaxed);
                        best_witness = std::move(w);
                    }
                    break;
                }
            }
        });
    for (auto& w : workers) w.join();
    return best_witness;
}

void require_checkable(const RingPtr& ring, unsigned D) {
    if (!ring->is_table())
        throw UnsupportedOperation("bounded checks need a table backend: " +
                                   ring->label());
    if (D < 1) throw RingError("degree bound must be >= 1");
}

}  // namespace

Verdict check_right_mccoy(const RingPtr& ring, unsigned D, unsigned threads) {
    require_checkable(ring, D);
    AnnBits rann(*ring);
    auto per_f = [&](const std::vector<Index>& f) -> std::optional<Witness> {
        // f with a nonzero common right annihilator can never refute
        if (rann.common_size(f) > 1) return std::nullopt;
        GSearch search(*ring, f, D, false);
        if (!search.dfs(0)) return std::nullopt;
        Witness w;
        w.f = f;
        w.g = search.g;
        w.side = Side::Right;
        return w;
    };
    auto w = scan_f_space(ring, D, threads, per_f);
    return {Property::RightMcCoy, D, w.has_value(), std::move(w)};
}

Verdict check_left_mccoy(const RingPtr& ring, unsigned D, unsigned threads) {
    auto v = check_right_mccoy(opposite(ring), D, threads);
    Verdict out{Property::LeftMcCoy, D, v.refuted, std::nullopt};
    if (v.witness) {
        // in the opposite ring f' g' = 0 reads g' f' = 0 here, so the
        // factors swap and the annihilator side flips
        Witness w;
        w.f = v.witness->g;
        w.g = v.witness->f;
        w.side = Side::Left;
        out.witness = std::move(w);
    }
    return out;
}

Verdict check_armendariz(const RingPtr& ring, unsigned D, unsigned threads) {
    require_checkable(ring, D);
    auto per_f = [&](const std::vector<Index>& f) -> std::optional<Witness> {
        GSearch search(*ring, f, D, true);
        if (!search.dfs(0)) return std::nullopt;
        Witness w;
        w.f = f;
        w.g = search.g;
        w.cross = search.cross;
        w.side = Side::Right;
        return w;
    };
    auto w = scan_f_space(ring, D, threads, per_f);
    return {Property::Armendariz, D, w.has_value(), std::move(w)};
}

Verdict check_reversible(const RingPtr& ring) {
    if (!ring->is_table())
        throw UnsupportedOperation("element checks need a table backend");
    const auto n = static_cast<Index>(ring->size());
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (ring->mul(a, b) == ring->zero() &&
                ring->mul(b, a) != ring->zero()) {
                Witness w;
                w.elems = {a, b};
                w.note = "ab=0 but ba!=0";
                return {Property::Reversible, std::nullopt, true, std::move(w)};
            }
    return {Property::Reversible, std::nullopt, false, std::nullopt};
}

Verdict check_semicommutative(const RingPtr& ring) {
    if (!ring->is_table())
        throw UnsupportedOperation("element checks need a table backend");
    const auto n = static_cast<Index>(ring->size());
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            if (ring->mul(a, b) != ring->zero()) continue;
            for (Index r = 0; r < n; ++r)
                if (ring->mul(ring->mul(a, r), b) != ring->zero()) {
                    Witness w;
                    w.elems = {a, r, b};
                    w.note = "ab=0 but arb!=0";
                    return {Property::Semicommutative, std::nullopt, true,
                            std::move(w)};
                }
        }
    return {Property::Semicommutative, std::nullopt, false, std::nullopt};
}

Verdict check_reduced(const RingPtr& ring) {
    if (!ring->is_table())
        throw UnsupportedOperation("element checks need a table backend");
    const auto n = static_cast<Index>(ring->size());
    for (Index a = 0; a < n; ++a) {
        if (a == ring->zero()) continue;
        Index acc = a;
        for (Index k = 0; k < n; ++k) {
            acc = ring->mul(acc, a);
            if (acc == ring->zero()) {
                Witness w;
                w.elems = {a};
                w.note = "nonzero nilpotent";
                return {Property::Reduced, std::nullopt, true, std::move(w)};
            }
        }
    }
    return {Property::Reduced, std::nullopt, false, std::nullopt};
}

Verdict check_abelian(const RingPtr& ring) {
    if (!ring->is_table())
        throw UnsupportedOperation("element checks need a table backend");
    const auto n = static_cast<Index>(ring->size());
    for (Index e = 0; e < n; ++e) {
        if (ring->mul(e, e) != e) continue;
        for (Index r = 0; r < n; ++r)
            if (ring->mul(e, r) != ring->mul(r, e)) {
                Witness w;
                w.elems = {e, r};
                w.note = "non-central idempotent";
                return {Property::Abelian, std::nullopt, true, std::move(w)};
            }
    }
    return {Property::Abelian, std::nullopt, false, std::nullopt};
}

Verdict check_property(const RingPtr& ring, Property p, unsigned D,
                       unsigned threads) {
    switch (p) {
        case Property::RightMcCoy: return check_right_mccoy(ring, D, threads);
        case Property::LeftMcCoy: return check_left_mccoy(ring, D, threads);
        case Property::Armendariz: return check_armendariz(ring, D, threads);
        case Property::Reversible: return check_reversible(ring);
        case Property::Semicommutative: return check_semicommutative(ring);
        case Property::Reduced: return check_reduced(ring);
        case Property::Abelian: return check_abelian(ring);
    }
    throw RingError("unknown property");
}

WitnessReport verify_witness(const RingPtr& ring, const Witness& w) {
    WitnessReport report;
    Polynomial f{ring, w.f}, g{ring, w.g};
    if (f.is_zero()) report.failed_clauses.push_back("f is zero");
    if (g.is_zero()) report.failed_clauses.push_back("g is zero");
    if (!poly_mul(f, g).is_zero())
        report.failed_clauses.push_back("f*g != 0");
    if (report.failed_clauses.empty()) {
        if (w.side == Side::Right) {
            auto ann = right_annihilator(*ring, w.f);
            if (ann.size() != 1)
                report.failed_clauses.push_back(
                    "right annihilator of f's coefficients is nontrivial");
        } else {
            auto ann = left_annihilator(*ring, w.g);
            if (ann.size() != 1)
                report.failed_clauses.push_back(
                    "left annihilator of g's coefficients is nontrivial");
        }
    }
    report.ok = report.failed_clauses.empty();
    return report;
}

Witness thm22_witness(const RingPtr& ring, Side side) {
    const auto& info = ring->construction();
    if (info.kind != RingKind::Matrix && info.kind != RingKind::Triangular)
        throw RingError("witness construction needs a (triangular) matrix ring");
    const auto n = static_cast<unsigned>(info.params.at(0));
    if (n < 2) throw RingError("witness needs n >= 2");
    const auto& base = info.bases.at(0);
    const Index b1 = *base->one();
    const Index b0 = base->zero();

    auto encode = [&](const std::vector<Index>& mat) {
        std::vector<Index> vars;
        if (info.kind == RingKind::Matrix) {
            vars = mat;
        } else {
            for (unsigned r = 0; r < n; ++r)
                for (unsigned c = r; c < n; ++c) vars.push_back(mat[r * n + c]);
        }
        auto idx = ring->index_of(vars);
        if (!idx) throw RingError("matrix does not embed in " + ring->label());
        return *idx;
    };
    auto blank = [&] { return std::vector<Index>(n * n, b0); };

    auto A = blank();   // e12
    A[0 * n + 1] = b1;
    auto B = blank();   // e11
    B[0 * n + 0] = b1;
    auto D = blank();   // -e22
    D[1 * n + 1] = base->neg(b1);
    const auto C = A;

    auto with_tail = [&](std::vector<Index> m) {
        for (unsigned k = 2; k < n; ++k) m[k * n + k] = b1;
        return m;
    };

    Witness w;
    w.side = side;
    w.note = "matrix-unit refutation pair";
    if (n == 2) {
        w.f = {encode(A), encode(B)};
        w.g = {encode(C), encode(D)};
    } else if (side == Side::Right) {
        w.f = {encode(with_tail(A)), encode(B)};   // F2
        w.g = {encode(C), encode(D)};              // G2
    } else {
        w.f = {encode(A), encode(B)};              // F1
        w.g = {encode(C), encode(with_tail(D))};   // G1
    }
    return w;
}

ProbeResult probe_polyring_mccoy(const RingPtr& ring, const EndoPtr& alpha,
                                 const std::vector<SkewPolynomial>& f,
                                 const std::vector<SkewPolynomial>& g,
                                 unsigned Ds, Side side) {
    if (f.empty() || g.empty())
        throw RingError("probe needs nonempty polynomials");
    for (const auto& c : f)
        if (c.ring != ring || c.endo != alpha)
            throw RingError("probe coefficients must live in the given R[x;a]");
    for (const auto& c : g)
        if (c.ring != ring || c.endo != alpha)
            throw RingError("probe coefficients must live in the given R[x;a]");

    // f g = 0 in R[x;alpha][y] is a precondition; recompute, never trust it
    std::vector<SkewPolynomial> prod(f.size() + g.size() - 1,
                                     SkewPolynomial{ring, alpha, {}});
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            prod[i + j] = skew_add(prod[i + j], skew_mul(f[i], g[j]));
    for (const auto& c : prod)
        if (!c.is_zero())
            throw RingError("probe precondition violated: f(y)g(y) != 0");

    PolyEnumerator henum(ring, Ds, true);
    for (std::uint64_t rank = 0; rank < henum.count(); ++rank) {
        SkewPolynomial h{ring, alpha, henum.at(rank)};
        bool kills = true;
        if (side == Side::Right) {
            for (const auto& c : f)
                if (!skew_mul(c, h).is_zero()) {
                    kills = false;
                    break;
                }
        } else {
            for (const auto& c : g)
                if (!skew_mul(h, c).is_zero()) {
                    kills = false;
                    break;
                }
        }
        if (kills) return {h, Ds};
    }
    return {std::nullopt, Ds};
}

TransferReport transfer_suite(const RingPtr& base, unsigned D,
                              unsigned threads) {
    TransferReport report;
    report.base = check_right_mccoy(base, D, threads);

    auto push = [&](const std::string& name, RingPtr ring) {
        report.extensions.push_back(
            {name, ring, check_right_mccoy(ring, D, threads)});
    };
    try {
        push("rn_ring(2,base)", rn_ring(2, base));
    } catch (const UnsupportedOperation&) {
        // above threshold; the remaining extensions still run
    }
    push("product(base,Z2)", product(base, zmod(2)));
    push("skew_trunc(base,id,2)", skew_trunc(base, endo_identity(base), 2));

    if (report.base.refuted) {
        // Refuted transfers along the proven iff directions at equal bound.
        for (const auto& e : report.extensions)
            if (!e.verdict.refuted)
                report.inconsistencies.push_back(
                    e.name + " verified although the base ring was refuted");
    } else {
        report.bounded_evidence_only = true;
    }
    return report;
}

}  // namespace mccoy
