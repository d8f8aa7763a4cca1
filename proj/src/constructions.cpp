#include "mccoy/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace mccoy {

using Index = FiniteRing::Index;

std::uint64_t table_threshold() {
    if (const char* env = std::getenv("MCCOY_TABLE_THRESHOLD")) {
        char* end = nullptr;
        auto v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 65536;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && out > UINT64_MAX / base)
            throw RingError("carrier size overflow");
        out *= base;
    }
    return out;
}

void require_threshold(std::uint64_t size, const std::string& what) {
    if (size > table_threshold())
        throw UnsupportedOperation(
            what + " has " + std::to_string(size) +
            " elements, above the table threshold " +
            std::to_string(table_threshold()) +
            " (set MCCOY_TABLE_THRESHOLD to raise it)");
}

// Mixed-radix decode, first digit most significant.
std::vector<Index> decode_vec(std::uint64_t idx, std::uint64_t radix,
                              unsigned len) {
    std::vector<Index> out(len);
    for (unsigned k = len; k-- > 0;) {
        out[k] = static_cast<Index>(idx % radix);
        idx /= radix;
    }
    return out;
}

std::uint64_t encode_vec(const std::vector<Index>& vec, std::uint64_t radix) {
    std::uint64_t idx = 0;
    for (Index v : vec) idx = idx * radix + v;
    return idx;
}

// A subring of M_n(base) cut out by a variable pattern: each position holds
// either a fixed zero (-1) or one of nv shared free variables. Elements are
// the variable vectors, indexed lexicographically.
struct MatrixShape {
    unsigned n = 0;
    unsigned nv = 0;
    std::vector<int> var_of;            // n*n, -1 = forced zero
    std::vector<unsigned> defining;     // var -> first position holding it

    static MatrixShape from_pattern(unsigned n, std::vector<int> var_of) {
        MatrixShape sh;
        sh.n = n;
        sh.var_of = std::move(var_of);
        for (int v : sh.var_of)
            if (v >= 0) sh.nv = std::max(sh.nv, static_cast<unsigned>(v) + 1);
        sh.defining.assign(sh.nv, 0);
        std::vector<bool> seen(sh.nv, false);
        for (unsigned p = 0; p < sh.var_of.size(); ++p) {
            int v = sh.var_of[p];
            if (v >= 0 && !seen[v]) {
                seen[v] = true;
                sh.defining[v] = p;
            }
        }
        return sh;
    }
};

RingPtr build_matrix_shape(const MatrixShape& sh, const RingPtr& base,
                           std::string label, RingKind kind,
                           std::vector<long> params) {
    if (!base->unital())
        throw RingError("matrix constructions need a unital base: " + label);
    if (!base->is_table())
        throw UnsupportedOperation("matrix constructions need a table base: " +
                                   label);
    const std::uint64_t bs = base->size();
    const std::uint64_t size = checked_pow(bs, sh.nv);
    if (size > UINT32_MAX)
        throw UnsupportedOperation(label + " exceeds the indexable carrier size");

    const unsigned n = sh.n;
    auto entries = [base, sh, n](const std::vector<Index>& vars) {
        std::vector<Index> m(n * n, base->zero());
        for (unsigned p = 0; p < n * n; ++p)
            if (sh.var_of[p] >= 0) m[p] = vars[sh.var_of[p]];
        return m;
    };
    auto read_vars = [base, sh, label, n](const std::vector<Index>& m) {
        std::vector<Index> vars(sh.nv);
        for (unsigned v = 0; v < sh.nv; ++v) vars[v] = m[sh.defining[v]];
        // the pattern must be respected everywhere, not just at defining slots
        for (unsigned p = 0; p < n * n; ++p) {
            int v = sh.var_of[p];
            if (v < 0 ? m[p] != base->zero() : m[p] != vars[v])
                throw RingError(label + " is not closed under multiplication");
        }
        return vars;
    };

    auto vec_add = [base, sh](const std::vector<Index>& a,
                              const std::vector<Index>& b) {
        std::vector<Index> sum(sh.nv);
        for (unsigned v = 0; v < sh.nv; ++v) sum[v] = base->add(a[v], b[v]);
        return sum;
    };
    auto vec_mul = [base, sh, entries, read_vars, n](const std::vector<Index>& a,
                                                     const std::vector<Index>& b) {
        const auto mi = entries(a);
        const auto mj = entries(b);
        std::vector<Index> prod(n * n);
        for (unsigned r = 0; r < n; ++r)
            for (unsigned c = 0; c < n; ++c) {
                Index acc = base->zero();
                for (unsigned k = 0; k < n; ++k)
                    acc = base->add(acc, base->mul(mi[r * n + k], mj[k * n + c]));
                prod[r * n + c] = acc;
            }
        return read_vars(prod);
    };

    std::optional<Index> one;
    {
        std::vector<Index> id(n * n, base->zero());
        for (unsigned r = 0; r < n; ++r) id[r * n + r] = *base->one();
        bool fits = true;
        std::vector<Index> vars(sh.nv);
        for (unsigned v = 0; v < sh.nv; ++v) vars[v] = id[sh.defining[v]];
        for (unsigned p = 0; p < n * n && fits; ++p) {
            int v = sh.var_of[p];
            fits = v < 0 ? id[p] == base->zero() : id[p] == vars[v];
        }
        if (fits) one = static_cast<Index>(encode_vec(vars, bs));
    }

    RingPtr ring;
    if (size <= table_threshold()) {
        std::vector<std::vector<Index>> codec(size);
        for (std::uint64_t i = 0; i < size; ++i)
            codec[i] = decode_vec(i, bs, sh.nv);
        std::vector<Index> add(size * size), mul(size * size);
        for (std::uint64_t i = 0; i < size; ++i)
            for (std::uint64_t j = 0; j < size; ++j) {
                add[i * size + j] =
                    static_cast<Index>(encode_vec(vec_add(codec[i], codec[j]), bs));
                mul[i * size + j] =
                    static_cast<Index>(encode_vec(vec_mul(codec[i], codec[j]), bs));
            }
        ring = FiniteRing::from_tables(label, size, std::move(add),
                                       std::move(mul), 0, one);
        std::const_pointer_cast<FiniteRing>(ring)->set_codec(std::move(codec));
    } else {
        // Structural backend: operations computed on demand; exhaustive
        // element-level algorithms will refuse this ring.
        const unsigned nv = sh.nv;
        auto sadd = [bs, nv, vec_add](Index i, Index j) {
            return static_cast<Index>(
                encode_vec(vec_add(decode_vec(i, bs, nv), decode_vec(j, bs, nv)), bs));
        };
        auto smul = [bs, nv, vec_mul](Index i, Index j) {
            return static_cast<Index>(
                encode_vec(vec_mul(decode_vec(i, bs, nv), decode_vec(j, bs, nv)), bs));
        };
        auto sneg = [bs, nv, base](Index i) {
            auto v = decode_vec(i, bs, nv);
            for (auto& x : v) x = base->neg(x);
            return static_cast<Index>(encode_vec(v, bs));
        };
        ring = FiniteRing::structural(label, size, sadd, smul, sneg, 0, one);
    }
    auto mut = std::const_pointer_cast<FiniteRing>(ring);
    mut->set_codec_fns(
        [bs, nv = sh.nv](Index i) { return decode_vec(i, bs, nv); },
        [bs, nv = sh.nv, size](const std::vector<Index>& v) -> std::optional<Index> {
            if (v.size() != nv) return std::nullopt;
            for (Index x : v)
                if (x >= bs) return std::nullopt;
            auto idx = encode_vec(v, bs);
            if (idx >= size) return std::nullopt;
            return static_cast<Index>(idx);
        });
    auto sh_copy = sh;
    mut->set_printer([sh_copy, base](Index i) {
        auto vars = decode_vec(i, base->size(), sh_copy.nv);
        std::vector<Index> m(sh_copy.n * sh_copy.n, base->zero());
        for (unsigned p = 0; p < m.size(); ++p)
            if (sh_copy.var_of[p] >= 0) m[p] = vars[sh_copy.var_of[p]];
        std::ostringstream os;
        os << "[";
        for (unsigned r = 0; r < sh_copy.n; ++r) {
            os << (r ? ",[" : "[");
            for (unsigned c = 0; c < sh_copy.n; ++c)
                os << (c ? "," : "") << base->format(m[r * sh_copy.n + c]);
            os << "]";
        }
        os << "]";
        return os.str();
    });
    mut->set_construction({kind, std::move(params), {base}});
    return ring;
}

}  // namespace

RingPtr zmod(unsigned long n) {
    if (n < 2) throw RingError("zmod needs n >= 2");
    require_threshold(n, "Z(" + std::to_string(n) + ")");
    std::vector<Index> add(n * n), mul(n * n);
    for (unsigned long a = 0; a < n; ++a)
        for (unsigned long b = 0; b < n; ++b) {
            add[a * n + b] = static_cast<Index>((a + b) % n);
            mul[a * n + b] = static_cast<Index>((a * b) % n);
        }
    auto ring = FiniteRing::from_tables("Z(" + std::to_string(n) + ")", n,
                                        std::move(add), std::move(mul), 0, 1);
    auto mut = std::const_pointer_cast<FiniteRing>(ring);
    mut->set_construction({RingKind::Zmod, {static_cast<long>(n)}, {}});
    return ring;
}

RingPtr product(const RingPtr& r1, const RingPtr& r2) {
    if (!r1->is_table() || !r2->is_table())
        throw UnsupportedOperation("product needs table factors");
    const std::uint64_t s1 = r1->size(), s2 = r2->size();
    const std::uint64_t size = s1 * s2;
    const std::string label = "prod(" + r1->label() + "," + r2->label() + ")";
    require_threshold(size, label);

    std::vector<Index> add(size * size), mul(size * size);
    for (std::uint64_t i = 0; i < size; ++i) {
        const Index i1 = static_cast<Index>(i / s2), i2 = static_cast<Index>(i % s2);
        for (std::uint64_t j = 0; j < size; ++j) {
            const Index j1 = static_cast<Index>(j / s2), j2 = static_cast<Index>(j % s2);
            add[i * size + j] =
                static_cast<Index>(r1->add(i1, j1) * s2 + r2->add(i2, j2));
            mul[i * size + j] =
                static_cast<Index>(r1->mul(i1, j1) * s2 + r2->mul(i2, j2));
        }
    }
    std::optional<Index> one;
    if (r1->unital() && r2->unital())
        one = static_cast<Index>(*r1->one() * s2 + *r2->one());
    auto ring = FiniteRing::from_tables(
        label, size, std::move(add), std::move(mul),
        static_cast<Index>(r1->zero() * s2 + r2->zero()), one);
    auto mut = std::const_pointer_cast<FiniteRing>(ring);
    std::vector<std::vector<Index>> codec(size);
    for (std::uint64_t i = 0; i < size; ++i)
        codec[i] = {static_cast<Index>(i / s2), static_cast<Index>(i % s2)};
    mut->set_codec(std::move(codec));
    mut->set_printer([r1, r2, s2](Index i) {
        return "(" + r1->format(static_cast<Index>(i / s2)) + "," +
               r2->format(static_cast<Index>(i % s2)) + ")";
    });
    mut->set_construction({RingKind::Product, {}, {r1, r2}});
    return ring;
}

RingPtr matrix_ring(unsigned n, const RingPtr& base) {
    if (n < 1) throw RingError("matrix_ring needs n >= 1");
    std::vector<int> pat(n * n);
    for (unsigned p = 0; p < n * n; ++p) pat[p] = static_cast<int>(p);
    return build_matrix_shape(MatrixShape::from_pattern(n, std::move(pat)),
                              base, "M(" + std::to_string(n) + "," +
                              base->label() + ")", RingKind::Matrix,
                              {static_cast<long>(n)});
}

RingPtr upper_triangular(unsigned n, const RingPtr& base) {
    if (n < 1) throw RingError("upper_triangular needs n >= 1");
    std::vector<int> pat(n * n, -1);
    int v = 0;
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = r; c < n; ++c) pat[r * n + c] = v++;
    return build_matrix_shape(MatrixShape::from_pattern(n, std::move(pat)),
                              base, "T(" + std::to_string(n) + "," +
                              base->label() + ")", RingKind::Triangular,
                              {static_cast<long>(n)});
}

RingPtr rn_ring(unsigned n, const RingPtr& base) {
    if (n < 1) throw RingError("rn_ring needs n >= 1");
    std::vector<int> pat(n * n, -1);
    for (unsigned r = 0; r < n; ++r) pat[r * n + r] = 0;
    int v = 1;
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = r + 1; c < n; ++c) pat[r * n + c] = v++;
    return build_matrix_shape(MatrixShape::from_pattern(n, std::move(pat)),
                              base, "Rn(" + std::to_string(n) + "," +
                              base->label() + ")", RingKind::ConstDiag,
                              {static_cast<long>(n)});
}

RingPtr v_ring(const RingPtr& base) {
    // diag (a,b,c,a,b,c); d at (1,2), e at (3,4), f at (5,6), 1-based
    std::vector<int> pat(36, -1);
    pat[0 * 6 + 0] = 0;  pat[3 * 6 + 3] = 0;   // a
    pat[1 * 6 + 1] = 1;  pat[4 * 6 + 4] = 1;   // b
    pat[2 * 6 + 2] = 2;  pat[5 * 6 + 5] = 2;   // c
    pat[0 * 6 + 1] = 3;                        // d
    pat[2 * 6 + 3] = 4;                        // e
    pat[4 * 6 + 5] = 5;                        // f
    return build_matrix_shape(MatrixShape::from_pattern(6, std::move(pat)),
                              base, "V(" + base->label() + ")", RingKind::VRing,
                              {});
}

RingPtr corner(const RingPtr& ring, Index e) {
    if (!ring->is_table())
        throw UnsupportedOperation("corner needs a table backend");
    if (ring->mul(e, e) != e)
        throw RingError("corner element " + ring->format(e) +
                        " is not idempotent in " + ring->label());
    std::vector<Index> members;
    for (Index r = 0; r < ring->size(); ++r)
        members.push_back(ring->mul(ring->mul(e, r), e));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    const auto size = members.size();
    std::vector<Index> pos(ring->size(), 0);
    for (std::size_t i = 0; i < size; ++i) pos[members[i]] = static_cast<Index>(i);
    std::vector<Index> add(size * size), mul(size * size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            add[i * size + j] = pos[ring->add(members[i], members[j])];
            mul[i * size + j] = pos[ring->mul(members[i], members[j])];
        }
    auto out = FiniteRing::from_tables(
        "corner(" + ring->label() + "," + ring->format(e) + ")", size,
        std::move(add), std::move(mul), pos[ring->zero()], pos[e]);
    auto mut = std::const_pointer_cast<FiniteRing>(out);
    std::vector<std::vector<Index>> codec(size);
    for (std::size_t i = 0; i < size; ++i) codec[i] = {members[i]};
    mut->set_codec(std::move(codec));
    auto mem = members;
    mut->set_printer([ring, mem](Index i) { return ring->format(mem[i]); });
    mut->set_construction({RingKind::Corner, {static_cast<long>(e)}, {ring}});
    return out;
}

Index corner_parent_index(const RingPtr& corner_ring, Index i) {
    if (corner_ring->construction().kind != RingKind::Corner)
        throw RingError("not a corner ring: " + corner_ring->label());
    return corner_ring->codec()[i][0];
}

QuotientRing quotient(const RingPtr& ring, const Ideal& ideal) {
    if (ideal.ring != ring)
        throw RingError("ideal belongs to " + ideal.ring->label() + ", not " +
                        ring->label());
    if (!is_ideal(ring, ideal.members))
        throw RingError("invalid ideal of " + ring->label());
    const auto n = static_cast<Index>(ring->size());

    std::vector<Index> rep(n);
    for (Index i = 0; i < n; ++i) {
        Index best = i;
        for (Index m : ideal.members) best = std::min(best, ring->add(i, m));
        rep[i] = best;
    }
    std::vector<Index> reps;
    for (Index i = 0; i < n; ++i)
        if (rep[i] == i) reps.push_back(i);

    const auto size = reps.size();
    std::vector<Index> rank(n, 0);
    for (std::size_t i = 0; i < size; ++i) rank[reps[i]] = static_cast<Index>(i);
    std::vector<Index> proj(n);
    for (Index i = 0; i < n; ++i) proj[i] = rank[rep[i]];

    std::vector<Index> add(size * size), mul(size * size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            add[i * size + j] = proj[ring->add(reps[i], reps[j])];
            mul[i * size + j] = proj[ring->mul(reps[i], reps[j])];
        }
    std::optional<Index> one;
    if (ring->unital()) one = proj[*ring->one()];
    auto out = FiniteRing::from_tables("quot(" + ring->label() + ")", size,
                                       std::move(add), std::move(mul),
                                       proj[ring->zero()], one);
    auto mut = std::const_pointer_cast<FiniteRing>(out);
    std::vector<std::vector<Index>> codec(size);
    for (std::size_t i = 0; i < size; ++i) codec[i] = {reps[i]};
    mut->set_codec(std::move(codec));
    auto rp = reps;
    mut->set_printer([ring, rp](Index i) {
        return "[" + ring->format(rp[i]) + "]";
    });
    mut->set_construction({RingKind::Quotient, {}, {ring}});
    return {out, std::move(proj)};
}

RingPtr ideal_as_ring(const Ideal& ideal) {
    const auto& ring = ideal.ring;
    const auto& members = ideal.members;
    const auto size = members.size();
    std::vector<Index> pos(ring->size(), 0);
    for (std::size_t i = 0; i < size; ++i) pos[members[i]] = static_cast<Index>(i);
    std::vector<Index> add(size * size), mul(size * size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            add[i * size + j] = pos[ring->add(members[i], members[j])];
            mul[i * size + j] = pos[ring->mul(members[i], members[j])];
        }
    // an ideal is usually nonunital, but detect an identity when present
    std::optional<Index> one;
    for (std::size_t e = 0; e < size && !one; ++e) {
        bool id = true;
        for (std::size_t i = 0; i < size && id; ++i)
            id = mul[e * size + i] == i && mul[i * size + e] == i;
        if (id) one = static_cast<Index>(e);
    }
    auto out = FiniteRing::from_tables(
        "ideal(" + ring->label() + ",#" + std::to_string(size) + ")", size,
        std::move(add), std::move(mul), pos[ring->zero()], one);
    auto mut = std::const_pointer_cast<FiniteRing>(out);
    std::vector<std::vector<Index>> codec(size);
    for (std::size_t i = 0; i < size; ++i) codec[i] = {members[i]};
    mut->set_codec(std::move(codec));
    auto mem = members;
    mut->set_printer([ring, mem](Index i) { return ring->format(mem[i]); });
    mut->set_construction({RingKind::IdealRing, {}, {ring}});
    return out;
}

RingPtr skew_trunc(const RingPtr& base, const EndoPtr& alpha, unsigned n) {
    if (n < 2) throw RingError("skew_trunc needs n >= 2");
    if (!alpha || alpha->domain() != base)
        throw RingError("endomorphism does not act on " + base->label());
    if (!base->is_table())
        throw UnsupportedOperation("skew_trunc needs a table base");
    const std::uint64_t bs = base->size();
    const std::uint64_t size = checked_pow(bs, n);
    std::string label = alpha->is_identity()
                            ? "trunc(" + base->label() + "," + std::to_string(n) + ")"
                            : "skewquot(" + base->label() + "," + alpha->name() +
                                  "," + std::to_string(n) + ")";
    require_threshold(size, label);

    std::vector<std::vector<Index>> codec(size);
    for (std::uint64_t i = 0; i < size; ++i) codec[i] = decode_vec(i, bs, n);

    std::vector<Index> add(size * size), mul(size * size);
    std::vector<Index> conv(n);
    for (std::uint64_t i = 0; i < size; ++i) {
        const auto& a = codec[i];
        for (std::uint64_t j = 0; j < size; ++j) {
            const auto& b = codec[j];
            std::vector<Index> sum(n);
            for (unsigned k = 0; k < n; ++k) sum[k] = base->add(a[k], b[k]);
            add[i * size + j] = static_cast<Index>(encode_vec(sum, bs));

            std::fill(conv.begin(), conv.end(), base->zero());
            for (unsigned p = 0; p < n; ++p)
                for (unsigned q = 0; p + q < n; ++q)
                    conv[p + q] = base->add(
                        conv[p + q], base->mul(a[p], alpha->apply_power(p, b[q])));
            mul[i * size + j] = static_cast<Index>(encode_vec(conv, bs));
        }
    }
    std::optional<Index> one;
    if (base->unital())
        one = static_cast<Index>(*base->one() * checked_pow(bs, n - 1));
    auto ring = FiniteRing::from_tables(label, size, std::move(add),
                                        std::move(mul), 0, one);
    auto mut = std::const_pointer_cast<FiniteRing>(ring);
    mut->set_codec(std::move(codec));
    mut->set_printer([base, bs, n](Index i) {
        auto c = decode_vec(i, bs, n);
        std::ostringstream os;
        bool any = false;
        for (unsigned k = 0; k < n; ++k) {
            if (c[k] == base->zero()) continue;
            if (any) os << " + ";
            os << "(" << base->format(c[k]) << ")";
            if (k == 1) os << "*x";
            if (k > 1) os << "*x^" << k;
            any = true;
        }
        if (!any) os << "0";
        return os.str();
    });
    mut->set_construction({RingKind::SkewTrunc, {static_cast<long>(n)}, {base}});
    return ring;
}

EndoPtr endo_identity(const RingPtr& ring) {
    std::vector<Index> map(ring->size());
    for (Index i = 0; i < map.size(); ++i) map[i] = i;
    return std::make_shared<Endomorphism>(ring, std::move(map), "id");
}

EndoPtr endo_swap(const RingPtr& product_ring) {
    const auto& info = product_ring->construction();
    if (info.kind != RingKind::Product)
        throw RingError("swap needs a product ring, got " + product_ring->label());
    const auto& r1 = info.bases[0];
    const auto& r2 = info.bases[1];
    const bool same =
        r1 == r2 || (r1->size() == r2->size() &&
                     r1->add_table() == r2->add_table() &&
                     r1->mul_table() == r2->mul_table());
    if (!same)
        throw RingError("swap needs equal factors in " + product_ring->label());
    const std::uint64_t s = r2->size();
    std::vector<Index> map(product_ring->size());
    for (std::uint64_t i = 0; i < map.size(); ++i)
        map[i] = static_cast<Index>((i % s) * s + i / s);
    return std::make_shared<Endomorphism>(product_ring, std::move(map), "swap");
}

EndoPtr endo_diag_collapse(const RingPtr& rn) {
    const auto& info = rn->construction();
    if (info.kind != RingKind::ConstDiag)
        throw RingError("diagcollapse needs an Rn ring, got " + rn->label());
    const auto& base = info.bases[0];
    const std::uint64_t bs = base->size();
    const unsigned nv = static_cast<unsigned>(rn->codec()[0].size());
    const std::uint64_t high = checked_pow(bs, nv - 1);
    std::vector<Index> map(rn->size());
    for (std::uint64_t i = 0; i < map.size(); ++i)
        map[i] = static_cast<Index>(rn->codec()[i][0] * high);
    return std::make_shared<Endomorphism>(rn, std::move(map), "diagcollapse");
}

EndoPtr endo_from_table(const RingPtr& ring, std::vector<Index> table,
                        std::string name) {
    return std::make_shared<Endomorphism>(ring, std::move(table),
                                          std::move(name));
}

}  // namespace mccoy
