#ifndef MCCOY_CONSTRUCTIONS_HPP
#define MCCOY_CONSTRUCTIONS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mccoy/ring.hpp"

namespace mccoy {

// Table materialization cap; MCCOY_TABLE_THRESHOLD overrides.
std::uint64_t table_threshold();

/// Z/nZ with modular tables.
RingPtr zmod(unsigned long n);

/// Componentwise product; element index is (i1, i2) in lexicographic order.
RingPtr product(const RingPtr& r1, const RingPtr& r2);

/// Full n x n matrix ring over a unital base.
RingPtr matrix_ring(unsigned n, const RingPtr& base);

/// Upper triangular n x n matrices.
RingPtr upper_triangular(unsigned n, const RingPtr& base);

/// Upper triangular matrices with constant diagonal; free entries are
/// (a, a_12, ..., a_1n, a_23, ...) in row-major order.
RingPtr rn_ring(unsigned n, const RingPtr& base);

/// The 6x6 subring with diagonal pattern (a,b,c,a,b,c) and free entries
/// d,e,f at (1,2), (3,4), (5,6); codec order (a,b,c,d,e,f).
RingPtr v_ring(const RingPtr& base);

/// Corner ring eRe for an idempotent e; identity is e.
RingPtr corner(const RingPtr& ring, FiniteRing::Index e);
// Index of a corner element inside the parent ring.
FiniteRing::Index corner_parent_index(const RingPtr& corner_ring,
                                      FiniteRing::Index i);

struct QuotientRing {
    RingPtr ring;
    std::vector<FiniteRing::Index> projection;   // parent index -> coset index
};

/// R/I with minimal-index coset representatives.
QuotientRing quotient(const RingPtr& ring, const Ideal& ideal);

/// An ideal regarded as a ring, usually without identity.
RingPtr ideal_as_ring(const Ideal& ideal);

/// R[x; alpha]/(x^n): coefficient vectors (r_0, ..., r_{n-1}) with
/// (a x^i)(b x^j) = a alpha^i(b) x^{i+j}, truncated at x^n. n >= 2.
RingPtr skew_trunc(const RingPtr& base, const EndoPtr& alpha, unsigned n);

EndoPtr endo_identity(const RingPtr& ring);

/// (a, b) -> (b, a) on prod(R, R).
EndoPtr endo_swap(const RingPtr& product_ring);

/// A -> aI on rn_ring(m, R), a the diagonal entry.
EndoPtr endo_diag_collapse(const RingPtr& rn);

EndoPtr endo_from_table(const RingPtr& ring,
                        std::vector<FiniteRing::Index> table, std::string name);

}  // namespace mccoy

#endif
