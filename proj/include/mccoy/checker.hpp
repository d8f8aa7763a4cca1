#ifndef MCCOY_CHECKER_HPP
#define MCCOY_CHECKER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mccoy/poly.hpp"
#include "mccoy/ring.hpp"

namespace mccoy {

enum class Property {
    RightMcCoy,
    LeftMcCoy,
    Armendariz,
    Reversible,
    Semicommutative,
    Reduced,
    Abelian,
};

std::string property_name(Property p);

enum class Side { Left, Right };

/// A refutation certificate. Polynomial properties carry (f, g); the
/// degree-free ones carry the violating element tuple instead.
struct Witness {
    std::vector<FiniteRing::Index> f, g;    // coefficient vectors
    std::vector<FiniteRing::Index> elems;   // element-level violations
    std::optional<std::pair<unsigned, unsigned>> cross;   // Armendariz (i, j)
    Side side = Side::Right;
    std::string note;
};

struct Verdict {
    Property property;
    std::optional<unsigned> bound;   // absent for degree-free properties
    bool refuted = false;
    std::optional<Witness> witness;

    bool verified() const { return !refuted; }
};

// D >= 1. Refuted iff nonzero f, g of degree <= D exist with f g = 0 and a
// trivial right annihilator for f's coefficient set. The witness is the
// lexicographically first (f, then g) in enumeration order, independent of
// the worker count.
Verdict check_right_mccoy(const RingPtr& ring, unsigned D, unsigned threads = 0);

// check_right_mccoy on the opposite ring, witness mapped back.
Verdict check_left_mccoy(const RingPtr& ring, unsigned D, unsigned threads = 0);

// Refuted iff f g = 0 with some a_i b_j != 0.
Verdict check_armendariz(const RingPtr& ring, unsigned D, unsigned threads = 0);

Verdict check_reversible(const RingPtr& ring);
Verdict check_semicommutative(const RingPtr& ring);
Verdict check_reduced(const RingPtr& ring);
Verdict check_abelian(const RingPtr& ring);

Verdict check_property(const RingPtr& ring, Property p, unsigned D,
                       unsigned threads = 0);

struct WitnessReport {
    bool ok = false;
    std::vector<std::string> failed_clauses;
};

// Re-verifies a refutation: f != 0, g != 0, f g = 0, and the annihilator on
// the claimed side is trivial.
WitnessReport verify_witness(const RingPtr& ring, const Witness& w);

// The explicit degree-1 refutation pair for M_n(R) / T_n(R), n >= 2. The
// ring argument must be a matrix_ring or upper_triangular construction.
Witness thm22_witness(const RingPtr& matrix_ring, Side side);

/// Outcome of the bounded annihilator probe in R[x; alpha][y].
struct ProbeResult {
    std::optional<SkewPolynomial> found;
    unsigned bound = 0;

    bool none() const { return !found.has_value(); }
};

// f, g are polynomials in y with skew-polynomial coefficients; f g = 0 is
// recomputed and enforced. Searches nonzero h in R[x; alpha] of x-degree
// <= Ds with f h = 0 (right) or h g = 0 (left).
ProbeResult probe_polyring_mccoy(const RingPtr& ring, const EndoPtr& alpha,
                                 const std::vector<SkewPolynomial>& f,
                                 const std::vector<SkewPolynomial>& g,
                                 unsigned Ds, Side side);

struct TransferEntry {
    std::string name;
    RingPtr ring;
    Verdict verdict;
};

struct TransferReport {
    Verdict base;
    std::vector<TransferEntry> extensions;
    // When the base is refuted the proven transfer directions force every
    // extension to be refuted at the same bound; violations land here.
    std::vector<std::string> inconsistencies;
    bool bounded_evidence_only = false;   // base only verified up to the bound
};

TransferReport transfer_suite(const RingPtr& base, unsigned D,
                              unsigned threads = 0);

}  // namespace mccoy

#endif
