#ifndef MCCOY_POLY_HPP
#define MCCOY_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mccoy/ring.hpp"

namespace mccoy {

/// Dense polynomial over a finite ring; coeffs[i] is the coefficient of x^i.
/// Trailing zeros are allowed in storage.
struct Polynomial {
    RingPtr ring;
    std::vector<FiniteRing::Index> coeffs;

    // nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return !degree().has_value(); }
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

// Coefficientwise right (resp. left) multiplication by a scalar.
Polynomial apply_scalar_right(const Polynomial& f, FiniteRing::Index s);
Polynomial apply_scalar_left(FiniteRing::Index s, const Polynomial& f);

std::string render(const Polynomial& f);
std::string render_poly(const FiniteRing& ring,
                        const std::vector<FiniteRing::Index>& coeffs);

/// Skew polynomial in R[x; alpha]: multiplication uses x r = alpha(r) x,
/// so (a x^i)(b x^j) = a alpha^i(b) x^{i+j}, untruncated.
struct SkewPolynomial {
    RingPtr ring;
    EndoPtr endo;
    std::vector<FiniteRing::Index> coeffs;

    std::optional<std::size_t> degree() const;
    bool is_zero() const { return !degree().has_value(); }
};

SkewPolynomial skew_add(const SkewPolynomial& f, const SkewPolynomial& g);
SkewPolynomial skew_mul(const SkewPolynomial& f, const SkewPolynomial& g);
std::string render(const SkewPolynomial& f);

/// Enumerates all coefficient vectors of length maxdeg+1 in lexicographic
/// order by element index; random access by rank makes strided traversal by
/// concurrent workers trivial.
class PolyEnumerator {
public:
    PolyEnumerator(RingPtr ring, unsigned maxdeg, bool nonzero);

    std::uint64_t count() const { return count_; }
    // The rank-th vector in enumeration order.
    std::vector<FiniteRing::Index> at(std::uint64_t rank) const;
    // Sequential interface: nullopt when exhausted.
    std::optional<Polynomial> next();

private:
    RingPtr ring_;
    unsigned len_;
    bool nonzero_;
    std::uint64_t count_;
    std::uint64_t zero_rank_ = 0;
    std::uint64_t cursor_ = 0;
};

}  // namespace mccoy

#endif
