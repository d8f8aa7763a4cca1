#include "mccoy/poly.hpp"

#include <sstream>

namespace mccoy {

using Index = FiniteRing::Index;

namespace {

std::optional<std::size_t> top_nonzero(const FiniteRing& ring,
                                       const std::vector<Index>& coeffs) {
    for (std::size_t i = coeffs.size(); i-- > 0;)
        if (coeffs[i] != ring.zero()) return i;
    return std::nullopt;
}

void require_same(const Polynomial& f, const Polynomial& g) {
    if (f.ring != g.ring)
        throw RingError("polynomial arithmetic over mixed rings: " +
                        f.ring->label() + " vs " + g.ring->label());
}

}  // namespace

std::optional<std::size_t> Polynomial::degree() const {
    return top_nonzero(*ring, coeffs);
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
    require_same(f, g);
    const auto& R = *f.ring;
    std::vector<Index> out(std::max(f.coeffs.size(), g.coeffs.size()), R.zero());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) out[i] = f.coeffs[i];
    for (std::size_t i = 0; i < g.coeffs.size(); ++i)
        out[i] = R.add(out[i], g.coeffs[i]);
    return {f.ring, std::move(out)};
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
    require_same(f, g);
    const auto& R = *f.ring;
    if (f.coeffs.empty() || g.coeffs.empty()) return {f.ring, {}};
    std::vector<Index> out(f.coeffs.size() + g.coeffs.size() - 1, R.zero());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        for (std::size_t j = 0; j < g.coeffs.size(); ++j)
            out[i + j] = R.add(out[i + j], R.mul(f.coeffs[i], g.coeffs[j]));
    return {f.ring, std::move(out)};
}

Polynomial apply_scalar_right(const Polynomial& f, Index s) {
    const auto& R = *f.ring;
    std::vector<Index> out(f.coeffs.size());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        out[i] = R.mul(f.coeffs[i], s);
    return {f.ring, std::move(out)};
}

Polynomial apply_scalar_left(Index s, const Polynomial& f) {
    const auto& R = *f.ring;
    std::vector<Index> out(f.coeffs.size());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        out[i] = R.mul(s, f.coeffs[i]);
    return {f.ring, std::move(out)};
}

std::string render_poly(const FiniteRing& ring, const std::vector<Index>& coeffs) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == ring.zero()) continue;
        if (any) os << " + ";
        os << "(" << ring.format(coeffs[k]) << ")";
        if (k == 1) os << "*x";
        if (k > 1) os << "*x^" << k;
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

std::string render(const Polynomial& f) { return render_poly(*f.ring, f.coeffs); }

std::optional<std::size_t> SkewPolynomial::degree() const {
    return top_nonzero(*ring, coeffs);
}

namespace {
void require_same(const SkewPolynomial& f, const SkewPolynomial& g) {
    if (f.ring != g.ring)
        throw RingError("skew arithmetic over mixed rings");
    if (f.endo != g.endo)
        throw RingError("skew arithmetic with mismatched endomorphisms");
}
}  // namespace

SkewPolynomial skew_add(const SkewPolynomial& f, const SkewPolynomial& g) {
    require_same(f, g);
    const auto& R = *f.ring;
    std::vector<Index> out(std::max(f.coeffs.size(), g.coeffs.size()), R.zero());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) out[i] = f.coeffs[i];
    for (std::size_t i = 0; i < g.coeffs.size(); ++i)
        out[i] = R.add(out[i], g.coeffs[i]);
    return {f.ring, f.endo, std::move(out)};
}

SkewPolynomial skew_mul(const SkewPolynomial& f, const SkewPolynomial& g) {
    require_same(f, g);
    const auto& R = *f.ring;
    if (f.coeffs.empty() || g.coeffs.empty()) return {f.ring, f.endo, {}};
    std::vector<Index> out(f.coeffs.size() + g.coeffs.size() - 1, R.zero());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        for (std::size_t j = 0; j < g.coeffs.size(); ++j)
            out[i + j] = R.add(out[i + j],
                               R.mul(f.coeffs[i],
                                     f.endo->apply_power(static_cast<unsigned>(i),
                                                         g.coeffs[j])));
    return {f.ring, f.endo, std::move(out)};
}

std::string render(const SkewPolynomial& f) {
    return render_poly(*f.ring, f.coeffs);
}

PolyEnumerator::PolyEnumerator(RingPtr ring, unsigned maxdeg, bool nonzero)
    : ring_(std::move(ring)), len_(maxdeg + 1), nonzero_(nonzero) {
    std::uint64_t c = 1;
    for (unsigned i = 0; i < len_; ++i) {
        if (ring_->size() != 0 && c > UINT64_MAX / ring_->size())
            throw RingError("polynomial enumeration space overflow");
        c *= ring_->size();
    }
    count_ = nonzero_ ? c - 1 : c;
    zero_rank_ = 0;
    for (unsigned i = 0; i < len_; ++i)
        zero_rank_ = zero_rank_ * ring_->size() + ring_->zero();
}

std::vector<Index> PolyEnumerator::at(std::uint64_t rank) const {
    if (nonzero_ && rank >= zero_rank_) ++rank;   // skip the zero vector
    std::vector<Index> out(len_);
    for (unsigned k = len_; k-- > 0;) {
        out[k] = static_cast<Index>(rank % ring_->size());
        rank /= ring_->size();
    }
    return out;
}

std::optional<Polynomial> PolyEnumerator::next() {
    if (cursor_ >= count_) return std::nullopt;
    return Polynomial{ring_, at(cursor_++)};
}

}  // namespace mccoy
