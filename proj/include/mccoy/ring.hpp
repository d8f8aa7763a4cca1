#ifndef MCCOY_RING_HPP
#define MCCOY_RING_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mccoy {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

struct RingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an exhaustive operation is asked of a carrier that only has a
// structural backend, or when a search budget is exceeded.
struct UnsupportedOperation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// How a ring was built; lets the DSL and endomorphism constructors check
// shape preconditions (swap needs prod(e,e), diagcollapse needs Rn(m,e)).
enum class RingKind {
    Generic,
    Zmod,
    Product,
    Matrix,
    Triangular,
    ConstDiag,   // R_n: upper triangular with constant diagonal
    VRing,
    SkewTrunc,
    Corner,
    Quotient,
    IdealRing,
    Opposite,
    Imported,
};

struct Construction {
    RingKind kind = RingKind::Generic;
    std::vector<long> params;      // modulus / matrix dim / truncation order
    std::vector<RingPtr> bases;
};

/// A finite ring with exact operation tables. `one` is optional so ideals can
/// be treated as rings without identity. Immutable after construction.
class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
public:
    using Index = std::uint32_t;
    using BinFn = std::function<Index(Index, Index)>;
    using UnFn = std::function<Index(Index)>;

    static RingPtr from_tables(std::string label, std::size_t size,
                               std::vector<Index> add, std::vector<Index> mul,
                               Index zero, std::optional<Index> one);

    // Structural backend: operations computed on demand; element-exhaustive
    // algorithms refuse such rings instead of sampling silently.
    static RingPtr structural(std::string label, std::uint64_t size, BinFn add,
                              BinFn mul, UnFn neg, Index zero,
                              std::optional<Index> one);

    std::uint64_t size() const { return size_; }
    bool is_table() const { return !add_table_.empty(); }
    const std::string& label() const { return label_; }

    Index add(Index a, Index b) const {
        return is_table() ? add_table_[a * size_ + b] : add_fn_(a, b);
    }
    Index mul(Index a, Index b) const {
        return is_table() ? mul_table_[a * size_ + b] : mul_fn_(a, b);
    }
    Index neg(Index a) const { return is_table() ? neg_table_[a] : neg_fn_(a); }
    Index sub(Index a, Index b) const { return add(a, neg(b)); }

    Index zero() const { return zero_; }
    std::optional<Index> one() const { return one_; }
    bool unital() const { return one_.has_value(); }

    const std::vector<Index>& add_table() const;
    const std::vector<Index>& mul_table() const;

    // Witness rendering. Constructions install a printer so matrix elements
    // print in matrix notation; otherwise the bare index is shown.
    std::string format(Index i) const;

    // Entry-vector codec installed by constructions (matrix entries, product
    // components, truncated-polynomial coefficients). Empty when absent.
    const std::vector<std::vector<Index>>& codec() const { return codec_; }
    std::optional<Index> index_of(const std::vector<Index>& vec) const;
    bool has_codec() const { return !codec_.empty() || decoder_ != nullptr; }
    std::vector<Index> codec_vec(Index i) const;

    const Construction& construction() const { return construction_; }

    // Mutators used only while a construction assembles the ring.
    void set_printer(std::function<std::string(Index)> p) { printer_ = std::move(p); }
    void set_codec(std::vector<std::vector<Index>> c) { codec_ = std::move(c); }
    void set_codec_fns(std::function<std::vector<Index>(Index)> dec,
                       std::function<std::optional<Index>(const std::vector<Index>&)> enc) {
        decoder_ = std::move(dec);
        encoder_ = std::move(enc);
    }
    void set_construction(Construction c) { construction_ = std::move(c); }

private:
    FiniteRing() = default;

    std::string label_;
    std::uint64_t size_ = 0;
    std::vector<Index> add_table_, mul_table_, neg_table_;
    BinFn add_fn_, mul_fn_;
    UnFn neg_fn_;
    Index zero_ = 0;
    std::optional<Index> one_;
    std::function<std::string(Index)> printer_;
    std::vector<std::vector<Index>> codec_;
    std::function<std::vector<Index>(Index)> decoder_;
    std::function<std::optional<Index>(const std::vector<Index>&)> encoder_;
    Construction construction_;
};

/// An element is an index into one ring's carrier; arithmetic across rings is
/// rejected.
class Element {
public:
    Element(RingPtr ring, FiniteRing::Index index);

    const RingPtr& ring() const { return ring_; }
    FiniteRing::Index index() const { return index_; }

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator-(const Element& a);
    friend bool operator==(const Element& a, const Element& b);

    std::string str() const { return ring_->format(index_); }

private:
    RingPtr ring_;
    FiniteRing::Index index_;
};

void require_same_ring(const Element& a, const Element& b);

/// A carrier-to-carrier map validated as a ring homomorphism at construction;
/// invalid maps never circulate.
class Endomorphism {
public:
    Endomorphism(RingPtr domain, std::vector<FiniteRing::Index> map,
                 std::string name);

    const RingPtr& domain() const { return domain_; }
    const std::string& name() const { return name_; }

    FiniteRing::Index apply(FiniteRing::Index a) const { return map_[a]; }
    // alpha^k(a); power tables are built once per requested bound and cached.
    FiniteRing::Index apply_power(unsigned k, FiniteRing::Index a) const;

    bool is_identity() const;
    bool injective() const;
    bool surjective() const;
    bool idempotent() const;   // alpha o alpha == alpha

    const std::vector<FiniteRing::Index>& table() const { return map_; }

private:
    RingPtr domain_;
    std::vector<FiniteRing::Index> map_;
    std::string name_;
    mutable std::mutex powers_mutex_;
    mutable std::vector<std::vector<FiniteRing::Index>> powers_;
};

using EndoPtr = std::shared_ptr<const Endomorphism>;

/// A two-sided ideal, stored as a sorted member list.
struct Ideal {
    RingPtr ring;
    std::vector<FiniteRing::Index> members;   // sorted, contains zero

    bool contains(FiniteRing::Index a) const;
};

bool is_ideal(const RingPtr& ring, const std::vector<FiniteRing::Index>& members);
Ideal make_ideal(RingPtr ring, std::vector<FiniteRing::Index> members);

// ---- ring-core operations ----

struct AxiomViolation {
    std::string law;
    std::vector<FiniteRing::Index> witness;
    std::string str() const;
};

// Exhaustive for table rings. Structural rings are spot-checked with
// `samples` random triples (rejected when samples == 0).
std::vector<AxiomViolation> verify_axioms(const FiniteRing& ring,
                                          std::uint64_t samples = 0);

std::vector<FiniteRing::Index>
right_annihilator(const FiniteRing& ring,
                  const std::vector<FiniteRing::Index>& set);
std::vector<FiniteRing::Index>
left_annihilator(const FiniteRing& ring,
                 const std::vector<FiniteRing::Index>& set);

// Element overloads with cross-ring rejection.
std::vector<Element> right_annihilator(const RingPtr& ring,
                                       const std::vector<Element>& set);
std::vector<Element> left_annihilator(const RingPtr& ring,
                                      const std::vector<Element>& set);

std::vector<FiniteRing::Index> idempotents(const FiniteRing& ring);

bool is_regular(const FiniteRing& ring, FiniteRing::Index a);
std::vector<FiniteRing::Index> units(const FiniteRing& ring);

struct RigidResult {
    bool holds;
    FiniteRing::Index witness;   // a != 0 with a*alpha(a) == 0 when !holds
};
RigidResult is_rigid(const FiniteRing& ring, const Endomorphism& alpha);

// All two-sided ideals, via the lattice of principal-ideal sums. Sorted by
// (size, members); index order is the DSL's `quot(e,k)` reference order.
std::vector<Ideal> ideals(const RingPtr& ring);

// Backtracking search for a ring isomorphism over a minimal additive
// generating set, pruning on element profiles. nullopt when none exists.
std::optional<std::vector<FiniteRing::Index>>
find_isomorphism(const RingPtr& r, const RingPtr& s,
                 std::uint64_t node_budget = 20'000'000);

bool is_isomorphism(const FiniteRing& r, const FiniteRing& s,
                    const std::vector<FiniteRing::Index>& map);

RingPtr opposite(const RingPtr& ring);

}  // namespace mccoy

#endif
