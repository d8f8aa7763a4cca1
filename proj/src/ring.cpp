#include "mccoy/ring.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace mccoy {

using Index = FiniteRing::Index;
namespace {
constexpr Index kUndef = 0xffffffffu;
}

RingPtr FiniteRing::from_tables(std::string label, std::size_t size,
                                std::vector<Index> add, std::vector<Index> mul,
                                Index zero, std::optional<Index> one) {
    if (size == 0) throw RingError("ring must be nonempty");
    if (add.size() != size * size || mul.size() != size * size)
        throw RingError("operation table has wrong shape for " + label);
    for (Index v : add)
        if (v >= size) throw RingError("add table entry out of range in " + label);
    for (Index v : mul)
        if (v >= size) throw RingError("mul table entry out of range in " + label);
    if (zero >= size || (one && *one >= size))
        throw RingError("zero/one index out of range in " + label);

    auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
    ring->label_ = std::move(label);
    ring->size_ = size;
    ring->add_table_ = std::move(add);
    ring->mul_table_ = std::move(mul);
    ring->zero_ = zero;
    ring->one_ = one;

    // neg is derived: the additive inverse must exist for every element.
    ring->neg_table_.assign(size, kUndef);
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) {
            if (ring->add_table_[a * size + b] == zero) {
                ring->neg_table_[a] = static_cast<Index>(b);
                break;
            }
        }
        if (ring->neg_table_[a] == kUndef)
            throw RingError("element without additive inverse in " + ring->label_);
    }
    return ring;
}

RingPtr FiniteRing::structural(std::string label, std::uint64_t size, BinFn add,
                               BinFn mul, UnFn neg, Index zero,
                               std::optional<Index> one) {
    if (size == 0) throw RingError("ring must be nonempty");
    auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
    ring->label_ = std::move(label);
    ring->size_ = size;
    ring->add_fn_ = std::move(add);
    ring->mul_fn_ = std::move(mul);
    ring->neg_fn_ = std::move(neg);
    ring->zero_ = zero;
    ring->one_ = one;
    return ring;
}

const std::vector<Index>& FiniteRing::add_table() const {
    if (!is_table())
        throw UnsupportedOperation("no materialized tables for " + label_);
    return add_table_;
}

const std::vector<Index>& FiniteRing::mul_table() const {
    if (!is_table())
        throw UnsupportedOperation("no materialized tables for " + label_);
    return mul_table_;
}

std::string FiniteRing::format(Index i) const {
    if (printer_) return printer_(i);
    return std::to_string(i);
}

std::optional<Index> FiniteRing::index_of(const std::vector<Index>& vec) const {
    if (encoder_) return encoder_(vec);
    for (std::size_t i = 0; i < codec_.size(); ++i)
        if (codec_[i] == vec) return static_cast<Index>(i);
    return std::nullopt;
}

std::vector<Index> FiniteRing::codec_vec(Index i) const {
    if (!codec_.empty()) return codec_[i];
    if (decoder_) return decoder_(i);
    throw RingError("no element codec on " + label_);
}

Element::Element(RingPtr ring, Index index) : ring_(std::move(ring)), index_(index) {
    if (!ring_) throw RingError("element without a ring");
    if (index_ >= ring_->size()) throw RingError("element index out of range");
}

void require_same_ring(const Element& a, const Element& b) {
    if (a.ring() != b.ring())
        throw RingError("cross-ring arithmetic between " + a.ring()->label() +
                        " and " + b.ring()->label());
}

Element operator+(const Element& a, const Element& b) {
    require_same_ring(a, b);
    return Element(a.ring(), a.ring()->add(a.index(), b.index()));
}

Element operator*(const Element& a, const Element& b) {
    require_same_ring(a, b);
    return Element(a.ring(), a.ring()->mul(a.index(), b.index()));
}

Element operator-(const Element& a) {
    return Element(a.ring(), a.ring()->neg(a.index()));
}

bool operator==(const Element& a, const Element& b) {
    return a.ring() == b.ring() && a.index() == b.index();
}

Endomorphism::Endomorphism(RingPtr domain, std::vector<Index> map,
                           std::string name)
    : domain_(std::move(domain)), map_(std::move(map)), name_(std::move(name)) {
    if (!domain_) throw RingError("endomorphism without a domain");
    if (!domain_->is_table())
        throw UnsupportedOperation(
            "endomorphism validation needs a table-backed domain");
    const auto n = static_cast<Index>(domain_->size());
    if (map_.size() != n)
        throw RingError("endomorphism map has wrong size on " + domain_->label());
    for (Index v : map_)
        if (v >= n) throw RingError("endomorphism image out of range");
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            if (map_[domain_->add(a, b)] != domain_->add(map_[a], map_[b]))
                throw RingError(name_ + " is not additive on " + domain_->label());
            if (map_[domain_->mul(a, b)] != domain_->mul(map_[a], map_[b]))
                throw RingError(name_ + " is not multiplicative on " +
                                domain_->label());
        }
    }
    if (domain_->unital() && map_[*domain_->one()] != *domain_->one())
        throw RingError(name_ + " does not fix the identity of " +
                        domain_->label());
    powers_.push_back(map_);   // powers_[i] caches alpha^(i+1)
}

Index Endomorphism::apply_power(unsigned k, Index a) const {
    if (k == 0) return a;
    if (k == 1) return map_[a];
    std::lock_guard<std::mutex> lock(powers_mutex_);
    while (powers_.size() < k) {
        const auto& prev = powers_.back();
        std::vector<Index> next(map_.size());
        for (std::size_t i = 0; i < map_.size(); ++i) next[i] = map_[prev[i]];
        powers_.push_back(std::move(next));
    }
    return powers_[k - 1][a];
}

bool Endomorphism::is_identity() const {
    for (Index a = 0; a < map_.size(); ++a)
        if (map_[a] != a) return false;
    return true;
}

bool Endomorphism::injective() const {
    std::vector<bool> seen(map_.size(), false);
    for (Index v : map_) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

bool Endomorphism::surjective() const { return injective(); }   // finite carrier

bool Endomorphism::idempotent() const {
    for (Index a = 0; a < map_.size(); ++a)
        if (map_[map_[a]] != map_[a]) return false;
    return true;
}

bool Ideal::contains(Index a) const {
    return std::binary_search(members.begin(), members.end(), a);
}

bool is_ideal(const RingPtr& ring, const std::vector<Index>& members) {
    std::vector<bool> in(ring->size(), false);
    for (Index m : members) {
        if (m >= ring->size()) return false;
        in[m] = true;
    }
    if (!in[ring->zero()]) return false;
    const auto n = static_cast<Index>(ring->size());
    for (Index a : members) {
        if (!in[ring->neg(a)]) return false;
        for (Index b : members)
            if (!in[ring->add(a, b)]) return false;
        for (Index r = 0; r < n; ++r)
            if (!in[ring->mul(r, a)] || !in[ring->mul(a, r)]) return false;
    }
    return true;
}

Ideal make_ideal(RingPtr ring, std::vector<Index> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!is_ideal(ring, members))
        throw RingError("member set is not a two-sided ideal of " + ring->label());
    return Ideal{std::move(ring), std::move(members)};
}

std::string AxiomViolation::str() const {
    std::ostringstream os;
    os << law << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i)
        os << (i ? "," : "") << witness[i];
    os << ")";
    return os.str();
}

namespace {

void check_laws(const FiniteRing& ring, Index a, Index b, Index c,
                std::vector<AxiomViolation>& out) {
    if (ring.add(a, b) != ring.add(b, a))
        out.push_back({"add commutativity", {a, b}});
    if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)))
        out.push_back({"add associativity", {a, b, c}});
    if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)))
        out.push_back({"mul associativity", {a, b, c}});
    if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)))
        out.push_back({"left distributivity", {a, b, c}});
    if (ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c)))
        out.push_back({"right distributivity", {a, b, c}});
}

}  // namespace

std::vector<AxiomViolation> verify_axioms(const FiniteRing& ring,
                                          std::uint64_t samples) {
    std::vector<AxiomViolation> out;
    if (!ring.is_table()) {
        if (samples == 0)
            throw UnsupportedOperation(
                "structural ring " + ring.label() +
                " needs a sampling budget for axiom checks");
        std::mt19937_64 rng(0x6d63636f79ULL);
        std::uniform_int_distribution<std::uint64_t> dist(0, ring.size() - 1);
        for (std::uint64_t i = 0; i < samples && out.size() < 8; ++i) {
            auto a = static_cast<Index>(dist(rng));
            auto b = static_cast<Index>(dist(rng));
            auto c = static_cast<Index>(dist(rng));
            check_laws(ring, a, b, c, out);
            if (ring.add(a, ring.zero()) != a)
                out.push_back({"additive identity", {a}});
            if (ring.add(a, ring.neg(a)) != ring.zero())
                out.push_back({"additive inverse", {a}});
            if (ring.unital() &&
                (ring.mul(a, *ring.one()) != a || ring.mul(*ring.one(), a) != a))
                out.push_back({"multiplicative identity", {a}});
        }
        return out;
    }

    const auto n = static_cast<Index>(ring.size());
    for (Index a = 0; a < n && out.size() < 8; ++a) {
        if (ring.add(a, ring.zero()) != a)
            out.push_back({"additive identity", {a}});
        if (ring.add(a, ring.neg(a)) != ring.zero())
            out.push_back({"additive inverse", {a}});
        if (ring.unital() &&
            (ring.mul(a, *ring.one()) != a || ring.mul(*ring.one(), a) != a))
            out.push_back({"multiplicative identity", {a}});
    }
    for (Index a = 0; a < n && out.size() < 8; ++a)
        for (Index b = 0; b < n && out.size() < 8; ++b)
            for (Index c = 0; c < n && out.size() < 8; ++c)
                check_laws(ring, a, b, c, out);
    return out;
}

std::vector<Index> right_annihilator(const FiniteRing& ring,
                                     const std::vector<Index>& set) {
    if (set.empty()) throw RingError("annihilator of an empty set");
    std::vector<Index> out;
    const auto n = static_cast<Index>(ring.size());
    for (Index t = 0; t < n; ++t) {
        bool kills = true;
        for (Index a : set)
            if (ring.mul(a, t) != ring.zero()) {
                kills = false;
                break;
            }
        if (kills) out.push_back(t);
    }
    return out;
}

std::vector<Index> left_annihilator(const FiniteRing& ring,
                                    const std::vector<Index>& set) {
    if (set.empty()) throw RingError("annihilator of an empty set");
    std::vector<Index> out;
    const auto n = static_cast<Index>(ring.size());
    for (Index t = 0; t < n; ++t) {
        bool kills = true;
        for (Index a : set)
            if (ring.mul(t, a) != ring.zero()) {
                kills = false;
                break;
            }
        if (kills) out.push_back(t);
    }
    return out;
}

namespace {
std::vector<Element> lift(const RingPtr& ring, const std::vector<Index>& idx) {
    std::vector<Element> out;
    out.reserve(idx.size());
    for (Index i : idx) out.emplace_back(ring, i);
    return out;
}
std::vector<Index> drop(const RingPtr& ring, const std::vector<Element>& set) {
    std::vector<Index> out;
    out.reserve(set.size());
    for (const Element& e : set) {
        if (e.ring() != ring)
            throw RingError("annihilator over mixed rings: " + ring->label() +
                            " vs " + e.ring()->label());
        out.push_back(e.index());
    }
    return out;
}
}  // namespace

std::vector<Element> right_annihilator(const RingPtr& ring,
                                       const std::vector<Element>& set) {
    return lift(ring, right_annihilator(*ring, drop(ring, set)));
}

std::vector<Element> left_annihilator(const RingPtr& ring,
                                      const std::vector<Element>& set) {
    return lift(ring, left_annihilator(*ring, drop(ring, set)));
}

std::vector<Index> idempotents(const FiniteRing& ring) {
    if (!ring.is_table())
        throw UnsupportedOperation("idempotent enumeration needs a table "
                                   "backend: " + ring.label());
    std::vector<Index> out;
    for (Index e = 0; e < ring.size(); ++e)
        if (ring.mul(e, e) == e) out.push_back(e);
    return out;
}

bool is_regular(const FiniteRing& ring, Index a) {
    if (a == ring.zero()) return ring.size() == 1;
    for (Index b = 0; b < ring.size(); ++b) {
        if (b == ring.zero()) continue;
        if (ring.mul(a, b) == ring.zero() || ring.mul(b, a) == ring.zero())
            return false;
    }
    return true;
}

std::vector<Index> units(const FiniteRing& ring) {
    if (!ring.unital())
        throw RingError("units of a nonunital ring " + ring.label());
    std::vector<Index> out;
    const Index e = *ring.one();
    for (Index a = 0; a < ring.size(); ++a)
        for (Index b = 0; b < ring.size(); ++b)
            if (ring.mul(a, b) == e && ring.mul(b, a) == e) {
                out.push_back(a);
                break;
            }
    return out;
}

RigidResult is_rigid(const FiniteRing& ring, const Endomorphism& alpha) {
    for (Index a = 0; a < ring.size(); ++a) {
        if (a == ring.zero()) continue;
        if (ring.mul(a, alpha.apply(a)) == ring.zero()) return {false, a};
    }
    return {true, 0};
}

namespace {

// Additive + two-sided multiplicative closure of a seed set.
std::vector<bool> principal_ideal(const FiniteRing& ring, Index a) {
    const auto n = static_cast<Index>(ring.size());
    std::vector<bool> in(n, false);
    in[ring.zero()] = true;
    in[a] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Index s = 0; s < n; ++s) {
            if (!in[s]) continue;
            auto grow = [&](Index t) {
                if (!in[t]) {
                    in[t] = true;
                    changed = true;
                }
            };
            grow(ring.neg(s));
            for (Index t = 0; t < n; ++t) {
                if (in[t]) grow(ring.add(s, t));
                grow(ring.mul(t, s));
                grow(ring.mul(s, t));
            }
        }
    }
    return in;
}

std::vector<bool> ideal_sum(const FiniteRing& ring, const std::vector<bool>& a,
                            const std::vector<bool>& b) {
    const auto n = static_cast<Index>(ring.size());
    std::vector<bool> in(n, false);
    for (Index i = 0; i < n; ++i) in[i] = a[i] || b[i];
    bool changed = true;
    while (changed) {
        changed = false;
        for (Index s = 0; s < n; ++s) {
            if (!in[s]) continue;
            for (Index t = 0; t < n; ++t)
                if (in[t] && !in[ring.add(s, t)]) {
                    in[ring.add(s, t)] = true;
                    changed = true;
                }
        }
    }
    return in;
}

}  // namespace

std::vector<Ideal> ideals(const RingPtr& ring) {
    if (!ring->is_table())
        throw UnsupportedOperation("ideal enumeration needs tables: " +
                                   ring->label());
    const auto n = static_cast<Index>(ring->size());
    std::vector<std::vector<bool>> found;
    auto insert = [&](const std::vector<bool>& in) {
        if (std::find(found.begin(), found.end(), in) == found.end()) {
            found.push_back(in);
            return true;
        }
        return false;
    };
    std::vector<bool> trivial(n, false);
    trivial[ring->zero()] = true;
    insert(trivial);
    for (Index a = 0; a < n; ++a) insert(principal_ideal(*ring, a));
    bool changed = true;
    while (changed) {
        changed = false;
        const auto snapshot = found;   // sums of the lattice so far
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j)
                changed |= insert(ideal_sum(*ring, snapshot[i], snapshot[j]));
    }

    std::vector<Ideal> out;
    for (const auto& in : found) {
        std::vector<Index> members;
        for (Index i = 0; i < n; ++i)
            if (in[i]) members.push_back(i);
        out.push_back(Ideal{ring, std::move(members)});
    }
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        if (a.members.size() != b.members.size())
            return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

bool is_isomorphism(const FiniteRing& r, const FiniteRing& s,
                    const std::vector<Index>& map) {
    if (r.size() != s.size() || map.size() != r.size()) return false;
    std::vector<bool> hit(s.size(), false);
    for (Index v : map) {
        if (v >= s.size() || hit[v]) return false;
        hit[v] = true;
    }
    const auto n = static_cast<Index>(r.size());
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            if (map[r.add(a, b)] != s.add(map[a], map[b])) return false;
            if (map[r.mul(a, b)] != s.mul(map[a], map[b])) return false;
        }
    return true;
}

namespace {

struct Profile {
    unsigned add_order;
    bool idem;
    unsigned nilpotency;   // 0 when not nilpotent
    std::size_t rann_size, lann_size;

    auto key() const {
        return std::tie(add_order, idem, nilpotency, rann_size, lann_size);
    }
    bool operator==(const Profile& o) const { return key() == o.key(); }
    bool operator<(const Profile& o) const { return key() < o.key(); }
};

std::vector<Profile> profiles(const FiniteRing& ring) {
    const auto n = static_cast<Index>(ring.size());
    std::vector<Profile> out(n);
    for (Index a = 0; a < n; ++a) {
        Profile p{};
        Index acc = a;
        p.add_order = 1;
        while (acc != ring.zero()) {
            acc = ring.add(acc, a);
            ++p.add_order;
        }
        p.idem = ring.mul(a, a) == a;
        acc = a;
        for (unsigned k = 1; k <= n; ++k) {
            if (acc == ring.zero()) {
                p.nilpotency = k;
                break;
            }
            acc = ring.mul(acc, a);
        }
        p.rann_size = right_annihilator(ring, {a}).size();
        p.lann_size = left_annihilator(ring, {a}).size();
        out[a] = p;
    }
    return out;
}

struct IsoSearch {
    const FiniteRing& r;
    const FiniteRing& s;
    const std::vector<Profile>& pr;
    const std::vector<Profile>& ps;
    const std::vector<Index>& gens;
    std::uint64_t budget;
    std::vector<Index> images;
    std::vector<Index> phi;   // partial map, kUndef where unknown

    // Rebuild phi as the additive closure of the assigned generator images.
    // Returns false on any conflict (map clash, non-injectivity, broken
    // multiplication inside the defined span).
    bool close() {
        const auto n = static_cast<Index>(r.size());
        phi.assign(n, kUndef);
        std::vector<bool> used(n, false);
        phi[r.zero()] = s.zero();
        used[s.zero()] = true;
        std::vector<Index> defined{r.zero()};
        for (std::size_t head = 0; head < defined.size(); ++head) {
            Index x = defined[head];
            for (std::size_t k = 0; k < images.size(); ++k) {
                Index y = r.add(x, gens[k]);
                Index fy = s.add(phi[x], images[k]);
                if (phi[y] == kUndef) {
                    if (used[fy]) return false;
                    phi[y] = fy;
                    used[fy] = true;
                    defined.push_back(y);
                } else if (phi[y] != fy) {
                    return false;
                }
            }
        }
        if (r.unital() && phi[*r.one()] != kUndef && phi[*r.one()] != *s.one())
            return false;
        for (Index x : defined)
            for (Index y : defined) {
                Index p = r.mul(x, y);
                if (phi[p] != kUndef && phi[p] != s.mul(phi[x], phi[y]))
                    return false;
            }
        return true;
    }

    std::optional<std::vector<Index>> run(std::size_t depth) {
        if (depth == gens.size()) {
            auto map = phi;
            if (is_isomorphism(r, s, map)) return map;
            return std::nullopt;
        }
        const auto n = static_cast<Index>(s.size());
        for (Index h = 0; h < n; ++h) {
            if (budget == 0)
                throw UnsupportedOperation(
                    "isomorphism search budget exhausted");
            --budget;
            if (!(pr[gens[depth]] == ps[h])) continue;
            images.push_back(h);
            if (close()) {
                auto res = run(depth + 1);
                if (res) return res;
            }
            images.pop_back();
        }
        // restore the closure for the parent frame
        close();
        return std::nullopt;
    }
};

}  // namespace

std::optional<std::vector<Index>> find_isomorphism(const RingPtr& r,
                                                   const RingPtr& s,
                                                   std::uint64_t node_budget) {
    if (r->size() != s->size()) return std::nullopt;
    if (r->unital() != s->unital()) return std::nullopt;
    if (!r->is_table() || !s->is_table())
        throw UnsupportedOperation("isomorphism search needs table backends");
    if (r->size() > 4096)
        throw UnsupportedOperation(
            "isomorphism search limited to carriers of size <= 4096 "
            "(budget " + std::to_string(node_budget) + " nodes)");

    auto pr = profiles(*r);
    auto ps = profiles(*s);
    {
        auto a = pr, b = ps;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    // Greedy minimal additive generating set, smallest indices first.
    const auto n = static_cast<Index>(r->size());
    std::vector<bool> span(n, false);
    span[r->zero()] = true;
    std::size_t span_size = 1;
    std::vector<Index> gens;
    while (span_size < n) {
        Index g = 0;
        while (span[g]) ++g;
        gens.push_back(g);
        bool changed = true;
        while (changed) {
            changed = false;
            for (Index x = 0; x < n; ++x) {
                if (!span[x]) continue;
                for (Index gi : gens) {
                    Index y = r->add(x, gi);
                    if (!span[y]) {
                        span[y] = true;
                        ++span_size;
                        changed = true;
                    }
                }
            }
        }
    }

    IsoSearch search{*r, *s, pr, ps, gens, node_budget, {}, {}};
    search.close();
    return search.run(0);
}

RingPtr opposite(const RingPtr& ring) {
    if (!ring->is_table())
        throw UnsupportedOperation("opposite of a structural ring: " +
                                   ring->label());
    const auto n = static_cast<Index>(ring->size());
    std::vector<Index> mul(static_cast<std::size_t>(n) * n);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) mul[a * n + b] = ring->mul(b, a);
    auto out = FiniteRing::from_tables("op(" + ring->label() + ")", n,
                                       ring->add_table(), std::move(mul),
                                       ring->zero(), ring->one());
    auto mut = std::const_pointer_cast<FiniteRing>(out);
    mut->set_printer([ring](Index i) { return ring->format(i); });
    mut->set_codec(ring->codec());
    mut->set_construction({RingKind::Opposite, {}, {ring}});
    return out;
}

}  // namespace mccoy
