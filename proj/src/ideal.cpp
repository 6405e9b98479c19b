#include "nilring/ideal.hpp"

#include <algorithm>
#include <set>

namespace nilring {

std::string to_string(Sidedness side) {
    switch (side) {
        case Sidedness::left:
            return "left";
        case Sidedness::right:
            return "right";
        case Sidedness::two_sided:
            return "two-sided";
    }
    return "";
}

Sidedness sidedness_from_string(const std::string& text) {
    if (text == "left") return Sidedness::left;
    if (text == "right") return Sidedness::right;
    if (text == "two-sided" || text == "two_sided" || text == "twosided")
        return Sidedness::two_sided;
    throw InvalidParameter("unrecognized sidedness: \"" + text +
                           "\" (expected left, right, or two-sided)");
}

namespace {

std::string join_names(const FiniteRing& ring, const std::vector<int>& elems,
                       const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) out += sep;
        out += ring.name(elems[i]);
    }
    return out;
}

void verify_closure(const FiniteRing& ring, Sidedness side,
                    const boost::dynamic_bitset<>& members,
                    const std::vector<int>& elems) {
    const int n = ring.order();
    if (!members.test(ring.zero()))
        throw InvalidParameter("ideal member set lacks zero");
    for (int a : elems)
        for (int b : elems)
            if (!members.test(ring.add(a, b)))
                throw InvalidParameter("member set not additively closed at " +
                                       ring.name(a) + " + " + ring.name(b));
    for (int x : elems)
        for (int r = 0; r < n; ++r) {
            if (side != Sidedness::right && !members.test(ring.mul(r, x)))
                throw InvalidParameter("member set not closed under left multiplication: " +
                                       ring.name(r) + " * " + ring.name(x));
            if (side != Sidedness::left && !members.test(ring.mul(x, r)))
                throw InvalidParameter("member set not closed under right multiplication: " +
                                       ring.name(x) + " * " + ring.name(r));
        }
}

/// Generating sets that faithfully describe x for use in derived generating
/// sets: the recorded generators when present, the element list otherwise,
/// nothing for the zero ideal.
std::vector<int> contributing_gens(const Ideal& x) {
    if (x.is_zero()) return {};
    if (!x.generators().empty()) return x.generators();
    return x.elements();
}

void require_compatible(const Ideal& a, const Ideal& b) {
    if (!a.ring() || !b.ring()) throw InvalidParameter("uninitialized ideal operand");
    if (a.ring() != b.ring())
        throw MixedRing("ideal operands live in different rings");
    if (a.side() != b.side())
        throw MixedSidedness("ideal operands have different sidedness: " +
                             to_string(a.side()) + " vs " + to_string(b.side()));
}

/// Closure of a seed set under addition only. The caller guarantees (and
/// from_members re-checks) that the result is also side-closed.
boost::dynamic_bitset<> additive_closure(const FiniteRing& ring,
                                         const boost::dynamic_bitset<>& seed) {
    const int n = ring.order();
    boost::dynamic_bitset<> bits(n);
    std::vector<int> elems, frontier;
    auto try_add = [&](int x) {
        if (!bits.test(x)) {
            bits.set(x);
            elems.push_back(x);
            frontier.push_back(x);
        }
    };
    try_add(ring.zero());
    for (int x = 0; x < n; ++x)
        if (seed.test(x)) try_add(x);
    std::size_t qi = 0;
    while (qi < frontier.size()) {
        const int f = frontier[qi++];
        for (std::size_t k = 0; k < elems.size(); ++k) try_add(ring.add(f, elems[k]));
    }
    return bits;
}

}  // namespace

Ideal Ideal::from_members(RingPtr ring, Sidedness side,
                          const boost::dynamic_bitset<>& members, std::vector<int> gens) {
    if (!ring) throw InvalidParameter("ideal needs a ring");
    if (members.size() != std::size_t(ring->order()))
        throw InvalidParameter("ideal member bitset has wrong size");
    Ideal ideal;
    ideal.side_ = side;
    ideal.members_ = members;
    ideal.elems_.reserve(members.count());
    for (int x = 0; x < ring->order(); ++x)
        if (members.test(x)) ideal.elems_.push_back(x);
    verify_closure(*ring, side, members, ideal.elems_);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (int g : gens)
        if (!members.test(g))
            throw InvalidParameter("declared generator is not a member: " +
                                   ring->name(g));
    ideal.gens_ = std::move(gens);
    ideal.ring_ = std::move(ring);
    return ideal;
}

std::string Ideal::display() const {
    if (!ring_) return "(?)";
    if (is_zero()) return "(0)";
    if (is_whole_ring()) return "R";
    if (!gens_.empty()) return "(" + join_names(*ring_, gens_, ",") + ")";
    return "{" + join_names(*ring_, elems_, ",") + "}";
}

bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring() == b.ring() && a.side() == b.side() &&
           a.membership() == b.membership();
}

bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

bool canonical_less(const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
}

bool is_subideal(const Ideal& inner, const Ideal& outer) {
    require_compatible(inner, outer);
    return inner.membership().is_subset_of(outer.membership());
}

Ideal zero_ideal(const RingPtr& ring, Sidedness side) {
    if (!ring) throw InvalidParameter("null ring");
    boost::dynamic_bitset<> bits(ring->order());
    bits.set(ring->zero());
    return Ideal::from_members(ring, side, bits);
}

Ideal unit_ideal(const RingPtr& ring, Sidedness side) {
    if (!ring) throw InvalidParameter("null ring");
    boost::dynamic_bitset<> bits(ring->order());
    bits.set();
    return Ideal::from_members(ring, side, bits, {ring->one()});
}

std::vector<int> canonical_generators(const Ideal& ideal) {
    if (!ideal.ring()) throw InvalidParameter("uninitialized ideal");
    std::vector<int> gens;
    Ideal current = zero_ideal(ideal.ring(), ideal.side());
    while (current != ideal) {
        int next = -1;
        for (int x : ideal.elements())
            if (!current.contains(x)) {
                next = x;
                break;
            }
        if (next == -1)
            throw InternalInconsistency("generator search exhausted " + ideal.display());
        gens.push_back(next);
        current = generate_ideal(ideal.ring(), gens, ideal.side());
    }
    return gens;
}

Ideal canonicalize_generators(const Ideal& ideal) {
    if (!ideal.ring()) throw InvalidParameter("uninitialized ideal");
    return Ideal::from_members(ideal.ring(), ideal.side(), ideal.membership(),
                               canonical_generators(ideal));
}

Ideal generate_ideal(const RingPtr& ring, const std::vector<int>& gens, Sidedness side) {
    if (!ring) throw InvalidParameter("null ring");
    const int n = ring->order();
    for (int g : gens)
        if (g < 0 || g >= n)
            throw InvalidParameter("generator out of range: " + std::to_string(g));

    boost::dynamic_bitset<> bits(n);
    std::vector<int> elems, frontier;
    auto try_add = [&](int x) {
        if (!bits.test(x)) {
            bits.set(x);
            elems.push_back(x);
            frontier.push_back(x);
        }
    };
    try_add(ring->zero());
    for (int g : gens) try_add(g);
    std::size_t qi = 0;
    while (qi < frontier.size()) {
        const int f = frontier[qi++];
        for (std::size_t k = 0; k < elems.size(); ++k) try_add(ring->add(f, elems[k]));
        for (int r = 0; r < n; ++r) {
            if (side != Sidedness::right) try_add(ring->mul(r, f));
            if (side != Sidedness::left) try_add(ring->mul(f, r));
        }
    }
    return Ideal::from_members(ring, side, bits, gens);
}

Ideal principal_ideal(const RingPtr& ring, int g, Sidedness side) {
    return generate_ideal(ring, {g}, side);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_compatible(a, b);
    const FiniteRing& ring = *a.ring();
    boost::dynamic_bitset<> bits(ring.order());
    for (int x : a.elements())
        for (int y : b.elements()) bits.set(ring.add(x, y));
    std::vector<int> gens = contributing_gens(a);
    const std::vector<int> gb = contributing_gens(b);
    gens.insert(gens.end(), gb.begin(), gb.end());
    try {
        return Ideal::from_members(a.ring(), a.side(), bits, std::move(gens));
    } catch (const InvalidParameter& e) {
        throw InternalInconsistency(std::string("ideal sum is not an ideal: ") + e.what());
    }
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    require_compatible(a, b);
    boost::dynamic_bitset<> bits = a.membership() & b.membership();
    try {
        return Ideal::from_members(a.ring(), a.side(), bits);
    } catch (const InvalidParameter& e) {
        throw InternalInconsistency(std::string("ideal intersection is not an ideal: ") +
                                    e.what());
    }
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_compatible(a, b);
    const FiniteRing& ring = *a.ring();
    boost::dynamic_bitset<> seed(ring.order());
    for (int x : a.elements())
        for (int y : b.elements()) seed.set(ring.mul(x, y));
    boost::dynamic_bitset<> bits = additive_closure(ring, seed);
    try {
        return Ideal::from_members(a.ring(), a.side(), bits);
    } catch (const InvalidParameter& e) {
        throw InternalInconsistency(std::string("ideal product is not an ideal: ") +
                                    e.what());
    }
}

Ideal ideal_power(const Ideal& a, int k) {
    if (k < 1) throw InvalidParameter("ideal power requires k >= 1, got " + std::to_string(k));
    Ideal result = a;
    for (int i = 1; i < k; ++i) result = ideal_product(result, a);
    return result;
}

Ideal ideal_quotient(const Ideal& ideal, int a) {
    if (!ideal.ring()) throw InvalidParameter("uninitialized ideal operand");
    const FiniteRing& ring = *ideal.ring();
    if (!ring.commutative())
        throw NotCommutative("ideal quotient is only defined here for commutative rings");
    if (a < 0 || a >= ring.order())
        throw InvalidParameter("ideal quotient element out of range");
    boost::dynamic_bitset<> bits(ring.order());
    for (int r = 0; r < ring.order(); ++r)
        if (ideal.contains(ring.mul(r, a))) bits.set(r);
    try {
        return Ideal::from_members(ideal.ring(), Sidedness::two_sided, bits);
    } catch (const InvalidParameter& e) {
        throw InternalInconsistency(std::string("ideal quotient is not an ideal: ") +
                                    e.what());
    }
}

Ideal radical_of_ideal(const Ideal& ideal) {
    if (!ideal.ring()) throw InvalidParameter("uninitialized ideal operand");
    const FiniteRing& ring = *ideal.ring();
    if (!ring.commutative())
        throw NotCommutative("ideal radical is only defined here for commutative rings");
    boost::dynamic_bitset<> bits(ring.order());
    for (int x = 0; x < ring.order(); ++x) {
        int p = x;
        for (int k = 0; k < ring.order(); ++k) {
            if (ideal.contains(p)) {
                bits.set(x);
                break;
            }
            p = ring.mul(p, x);
        }
    }
    try {
        return Ideal::from_members(ideal.ring(), ideal.side(), bits);
    } catch (const InvalidParameter& e) {
        throw InternalInconsistency(std::string("ideal radical is not an ideal: ") +
                                    e.what());
    }
}

int IdealLattice::index_of(const Ideal& ideal) const {
    auto it = std::lower_bound(ideals.begin(), ideals.end(), ideal, canonical_less);
    if (it == ideals.end() || *it != ideal)
        throw InvalidParameter("ideal " + ideal.display() + " is not in the lattice");
    return int(it - ideals.begin());
}

IdealLattice enumerate_ideals(const RingPtr& ring, Sidedness side) {
    if (!ring) throw InvalidParameter("null ring");
    const int n = ring->order();
    std::set<boost::dynamic_bitset<>> seen;
    std::vector<Ideal> pool;
    auto push = [&](Ideal ideal) {
        if (seen.insert(ideal.membership()).second) pool.push_back(std::move(ideal));
    };
    for (int a = 0; a < n; ++a) push(principal_ideal(ring, a, side));
    // Close under pairwise sums. Newly found ideals are appended and later
    // paired with everything before them, so this reaches a fixpoint; every
    // ideal is a sum of principal ideals, so the fixpoint is the full lattice.
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) push(ideal_sum(pool[i], pool[j]));

    std::sort(pool.begin(), pool.end(), canonical_less);
    for (Ideal& ideal : pool) ideal = canonicalize_generators(ideal);
    IdealLattice lattice;
    lattice.ring = ring;
    lattice.side = side;
    lattice.ideals = std::move(pool);
    return lattice;
}

std::vector<int> minimal_nonzero_ideals(const IdealLattice& lattice) {
    std::vector<int> out;
    const auto& ideals = lattice.ideals;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (ideals[i].is_zero()) continue;
        bool minimal = true;
        for (std::size_t j = 0; j < ideals.size(); ++j) {
            if (j == i || ideals[j].is_zero()) continue;
            if (ideals[j].membership().is_proper_subset_of(ideals[i].membership())) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(int(i));
    }
    return out;
}

std::vector<int> maximal_proper_ideals(const IdealLattice& lattice) {
    std::vector<int> out;
    const auto& ideals = lattice.ideals;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (ideals[i].is_whole_ring()) continue;
        bool maximal = true;
        for (std::size_t j = 0; j < ideals.size(); ++j) {
            if (j == i || ideals[j].is_whole_ring()) continue;
            if (ideals[i].membership().is_proper_subset_of(ideals[j].membership())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(int(i));
    }
    return out;
}

QuotientResult make_quotient_ring(const RingPtr& ring, const Ideal& ideal,
                                  const Caps& caps) {
    if (!ring) throw InvalidParameter("null ring");
    if (ideal.ring() != ring) throw MixedRing("ideal does not belong to this ring");
    if (ideal.side() != Sidedness::two_sided && !ring->commutative())
        throw SidednessError("quotient requires a two-sided ideal, got " +
                             to_string(ideal.side()));

    const int n = ring->order();
    std::vector<int> cls(n, -1), reps;
    for (int x = 0; x < n; ++x) {
        if (cls[x] != -1) continue;
        const int c = int(reps.size());
        reps.push_back(x);  // least member of the coset, since x runs ascending
        for (int i : ideal.elements()) {
            const int y = ring->add(x, i);
            if (cls[y] != -1 && cls[y] != c)
                throw InternalInconsistency("cosets of " + ideal.display() +
                                            " are not disjoint");
            cls[y] = c;
        }
    }

    const int q = int(reps.size());
    std::vector<std::uint16_t> qadd(std::size_t(q) * q), qmul(std::size_t(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            qadd[std::size_t(i) * q + j] = std::uint16_t(cls[ring->add(reps[i], reps[j])]);
            qmul[std::size_t(i) * q + j] = std::uint16_t(cls[ring->mul(reps[i], reps[j])]);
        }
    std::vector<std::string> names(q);
    for (int c = 0; c < q; ++c) names[c] = "[" + ring->name(reps[c]) + "]";

    QuotientResult result;
    result.ring = FiniteRing::create(std::move(qadd), std::move(qmul), cls[ring->zero()],
                                     cls[ring->one()], std::move(names),
                                     ring->construction_tag() + "/" + ideal.display(), caps);
    result.projection = RingHom::checked(ring, result.ring, cls);
    return result;
}

}  // namespace nilring
