#include "nilring/predicates.hpp"

#include <exception>

namespace nilring {

bool ideal_is_nil(const Ideal& ideal) {
    if (!ideal.ring()) throw InvalidParameter("uninitialized ideal");
    const FiniteRing& ring = *ideal.ring();
    for (int x : ideal.elements())
        if (!ring.nilpotent_element(x)) return false;
    return true;
}

NilpotencyResult ideal_nilpotency(const Ideal& ideal) {
    if (!ideal.ring()) throw InvalidParameter("uninitialized ideal");
    NilpotencyResult res;
    Ideal p = ideal;
    res.chain_sizes.push_back(p.size());
    int k = 1;
    while (true) {
        if (p.is_zero()) {
            res.nilpotent = true;
            res.index = k;
            return res;
        }
        Ideal next = ideal_product(p, ideal);
        if (next == p) {
            res.stable_power = std::move(p);  // stabilized above zero: not nilpotent
            return res;
        }
        p = std::move(next);
        ++k;
        res.chain_sizes.push_back(p.size());
    }
}

namespace {

/// Runs body(i) for i in [0, count), serially or with OpenMP. Exceptions from
/// parallel iterations are captured and rethrown (first index wins) so
/// callers see the same behavior in both modes.
template <class Body>
void run_indexed(int count, kernels::Mode mode, Body&& body) {
    if (mode == kernels::Mode::parallel) {
        std::vector<std::exception_ptr> errs(count);
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) {
            try {
                body(i);
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
    } else {
        for (int i = 0; i < count; ++i) body(i);
    }
}

}  // namespace

LatticeAnalysis::LatticeAnalysis(IdealLattice lattice, kernels::Mode mode)
    : lattice_(std::move(lattice)) {
    if (!lattice_.ring || lattice_.ideals.empty())
        throw InvalidParameter("lattice analysis needs a non-empty lattice");
    const FiniteRing& ring = *lattice_.ring;
    const int m = count();

    nil_.assign(m, 0);
    nilpotency_.assign(m, {});
    run_indexed(m, mode, [&](int i) {
        const Ideal& I = ideal(i);
        bool all_nil = true;
        for (int x : I.elements())
            if (!ring.nilpotent_element(x)) {
                all_nil = false;
                break;
            }
        nil_[i] = all_nil ? 1 : 0;
        nilpotency_[i] = ideal_nilpotency(I);
        // For finite rings nil and nilpotent coincide for ideals; computing
        // both and comparing is a free consistency check on the engine.
        if (all_nil != nilpotency_[i].nilpotent)
            throw InternalInconsistency("ideal " + I.display() +
                                        ": elementwise nil flag disagrees with the "
                                        "power-chain nilpotency result");
    });

    meet_.assign(std::size_t(m) * m, 0);
    join_.assign(std::size_t(m) * m, 0);
    prod_.assign(std::size_t(m) * m, 0);
    leq_.assign(std::size_t(m) * m, 0);
    run_indexed(m, mode, [&](int i) {
        for (int j = 0; j < m; ++j) {
            meet_[idx(i, j)] = lattice_.index_of(ideal_intersection(ideal(i), ideal(j)));
            join_[idx(i, j)] = lattice_.index_of(ideal_sum(ideal(i), ideal(j)));
            prod_[idx(i, j)] = lattice_.index_of(ideal_product(ideal(i), ideal(j)));
            leq_[idx(i, j)] =
                ideal(i).membership().is_subset_of(ideal(j).membership()) ? 1 : 0;
        }
    });

    minimal_.assign(m, 0);
    maximal_.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        if (i != zero_index()) {
            bool minimal = true;
            for (int j = 0; j < m; ++j)
                if (j != i && j != zero_index() && leq(j, i)) {
                    minimal = false;
                    break;
                }
            minimal_[i] = minimal ? 1 : 0;
        }
        if (i != ring_index()) {
            bool maximal = true;
            for (int j = 0; j < m; ++j)
                if (j != i && j != ring_index() && leq(i, j)) {
                    maximal = false;
                    break;
                }
            maximal_[i] = maximal ? 1 : 0;
        }
    }

    essential_.assign(m, {});
    nil_essential_.assign(m, {});
    for (int i = 0; i < m; ++i) {
        essential_[i] = {true, -1};
        for (int j = 1; j < m; ++j)
            if (intersection_index(i, j) == zero_index()) {
                essential_[i] = {false, j};
                break;
            }
        nil_essential_[i] = {true, -1};
        for (int j = 1; j < m; ++j)
            if (intersection_index(i, j) == zero_index() && !nilpotent(j)) {
                nil_essential_[i] = {false, j};
                break;
            }
        if (essential_[i].holds && !nil_essential_[i].holds)
            throw InternalInconsistency("ideal " + ideal(i).display() +
                                        " is essential but not nil-essential");
    }
}

std::vector<int> LatticeAnalysis::minimal_indices() const {
    std::vector<int> out;
    for (int i = 0; i < count(); ++i)
        if (minimal_[i]) out.push_back(i);
    return out;
}

std::vector<int> LatticeAnalysis::maximal_indices() const {
    std::vector<int> out;
    for (int i = 0; i < count(); ++i)
        if (maximal_[i]) out.push_back(i);
    return out;
}

EssentialityVerdict LatticeAnalysis::essential_within(int i, int k) const {
    if (!leq(i, k))
        throw InvalidParameter("essential_within requires " + ideal(i).display() +
                               " <= " + ideal(k).display());
    for (int j = 1; j < count(); ++j)
        if (leq(j, k) && j != zero_index() && intersection_index(i, j) == zero_index())
            return {false, j};
    return {true, -1};
}

EssentialityVerdict LatticeAnalysis::nil_essential_within(int i, int k) const {
    if (!leq(i, k))
        throw InvalidParameter("nil_essential_within requires " + ideal(i).display() +
                               " <= " + ideal(k).display());
    for (int j = 1; j < count(); ++j)
        if (leq(j, k) && !nilpotent(j) && intersection_index(i, j) == zero_index())
            return {false, j};
    return {true, -1};
}

IdealClassification LatticeAnalysis::classification(int i) const {
    IdealClassification c;
    c.nil = nil(i);
    c.nilpotent = nilpotency_[i].nilpotent;
    c.nilpotency_index = nilpotency_[i].index;
    c.minimal = minimal(i);
    c.maximal = maximal(i);
    c.essential = essential_[i];
    c.nil_essential = nil_essential_[i];
    return c;
}

Ideal socle(const LatticeAnalysis& analysis) {
    const auto& lattice = analysis.lattice();
    Ideal sum = zero_ideal(lattice.ring, lattice.side);
    for (int i : analysis.minimal_indices()) sum = ideal_sum(sum, analysis.ideal(i));

    Ideal meet = analysis.ideal(analysis.ring_index());
    for (int i = 0; i < analysis.count(); ++i)
        if (analysis.essential(i).holds) meet = ideal_intersection(meet, analysis.ideal(i));

    if (sum != meet)
        throw InternalInconsistency(
            "socle mismatch: sum of minimal ideals is " + sum.display() +
            " but the intersection of essential ideals is " + meet.display());
    // Hand back the lattice's canonical copy so displays are stable.
    return analysis.ideal(lattice.index_of(sum));
}

Ideal jacobson_radical(const LatticeAnalysis& analysis) {
    const auto& lattice = analysis.lattice();
    const FiniteRing& ring = *lattice.ring;
    if (lattice.side == Sidedness::two_sided && !ring.commutative())
        throw SidednessError(
            "the Jacobson radical of a noncommutative ring needs a one-sided lattice");

    Ideal meet = analysis.ideal(analysis.ring_index());
    for (int i : analysis.maximal_indices())
        meet = ideal_intersection(meet, analysis.ideal(i));

    // Independent characterization: x is quasi-regular iff 1 - r*x is a unit
    // for every r (one-sided inverses are two-sided in a finite ring).
    const int n = ring.order();
    boost::dynamic_bitset<> quasi(n);
    for (int x = 0; x < n; ++x) {
        bool ok = true;
        for (int r = 0; r < n; ++r)
            if (!ring.unit(ring.sub(ring.one(), ring.mul(r, x)))) {
                ok = false;
                break;
            }
        if (ok) quasi.set(x);
    }
    if (quasi != meet.membership())
        throw InternalInconsistency(
            "Jacobson radical mismatch: intersection of maximal ideals is " +
            meet.display() + " but the quasi-regular set has " +
            std::to_string(quasi.count()) + " elements");
    return analysis.ideal(lattice.index_of(meet));
}

Ideal nilradical(const RingPtr& ring) {
    if (!ring) throw InvalidParameter("null ring");
    if (!ring->commutative())
        throw NotCommutative("the nilradical is only defined here for commutative rings");
    boost::dynamic_bitset<> bits(ring->order());
    for (int x = 0; x < ring->order(); ++x)
        if (ring->nilpotent_element(x)) bits.set(x);
    return canonicalize_generators(Ideal::from_members(ring, Sidedness::two_sided, bits));
}

bool is_reduced(const FiniteRing& ring) {
    for (int x = 0; x < ring.order(); ++x)
        if (x != ring.zero() && ring.nilpotent_element(x)) return false;
    return true;
}

bool is_semisimple(const LatticeAnalysis& analysis) {
    return jacobson_radical(analysis).is_zero();
}

namespace {

ElementCriterionVerdict element_criterion_over(const Ideal& ideal,
                                               const std::vector<int>& xs) {
    const FiniteRing& ring = *ideal.ring();
    if (!ring.commutative())
        throw NotCommutative("the element criterion applies to commutative rings");
    if (ideal.is_zero())
        throw ZeroIdealNotCovered(
            "the element criterion assumes a nonzero ideal; use the lattice "
            "definition for (0)");
    const int n = ring.order();
    for (int x : xs) {
        if (ring.nilpotent_element(x)) continue;
        bool found = false;
        for (int r = 0; r < n; ++r) {
            const int y = ring.mul(r, x);
            if (y != ring.zero() && ideal.contains(y)) {
                found = true;
                break;
            }
        }
        if (!found) return {false, x};
    }
    return {true, -1};
}

}  // namespace

ElementCriterionVerdict nil_essential_element_criterion(const Ideal& ideal) {
    if (!ideal.ring()) throw InvalidParameter("uninitialized ideal");
    std::vector<int> xs(ideal.ring()->order());
    for (int x = 0; x < int(xs.size()); ++x) xs[x] = x;
    return element_criterion_over(ideal, xs);
}

ElementCriterionVerdict nil_essential_element_criterion(const Ideal& ideal,
                                                        const Ideal& within) {
    if (!ideal.ring()) throw InvalidParameter("uninitialized ideal");
    if (!is_subideal(ideal, within))
        throw InvalidParameter("element criterion requires " + ideal.display() +
                               " <= " + within.display());
    return element_criterion_over(ideal, within.elements());
}

}  // namespace nilring
