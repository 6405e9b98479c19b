#pragma once

#include <vector>

#include "nilring/ideal.hpp"
#include "nilring/kernels.hpp"

namespace nilring {

/// Every element of the ideal is nilpotent.
bool ideal_is_nil(const Ideal& ideal);

/// Descending power chain I >= I^2 >= ... until it hits (0) or stabilizes.
struct NilpotencyResult {
    bool nilpotent = false;
    /// Least k with I^k = (0); 0 when not nilpotent.
    int index = 0;
    /// The fixpoint ideal of the chain when not nilpotent; unset otherwise.
    Ideal stable_power;
    /// |I^1|, |I^2|, ... including the final (zero or stabilized) term.
    std::vector<int> chain_sizes;
};
NilpotencyResult ideal_nilpotency(const Ideal& ideal);

/// Verdict of an essentiality-style lattice scan. When the property fails,
/// `witness_index` is the canonically first lattice index that defeats it.
struct EssentialityVerdict {
    bool holds = false;
    int witness_index = -1;
};

/// Per-ideal summary of everything the lattice scan decides.
struct IdealClassification {
    bool nil = false;
    bool nilpotent = false;
    int nilpotency_index = 0;  // 0 when not nilpotent
    bool minimal = false;
    bool maximal = false;
    EssentialityVerdict essential;
    EssentialityVerdict nil_essential;
};

/// Caches the pairwise structure of one ideal lattice: intersections, sums,
/// products (as lattice indices), inclusion, nilpotency, and the
/// essential / nil-essential verdicts derived from them.
///
/// Essential: meets every nonzero ideal nontrivially. Nil-essential: every
/// nonzero ideal it misses (trivial intersection) is nil.
class LatticeAnalysis {
public:
    explicit LatticeAnalysis(IdealLattice lattice,
                             kernels::Mode mode = kernels::Mode::serial);

    const IdealLattice& lattice() const { return lattice_; }
    const RingPtr& ring() const { return lattice_.ring; }
    int count() const { return int(lattice_.ideals.size()); }
    const Ideal& ideal(int i) const { return lattice_.ideals[i]; }

    int zero_index() const { return 0; }
    int ring_index() const { return count() - 1; }

    bool nil(int i) const { return nil_[i] != 0; }
    bool nilpotent(int i) const { return nilpotency_[i].nilpotent; }
    const NilpotencyResult& nilpotency(int i) const { return nilpotency_[i]; }

    int intersection_index(int i, int j) const { return meet_[idx(i, j)]; }
    int sum_index(int i, int j) const { return join_[idx(i, j)]; }
    int product_index(int i, int j) const { return prod_[idx(i, j)]; }
    bool leq(int i, int j) const { return leq_[idx(i, j)] != 0; }

    bool minimal(int i) const { return minimal_[i] != 0; }
    bool maximal(int i) const { return maximal_[i] != 0; }
    std::vector<int> minimal_indices() const;
    std::vector<int> maximal_indices() const;

    const EssentialityVerdict& essential(int i) const { return essential_[i]; }
    const EssentialityVerdict& nil_essential(int i) const { return nil_essential_[i]; }

    /// I is essential *inside* K (both lattice indices, I <= K required):
    /// every nonzero ideal contained in K meets I nontrivially.
    EssentialityVerdict essential_within(int i, int k) const;

    /// Nil-essential inside K: every nonzero non-nil ideal contained in K
    /// meets I nontrivially.
    EssentialityVerdict nil_essential_within(int i, int k) const;

    IdealClassification classification(int i) const;

private:
    std::size_t idx(int i, int j) const { return std::size_t(i) * count() + j; }

    IdealLattice lattice_;
    std::vector<std::uint8_t> nil_;
    std::vector<NilpotencyResult> nilpotency_;
    std::vector<int> meet_, join_, prod_;
    std::vector<std::uint8_t> leq_;
    std::vector<std::uint8_t> minimal_, maximal_;
    std::vector<EssentialityVerdict> essential_, nil_essential_;
};

/// Sum of the minimal nonzero ideals. Cross-checked against the intersection
/// of all essential ideals; disagreement raises InternalInconsistency.
Ideal socle(const LatticeAnalysis& analysis);

/// Intersection of the maximal ideals of the given lattice (pass the left
/// lattice for a noncommutative ring). Cross-checked against quasi-
/// regularity: x is in the radical iff 1 - r*x is a unit for every r.
Ideal jacobson_radical(const LatticeAnalysis& analysis);

/// Set of nilpotent elements, as an ideal. Commutative rings only.
Ideal nilradical(const RingPtr& ring);

/// No nonzero nilpotent elements.
bool is_reduced(const FiniteRing& ring);

/// Jacobson radical is zero.
bool is_semisimple(const LatticeAnalysis& analysis);

/// Element-level nil-essentiality test for a nonzero ideal of a commutative
/// ring: for every non-nilpotent x there is r with r*x a nonzero member of
/// the ideal. When it fails, `witness_element` is the least non-nilpotent x
/// with no such r.
struct ElementCriterionVerdict {
    bool holds = false;
    int witness_element = -1;
};
ElementCriterionVerdict nil_essential_element_criterion(const Ideal& ideal);

/// Relative form: x ranges over `within` (which must contain the ideal)
/// instead of the whole ring.
ElementCriterionVerdict nil_essential_element_criterion(const Ideal& ideal,
                                                        const Ideal& within);

}  // namespace nilring
