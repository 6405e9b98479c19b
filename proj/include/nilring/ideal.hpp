#pragma once

#include <boost/dynamic_bitset.hpp>
#include <string>
#include <vector>

#include "nilring/ring.hpp"

namespace nilring {

enum class Sidedness { left, right, two_sided };

std::string to_string(Sidedness side);
Sidedness sidedness_from_string(const std::string& text);

/// An additive subgroup of a ring closed under multiplication on the given
/// side(s). Membership is held both as a bitset (fast set algebra) and as a
/// sorted element list (canonical ordering, iteration). Construction always
/// verifies closure; an Ideal value is an ideal.
class Ideal {
public:
    Ideal() = default;

    const RingPtr& ring() const { return ring_; }
    Sidedness side() const { return side_; }
    int size() const { return int(elems_.size()); }
    bool contains(int e) const { return members_.test(e); }
    const std::vector<int>& elements() const { return elems_; }
    const boost::dynamic_bitset<>& membership() const { return members_; }

    /// The generating set this ideal was built from; empty when the ideal
    /// arose from set algebra (intersection, radical, ...).
    const std::vector<int>& generators() const { return gens_; }

    bool is_zero() const { return size() == 1; }
    bool is_whole_ring() const { return ring_ && size() == ring_->order(); }

    /// "(0)", "R", "(6)", "(4,3)" when generators are known, "{0,2,4}" with
    /// element names otherwise.
    std::string display() const;

    /// Validating constructor from an explicit member set. Throws
    /// InvalidParameter (with a witness in the message) if the set is not an
    /// ideal of the requested sidedness.
    static Ideal from_members(RingPtr ring, Sidedness side,
                              const boost::dynamic_bitset<>& members,
                              std::vector<int> gens = {});

private:
    RingPtr ring_;
    Sidedness side_ = Sidedness::two_sided;
    boost::dynamic_bitset<> members_;
    std::vector<int> elems_;
    std::vector<int> gens_;
};

bool operator==(const Ideal& a, const Ideal& b);
bool operator!=(const Ideal& a, const Ideal& b);

/// Order by size, then lexicographically by sorted element list. Total on
/// the ideals of one ring; used everywhere a deterministic order is needed.
bool canonical_less(const Ideal& a, const Ideal& b);

bool is_subideal(const Ideal& inner, const Ideal& outer);

Ideal zero_ideal(const RingPtr& ring, Sidedness side);
Ideal unit_ideal(const RingPtr& ring, Sidedness side);

/// Greedy minimal generating sequence: repeatedly adjoin the least element
/// not yet generated. Deterministic, so it canonicalizes displays.
std::vector<int> canonical_generators(const Ideal& ideal);

/// Same ideal with its generator list replaced by canonical_generators().
Ideal canonicalize_generators(const Ideal& ideal);

/// Smallest ideal of the given sidedness containing the generators.
Ideal generate_ideal(const RingPtr& ring, const std::vector<int>& gens, Sidedness side);
Ideal principal_ideal(const RingPtr& ring, int g, Sidedness side);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// Additive closure of the pairwise products; same sidedness as the operands.
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int k);  // k >= 1

/// (I : a) = { r | r*a in I }, returned two-sided. Commutative rings only.
Ideal ideal_quotient(const Ideal& ideal, int a);

/// { x | x^k in I for some k >= 1 }. Commutative rings only.
Ideal radical_of_ideal(const Ideal& ideal);

/// Every ideal of the given sidedness, in canonical order. ideals.front() is
/// the zero ideal and ideals.back() is the whole ring.
struct IdealLattice {
    RingPtr ring;
    Sidedness side = Sidedness::two_sided;
    std::vector<Ideal> ideals;

    int size() const { return int(ideals.size()); }

    /// Index in canonical order; throws InvalidParameter if absent.
    int index_of(const Ideal& ideal) const;
};

/// Closes the set of principal ideals under pairwise sum. For a finite ring
/// this reaches every ideal: each ideal is the sum of the principal ideals
/// of its members.
IdealLattice enumerate_ideals(const RingPtr& ring, Sidedness side);

std::vector<int> minimal_nonzero_ideals(const IdealLattice& lattice);
std::vector<int> maximal_proper_ideals(const IdealLattice& lattice);

/// R/I for a two-sided ideal (any sidedness accepted on a commutative ring).
/// Elements of the quotient are cosets, named "[r]" by their least
/// representative; class 0 is I itself.
struct QuotientResult {
    RingPtr ring;
    RingHom projection;
};
QuotientResult make_quotient_ring(const RingPtr& ring, const Ideal& ideal,
                                  const Caps& caps = {});

}  // namespace nilring
