#pragma once

#include <utility>
#include <vector>

#include "nilring/ideal.hpp"

namespace nilring {

/// A multiplicatively closed subset of a commutative ring that contains 1
/// and avoids 0. Build via multiplicative_closure / non_zero_divisors.
struct MultiplicativeSet {
    RingPtr ring;
    std::vector<int> members;      // sorted ascending
    boost::dynamic_bitset<> bits;  // membership by element index
    std::vector<int> seed;         // the generators it was closed from

    bool contains(int x) const { return bits.test(x); }
    int size() const { return int(members.size()); }
    std::string display() const;  // "{1,3}" with element names
};

/// Closes `seed` (plus 1) under products. Throws ZeroInClosure with the
/// factor chain when some product of seed elements is 0, NotCommutative on a
/// noncommutative ring.
MultiplicativeSet multiplicative_closure(const RingPtr& ring, std::vector<int> seed);

/// {s : sx != 0 for every x != 0}; the largest localization-ready set.
MultiplicativeSet non_zero_divisors(const RingPtr& ring);

/// Every 0-free multiplicatively closed subset containing 1, in canonical
/// order (size, then members lexicographically).
std::vector<MultiplicativeSet> enumerate_multiplicative_sets(const RingPtr& ring);

/// The ring of fractions over a multiplicative set. Elements are classes of
/// pairs (r, s) with s in S, where (r, s) ~ (r', s') iff rs' - r's lies in
/// the kernel {x : ux = 0 for some u in S}; each class is represented by its
/// lexicographically least pair.
struct LocalizedRing {
    RingPtr base;
    MultiplicativeSet s_set;
    RingPtr result;
    RingHom canonical;  // r -> class of (r, 1); verified unital
    std::vector<std::pair<int, int>> class_reps;  // result element -> least (r, s)
    Ideal kernel;       // of the base ring; equals the canonical map's kernel
};

LocalizedRing localize_ring(const RingPtr& ring, const MultiplicativeSet& s_set,
                            const Caps& caps = {});

/// The ideal of the localized ring generated by the canonical images of the
/// given base-ring ideal's elements.
Ideal localize_ideal(const LocalizedRing& loc, const Ideal& ideal);

}  // namespace nilring
