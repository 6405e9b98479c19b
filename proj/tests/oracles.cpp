#include "oracles.hpp"

#include <queue>

namespace oracles {
namespace {

using Bits = boost::dynamic_bitset<>;

/// Additive span: smallest subset containing `seed` and 0 that is closed
/// under addition. In a finite group that closure is a subgroup (the cyclic
/// powers of each element already contain its inverse).
Bits additive_close(const nilring::FiniteRing& ring, Bits seed) {
    seed.set(std::size_t(ring.zero()));
    std::vector<int> elems;
    for (std::size_t x = 0; x < seed.size(); ++x)
        if (seed.test(x)) elems.push_back(int(x));
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const int s = ring.add(elems[i], elems[j]);
            if (!seed.test(std::size_t(s))) {
                seed.set(std::size_t(s));
                elems.push_back(s);
            }
        }
    }
    return seed;
}

}  // namespace

std::set<Bits> additive_subgroups(const nilring::FiniteRing& ring) {
    const int n = ring.order();
    Bits trivial{std::size_t(n)};
    trivial.set(std::size_t(ring.zero()));
    std::set<Bits> known{trivial};
    std::queue<Bits> work;
    work.push(trivial);
    while (!work.empty()) {
        const Bits base = work.front();
        work.pop();
        for (int x = 0; x < n; ++x) {
            if (base.test(std::size_t(x))) continue;
            Bits grown = base;
            grown.set(std::size_t(x));
            grown = additive_close(ring, std::move(grown));
            if (known.insert(grown).second) work.push(grown);
        }
    }
    return known;
}

std::set<Bits> ideals_by_subgroup_scan(const nilring::FiniteRing& ring,
                                       nilring::Sidedness side) {
    const int n = ring.order();
    const bool left = side != nilring::Sidedness::right;
    const bool right = side != nilring::Sidedness::left;
    std::set<Bits> out;
    for (const Bits& sub : additive_subgroups(ring)) {
        bool absorbed = true;
        for (int h = 0; absorbed && h < n; ++h) {
            if (!sub.test(std::size_t(h))) continue;
            for (int r = 0; absorbed && r < n; ++r) {
                if (left && !sub.test(std::size_t(ring.mul(r, h)))) absorbed = false;
                if (right && !sub.test(std::size_t(ring.mul(h, r)))) absorbed = false;
            }
        }
        if (absorbed) out.insert(sub);
    }
    return out;
}

NilpotencyFacts nilpotency_by_products(const nilring::FiniteRing& ring,
                                       const std::vector<int>& members) {
    const int n = ring.order();
    Bits zero_only{std::size_t(n)};
    zero_only.set(std::size_t(ring.zero()));
    Bits power{std::size_t(n)};
    for (int m : members) power.set(std::size_t(m));
    if (power == zero_only) return {true, 1};
    int k = 1;
    while (true) {
        Bits raw{std::size_t(n)};
        for (int a = 0; a < n; ++a) {
            if (!power.test(std::size_t(a))) continue;
            for (int b : members) raw.set(std::size_t(ring.mul(a, b)));
        }
        const Bits next = additive_close(ring, std::move(raw));
        ++k;
        if (next == zero_only) return {true, k};
        if (next == power) return {false, 0};
        power = next;
    }
}

}  // namespace oracles
