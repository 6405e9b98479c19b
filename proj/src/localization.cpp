#include "nilring/localization.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "nilring/errors.hpp"

namespace nilring {

namespace {

std::string factor_chain(const FiniteRing& ring, const std::vector<int>& factors) {
    if (factors.empty()) return ring.element_names()[ring.one()] + " = 0";
    std::string out;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " * ";
        out += ring.element_names()[factors[i]];
    }
    return out + " = 0";
}

}  // namespace

std::string MultiplicativeSet::display() const {
    std::string out = "{";
    for (size_t i = 0; i < members.size(); ++i) {
        if (i) out += ",";
        out += ring->element_names()[members[i]];
    }
    return out + "}";
}

MultiplicativeSet multiplicative_closure(const RingPtr& ring, std::vector<int> seed) {
    if (!ring) throw InvalidParameter("multiplicative_closure needs a ring");
    if (!ring->commutative())
        throw NotCommutative("multiplicative sets are only formed over commutative rings");
    const FiniteRing& R = *ring;
    for (int s : seed)
        if (s < 0 || s >= R.order())
            throw InvalidParameter("seed element " + std::to_string(s) + " is out of range");
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());

    MultiplicativeSet out;
    out.ring = ring;
    out.seed = seed;
    out.bits.resize(R.order());
    // each closure member carries the seed factors whose product it is, so a
    // collision with 0 can report the offending product chain
    std::vector<std::vector<int>> factors(R.order());
    std::deque<std::pair<int, std::vector<int>>> frontier;
    frontier.emplace_back(R.one(), std::vector<int>{});
    for (int s : seed) frontier.emplace_back(s, std::vector<int>{s});
    while (!frontier.empty()) {
        auto [x, f] = frontier.front();
        frontier.pop_front();
        if (out.bits.test(x)) continue;
        if (x == R.zero()) throw ZeroInClosure(factor_chain(R, f));
        out.bits.set(x);
        out.members.push_back(x);
        factors[x] = f;
        const size_t before = out.members.size();
        for (size_t i = 0; i < before; ++i) {
            const int m = out.members[i];
            std::vector<int> nf = f;
            nf.insert(nf.end(), factors[m].begin(), factors[m].end());
            frontier.emplace_back(R.mul(x, m), std::move(nf));
        }
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

MultiplicativeSet non_zero_divisors(const RingPtr& ring) {
    if (!ring) throw InvalidParameter("non_zero_divisors needs a ring");
    if (!ring->commutative())
        throw NotCommutative("multiplicative sets are only formed over commutative rings");
    const FiniteRing& R = *ring;
    std::vector<int> members;
    for (int s = 0; s < R.order(); ++s) {
        bool nzd = true;
        for (int x = 0; x < R.order() && nzd; ++x)
            if (x != R.zero() && R.mul(s, x) == R.zero()) nzd = false;
        if (nzd) members.push_back(s);
    }
    return multiplicative_closure(ring, members);
}

std::vector<MultiplicativeSet> enumerate_multiplicative_sets(const RingPtr& ring) {
    if (!ring) throw InvalidParameter("enumerate_multiplicative_sets needs a ring");
    if (!ring->commutative())
        throw NotCommutative("multiplicative sets are only formed over commutative rings");
    const FiniteRing& R = *ring;
    if (R.order() == 1) return {};  // {1} would contain 0
    std::vector<MultiplicativeSet> out;
    std::set<boost::dynamic_bitset<>> seen;
    std::vector<MultiplicativeSet> queue{multiplicative_closure(ring, {})};
    seen.insert(queue.front().bits);
    while (!queue.empty()) {
        MultiplicativeSet s = std::move(queue.back());
        queue.pop_back();
        for (int e = 0; e < R.order(); ++e) {
            if (e == R.zero() || s.contains(e)) continue;
            std::vector<int> next_seed = s.members;
            next_seed.push_back(e);
            MultiplicativeSet bigger;
            try {
                bigger = multiplicative_closure(ring, std::move(next_seed));
            } catch (const ZeroInClosure&) {
                continue;
            }
            if (seen.insert(bigger.bits).second) queue.push_back(std::move(bigger));
        }
        s.seed = s.members;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const MultiplicativeSet& a, const MultiplicativeSet& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

LocalizedRing localize_ring(const RingPtr& ring, const MultiplicativeSet& s_set,
                            const Caps& caps) {
    if (!ring) throw InvalidParameter("localize_ring needs a ring");
    if (s_set.ring != ring) throw MixedRing("multiplicative set belongs to a different ring");
    if (!ring->commutative()) throw NotCommutative("localization needs a commutative ring");
    const FiniteRing& R = *ring;
    const int n = R.order();

    // the pair relation's kernel: elements killed by some member of S
    boost::dynamic_bitset<> kbits(n);
    for (int x = 0; x < n; ++x)
        for (int u : s_set.members)
            if (R.mul(u, x) == R.zero()) {
                kbits.set(x);
                break;
            }
    Ideal kernel = canonicalize_generators(Ideal::from_members(ring, Sidedness::two_sided, kbits));

    // saturation (sx in K forces x in K) is what makes the pair relation
    // transitive and the fraction arithmetic representative-independent
    for (int s : s_set.members)
        for (int x = 0; x < n; ++x)
            if (kernel.contains(R.mul(s, x)) && !kernel.contains(x))
                throw InternalInconsistency(
                    "localization kernel is not saturated under the multiplicative set");

    const int sc = s_set.size();
    std::vector<int> sidx(n, -1);
    for (int i = 0; i < sc; ++i) sidx[s_set.members[i]] = i;

    std::vector<int> pair_class(size_t(n) * sc, -1);
    std::vector<std::pair<int, int>> reps;
    for (int r = 0; r < n; ++r) {
        for (int si = 0; si < sc; ++si) {
            const int s = s_set.members[si];
            int cls = -1;
            for (int c = 0; c < int(reps.size()); ++c) {
                const auto& [r2, s2] = reps[c];
                if (kbits.test(R.sub(R.mul(r, s2), R.mul(r2, s)))) {
                    if (cls != -1)
                        throw InternalInconsistency(
                            "fraction pair matches two class representatives");
                    cls = c;
                }
            }
            if (cls == -1) {
                cls = int(reps.size());
                reps.emplace_back(r, s);
            }
            pair_class[size_t(r) * sc + si] = cls;
        }
    }
    const int m = int(reps.size());
    if (long(m) * kernel.size() != long(n))
        throw InternalInconsistency("localization class count disagrees with the kernel size");

    auto cls_of = [&](int r, int s) { return pair_class[size_t(r) * sc + sidx[s]]; };
    std::vector<std::uint16_t> add_t(size_t(m) * m), mul_t(size_t(m) * m);
    for (int a = 0; a < m; ++a) {
        const auto& [r1, s1] = reps[a];
        for (int b = 0; b < m; ++b) {
            const auto& [r2, s2] = reps[b];
            add_t[size_t(a) * m + b] =
                std::uint16_t(cls_of(R.add(R.mul(r1, s2), R.mul(r2, s1)), R.mul(s1, s2)));
            mul_t[size_t(a) * m + b] = std::uint16_t(cls_of(R.mul(r1, r2), R.mul(s1, s2)));
        }
    }
    std::vector<std::string> names(m);
    for (int c = 0; c < m; ++c)
        names[c] = R.element_names()[reps[c].first] + "/" + R.element_names()[reps[c].second];
    std::string tag = R.construction_tag() + "[";
    for (int i = 0; i < sc; ++i) {
        if (i) tag += ",";
        tag += R.element_names()[s_set.members[i]];
    }
    tag += "]";
    RingPtr result = FiniteRing::create(std::move(add_t), std::move(mul_t),
                                        cls_of(R.zero(), R.one()), cls_of(R.one(), R.one()),
                                        std::move(names), std::move(tag), caps);

    std::vector<int> canon(n);
    for (int r = 0; r < n; ++r) canon[r] = cls_of(r, R.one());
    RingHom canonical = RingHom::checked(ring, result, std::move(canon));
    if (!canonical.unital)
        throw InternalInconsistency("canonical localization map is not unital");
    for (int x = 0; x < n; ++x)
        if ((canonical.map[x] == result->zero()) != kernel.contains(x))
            throw InternalInconsistency("canonical map kernel differs from the pair kernel");
    for (int s : s_set.members)
        if (!result->unit(canonical.map[s]))
            throw InternalInconsistency("a multiplicative set member fails to become a unit");

    return LocalizedRing{ring, s_set, result, std::move(canonical), std::move(reps),
                         std::move(kernel)};
}

Ideal localize_ideal(const LocalizedRing& loc, const Ideal& ideal) {
    if (ideal.ring() != loc.base)
        throw MixedRing("ideal belongs to a different ring than the localization");
    std::vector<int> images;
    for (int x : ideal.elements()) images.push_back(loc.canonical.map[x]);
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return canonicalize_generators(generate_ideal(loc.result, images, Sidedness::two_sided));
}

}  // namespace nilring
