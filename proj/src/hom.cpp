#include "nilring/hom.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "nilring/errors.hpp"

namespace nilring {

namespace {

int act(const FiniteRing& ring, bool left, int r, int x) {
    return left ? ring.mul(r, x) : ring.mul(x, r);
}

// Length of the ascending-scan additive generating chain: repeatedly adjoin
// the least element outside the subgroup built so far. Bounds the branch
// depth of the hom search from above.
int greedy_additive_rank(const FiniteRing& ring, const std::vector<int>& elems) {
    std::vector<char> in(ring.order(), 0);
    std::vector<int> members{ring.zero()};
    in[ring.zero()] = 1;
    int rank = 0;
    for (;;) {
        int pick = -1;
        for (int e : elems) {
            if (!in[e]) {
                pick = e;
                break;
            }
        }
        if (pick < 0) return rank;
        ++rank;
        std::vector<int> frontier{pick};
        while (!frontier.empty()) {
            int t = frontier.back();
            frontier.pop_back();
            if (in[t]) continue;
            in[t] = 1;
            members.push_back(t);
            for (int m : members) frontier.push_back(ring.add(t, m));
        }
    }
}

// Partially defined map with its domain in definition order.
struct PartialMap {
    std::vector<int> map;
    std::vector<int> domain;
};

// Defines x -> y and closes the assignment under addition and the module
// action. Returns false when that contradicts an existing entry or would
// raise an additive order.
bool define_module(const FiniteRing& ring, bool left, PartialMap& st, int x, int y) {
    std::vector<std::pair<int, int>> pending{{x, y}};
    while (!pending.empty()) {
        auto [px, py] = pending.back();
        pending.pop_back();
        if (st.map[px] != -1) {
            if (st.map[px] != py) return false;
            continue;
        }
        if (ring.additive_order(px) % ring.additive_order(py) != 0) return false;
        st.map[px] = py;
        pending.emplace_back(ring.add(px, px), ring.add(py, py));
        for (int d : st.domain) pending.emplace_back(ring.add(px, d), ring.add(py, st.map[d]));
        for (int r = 0; r < ring.order(); ++r)
            pending.emplace_back(act(ring, left, r, px), act(ring, left, r, py));
        st.domain.push_back(px);
    }
    return true;
}

// Same closure for ring maps: addition and both-sided products.
bool define_ring_map(const FiniteRing& ring, PartialMap& st, int x, int y) {
    std::vector<std::pair<int, int>> pending{{x, y}};
    while (!pending.empty()) {
        auto [px, py] = pending.back();
        pending.pop_back();
        if (st.map[px] != -1) {
            if (st.map[px] != py) return false;
            continue;
        }
        if (ring.additive_order(px) % ring.additive_order(py) != 0) return false;
        st.map[px] = py;
        pending.emplace_back(ring.add(px, px), ring.add(py, py));
        pending.emplace_back(ring.mul(px, px), ring.mul(py, py));
        for (int d : st.domain) {
            pending.emplace_back(ring.add(px, d), ring.add(py, st.map[d]));
            pending.emplace_back(ring.mul(px, d), ring.mul(py, st.map[d]));
            pending.emplace_back(ring.mul(d, px), ring.mul(st.map[d], py));
        }
        st.domain.push_back(px);
    }
    return true;
}

bool module_map_valid(const FiniteRing& ring, const Ideal& source, const Ideal& target,
                      const std::vector<int>& map, std::string* why) {
    if (int(map.size()) != ring.order()) {
        if (why) *why = "table length differs from the ring order";
        return false;
    }
    for (int x = 0; x < ring.order(); ++x) {
        if (!source.contains(x)) {
            if (map[x] != -1) {
                if (why) *why = "table must be -1 outside the source ideal";
                return false;
            }
            continue;
        }
        if (map[x] < 0 || map[x] >= ring.order() || !target.contains(map[x])) {
            if (why)
                *why = "image of " + ring.element_names()[x] + " lies outside the target ideal";
            return false;
        }
    }
    for (int x : source.elements()) {
        for (int y : source.elements()) {
            if (map[ring.add(x, y)] != ring.add(map[x], map[y])) {
                if (why)
                    *why = "not additive at (" + ring.element_names()[x] + ", " +
                           ring.element_names()[y] + ")";
                return false;
            }
        }
    }
    const bool left = source.side() != Sidedness::right;
    for (int r = 0; r < ring.order(); ++r) {
        for (int x : source.elements()) {
            const int rx = act(ring, left, r, x);
            const int ry = act(ring, left, r, map[x]);
            if (map[rx] != ry) {
                if (why)
                    *why = "does not respect the action at (" + ring.element_names()[r] + ", " +
                           ring.element_names()[x] + ")";
                return false;
            }
        }
    }
    return true;
}

bool ring_map_valid(const FiniteRing& ring, const std::vector<int>& map) {
    for (int x = 0; x < ring.order(); ++x) {
        if (map[x] < 0 || map[x] >= ring.order()) return false;
        for (int y = 0; y < ring.order(); ++y) {
            if (map[ring.add(x, y)] != ring.add(map[x], map[y])) return false;
            if (map[ring.mul(x, y)] != ring.mul(map[x], map[y])) return false;
        }
    }
    return true;
}

// Size of the one-generator submodule (additive span of x and its action
// orbit); used to pick branch elements that force the most propagation.
std::vector<int> submodule_scores(const FiniteRing& ring, bool left,
                                  const std::vector<int>& elems) {
    std::vector<int> score(ring.order(), 0);
    for (int x : elems) {
        std::vector<char> in(ring.order(), 0);
        std::vector<int> members{ring.zero()};
        in[ring.zero()] = 1;
        std::vector<int> frontier{x};
        for (int r = 0; r < ring.order(); ++r) frontier.push_back(act(ring, left, r, x));
        while (!frontier.empty()) {
            int t = frontier.back();
            frontier.pop_back();
            if (in[t]) continue;
            in[t] = 1;
            members.push_back(t);
            for (int m : members) frontier.push_back(ring.add(t, m));
        }
        score[x] = int(members.size());
    }
    return score;
}

// Size of the one-generator subring, the analogous branch score for
// endomorphism search.
std::vector<int> subring_scores(const FiniteRing& ring) {
    std::vector<int> score(ring.order(), 0);
    for (int x = 0; x < ring.order(); ++x) {
        std::vector<char> in(ring.order(), 0);
        std::vector<int> members{ring.zero()};
        in[ring.zero()] = 1;
        std::vector<int> frontier{x};
        while (!frontier.empty()) {
            int t = frontier.back();
            frontier.pop_back();
            if (in[t]) continue;
            in[t] = 1;
            members.push_back(t);
            for (int m : members) {
                frontier.push_back(ring.add(t, m));
                frontier.push_back(ring.mul(t, m));
                frontier.push_back(ring.mul(m, t));
            }
        }
        score[x] = int(members.size());
    }
    return score;
}

}  // namespace

bool ModuleHom::injective() const {
    const int zero = source.ring()->zero();
    for (int x : source.elements())
        if (x != zero && map[x] == zero) return false;
    return true;
}

ModuleHom ModuleHom::checked(Ideal source, Ideal target, std::vector<int> map) {
    if (source.ring() != target.ring())
        throw MixedRing("module homomorphisms connect two ideals of one ring");
    if (source.side() != target.side())
        throw MixedSidedness("module homomorphisms need matching sidedness on both ideals");
    std::string why;
    if (!module_map_valid(*source.ring(), source, target, map, &why))
        throw InvalidParameter("not a module homomorphism: " + why);
    return ModuleHom{std::move(source), std::move(target), std::move(map)};
}

bool operator==(const ModuleHom& a, const ModuleHom& b) {
    return a.source == b.source && a.target == b.target && a.map == b.map;
}

std::vector<ModuleHom> enumerate_module_homs(const Ideal& source, const Ideal& target,
                                             const Caps& caps) {
    if (source.ring() != target.ring())
        throw MixedRing("module homomorphisms connect two ideals of one ring");
    if (source.side() != target.side())
        throw MixedSidedness("module homomorphisms need matching sidedness on both ideals");
    const FiniteRing& ring = *source.ring();
    if (target.size() > caps.hom_target_cap)
        throw CapExceeded("module hom target has " + std::to_string(target.size()) +
                          " elements, above the cap of " + std::to_string(caps.hom_target_cap));
    const int rank = greedy_additive_rank(ring, source.elements());
    if (rank > caps.hom_rank_cap)
        throw CapExceeded("module hom source needs " + std::to_string(rank) +
                          " additive generators, above the cap of " +
                          std::to_string(caps.hom_rank_cap));

    const bool left = source.side() != Sidedness::right;
    const std::vector<int> score = submodule_scores(ring, left, source.elements());

    PartialMap root{std::vector<int>(ring.order(), -1), {}};
    if (!define_module(ring, left, root, ring.zero(), ring.zero()))
        throw InternalInconsistency("seeding 0 -> 0 failed in module hom search");

    std::vector<ModuleHom> out;
    std::function<void(const PartialMap&)> dfs = [&](const PartialMap& st) {
        int bx = -1;
        for (int x : source.elements()) {
            if (st.map[x] != -1) continue;
            if (bx == -1 || score[x] > score[bx]) bx = x;
        }
        if (bx == -1) {
            // candidates that survive propagation still face the exhaustive
            // check; failures are dropped, not errors
            if (module_map_valid(ring, source, target, st.map, nullptr))
                out.push_back(ModuleHom::checked(source, target, st.map));
            return;
        }
        for (int c : target.elements()) {
            if (ring.additive_order(bx) % ring.additive_order(c) != 0) continue;
            PartialMap next = st;
            if (define_module(ring, left, next, bx, c)) dfs(next);
        }
    };
    dfs(root);
    std::sort(out.begin(), out.end(),
              [](const ModuleHom& a, const ModuleHom& b) { return a.map < b.map; });
    return out;
}

std::vector<RingHom> enumerate_ring_endomorphisms(const RingPtr& ring, bool unital,
                                                  const Caps& caps) {
    if (!ring) throw InvalidParameter("enumerate_ring_endomorphisms needs a ring");
    const FiniteRing& R = *ring;
    if (R.order() > caps.endo_cap)
        throw CapExceeded("ring has " + std::to_string(R.order()) +
                          " elements, above the endomorphism enumeration cap of " +
                          std::to_string(caps.endo_cap));
    const std::vector<int> score = subring_scores(R);

    PartialMap root{std::vector<int>(R.order(), -1), {}};
    if (!define_ring_map(R, root, R.zero(), R.zero()))
        throw InternalInconsistency("seeding 0 -> 0 failed in endomorphism search");
    if (unital && !define_ring_map(R, root, R.one(), R.one()))
        throw InternalInconsistency("seeding 1 -> 1 failed in endomorphism search");

    std::vector<RingHom> out;
    std::function<void(const PartialMap&)> dfs = [&](const PartialMap& st) {
        int bx = -1;
        for (int x = 0; x < R.order(); ++x) {
            if (st.map[x] != -1) continue;
            if (bx == -1 || score[x] > score[bx]) bx = x;
        }
        if (bx == -1) {
            if (ring_map_valid(R, st.map)) {
                RingHom f = RingHom::checked(ring, ring, st.map);
                if (!unital || f.unital) out.push_back(std::move(f));
            }
            return;
        }
        for (int c = 0; c < R.order(); ++c) {
            if (R.additive_order(bx) % R.additive_order(c) != 0) continue;
            PartialMap next = st;
            if (define_ring_map(R, next, bx, c)) dfs(next);
        }
    };
    dfs(root);
    std::sort(out.begin(), out.end(),
              [](const RingHom& a, const RingHom& b) { return a.map < b.map; });
    return out;
}

Ideal preimage_ideal(const RingHom& f, const Ideal& target_ideal) {
    if (f.target != target_ideal.ring())
        throw MixedRing("the ideal must live in the homomorphism's target ring");
    const FiniteRing& S = *f.source;
    boost::dynamic_bitset<> bits(S.order());
    for (int x = 0; x < S.order(); ++x)
        if (target_ideal.contains(f.map[x])) bits.set(x);
    return canonicalize_generators(
        Ideal::from_members(f.source, target_ideal.side(), bits));
}

Ideal kernel_ideal(const ModuleHom& f) {
    const FiniteRing& ring = *f.source.ring();
    boost::dynamic_bitset<> bits(ring.order());
    for (int x : f.source.elements())
        if (f.map[x] == ring.zero()) bits.set(x);
    return canonicalize_generators(Ideal::from_members(f.source.ring(), f.source.side(), bits));
}

Ideal image_ideal(const ModuleHom& f) {
    const FiniteRing& ring = *f.source.ring();
    boost::dynamic_bitset<> bits(ring.order());
    for (int x : f.source.elements()) bits.set(f.map[x]);
    return canonicalize_generators(Ideal::from_members(f.source.ring(), f.source.side(), bits));
}

EssentialityVerdict is_nil_essential_mono(const ModuleHom& f, const LatticeAnalysis& analysis) {
    if (analysis.ring() != f.source.ring())
        throw MixedRing("lattice analysis covers a different ring than the map");
    if (analysis.lattice().side != f.source.side())
        throw MixedSidedness("lattice analysis sidedness differs from the map's");
    if (!f.injective()) throw NotMono("module homomorphism has a nonzero kernel");
    const int img = analysis.lattice().index_of(image_ideal(f));
    const int tgt = analysis.lattice().index_of(f.target);
    return analysis.nil_essential_within(img, tgt);
}

KernelCollection collect_hom_kernels(const LatticeAnalysis& analysis, int j, const Caps& caps) {
    const IdealLattice& lat = analysis.lattice();
    if (j < 0 || j >= lat.size()) throw InvalidParameter("lattice index out of range");
    KernelCollection out;
    out.source_index = j;
    const Ideal& source = lat.ideals[j];
    for (int k = 0; k < lat.size(); ++k) {
        std::vector<ModuleHom> homs;
        try {
            homs = enumerate_module_homs(source, lat.ideals[k], caps);
        } catch (const CapExceeded& e) {
            out.cap_hit = true;
            if (out.cap_reason.empty()) out.cap_reason = e.what();
            continue;
        }
        out.hom_count += long(homs.size());
        for (const ModuleHom& f : homs) {
            const int ki = lat.index_of(kernel_ideal(f));
            const bool seen = std::any_of(out.entries.begin(), out.entries.end(),
                                          [&](const KernelCollection::Entry& e) {
                                              return e.kernel_index == ki;
                                          });
            if (!seen) out.entries.push_back({ki, k, f.map});
        }
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const KernelCollection::Entry& a, const KernelCollection::Entry& b) {
                  return a.kernel_index < b.kernel_index;
              });
    return out;
}

MonoCharacterization check_mono_characterization(const LatticeAnalysis& analysis, int i, int j,
                                                 const KernelCollection& kernels) {
    if (kernels.source_index != j)
        throw InvalidParameter("kernel collection was built for a different ideal");
    if (!analysis.leq(i, j))
        throw InvalidParameter("the first ideal must be contained in the second");
    MonoCharacterization out;
    out.clause_containment = analysis.nil_essential_within(i, j).holds;

    const Ideal& small = analysis.ideal(i);
    const Ideal& big = analysis.ideal(j);
    std::vector<int> inc(analysis.ring()->order(), -1);
    for (int x : small.elements()) inc[x] = x;
    const ModuleHom inclusion = ModuleHom::checked(small, big, std::move(inc));
    out.clause_inclusion_mono = is_nil_essential_mono(inclusion, analysis).holds;

    out.cap_hit = kernels.cap_hit;
    out.cap_reason = kernels.cap_reason;
    out.clause_kernels = true;
    for (const KernelCollection::Entry& e : kernels.entries) {
        if (analysis.intersection_index(e.kernel_index, i) == analysis.zero_index() &&
            !analysis.nilpotent(e.kernel_index)) {
            out.clause_kernels = false;
            out.witness_kernel_index = e.kernel_index;
            out.witness_target_index = e.target_index;
            out.witness_map = e.example_map;
            break;
        }
    }
    out.agree = out.clause_containment == out.clause_inclusion_mono &&
                out.clause_containment == out.clause_kernels;
    return out;
}

MonoCharacterization check_mono_characterization(const LatticeAnalysis& analysis, int i, int j,
                                                 const Caps& caps) {
    return check_mono_characterization(analysis, i, j, collect_hom_kernels(analysis, j, caps));
}

}  // namespace nilring
