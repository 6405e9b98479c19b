#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilring/predicates.hpp"

namespace nilring {

/// An additive map between two ideals of one ring that commutes with the
/// module action of their sidedness (left action for left and two-sided
/// ideals, right action for right ideals). `map` is indexed by ring element;
/// entries outside the source are -1.
struct ModuleHom {
    Ideal source;
    Ideal target;
    std::vector<int> map;

    int operator()(int x) const { return map[x]; }
    bool injective() const;

    /// Exhaustively verifies additivity and action-compatibility; throws
    /// InvalidParameter if the table is not a module homomorphism.
    static ModuleHom checked(Ideal source, Ideal target, std::vector<int> map);
};

bool operator==(const ModuleHom& a, const ModuleHom& b);

/// All module homomorphisms source -> target, found by assigning images to a
/// branch chain of module generators with full closure propagation, then
/// filtering through the exhaustive check. Deterministic order (map tables
/// ascending lexicographically).
std::vector<ModuleHom> enumerate_module_homs(const Ideal& source, const Ideal& target,
                                             const Caps& caps = {});

/// All ring endomorphisms of the ring (images of a generator chain with
/// additive/multiplicative closure propagation, exhaustively verified).
/// unital = true keeps only maps fixing 1.
std::vector<RingHom> enumerate_ring_endomorphisms(const RingPtr& ring, bool unital,
                                                  const Caps& caps = {});

/// {x : f(x) in J} for a ring homomorphism f; an ideal of the source with the
/// same sidedness as J.
Ideal preimage_ideal(const RingHom& f, const Ideal& target_ideal);

Ideal kernel_ideal(const ModuleHom& f);
Ideal image_ideal(const ModuleHom& f);

/// Whether an injective module map's image is nil-essential inside its
/// target. `analysis` must be over the matching lattice (same ring and
/// sidedness). Throws NotMono when the map is not injective.
EssentialityVerdict is_nil_essential_mono(const ModuleHom& f,
                                          const LatticeAnalysis& analysis);

/// The distinct kernels arising from Hom(J, K) as K runs over the whole
/// lattice, with one example hom per kernel (for witness reporting). When a
/// hom enumeration trips a cap, the collection is marked partial.
struct KernelCollection {
    int source_index = -1;  // J's lattice index
    struct Entry {
        int kernel_index;        // lattice index of the kernel
        int target_index;        // K it first arose from
        std::vector<int> example_map;
    };
    std::vector<Entry> entries;  // ordered by kernel lattice index
    long hom_count = 0;
    bool cap_hit = false;
    std::string cap_reason;
};
KernelCollection collect_hom_kernels(const LatticeAnalysis& analysis, int j,
                                     const Caps& caps = {});

/// Clause-by-clause evaluation of the three-way equivalence for I <= J:
///   (1) I is nil-essential in J,
///   (2) the inclusion I -> J is a nil-essential monomorphism,
///   (3) every f in Hom(J, K), for every ideal K, whose kernel meets I
///       trivially has nilpotent kernel.
struct MonoCharacterization {
    bool clause_containment = false;
    bool clause_inclusion_mono = false;
    bool clause_kernels = false;
    bool agree = false;
    bool cap_hit = false;  // clause (3) could not be fully enumerated
    std::string cap_reason;
    /// When clause (3) is the odd one out: the kernel and an f realizing it.
    int witness_kernel_index = -1;
    int witness_target_index = -1;
    std::vector<int> witness_map;
};
MonoCharacterization check_mono_characterization(const LatticeAnalysis& analysis, int i,
                                                 int j, const KernelCollection& kernels);
MonoCharacterization check_mono_characterization(const LatticeAnalysis& analysis, int i,
                                                 int j, const Caps& caps = {});

}  // namespace nilring
