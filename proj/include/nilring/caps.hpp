#pragma once

namespace nilring {

/// Enumeration guards. Constructors and enumerators refuse work beyond these
/// limits with CapExceeded rather than running away.
struct Caps {
    /// Largest ring order any constructor will build.
    int max_order = 4096;
    /// Largest ring order for which endomorphisms are enumerated.
    int endo_cap = 256;
    /// Largest additive rank of the source ideal for module-hom enumeration.
    int hom_rank_cap = 4;
    /// Largest target ideal size for module-hom enumeration.
    int hom_target_cap = 64;
    /// Default instance budget for counterexample hunts.
    long hunt_budget = 100000;
};

}  // namespace nilring
