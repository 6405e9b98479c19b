#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilring/corpus.hpp"
#include "nilring/hom.hpp"
#include "nilring/localization.hpp"
#include "nilring/predicates.hpp"

namespace nilring {

/// Outcome of running one registered claim against one ring.
///   verified  - every instance of the claim held (or, for existence claims,
///               a witness was found and re-verified).
///   refuted   - a concrete counterexample to the claim was found; the
///               witness lines reproduce it.
///   skipped   - the ring does not satisfy the claim's hypotheses (wrong
///               commutativity, wrong shape, zero ring) or a configured cap
///               was hit; the note says which.
enum class CheckStatus { verified, refuted, skipped };

std::string to_string(CheckStatus status);

/// One registered claim.
struct CheckInfo {
    std::string id;       // e.g. "P201", "X205", "R211a"
    std::string summary;  // one-line statement of what is being checked
};

/// The full claim registry, in fixed execution/report order.
const std::vector<CheckInfo>& registry();

/// Lookup by id; throws InvalidParameter for unknown ids.
const CheckInfo& registry_entry(const std::string& id);

bool is_registered_check(const std::string& id);

/// Claims that are deliberately not executable, with the reason.
struct OutOfScopeClaim {
    std::string id;
    std::string reason;
};
const std::vector<OutOfScopeClaim>& out_of_scope_claims();

/// Result of one check on one ring.
struct CheckReport {
    std::string check_id;
    std::string ring;       // ring spec string, e.g. "ut3:2"
    std::string sidedness;  // "two-sided" or "left"
    CheckStatus status = CheckStatus::skipped;
    /// Human-readable amplification: what was confirmed, why skipped, or
    /// what the counterexample means.
    std::string note;
    /// "key = value" lines that let a reader replay the decisive instance.
    std::vector<std::string> witness;
    /// Number of claim instances evaluated on this ring.
    long instances = 0;
    /// Wall-clock time; excluded from serialized reports unless requested.
    double elapsed_ms = 0.0;
};

/// Verdicts for one localization S^-1 R of a commutative ring, aligned with
/// the base ideal lattice: entry i describes S^-1 I_i.
struct LocalizationFacts {
    std::string set_display;        // e.g. "{1,3}"
    std::vector<int> set_members;
    int kernel_index = 0;           // lattice index of ker(R -> S^-1 R)
    int result_order = 0;
    std::vector<std::string> localized_display;  // display of S^-1 I_i
    std::vector<char> localized_nil_essential;   // NE(S^-1 I_i) in S^-1 R
};

/// Everything the checks need about one corpus ring, built once and shared.
/// Expensive sub-surveys (endomorphisms, hom kernels, localizations) are
/// filled lazily on first use.
class RingContext {
public:
    explicit RingContext(const CorpusEntry& entry);

    const CorpusEntry& entry() const { return entry_; }
    const RingPtr& ring() const { return ring_; }
    Sidedness side() const { return side_; }
    std::string sidedness_name() const;
    const LatticeAnalysis& analysis() const { return analysis_; }

    /// nil_essential_within / essential_within for every comparable pair,
    /// precomputed. Only valid when leq(i, k).
    bool ne_within(int i, int k) const { return ne_within_[pos(i, k)] != 0; }
    bool ess_within(int i, int k) const { return ess_within_[pos(i, k)] != 0; }

    /// Unital ring endomorphisms (lazily enumerated; throws CapExceeded
    /// when the ring is larger than caps.endo_cap).
    const std::vector<RingHom>& unital_endomorphisms();

    /// Hom-kernel survey for source ideal j (lazy, cached per j).
    const KernelCollection& hom_kernels(int j);

    /// All multiplicative subsets (commutative rings; lazy).
    const std::vector<MultiplicativeSet>& multiplicative_sets();

    /// Localization verdicts for every multiplicative subset, aligned with
    /// multiplicative_sets(). Verdicts are computed once per distinct
    /// kernel ideal (they only depend on it) and each fresh kernel's
    /// verdicts are cross-checked against the matching quotient ring.
    const std::vector<LocalizationFacts>& localization_survey();

    /// Localization verdicts for one explicit set (used outside the survey).
    LocalizationFacts localize_and_classify(const MultiplicativeSet& set);

private:
    std::size_t pos(int i, int k) const {
        return std::size_t(i) * analysis_.count() + k;
    }
    LocalizationFacts facts_for_kernel(const MultiplicativeSet& set);

    CorpusEntry entry_;
    RingPtr ring_;
    Sidedness side_ = Sidedness::two_sided;
    LatticeAnalysis analysis_;
    std::vector<char> ne_within_, ess_within_;

    std::optional<std::vector<RingHom>> unital_endos_;
    std::map<int, KernelCollection> kernel_cache_;
    std::optional<std::vector<MultiplicativeSet>> mult_sets_;
    std::optional<std::vector<LocalizationFacts>> survey_;
    std::map<int, LocalizationFacts> kernel_verdicts_;
};

/// Run a single registered check. Throws InvalidParameter for unknown ids.
CheckReport run_check(const std::string& check_id, RingContext& context);

/// Run every registered check (or the given subset, in registry order)
/// against every corpus ring. Rings are processed in corpus order and may
/// be spread over `jobs` worker threads; the returned reports are always
/// in (corpus order) x (registry order), independent of `jobs`.
std::vector<CheckReport> run_suite(const Corpus& corpus,
                                   const std::vector<std::string>& selection,
                                   int jobs);

/// Counterexample hunt over a corpus.
struct HuntResult {
    std::string claim_id;
    long budget = 0;      // maximum instances to evaluate
    long instances = 0;   // instances actually evaluated
    int rings_searched = 0;
    bool found = false;
    std::string ring;     // spec string of the witnessing ring, if found
    std::vector<std::string> witness;
};

/// Claims that can be hunted: the existence claims plus the converse
/// directions that the implication checks deliberately do not assert.
const std::vector<CheckInfo>& huntable_claims();

/// Scan the corpus in order for a witness to `claim_id`, evaluating at most
/// `budget` instances. Throws InvalidParameter for unknown ids.
HuntResult hunt_counterexample(const std::string& claim_id,
                               const Corpus& corpus, long budget);

}  // namespace nilring
