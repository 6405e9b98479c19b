#pragma once

#include <array>
#include <string>
#include <vector>

#include "nilring/registry.hpp"

namespace nilring {

/// Output shaping shared by all commands. Text and JSON carry the same
/// facts; timings are opt-in so that default reports are byte-stable
/// across runs and worker counts.
struct ReportOptions {
    std::string format = "text";  // "text" or "json"
    bool timings = false;
};

// --- ring description -------------------------------------------------------

struct RingDescription {
    std::string spec;
    std::string tag;
    int order = 0;
    bool commutative = false;
    std::string sidedness;  // lattice sidedness the facts below use
    int ideal_count = 0;
    std::vector<std::string> units;
    std::vector<std::string> idempotents;
    bool has_nilradical = false;  // commutative rings only
    std::string nilradical;
    std::string jacobson_radical;
    std::string socle;
    bool semisimple = false;
};

RingDescription describe_ring(RingContext& context);
std::string render_description(const RingDescription& d,
                               const ReportOptions& opt);

// --- ideal lattice listing --------------------------------------------------

struct IdealRow {
    int index = 0;
    std::string display;
    int size = 0;
    std::vector<std::string> generators;
    bool nil = false;
    bool nilpotent = false;
    int nilpotency_index = 0;  // 0 when not nilpotent
    bool minimal = false;
    bool maximal = false;
    bool essential = false;
    bool nil_essential = false;
    /// Canonically first defeating ideal when a verdict fails ("" if holds).
    std::string essential_witness;
    std::string nil_essential_witness;
};

std::vector<IdealRow> ideal_rows(const LatticeAnalysis& analysis);
std::string render_ideal_rows(const std::string& spec,
                              const std::string& sidedness,
                              const std::vector<IdealRow>& rows,
                              const ReportOptions& opt);

// --- localization report ----------------------------------------------------

struct LocalizationRow {
    std::string base_display;
    std::string localized_display;
    bool base_nil_essential = false;
    bool localized_nil_essential = false;
};

struct LocalizationReport {
    std::string spec;
    std::vector<std::string> inverted;     // requested elements
    std::string set_display;               // full multiplicative closure
    std::vector<std::string> set_members;
    std::string kernel_display;
    std::vector<std::string> kernel_generators;
    int base_order = 0;
    int result_order = 0;
    /// base element name -> image name under the canonical map x -> x/1
    std::vector<std::array<std::string, 2>> canonical_map;
    std::vector<LocalizationRow> rows;
};

/// Builds the report for the localization of `context`'s ring at the
/// multiplicative closure of `seed`. Throws ZeroInClosure / NotCommutative
/// like the underlying construction.
LocalizationReport localize_report(RingContext& context,
                                   const std::vector<int>& seed);
std::string render_localization(const LocalizationReport& rep,
                                const ReportOptions& opt);

// --- check / suite / hunt reports -------------------------------------------

std::string render_reports(const std::vector<CheckReport>& reports,
                           const ReportOptions& opt);
std::string render_hunt(const HuntResult& hunt, const ReportOptions& opt);

}  // namespace nilring
