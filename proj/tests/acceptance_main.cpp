// Acceptance gate: one self-contained scenario per shipped guarantee, each
// printed as a single PASS/FAIL line. The process exit code is the number of
// failing criteria, so this binary doubles as a ctest entry.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nilring/registry.hpp"
#include "nilring/report_io.hpp"
#include "oracles.hpp"

using namespace nilring;

namespace {

struct Failure {
    std::string message;
};

void demand(bool condition, const std::string& message) {
    if (!condition) throw Failure{message};
}

LatticeAnalysis analyze(const RingPtr& ring, Sidedness side) {
    return LatticeAnalysis(enumerate_ideals(ring, side), kernels::Mode::serial);
}

// --- criterion 1: the order-16 upper-triangular ring's left lattice --------

void left_lattice_of_ut3_2() {
    const RingPtr ring = make_ut3_ring(2);
    const LatticeAnalysis an = analyze(ring, Sidedness::left);
    demand(an.count() == 9, "expected exactly 9 left ideals, got " +
                                std::to_string(an.count()));

    auto members = [&](const std::vector<Ut3Coords>& coords) {
        boost::dynamic_bitset<> bits(std::size_t(ring->order()));
        for (const Ut3Coords& c : coords) bits.set(std::size_t(ut3_index(2, c)));
        return bits;
    };
    // the nine left ideals by coordinate pattern (a, b, c, d)
    std::vector<boost::dynamic_bitset<>> expected;
    boost::dynamic_bitset<> all(std::size_t(ring->order()));
    all.set();
    expected.push_back(all);                                         // whole ring
    expected.push_back(members({{0, 0, 0, 0}}));                     // zero
    expected.push_back(members({{0, 0, 0, 0}, {0, 0, 1, 0}}));       // c-line
    expected.push_back(members({{0, 0, 0, 0}, {0, 1, 0, 0}}));       // b-line
    expected.push_back(members(
        {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 1, 0}}));  // bc-plane
    expected.push_back(members(
        {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}}));  // cd-plane
    expected.push_back(members({{0, 0, 0, 0}, {0, 1, 1, 0}}));       // b=c line
    std::vector<Ut3Coords> cube;
    for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
            for (int d = 0; d < 2; ++d) cube.push_back({0, b, c, d});
    expected.push_back(members(cube));                               // strict upper
    expected.push_back(members(
        {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 1, 1, 1}}));  // b=d plane

    std::vector<int> where;
    for (const auto& want : expected) {
        int found = -1;
        for (int i = 0; i < an.count(); ++i)
            if (an.ideal(i).membership() == want) found = i;
        demand(found >= 0, "an expected left ideal is missing from the lattice");
        where.push_back(found);
    }
    std::set<int> distinct(where.begin(), where.end());
    demand(int(distinct.size()) == an.count(),
           "the nine patterns must exhaust the lattice");

    const int zero = where[1], c_line = where[2], b_line = where[3],
              bc_plane = where[4], b_eq_c = where[6], strict_upper = where[7];
    demand(an.nil_essential(c_line).holds && !an.essential(c_line).holds,
           "the c-line must be nil-essential but not essential");
    demand(an.nil_essential(b_line).holds && !an.essential(b_line).holds,
           "the b-line must be nil-essential but not essential");

    std::vector<int> trivial;
    for (int mu = 0; mu < an.count(); ++mu)
        if (an.intersection_index(c_line, mu) == an.zero_index()) trivial.push_back(mu);
    std::vector<int> expected_trivial = {zero, b_line, b_eq_c};
    std::sort(expected_trivial.begin(), expected_trivial.end());
    demand(trivial == expected_trivial,
           "the ideals meeting the c-line trivially must be the zero ideal, "
           "the b-line, and the b=c line");

    int ne = 0, essential = 0;
    for (int i = 0; i < an.count(); ++i) {
        if (an.nil_essential(i).holds) ++ne;
        if (an.essential(i).holds) ++essential;
    }
    demand(ne == 8 && !an.nil_essential(zero).holds,
           "exactly the eight nonzero left ideals must be nil-essential");
    std::vector<int> essential_set;
    for (int i = 0; i < an.count(); ++i)
        if (an.essential(i).holds) essential_set.push_back(i);
    std::vector<int> expected_essential = {bc_plane, strict_upper, an.ring_index()};
    std::sort(expected_essential.begin(), expected_essential.end());
    demand(essential_set == expected_essential,
           "the essential left ideals must be the bc-plane, the strictly "
           "upper cube, and the whole ring");
}

// --- criterion 2: both existence checks confirm on ut3:2 -------------------

void existence_checks_on_ut3_2() {
    RingContext ctx(CorpusEntry{RingSpec::ut3(2), Caps{}});
    for (const char* id : {"X202", "X205"}) {
        const CheckReport report = run_check(id, ctx);
        demand(report.status == CheckStatus::verified,
               std::string(id) + " did not confirm on ut3:2: " + report.note);
        demand(!report.witness.empty(), std::string(id) + " reported no witness");
    }
}

// --- criterion 3: the integers mod 12, cross-checked by oracles ------------

void invariants_of_z12() {
    const RingPtr r = make_cyclic_ring(12);
    const LatticeAnalysis an = analyze(r, Sidedness::two_sided);
    demand(an.count() == 6, "the integers mod 12 must have 6 ideals");

    std::set<boost::dynamic_bitset<>> got;
    for (int i = 0; i < an.count(); ++i) got.insert(an.ideal(i).membership());
    demand(got == oracles::ideals_by_subgroup_scan(*r, Sidedness::two_sided),
           "lattice disagrees with the subgroup-scan oracle");

    std::set<std::string> nilpotent, essential, nil_essential;
    for (int i = 0; i < an.count(); ++i) {
        const auto facts = oracles::nilpotency_by_products(*r, an.ideal(i).elements());
        demand(facts.nilpotent == an.nilpotent(i) &&
                   facts.index == an.nilpotency(i).index,
               "nilpotency disagrees with the product oracle at " +
                   an.ideal(i).display());
        if (an.nilpotent(i)) nilpotent.insert(an.ideal(i).display());
        if (an.essential(i).holds) essential.insert(an.ideal(i).display());
        if (an.nil_essential(i).holds) nil_essential.insert(an.ideal(i).display());
    }
    demand(nilpotent == std::set<std::string>{"(0)", "(6)"},
           "nilpotent ideals must be (0) and (6)");
    demand(essential == std::set<std::string>{"(2)", "R"},
           "essential ideals must be (2) and the whole ring");
    demand(nil_essential == essential,
           "nil-essential and essential ideals must coincide here");

    demand(socle(an).display() == "(2)", "socle must be (2)");
    demand(jacobson_radical(an).display() == "(6)", "radical must be (6)");
    const Ideal i4 = principal_ideal(r, 4, Sidedness::two_sided);
    const Ideal i2 = principal_ideal(r, 2, Sidedness::two_sided);
    demand(radical_of_ideal(i4) == i2, "rad((4)) must be (2)");
    demand(ideal_quotient(i4, 2) == i2, "((4) : 2) must be (2)");
}

// --- criterion 4: element criterion vs lattice scan, whole corpus ----------

void element_criterion_agreement() {
    for (const CorpusEntry& entry : default_corpus().entries) {
        const RingPtr ring = entry.spec.build(entry.caps);
        if (!ring->commutative()) continue;
        const LatticeAnalysis an = analyze(ring, Sidedness::two_sided);
        for (int i = 1; i < an.count(); ++i) {
            const auto verdict = nil_essential_element_criterion(an.ideal(i));
            demand(verdict.holds == an.nil_essential(i).holds,
                   "criterion mismatch at " + an.ideal(i).display() + " of " +
                       entry.spec.to_string());
        }
    }
}

// --- criterion 5: the full suite is refutation-free ------------------------

void full_suite_is_clean() {
    const auto reports = run_suite(default_corpus(), {}, 4);
    demand(reports.size() == 45 * registry().size(),
           "suite must cover every (ring, check) pair");
    std::set<std::string> confirmed_existence;
    for (const CheckReport& report : reports) {
        demand(report.status != CheckStatus::refuted,
               report.check_id + " was refuted on " + report.ring);
        if (report.status == CheckStatus::skipped)
            demand(!report.note.empty(),
                   report.check_id + " skipped without a reason on " + report.ring);
        if (report.status == CheckStatus::verified &&
            report.check_id[0] == 'X')
            confirmed_existence.insert(report.check_id);
    }
    demand(confirmed_existence == std::set<std::string>{"X202", "X205", "X223"},
           "every existence check must confirm somewhere in the corpus");
}

// --- criterion 6: localization checks ---------------------------------------

void localization_checks() {
    const HuntResult hunt = hunt_counterexample("X223", default_corpus(), 100000);
    demand(hunt.found, "the localization counterexample hunt came up empty");
    demand(hunt.ring == "cyclic:6", "the first witness must live in Z/6");
    demand(hunt.instances <= 100000, "hunt exceeded its budget");
    const std::string joined = [&] {
        std::string s;
        for (const auto& w : hunt.witness) s += w + "; ";
        return s;
    }();
    demand(joined.find("{1,3}") != std::string::npos &&
               joined.find("I = (3)") != std::string::npos,
           "unexpected hunt witness: " + joined);

    for (const CorpusEntry& entry : default_corpus().entries) {
        const RingPtr ring = entry.spec.build(entry.caps);
        if (!ring->commutative()) continue;
        RingContext ctx(entry);
        const CheckReport report = run_check("P222", ctx);
        if (ring->order() == 1) {
            demand(report.status == CheckStatus::skipped,
                   "the zero ring admits no localization");
            continue;
        }
        demand(report.status == CheckStatus::verified,
               "P222 must verify on " + entry.spec.to_string() + ": " + report.note);
    }

    for (const char* spec : {"cyclic:8", "cyclic:27"}) {
        RingContext ctx(CorpusEntry{RingSpec::parse(spec), Caps{}});
        const CheckReport report = run_check("E224", ctx);
        demand(report.status == CheckStatus::verified,
               std::string("E224 must verify on ") + spec + ": " + report.note);
    }
}

// --- criterion 7: enumeration vs oracle, all rings, all sidednesses --------

void enumeration_matches_oracle() {
    for (const CorpusEntry& entry : default_corpus().entries) {
        const RingPtr ring = entry.spec.build(entry.caps);
        if (ring->order() > 64) continue;
        for (const Sidedness side :
             {Sidedness::left, Sidedness::right, Sidedness::two_sided}) {
            const IdealLattice lattice = enumerate_ideals(ring, side);
            std::set<boost::dynamic_bitset<>> got;
            for (const Ideal& ideal : lattice.ideals) got.insert(ideal.membership());
            demand(got.size() == lattice.ideals.size(),
                   "duplicate ideals in " + entry.spec.to_string());
            demand(got == oracles::ideals_by_subgroup_scan(*ring, side),
                   "enumeration disagrees with the subgroup scan on " +
                       entry.spec.to_string() + " (" + to_string(side) + ")");
        }
    }
}

// --- criterion 8: suite output is byte-identical across worker counts ------

void suite_output_is_deterministic() {
    ReportOptions opt;
    opt.format = "json";
    const std::string serial = render_reports(run_suite(default_corpus(), {}, 1), opt);
    const std::string threaded =
        render_reports(run_suite(default_corpus(), {}, 4), opt);
    demand(serial == threaded,
           "suite JSON must not depend on the worker count");
    demand(!serial.empty() && serial.find("\"reports\"") != std::string::npos,
           "suite JSON looks malformed");
}

struct Criterion {
    int number;
    std::string label;
    double budget_seconds;  // 0 = untimed
    std::function<void()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "left ideal lattice of ut3:2", 1.0, left_lattice_of_ut3_2},
        {2, "existence checks confirm on ut3:2", 1.0, existence_checks_on_ut3_2},
        {3, "invariants of the integers mod 12", 1.0, invariants_of_z12},
        {4, "element criterion agreement over the corpus", 10.0,
         element_criterion_agreement},
        {5, "full suite over the default corpus", 60.0, full_suite_is_clean},
        {6, "localization hunt, transfer, and prime-power survey", 10.0,
         localization_checks},
        {7, "ideal enumeration against the subgroup-scan oracle", 0.0,
         enumeration_matches_oracle},
        {8, "suite output independent of worker count", 0.0,
         suite_output_is_deterministic},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            criterion.body();
        } catch (const Failure& f) {
            error = f.message;
        } catch (const std::exception& e) {
            error = std::string("unexpected exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (error.empty() && criterion.budget_seconds > 0 &&
            seconds > criterion.budget_seconds) {
            std::ostringstream msg;
            msg.setf(std::ios::fixed);
            msg.precision(2);
            msg << "exceeded the " << criterion.budget_seconds << "s budget";
            error = msg.str();
        }
        std::printf("%s criterion %d: %s (%.2fs)\n",
                    error.empty() ? "PASS" : "FAIL", criterion.number,
                    criterion.label.c_str(), seconds);
        if (!error.empty()) {
            std::printf("     %s\n", error.c_str());
            ++failures;
        }
    }
    return failures;
}
