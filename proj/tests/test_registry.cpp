#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "nilring/registry.hpp"

using namespace nilring;

namespace {

const std::vector<std::string>& registry_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const CheckInfo& info : registry()) out.push_back(info.id);
        return out;
    }();
    return ids;
}

std::map<std::string, CheckReport> run_all(const std::string& spec) {
    RingContext ctx(CorpusEntry{RingSpec::parse(spec), Caps{}});
    std::map<std::string, CheckReport> out;
    for (const CheckInfo& info : registry()) out[info.id] = run_check(info.id, ctx);
    return out;
}

void check_statuses(const std::map<std::string, CheckReport>& reports,
                    const std::set<std::string>& skipped) {
    for (const auto& [id, report] : reports) {
        CAPTURE(id);
        CAPTURE(report.note);
        const CheckStatus want =
            skipped.count(id) ? CheckStatus::skipped : CheckStatus::verified;
        CHECK(report.status == want);
        if (report.status == CheckStatus::skipped) CHECK_FALSE(report.note.empty());
    }
}

bool witness_has(const CheckReport& report, const std::string& line) {
    return std::find(report.witness.begin(), report.witness.end(), line) !=
           report.witness.end();
}

}  // namespace

TEST_CASE("the registry is complete and stable") {
    CHECK(registry_ids() ==
          std::vector<std::string>{
              "P201", "C202", "X202", "C203", "C204", "C205", "X205", "P206",
              "P207", "C208", "C209", "C210", "R211a", "L212", "L213", "P214",
              "P215", "P216", "D217", "P218", "P219", "R220", "P222", "C223",
              "X223", "E224"});
    for (const CheckInfo& info : registry()) {
        CHECK_FALSE(info.summary.empty());
        CHECK(is_registered_check(info.id));
        CHECK(registry_entry(info.id).summary == info.summary);
    }
    CHECK_FALSE(is_registered_check("NOPE"));
    CHECK_THROWS_AS(registry_entry("NOPE"), InvalidParameter);

    // Claim labels run 201..224 with no 221; every numeric label is either
    // registered or explicitly declared out of scope.
    REQUIRE(out_of_scope_claims().size() == 1);
    CHECK(out_of_scope_claims()[0].id == "R211b");
    CHECK(out_of_scope_claims()[0].reason.find("integers") != std::string::npos);
    std::set<int> covered;
    auto stem = [](const std::string& id) {
        std::string digits;
        for (char c : id)
            if (c >= '0' && c <= '9') digits.push_back(c);
        return std::stoi(digits);
    };
    for (const CheckInfo& info : registry()) covered.insert(stem(info.id));
    for (const OutOfScopeClaim& claim : out_of_scope_claims())
        covered.insert(stem(claim.id));
    std::set<int> expected;
    for (int n = 201; n <= 224; ++n)
        if (n != 221) expected.insert(n);
    CHECK(covered == expected);
}

TEST_CASE("status matrix: integers mod 12") {
    const auto reports = run_all("cyclic:12");
    check_statuses(reports, {"X202", "X205", "R220", "E224"});
    CHECK(reports.at("P201").sidedness == "two-sided");
    CHECK(reports.at("X223").status == CheckStatus::verified);
    CHECK(reports.at("C223").status == CheckStatus::verified);
}

TEST_CASE("status matrix: integers mod 6") {
    const auto reports = run_all("cyclic:6");
    check_statuses(reports, {"X202", "X205", "R220", "E224"});

    // the canonical localization counterexample lives here
    const CheckReport& x223 = reports.at("X223");
    CHECK(witness_has(x223, "S = {1,3}"));
    CHECK(witness_has(x223, "I = (3)"));
    CHECK(witness_has(x223, "S^-1 I = R"));
    CHECK(witness_has(x223, "mu = (2)"));
    // the guarded claim reports the same caveat without refuting
    const CheckReport& c223 = reports.at("C223");
    CHECK(c223.status == CheckStatus::verified);
    CHECK(c223.note.find("caveat") != std::string::npos);
    CHECK(witness_has(c223, "S = {1,3}"));
}

TEST_CASE("status matrix: integers mod 4") {
    const auto reports = run_all("cyclic:4");
    check_statuses(reports, {"X202", "R220", "X223"});
    const CheckReport& x205 = reports.at("X205");
    CHECK(witness_has(x205, "I = (2)"));
    // no localization counterexample exists on a chain ring
    CHECK(reports.at("C223").note.find("held over every multiplicative subset") !=
          std::string::npos);
    CHECK(reports.at("E224").status == CheckStatus::verified);
}

TEST_CASE("status matrix: the zero ring") {
    const auto reports = run_all("cyclic:1");
    check_statuses(reports, {"X202", "X205", "R211a", "R220", "P222", "C223",
                             "X223", "E224"});
    CHECK(reports.at("R211a").note == "statement presupposes a nonzero ring");
    CHECK(reports.at("P222").note.find("no multiplicative subsets") !=
          std::string::npos);
}

TEST_CASE("status matrix: ut3:2 uses the left lattice") {
    const auto reports = run_all("ut3:2");
    check_statuses(reports, {"L212", "L213", "P214", "P216", "P222", "C223",
                             "X223", "E224"});
    CHECK(reports.at("P201").sidedness == "left");
    for (const char* id : {"L212", "L213", "P214", "P216", "P222", "C223", "X223"})
        CHECK(reports.at(id).note.find("noncommutative") != std::string::npos);

    const CheckReport& x202 = reports.at("X202");
    CHECK(witness_has(x202, "I = (E13)"));
    CHECK(witness_has(x202, "J = (E12)"));
    const CheckReport& r220 = reports.at("R220");
    CHECK(r220.status == CheckStatus::verified);
    CHECK(r220.instances == 15);
    // P219 ranges over all 32 unital endomorphisms and all 8 nil-essential
    // left ideals
    CHECK(reports.at("P219").instances == 256);
}

TEST_CASE("unknown check ids are rejected") {
    RingContext ctx(CorpusEntry{RingSpec::parse("cyclic:4"), Caps{}});
    CHECK_THROWS_AS(run_check("P999", ctx), InvalidParameter);
}

TEST_CASE("ring context caches expensive surveys") {
    RingContext ctx(CorpusEntry{RingSpec::parse("cyclic:12"), Caps{}});
    CHECK(&ctx.hom_kernels(4) == &ctx.hom_kernels(4));
    CHECK(&ctx.multiplicative_sets() == &ctx.multiplicative_sets());
    CHECK(&ctx.localization_survey() == &ctx.localization_survey());
    CHECK(ctx.unital_endomorphisms().size() == 1);
}

TEST_CASE("suite ordering is corpus-major, registry-minor") {
    Corpus corpus;
    corpus.entries = {CorpusEntry{RingSpec::parse("cyclic:6"), Caps{}},
                      CorpusEntry{RingSpec::parse("cyclic:4"), Caps{}}};
    const auto reports = run_suite(corpus, {}, 1);
    REQUIRE(reports.size() == 2 * registry_ids().size());
    for (std::size_t k = 0; k < reports.size(); ++k) {
        const std::size_t ring_slot = k / registry_ids().size();
        CHECK(reports[k].ring == (ring_slot == 0 ? "cyclic:6" : "cyclic:4"));
        CHECK(reports[k].check_id == registry_ids()[k % registry_ids().size()]);
    }
}

TEST_CASE("suite results are independent of the worker count") {
    Corpus corpus;
    for (const char* spec : {"cyclic:6", "cyclic:12", "ut3:2", "cyclic:8"})
        corpus.entries.push_back(CorpusEntry{RingSpec::parse(spec), Caps{}});
    const auto serial = run_suite(corpus, {}, 1);
    const auto threaded = run_suite(corpus, {}, 4);
    REQUIRE(serial.size() == threaded.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
        CHECK(serial[k].check_id == threaded[k].check_id);
        CHECK(serial[k].ring == threaded[k].ring);
        CHECK(serial[k].sidedness == threaded[k].sidedness);
        CHECK(serial[k].status == threaded[k].status);
        CHECK(serial[k].note == threaded[k].note);
        CHECK(serial[k].witness == threaded[k].witness);
        CHECK(serial[k].instances == threaded[k].instances);
    }
}

TEST_CASE("suite selections filter in registry order") {
    Corpus corpus;
    corpus.entries = {CorpusEntry{RingSpec::parse("cyclic:6"), Caps{}}};
    const auto reports = run_suite(corpus, {"X223", "P201"}, 1);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].check_id == "P201");  // registry order, not request order
    CHECK(reports[1].check_id == "X223");
    CHECK_THROWS_AS(run_suite(corpus, {"P999"}, 1), InvalidParameter);

    // a corpus-level selection applies when no explicit one is given
    corpus.selection = {"C202"};
    const auto preset = run_suite(corpus, {}, 1);
    REQUIRE(preset.size() == 1);
    CHECK(preset[0].check_id == "C202");
}

TEST_CASE("hunts find their canonical witnesses") {
    const Corpus corpus = default_corpus();
    {
        const HuntResult h = hunt_counterexample("X223", corpus, 100000);
        CHECK(h.found);
        CHECK(h.ring == "cyclic:6");
        CHECK(h.instances == 24);
        CHECK(h.rings_searched == 5);
        CHECK(h.witness == std::vector<std::string>{"S = {1,3}", "I = (3)",
                                                    "S^-1 I = R"});
    }
    {
        const HuntResult h = hunt_counterexample("X205", corpus, 100000);
        CHECK(h.found);
        CHECK(h.ring == "cyclic:4");
        CHECK(h.instances == 3);
        CHECK(h.witness == std::vector<std::string>{"I = (2)", "I*I = (0)"});
    }
    {
        const HuntResult h = hunt_counterexample("P201-converse-probe", corpus, 100000);
        CHECK(h.found);
        CHECK(h.ring == "cyclic:2");
        CHECK(h.instances == 1);
    }
    {
        const HuntResult h = hunt_counterexample("P206-converse-probe", corpus, 100000);
        CHECK(h.found);
        CHECK(h.ring == "cyclic:4");
        CHECK(h.instances == 22);
    }
    {
        // a tiny budget runs out before any witness appears
        const HuntResult h = hunt_counterexample("X223", corpus, 10);
        CHECK_FALSE(h.found);
        CHECK(h.instances == 10);
    }
    CHECK_THROWS_AS(hunt_counterexample("NOPE", corpus, 10), InvalidParameter);

    std::set<std::string> huntable;
    for (const CheckInfo& info : huntable_claims()) huntable.insert(info.id);
    CHECK(huntable == std::set<std::string>{"X202", "X205", "X223",
                                            "P201-converse-probe",
                                            "P206-converse-probe"});
}

TEST_CASE("the ut3 existence hunt crosses the whole commutative corpus first") {
    const HuntResult h = hunt_counterexample("X202", default_corpus(), 100000);
    CHECK(h.found);
    CHECK(h.ring == "ut3:2");
    CHECK(h.instances == 637);
    CHECK(h.rings_searched == 44);
}
