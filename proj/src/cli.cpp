#include "nilring/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nilring/corpus.hpp"
#include "nilring/errors.hpp"
#include "nilring/report_io.hpp"

namespace nilring {

namespace {

Sidedness parse_sidedness(const std::string& text) {
    if (text == "left") return Sidedness::left;
    if (text == "right") return Sidedness::right;
    if (text == "two-sided") return Sidedness::two_sided;
    throw InvalidParameter("unknown sidedness: " + text);
}

std::string sidedness_label(Sidedness side) {
    switch (side) {
        case Sidedness::left: return "left";
        case Sidedness::right: return "right";
        case Sidedness::two_sided: return "two-sided";
    }
    throw InvalidParameter("unknown sidedness value");
}

/// Largest ring order to construct: --max-order beats NILRING_MAX_ORDER
/// beats the built-in default.
int resolve_max_order(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("NILRING_MAX_ORDER")) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(env, &used);
            if (used != std::string(env).size() || value <= 0)
                throw std::invalid_argument("not positive");
            return value;
        } catch (const std::exception&) {
            throw InvalidParameter(
                "NILRING_MAX_ORDER must be a positive integer, got: " +
                std::string(env));
        }
    }
    return 0;  // keep the Caps default
}

Caps resolve_caps(int flag_value) {
    Caps caps;
    const int max_order = resolve_max_order(flag_value);
    if (max_order > 0) caps.max_order = max_order;
    return caps;
}

Corpus resolve_corpus(const std::string& path, int max_order_flag) {
    Corpus corpus =
        path.empty() ? default_corpus() : load_corpus_file(path);
    // An explicit order bound applies to every entry, including ones whose
    // corpus row set its own caps.
    const int max_order = resolve_max_order(max_order_flag);
    if (max_order > 0)
        for (auto& entry : corpus.entries) entry.caps.max_order = max_order;
    return corpus;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{
        "nilring: finite unital rings, ideal lattices, nil-essentiality, "
        "localization, and a registry of checkable claims"};
    app.require_subcommand(1);

    std::string format = "text";
    bool timings = false;
    int max_order = 0;  // 0 = not set; NILRING_MAX_ORDER / default apply
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        sub->add_flag("--timings", timings,
                      "include wall-clock timings (off by default so output "
                      "is byte-stable)");
        sub->add_option("--max-order", max_order,
                        "largest ring order to construct (overrides the "
                        "NILRING_MAX_ORDER environment variable)")
            ->check(CLI::PositiveNumber);
    };
    const std::string ring_help =
        "inline ring spec: cyclic:N | ut3:M | product:SPEC+SPEC[+...] | "
        "tables:PATH";

    std::string describe_ring_arg;
    CLI::App* describe = app.add_subcommand(
        "describe", "structural invariants of one ring");
    describe->add_option("ring", describe_ring_arg, ring_help)->required();
    add_common(describe);

    std::string ideals_ring_arg, sidedness_arg;
    CLI::App* ideals = app.add_subcommand(
        "ideals", "every ideal of one ring, with classification flags");
    ideals->add_option("ring", ideals_ring_arg, ring_help)->required();
    ideals->add_option("--sidedness", sidedness_arg,
                       "left, right, or two-sided (default: two-sided for "
                       "commutative rings, left otherwise)")
        ->check(CLI::IsMember({"left", "right", "two-sided"}));
    add_common(ideals);

    std::string check_id, check_ring_arg;
    CLI::App* check = app.add_subcommand(
        "check", "run one registered claim against one ring");
    check->add_option("check_id", check_id, "claim id, e.g. P201 or X223")
        ->required();
    check->add_option("ring", check_ring_arg, ring_help)->required();
    add_common(check);

    std::string suite_corpus;
    int jobs = 1;
    std::vector<std::string> select;
    CLI::App* suite = app.add_subcommand(
        "suite", "run the claim registry over a corpus of rings");
    suite->add_option("--corpus", suite_corpus,
                      "corpus JSON file (default: the built-in roster)");
    suite->add_option("--jobs", jobs, "parallel worker count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    suite->add_option("--select", select,
                      "comma-separated subset of claim ids to run")
        ->delimiter(',');
    add_common(suite);

    std::string hunt_claim, hunt_corpus;
    long budget = 100000;
    CLI::App* hunt = app.add_subcommand(
        "hunt", "scan a corpus for a counterexample witness");
    hunt->add_option("claim", hunt_claim,
                     "huntable claim id: X202, X205, X223, "
                     "P201-converse-probe, P206-converse-probe")
        ->required();
    hunt->add_option("--corpus", hunt_corpus,
                     "corpus JSON file (default: the built-in roster)");
    hunt->add_option("--budget", budget,
                     "maximum number of instances to evaluate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(hunt);

    std::string localize_ring_arg;
    std::vector<int> invert;
    CLI::App* localize = app.add_subcommand(
        "localize",
        "invert a multiplicative subset of a commutative ring and compare "
        "nil-essentiality across the canonical map");
    localize->add_option("ring", localize_ring_arg, ring_help)->required();
    localize
        ->add_option("--invert", invert,
                     "comma-separated element indices whose multiplicative "
                     "closure to invert")
        ->required()
        ->delimiter(',');
    add_common(localize);

    std::vector<const char*> argv;
    argv.push_back("nilring");
    for (const auto& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        ReportOptions opt;
        opt.format = format;
        opt.timings = timings;

        if (describe->parsed()) {
            CorpusEntry entry{RingSpec::parse(describe_ring_arg),
                              resolve_caps(max_order)};
            RingContext ctx(entry);
            out << render_description(describe_ring(ctx), opt);
            return 0;
        }
        if (ideals->parsed()) {
            const RingSpec spec = RingSpec::parse(ideals_ring_arg);
            const RingPtr ring = spec.build(resolve_caps(max_order));
            const Sidedness side =
                sidedness_arg.empty()
                    ? (ring->commutative() ? Sidedness::two_sided
                                           : Sidedness::left)
                    : parse_sidedness(sidedness_arg);
            LatticeAnalysis analysis(enumerate_ideals(ring, side),
                                     kernels::Mode::parallel);
            out << render_ideal_rows(spec.to_string(), sidedness_label(side),
                                     ideal_rows(analysis), opt);
            return 0;
        }
        if (check->parsed()) {
            registry_entry(check_id);  // reject unknown ids as usage errors
            CorpusEntry entry{RingSpec::parse(check_ring_arg),
                              resolve_caps(max_order)};
            RingContext ctx(entry);
            const CheckReport rep = run_check(check_id, ctx);
            out << render_reports({rep}, opt);
            return rep.status == CheckStatus::refuted ? 1 : 0;
        }
        if (suite->parsed()) {
            const Corpus corpus = resolve_corpus(suite_corpus, max_order);
            const std::vector<CheckReport> reports =
                run_suite(corpus, select, jobs);
            out << render_reports(reports, opt);
            for (const auto& rep : reports)
                if (rep.status == CheckStatus::refuted) return 1;
            return 0;
        }
        if (hunt->parsed()) {
            const Corpus corpus = resolve_corpus(hunt_corpus, max_order);
            const HuntResult result =
                hunt_counterexample(hunt_claim, corpus, budget);
            out << render_hunt(result, opt);
            return result.found ? 0 : 1;
        }
        if (localize->parsed()) {
            CorpusEntry entry{RingSpec::parse(localize_ring_arg),
                              resolve_caps(max_order)};
            RingContext ctx(entry);
            out << render_localization(localize_report(ctx, invert), opt);
            return 0;
        }
        err << "error: no subcommand selected\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace nilring
