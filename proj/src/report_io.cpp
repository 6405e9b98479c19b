#include "nilring/report_io.hpp"

#include <sstream>

#include "json.hpp"
#include "nilring/errors.hpp"

namespace nilring {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::string& name_of(const RingPtr& ring, int x) {
    return ring->element_names()[std::size_t(x)];
}

std::vector<std::string> names_of(const RingPtr& ring,
                                  const std::vector<int>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (int x : xs) out.push_back(name_of(ring, x));
    return out;
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void require_format(const ReportOptions& opt) {
    if (opt.format != "text" && opt.format != "json")
        throw InvalidParameter("unknown output format: " + opt.format);
}

}  // namespace

// --- describe ---------------------------------------------------------------

RingDescription describe_ring(RingContext& context) {
    const RingPtr& ring = context.ring();
    const LatticeAnalysis& an = context.analysis();
    RingDescription d;
    d.spec = context.entry().spec.to_string();
    d.tag = ring->construction_tag();
    d.order = ring->order();
    d.commutative = ring->commutative();
    d.sidedness = context.sidedness_name();
    d.ideal_count = an.count();
    for (int x = 0; x < ring->order(); ++x) {
        if (ring->unit(x)) d.units.push_back(name_of(ring, x));
        if (ring->idempotent(x)) d.idempotents.push_back(name_of(ring, x));
    }
    d.has_nilradical = d.commutative;
    if (d.has_nilradical) d.nilradical = nilradical(ring).display();
    d.jacobson_radical = jacobson_radical(an).display();
    d.socle = socle(an).display();
    d.semisimple = is_semisimple(an);
    return d;
}

std::string render_description(const RingDescription& d,
                               const ReportOptions& opt) {
    require_format(opt);
    if (opt.format == "json") {
        ordered_json j;
        j["ring"] = d.spec;
        j["tag"] = d.tag;
        j["order"] = d.order;
        j["commutative"] = d.commutative;
        j["sidedness"] = d.sidedness;
        j["ideal_count"] = d.ideal_count;
        j["units"] = d.units;
        j["idempotents"] = d.idempotents;
        if (d.has_nilradical) j["nilradical"] = d.nilradical;
        j["jacobson_radical"] = d.jacobson_radical;
        j["socle"] = d.socle;
        j["semisimple"] = d.semisimple;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "ring: " << d.spec << " (tag " << d.tag << ")\n";
    os << "order: " << d.order << "\n";
    os << "commutative: " << yes_no(d.commutative) << "\n";
    os << "sidedness: " << d.sidedness << "\n";
    os << "ideal_count: " << d.ideal_count << "\n";
    os << "units: " << join(d.units, ", ") << "\n";
    os << "idempotents: " << join(d.idempotents, ", ") << "\n";
    if (d.has_nilradical) os << "nilradical: " << d.nilradical << "\n";
    os << "jacobson_radical: " << d.jacobson_radical << "\n";
    os << "socle: " << d.socle << "\n";
    os << "semisimple: " << yes_no(d.semisimple) << "\n";
    return os.str();
}

// --- ideals -----------------------------------------------------------------

std::vector<IdealRow> ideal_rows(const LatticeAnalysis& analysis) {
    std::vector<IdealRow> rows;
    rows.reserve(std::size_t(analysis.count()));
    for (int i = 0; i < analysis.count(); ++i) {
        const IdealClassification c = analysis.classification(i);
        IdealRow row;
        row.index = i;
        row.display = analysis.ideal(i).display();
        row.size = analysis.ideal(i).size();
        row.generators =
            names_of(analysis.ring(), analysis.ideal(i).generators());
        row.nil = c.nil;
        row.nilpotent = c.nilpotent;
        row.nilpotency_index = c.nilpotency_index;
        row.minimal = c.minimal;
        row.maximal = c.maximal;
        row.essential = c.essential.holds;
        row.nil_essential = c.nil_essential.holds;
        if (!c.essential.holds)
            row.essential_witness =
                analysis.ideal(c.essential.witness_index).display();
        if (!c.nil_essential.holds)
            row.nil_essential_witness =
                analysis.ideal(c.nil_essential.witness_index).display();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_ideal_rows(const std::string& spec,
                              const std::string& sidedness,
                              const std::vector<IdealRow>& rows,
                              const ReportOptions& opt) {
    require_format(opt);
    if (opt.format == "json") {
        ordered_json j;
        j["ring"] = spec;
        j["sidedness"] = sidedness;
        j["ideal_count"] = rows.size();
        j["ideals"] = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r;
            r["index"] = row.index;
            r["display"] = row.display;
            r["size"] = row.size;
            r["generators"] = row.generators;
            r["nil"] = row.nil;
            r["nilpotent"] = row.nilpotent;
            r["nilpotency_index"] = row.nilpotency_index;
            r["minimal"] = row.minimal;
            r["maximal"] = row.maximal;
            r["essential"] = row.essential;
            r["essential_witness"] = row.essential_witness;
            r["nil_essential"] = row.nil_essential;
            r["nil_essential_witness"] = row.nil_essential_witness;
            j["ideals"].push_back(std::move(r));
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "ring: " << spec << "\n";
    os << "sidedness: " << sidedness << "\n";
    os << "ideal_count: " << rows.size() << "\n";
    for (const auto& row : rows) {
        os << "#" << row.index << " " << row.display << " | size " << row.size;
        os << " | generators: "
           << (row.generators.empty() ? std::string("none")
                                      : join(row.generators, ", "));
        if (row.nilpotent)
            os << " | nilpotent (index " << row.nilpotency_index << ")";
        else if (row.nil)
            os << " | nil";
        if (row.minimal) os << " | minimal";
        if (row.maximal) os << " | maximal";
        os << " | essential: " << yes_no(row.essential);
        if (!row.essential) os << " (mu = " << row.essential_witness << ")";
        os << " | nil-essential: " << yes_no(row.nil_essential);
        if (!row.nil_essential)
            os << " (mu = " << row.nil_essential_witness << ")";
        os << "\n";
    }
    return os.str();
}

// --- localization -----------------------------------------------------------

LocalizationReport localize_report(RingContext& context,
                                   const std::vector<int>& seed) {
    const RingPtr& ring = context.ring();
    for (int x : seed)
        if (x < 0 || x >= ring->order())
            throw InvalidParameter("element index " + std::to_string(x) +
                                   " out of range for a ring of order " +
                                   std::to_string(ring->order()));
    const MultiplicativeSet set = multiplicative_closure(ring, seed);
    const LocalizedRing loc = localize_ring(ring, set, context.entry().caps);

    LocalizationReport rep;
    rep.spec = context.entry().spec.to_string();
    rep.inverted = names_of(ring, seed);
    rep.set_display = set.display();
    rep.set_members = names_of(ring, set.members);
    rep.kernel_display = loc.kernel.display();
    rep.kernel_generators = names_of(ring, loc.kernel.generators());
    rep.base_order = ring->order();
    rep.result_order = loc.result->order();
    for (int x = 0; x < ring->order(); ++x)
        rep.canonical_map.push_back(
            {name_of(ring, x),
             name_of(loc.result, loc.canonical.map[std::size_t(x)])});

    const LatticeAnalysis& an = context.analysis();
    IdealLattice local_lattice =
        enumerate_ideals(loc.result, Sidedness::two_sided);
    LatticeAnalysis local_an(std::move(local_lattice),
                             kernels::Mode::parallel);
    for (int i = 0; i < an.count(); ++i) {
        const Ideal local = localize_ideal(loc, an.ideal(i));
        const int li = local_an.lattice().index_of(local);
        LocalizationRow row;
        row.base_display = an.ideal(i).display();
        row.localized_display = local.display();
        row.base_nil_essential = an.nil_essential(i).holds;
        row.localized_nil_essential = local_an.nil_essential(li).holds;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string render_localization(const LocalizationReport& rep,
                                const ReportOptions& opt) {
    require_format(opt);
    if (opt.format == "json") {
        ordered_json j;
        j["ring"] = rep.spec;
        j["inverted"] = rep.inverted;
        j["set"] = rep.set_display;
        j["set_members"] = rep.set_members;
        j["kernel"] = rep.kernel_display;
        j["kernel_generators"] = rep.kernel_generators;
        j["base_order"] = rep.base_order;
        j["result_order"] = rep.result_order;
        j["canonical_map"] = ordered_json::array();
        for (const auto& pair : rep.canonical_map) {
            ordered_json m;
            m["from"] = pair[0];
            m["to"] = pair[1];
            j["canonical_map"].push_back(std::move(m));
        }
        j["ideals"] = ordered_json::array();
        for (const auto& row : rep.rows) {
            ordered_json r;
            r["ideal"] = row.base_display;
            r["localized"] = row.localized_display;
            r["nil_essential"] = row.base_nil_essential;
            r["localized_nil_essential"] = row.localized_nil_essential;
            j["ideals"].push_back(std::move(r));
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "ring: " << rep.spec << "\n";
    os << "inverted: " << join(rep.inverted, ", ") << "\n";
    os << "S = " << rep.set_display << "\n";
    os << "kernel: " << rep.kernel_display << " (generators: "
       << (rep.kernel_generators.empty() ? std::string("none")
                                         : join(rep.kernel_generators, ", "))
       << ")\n";
    os << "base_order: " << rep.base_order << "\n";
    os << "result_order: " << rep.result_order << "\n";
    os << "canonical map x -> x/1:\n";
    for (const auto& pair : rep.canonical_map)
        os << "  " << pair[0] << " -> " << pair[1] << "\n";
    os << "ideals:\n";
    for (const auto& row : rep.rows) {
        os << "  I = " << row.base_display
           << " | S^-1 I = " << row.localized_display
           << " | I nil-essential: " << yes_no(row.base_nil_essential)
           << " | S^-1 I nil-essential: "
           << yes_no(row.localized_nil_essential) << "\n";
    }
    return os.str();
}

// --- check / suite / hunt ---------------------------------------------------

namespace {

ordered_json report_to_json(const CheckReport& rep, const ReportOptions& opt) {
    ordered_json j;
    j["check"] = rep.check_id;
    j["ring"] = rep.ring;
    j["sidedness"] = rep.sidedness;
    j["status"] = to_string(rep.status);
    j["note"] = rep.note;
    j["instances"] = rep.instances;
    j["witness"] = rep.witness;
    if (opt.timings) j["elapsed_ms"] = rep.elapsed_ms;
    return j;
}

}  // namespace

std::string render_reports(const std::vector<CheckReport>& reports,
                           const ReportOptions& opt) {
    require_format(opt);
    long verified = 0, refuted = 0, skipped = 0;
    for (const auto& rep : reports) {
        switch (rep.status) {
            case CheckStatus::verified: ++verified; break;
            case CheckStatus::refuted: ++refuted; break;
            case CheckStatus::skipped: ++skipped; break;
        }
    }
    if (opt.format == "json") {
        ordered_json j;
        j["reports"] = ordered_json::array();
        for (const auto& rep : reports)
            j["reports"].push_back(report_to_json(rep, opt));
        j["summary"] = {{"total", reports.size()},
                        {"verified", verified},
                        {"refuted", refuted},
                        {"skipped", skipped}};
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& rep : reports) {
        os << rep.check_id << "  " << rep.ring << "  [" << rep.sidedness
           << "]  " << to_string(rep.status) << "  (" << rep.instances
           << " instances)";
        if (opt.timings) os << "  [" << rep.elapsed_ms << " ms]";
        os << "\n";
        if (!rep.note.empty()) os << "    note: " << rep.note << "\n";
        for (const auto& w : rep.witness) os << "    " << w << "\n";
    }
    os << "summary: " << reports.size() << " reports, " << verified
       << " verified, " << refuted << " refuted, " << skipped << " skipped\n";
    return os.str();
}

std::string render_hunt(const HuntResult& hunt, const ReportOptions& opt) {
    require_format(opt);
    if (opt.format == "json") {
        ordered_json j;
        j["claim"] = hunt.claim_id;
        j["budget"] = hunt.budget;
        j["instances"] = hunt.instances;
        j["rings_searched"] = hunt.rings_searched;
        j["found"] = hunt.found;
        j["ring"] = hunt.ring;
        j["witness"] = hunt.witness;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "hunt " << hunt.claim_id << ": ";
    if (hunt.found) {
        os << "witness found on " << hunt.ring << " after " << hunt.instances
           << " instances (budget " << hunt.budget << ", "
           << hunt.rings_searched << " rings searched)\n";
        for (const auto& w : hunt.witness) os << "    " << w << "\n";
    } else if (hunt.instances >= hunt.budget) {
        os << "no witness; budget of " << hunt.budget
           << " instances exhausted after " << hunt.rings_searched
           << " rings\n";
    } else {
        os << "no witness in the whole corpus (" << hunt.instances
           << " instances over " << hunt.rings_searched << " rings, budget "
           << hunt.budget << ")\n";
    }
    return os.str();
}

}  // namespace nilring
