#include "nilring/registry.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <set>
#include <sstream>

#include "nilring/errors.hpp"

namespace nilring {

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::verified: return "verified";
        case CheckStatus::refuted: return "refuted";
        case CheckStatus::skipped: return "skipped";
    }
    throw InvalidParameter("unknown CheckStatus");
}

const std::vector<CheckInfo>& registry() {
    static const std::vector<CheckInfo> table = {
        {"P201", "an ideal containing a nil-essential ideal is nil-essential"},
        {"C202", "if an intersection of ideals is nil-essential, so is each term"},
        {"X202", "two nil-essential ideals can intersect in a non-nil-essential ideal"},
        {"C203", "a sum of ideals with a nil-essential summand is nil-essential"},
        {"C204", "if a product of ideals is nil-essential, so is each factor"},
        {"C205", "if some power of an ideal is nil-essential, so is the ideal"},
        {"X205", "a nil-essential ideal can square to the non-nil-essential zero ideal"},
        {"P206", "relative nil-essentiality passes to intermediate stages and from intersections to both terms"},
        {"P207", "an ideal meeting a maximal ideal trivially is zero or non-nilpotent"},
        {"C208", "a nil-essential maximal ideal is essential"},
        {"C209", "no proper nil-essential ideal == no nil-essential maximal ideal == semisimple"},
        {"C210", "an ideal meeting the Jacobson radical trivially is zero or non-nilpotent"},
        {"R211a", "a nil-essential Jacobson radical is essential; in a semisimple ring neither the radical nor any maximal ideal is nil-essential"},
        {"L212", "nil-essential iff every non-nilpotent element has a nonzero multiple inside the ideal (commutative)"},
        {"L213", "relative nil-essentiality matches the relative element criterion (commutative)"},
        {"P214", "every ideal is nil-essential inside its radical (commutative)"},
        {"P215", "componentwise nil-essentiality matches nil-essentiality of direct sums"},
        {"P216", "ideal quotients (I : a) of a relatively nil-essential ideal are nil-essential in the ring (commutative)"},
        {"D217", "a monomorphism between ideals is nil-essential exactly when its image is nil-essential in the target"},
        {"P218", "nil-essential containment == nil-essential inclusion map == every hom kernel meeting the ideal trivially is nilpotent"},
        {"P219", "preimages of nil-essential ideals under unital ring endomorphisms are nil-essential"},
        {"R220", "the order-16 upper-triangular ring has exactly nine left ideals with the stated essentiality pattern"},
        {"P222", "nil-essential iff the localization at the non-zero-divisors is nil-essential (commutative)"},
        {"C223", "nil-essentiality of one localization is claimed to force nil-essentiality (annotated as failing in general)"},
        {"X223", "a localization can be nil-essential while the base ideal is not"},
        {"E224", "over Z/p^k, an ideal is essential iff each of its localizations is nil-essential"},
    };
    return table;
}

const CheckInfo& registry_entry(const std::string& id) {
    for (const auto& info : registry())
        if (info.id == id) return info;
    throw InvalidParameter("unknown check id: " + id);
}

bool is_registered_check(const std::string& id) {
    for (const auto& info : registry())
        if (info.id == id) return true;
    return false;
}

const std::vector<OutOfScopeClaim>& out_of_scope_claims() {
    static const std::vector<OutOfScopeClaim> table = {
        {"R211b",
         "quantifies over the ring of integers; it has no finite instance, so no "
         "finite surrogate is substituted"},
    };
    return table;
}

// ---------------------------------------------------------------------------
// RingContext
// ---------------------------------------------------------------------------

namespace {

Sidedness policy_side(const RingPtr& ring) {
    return ring->commutative() ? Sidedness::two_sided : Sidedness::left;
}

}  // namespace

RingContext::RingContext(const CorpusEntry& entry)
    : entry_(entry),
      ring_(entry.spec.build(entry.caps)),
      side_(policy_side(ring_)),
      analysis_(enumerate_ideals(ring_, side_), kernels::Mode::parallel) {
    const int m = analysis_.count();
    ne_within_.assign(std::size_t(m) * m, 0);
    ess_within_.assign(std::size_t(m) * m, 0);
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < m; ++k) {
            if (!analysis_.leq(i, k)) continue;
            ne_within_[pos(i, k)] =
                analysis_.nil_essential_within(i, k).holds ? 1 : 0;
            ess_within_[pos(i, k)] =
                analysis_.essential_within(i, k).holds ? 1 : 0;
        }
    }
}

std::string RingContext::sidedness_name() const {
    return side_ == Sidedness::two_sided ? "two-sided" : "left";
}

const std::vector<RingHom>& RingContext::unital_endomorphisms() {
    if (!unital_endos_)
        unital_endos_ = enumerate_ring_endomorphisms(ring_, true, entry_.caps);
    return *unital_endos_;
}

const KernelCollection& RingContext::hom_kernels(int j) {
    auto it = kernel_cache_.find(j);
    if (it == kernel_cache_.end())
        it = kernel_cache_
                 .emplace(j, collect_hom_kernels(analysis_, j, entry_.caps))
                 .first;
    return it->second;
}

const std::vector<MultiplicativeSet>& RingContext::multiplicative_sets() {
    if (!mult_sets_) mult_sets_ = enumerate_multiplicative_sets(ring_);
    return *mult_sets_;
}

const std::vector<LocalizationFacts>& RingContext::localization_survey() {
    if (!survey_) {
        std::vector<LocalizationFacts> out;
        out.reserve(multiplicative_sets().size());
        for (const auto& set : multiplicative_sets())
            out.push_back(localize_and_classify(set));
        survey_ = std::move(out);
    }
    return *survey_;
}

LocalizationFacts RingContext::localize_and_classify(
    const MultiplicativeSet& set) {
    const int n = ring_->order();
    boost::dynamic_bitset<> kbits(n);
    for (int x = 0; x < n; ++x) {
        for (int u : set.members) {
            if (ring_->mul(u, x) == ring_->zero()) {
                kbits.set(x);
                break;
            }
        }
    }
    const Ideal kernel = Ideal::from_members(ring_, side_, kbits);
    const int kidx = analysis_.lattice().index_of(kernel);

    auto it = kernel_verdicts_.find(kidx);
    if (it == kernel_verdicts_.end()) {
        LocalizationFacts lf = facts_for_kernel(set);
        if (lf.kernel_index != kidx)
            throw InternalInconsistency(
                "localization kernel does not match the annihilator scan");
        it = kernel_verdicts_.emplace(kidx, std::move(lf)).first;
    }
    LocalizationFacts facts = it->second;
    facts.set_display = set.display();
    facts.set_members = set.members;
    return facts;
}

// Localize for real, then cross-check every verdict against the quotient by
// the kernel: the fraction ring of a finite commutative ring is isomorphic
// to that quotient, so the two routes must agree ideal by ideal.
LocalizationFacts RingContext::facts_for_kernel(const MultiplicativeSet& set) {
    const LocalizedRing loc = localize_ring(ring_, set, entry_.caps);
    LocalizationFacts lf;
    lf.kernel_index = analysis_.lattice().index_of(loc.kernel);
    lf.result_order = loc.result->order();

    IdealLattice loc_lat = enumerate_ideals(loc.result, Sidedness::two_sided);
    LatticeAnalysis loc_an(std::move(loc_lat), kernels::Mode::parallel);

    const QuotientResult quo = make_quotient_ring(ring_, loc.kernel, entry_.caps);
    IdealLattice quo_lat = enumerate_ideals(quo.ring, Sidedness::two_sided);
    LatticeAnalysis quo_an(std::move(quo_lat), kernels::Mode::parallel);

    const int m = analysis_.count();
    for (int i = 0; i < m; ++i) {
        const Ideal local = localize_ideal(loc, analysis_.ideal(i));
        const int li = loc_an.lattice().index_of(local);
        const bool ne_local = loc_an.nil_essential(li).holds;

        boost::dynamic_bitset<> image(quo.ring->order());
        for (int x : analysis_.ideal(i).elements())
            image.set(quo.projection.map[std::size_t(x)]);
        const Ideal pushed =
            Ideal::from_members(quo.ring, Sidedness::two_sided, image);
        const int qi = quo_an.lattice().index_of(pushed);
        if (quo_an.nil_essential(qi).holds != ne_local)
            throw InternalInconsistency(
                "localization and kernel-quotient disagree about " +
                analysis_.ideal(i).display() + " at S = " + set.display());

        lf.localized_display.push_back(local.display());
        lf.localized_nil_essential.push_back(ne_local ? 1 : 0);
    }
    return lf;
}

// ---------------------------------------------------------------------------
// check implementations
// ---------------------------------------------------------------------------

namespace {

std::string ideal_line(const std::string& key, const LatticeAnalysis& an,
                       int i) {
    return key + " = " + an.ideal(i).display();
}

std::string bool_line(const std::string& key, bool value) {
    return key + std::string(" = ") + (value ? "true" : "false");
}

std::string int_line(const std::string& key, long value) {
    return key + " = " + std::to_string(value);
}

std::string map_line(const std::string& key, const std::vector<int>& map) {
    std::ostringstream os;
    os << key << " = [";
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (i) os << ' ';
        os << map[i];
    }
    os << ']';
    return os.str();
}

void verify(CheckReport& rep, std::string note) {
    rep.status = CheckStatus::verified;
    rep.note = std::move(note);
}

void skip(CheckReport& rep, std::string note) {
    rep.status = CheckStatus::skipped;
    rep.note = std::move(note);
}

void refute(CheckReport& rep, std::string note) {
    rep.status = CheckStatus::refuted;
    rep.note = std::move(note);
}

bool commutative_gate(RingContext& ctx, CheckReport& rep) {
    if (ctx.ring()->commutative()) return true;
    skip(rep, "stated for commutative rings; this ring is noncommutative");
    return false;
}

bool nonzero_sets_gate(RingContext& ctx, CheckReport& rep) {
    if (ctx.ring()->order() > 1) return true;
    skip(rep, "the zero ring has no multiplicative subsets (1 = 0)");
    return false;
}

void check_p201(RingContext& ctx, CheckReport& rep) {
    const LatticeAnalysis& an = ctx.analysis();
    for (int i = 0; i < an.count(); ++i) {
        if (!an.nil_essential(i).holds) continue;
        for (int j = 0; j < an.count(); ++j) {
            if (!an.leq(i, j)) continue;
            ++rep.instances;
            if (!an.nil_essential(j).holds) {
                refute(rep,
                       "an ideal above a nil-essential ideal is not "
                       "nil-essential; mu is non-nil and meets J trivially");
                rep.witness.push_back(ideal_line("I", an, i));
                rep.witness.push_back(ideal_line("J", an, j));
                rep.witness.push_back(
                    ideal_line("mu", an, an.nil_essential(j).witness_index));
                return;
            }
        }
    }
    verify(rep, "every ideal containing a nil-essential ideal was itself nil-essential");
}

void check_c202(RingContext& ctx, CheckReport& rep) {
    const LatticeAnalysis& an = ctx.analysis();
    for (int a = 0; a < an.count(); ++a) {
        for (int b = a + 1; b < an.count(); ++b) {
            const int m = an.intersection_index(a, b);
            if (!an.nil_essential(m).holds) continue;
            ++rep.instances;
            for (int side : {a, b}) {
                if (!an.nil_essential(side).holds) {
                    refute(rep,
                           "a pairwise intersection is nil-essential but one "
                           "term is not");
                    rep.witness.push_back(ideal_line("I", an, a));
                    rep.witness.push_back(ideal_line("J", an, b));
                    rep.witness.push_back(ideal_line("meet(I,J)", an, m));
                    rep.witness.push_back(ideal_line(
                        "mu", an, an.nil_essential(side).witness_index));
                    return;
                }
            }
        }
    }
    verify(rep,
           "whenever a pairwise intersection was nil-essential both terms "
           "were; larger families reduce to iterated pairwise intersections");
}

void check_x202(RingContext& ctx, CheckReport& rep) {
    const LatticeAnalysis& an = ctx.analysis();
    for (int a = 0; a < an.count(); ++a) {
        for (int b = a + 1; b < an.count(); ++b) {
            ++rep.instances;
            const int m = an.intersection_index(a, b);
            if (an.nil_essential(a).holds && an.nil_essential(b).holds &&
                !an.nil_essential(m).holds) {
                verify(rep,
                       "counterexample confirmed: both ideals are "
                       "nil-essential while their intersection is not");
                rep.witness.push_back(ideal_line("I", an, a));
                rep.witness.push_back(ideal_line("J", an, b));
                rep.witness.push_back(ideal_line("meet(I,J)", an, m));
                rep.witness.push_back(
                    ideal_line("mu", an, an.nil_essential(m).witness_index));
                return;
            }
        }
    }
    skip(rep, "no pair of ideals of this ring realizes the counterexample");
}

void check_c203(RingContext& ctx, CheckReport& rep) {
    const LatticeAnalysis& an = ctx.analysis();
    for (int a = 0; a < an.count(); ++a) {
        for (int b = a + 1; b < an.count(); ++b) {
            if (!an.nil_essential(a).holds && !an.nil_essential(b).holds)
                continue;
            ++rep.instances;
            const int s = an.sum_index(a, b);
            if (!an.nil_essential(s).holds) {
                refute(rep, "a sum with a nil-essential summand is not nil-essential");
                rep.witness.push_back(ideal_line("I", an, a));
                rep.witness.push_back(ideal_line("J", an, b));
                rep.witness.push_back(ideal_line("sum(I,J)", an, s));
                rep.witness.push_back(
                    ideal_line("mu", an, an.nil_essential(s).witness_index));
                return;
            }
        }
    }
    verify(rep, "every sum with a nil-essential summand was nil-essential");
}

void check_c204(RingContext& ctx, CheckReport& rep) {
    const LatticeAnalysis& an = ctx.analysis();
    for (int a = 0; a < an.count(); ++a) {
        for (int b = 0; b < an.count(); ++b) {
            const int p = an.product_index(a, b);
            if (!an.nil_essential(p).holds) continue;
            ++rep.instances;
            for (int side : {a, b}) {
                if (!an.nil_essential(side).holds) {
                    refute(rep,
                           "a product of two ideals is nil-essential but one "
                           "factor is not");
                    rep.witness.push_back(ideal_line("I", an, a));
                    rep.witness.push_back(ideal_line("J", an, b));
                    rep.witness.push_back(ideal_line("prod(I,J)", an, p));
                    rep.witness.push_back(ideal_line(
                        "mu", an, an.nil_essential(side).witness_index));
                    return;
                }
            }
        }
    }
    verify(rep,
           "whenever a product of two ideals was nil-essential both factors "
           "were; longer products reduce by associativity");
}

void check_c205(RingContext& ctx, CheckReport& rep) {
    const LatticeAnalysis& an = ctx.analysis();
    for (int i = 0; i < an.count(); ++i) {
        int power = i;
        int k = 1;
        while (true) {
            if (an.nil_essential(power).holds) {
                ++rep.instances;
                if (!an.nil_essential(i).holds) {
                    refute(rep,
                           "a power of the ideal is nil-essential but the "
                           "ideal is not");
                    rep.witness.push_back(ideal_line("I", an, i));
                    rep.witness.push_back(int_line("k", k));
                    rep.witness.push_back(ideal_line("I^k", an, power));
                    rep.witness.push_back(
                        ideal_line("mu", an, an.nil_essential(i).witness_index));
                    return;
                }
            }
            const int next = an.product_index(power, i);
            if (next == power) break;
            power = next;
            ++k;
        }
    }
    verify(rep, "whenever some power of an ideal was nil-essential, the ideal itself was");
}

void check_x205(RingContext& ctx, CheckReport& rep) {
    const LatticeAnalysis& an = ctx.analysis();
    const int zero = an.zero_index();
    for (int i = 0; i < an.count(); ++i) {
        if (i == zero) continue;
        ++rep.instances;
        if (an.nil_essential(i).holds &&
            an.product_index(i, i) == zero &&
            !an.nil_essential(zero).holds) {
            verify(rep,
                   "counterexample confirmed: a nil-essential ideal squares "
                   "to the zero ideal, which is not nil-essential");
            rep.witness.push_back(ideal_line("I", an, i));
            rep.witness.push_back(ideal_line("I*I", an, zero));
            rep.witness.push_back(
                ideal_line("mu", an, an.nil_essential(zero).witness_index));
            return;
        }
    }
    skip(rep, "no ideal of this ring realizes the counterexample");
}

void check_p206(RingContext& ctx, CheckReport& rep) {
    const LatticeAnalysis& an = ctx.analysis();
    const int m = an.count();
    // Part 1: I <= J <= K and I nil-essential in K forces both halves.
    for (int k = 0; k < m; ++k) {
        for (int j = 0; j < m; ++j) {
            if (!an.leq(j, k)) continue;
            for (int i = 0; i < m; ++i) {
                if (!an.leq(i, j)) continue;
                if (!ctx.ne_within(i, k)) continue;
                ++rep.instances;
                if (!ctx.ne_within(i, j) || !ctx.ne_within(j, k)) {
                    refute(rep,
                           "nil-essentiality in the large ideal fails at an "
                           "intermediate stage");
                    rep.witness.push_back("part = intermediate-stages");
                    rep.witness.push_back(ideal_line("I", an, i));
                    rep.witness.push_back(ideal_line("J", an, j));
                    rep.witness.push_back(ideal_line("K", an, k));
                    rep.witness.push_back(
                        bool_line("I nil-essential in J", ctx.ne_within(i, j)));
                    rep.witness.push_back(
                        bool_line("J nil-essential in K", ctx.ne_within(j, k)));
                    return;
                }
            }
        }
    }
    // Part 2: I <= K, L <= K and I&L nil-essential in K forces both.
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < m; ++i) {
            if (!an.leq(i, k)) continue;
            for (int l = i; l < m; ++l) {
                if (!an.leq(l, k)) continue;
                const int meet = an.intersection_index(i, l);
                if (!ctx.ne_within(meet, k)) continue;
                ++rep.instances;
                if (!ctx.ne_within(i, k) || !ctx.ne_within(l, k)) {
                    refute(rep,
                           "an intersection is nil-essential in K but one "
                           "term is not");
                    rep.witness.push_back("part = intersection-terms");
                    rep.witness.push_back(ideal_line("I", an, i));
                    rep.witness.push_back(ideal_line("L", an, l));
                    rep.witness.push_back(ideal_line("K", an, k));
                    rep.witness.push_back(ideal_line("meet(I,L)", an, meet));
                    return;
                }
            }
        }
    }
    verify(rep,
           "relative nil-essentiality passed to intermediate stages and from "
           "intersections to both terms; converse directions are left to the "
           "hunt probes");
}

void check_p207(RingContext& ctx, CheckReport& rep) {
    const LatticeAnalysis& an = ctx.analysis();
    for (int m : an.maximal_indices()) {
        for (int mu = 0; mu < an.count(); ++mu) {
            if (an.intersection_index(m, mu) != an.zero_index()) continue;
            ++rep.instances;
            if (mu != an.zero_index() && an.nilpotent(mu)) {
                refute(rep,
                       "a nonzero nilpotent ideal meets a maximal ideal "
                       "trivially");
                rep.witness.push_back(ideal_line("M", an, m));
                rep.witness.push_back(ideal_line("mu", an, mu));
                rep.witness.push_back(
                    int_line("nilpotency index of mu", an.nilpotency(mu).index));
                return;
            }
        }
    }
    verify(rep, "every ideal meeting a maximal ideal trivially was zero or non-nilpotent");
}

void check_c208(RingContext& ctx, CheckReport& rep) {
    const LatticeAnalysis& an = ctx.analysis();
    for (int m : an.maximal_indices()) {
        if (!an.nil_essential(m).holds) continue;
        ++rep.instances;
        if (!an.essential(m).holds) {
            refute(rep, "a nil-essential maximal ideal is not essential");
            rep.witness.push_back(ideal_line("M", an, m));
            rep.witness.push_back(
                ideal_line("mu", an, an.essential(m).witness_index));
            return;
        }
    }
    if (rep.instances == 0)
        verify(rep, "no maximal ideal of this ring is nil-essential; vacuously true");
    else
        verify(rep, "every nil-essential maximal ideal was essential");
}

void check_c209(RingContext& ctx, CheckReport& rep) {
    const LatticeAnalysis& an = ctx.analysis();
    bool no_proper_ne = true;
    for (int i = 0; i < an.count(); ++i) {
        if (i == an.ring_index()) continue;
        ++rep.instances;
        if (an.nil_essential(i).holds) no_proper_ne = false;
    }
    bool no_maximal_ne = true;
    for (int m : an.maximal_indices()) {
        ++rep.instances;
        if (an.nil_essential(m).holds) no_maximal_ne = false;
    }
    const bool semisimple = is_semisimple(an);
    ++rep.instances;
    if (no_proper_ne == no_maximal_ne && no_maximal_ne == semisimple) {
        verify(rep,
               std::string("the three characterizations agree; all are ") +
                   (semisimple ? "true" : "false") + " here");
    } else {
        refute(rep, "the three characterizations of semisimplicity disagree");
        rep.witness.push_back(
            bool_line("no proper ideal nil-essential", no_proper_ne));
        rep.witness.push_back(
            bool_line("no maximal ideal nil-essential", no_maximal_ne));
        rep.witness.push_back(bool_line("semisimple", semisimple));
    }
}

void check_c210(RingContext& ctx, CheckReport& rep) {
    const LatticeAnalysis& an = ctx.analysis();
    const int j = an.lattice().index_of(jacobson_radical(an));
    for (int mu = 0; mu < an.count(); ++mu) {
        if (an.intersection_index(j, mu) != an.zero_index()) continue;
        ++rep.instances;
        if (mu != an.zero_index() && an.nilpotent(mu)) {
            refute(rep,
                   "a nonzero nilpotent ideal meets the Jacobson radical "
                   "trivially");
            rep.witness.push_back(ideal_line("J(R)", an, j));
            rep.witness.push_back(ideal_line("mu", an, mu));
            return;
        }
    }
    verify(rep,
           "every ideal meeting the Jacobson radical trivially was zero or "
           "non-nilpotent");
}

void check_r211a(RingContext& ctx, CheckReport& rep) {
    if (ctx.ring()->order() == 1) {
        skip(rep, "statement presupposes a nonzero ring");
        return;
    }
    const LatticeAnalysis& an = ctx.analysis();
    const int j = an.lattice().index_of(jacobson_radical(an));
    bool radical_part = false, semisimple_part = false;
    if (an.nil_essential(j).holds) {
        radical_part = true;
        ++rep.instances;
        if (!an.essential(j).holds) {
            refute(rep, "the Jacobson radical is nil-essential but not essential");
            rep.witness.push_back(ideal_line("J(R)", an, j));
            rep.witness.push_back(
                ideal_line("mu", an, an.essential(j).witness_index));
            return;
        }
    }
    if (is_semisimple(an)) {
        semisimple_part = true;
        ++rep.instances;
        if (an.nil_essential(j).holds) {
            refute(rep, "the ring is semisimple but its zero radical is nil-essential");
            rep.witness.push_back(ideal_line("J(R)", an, j));
            return;
        }
        for (int m : an.maximal_indices()) {
            ++rep.instances;
            if (an.nil_essential(m).holds) {
                refute(rep,
                       "the ring is semisimple but a maximal ideal is "
                       "nil-essential");
                rep.witness.push_back(ideal_line("M", an, m));
                return;
            }
        }
    }
    std::string note;
    if (radical_part)
        note = "the nil-essential radical is essential";
    if (semisimple_part) {
        if (!note.empty()) note += "; ";
        note += ctx.ring()->commutative()
                    ? "semisimple: no maximal (hence no prime) ideal is nil-essential"
                    : "semisimple: no maximal ideal is nil-essential";
    }
    if (note.empty())
        note = "radical not nil-essential and ring not semisimple; both parts vacuous";
    verify(rep, note);
}

void check_l212(RingContext& ctx, CheckReport& rep) {
    if (!commutative_gate(ctx, rep)) return;
    const LatticeAnalysis& an = ctx.analysis();
    for (int i = 0; i < an.count(); ++i) {
        if (i == an.zero_index()) continue;
        ++rep.instances;
        const ElementCriterionVerdict crit =
            nil_essential_element_criterion(an.ideal(i));
        if (crit.holds != an.nil_essential(i).holds) {
            refute(rep, "lattice verdict and element criterion disagree");
            rep.witness.push_back(ideal_line("I", an, i));
            rep.witness.push_back(
                bool_line("lattice verdict", an.nil_essential(i).holds));
            rep.witness.push_back(bool_line("element criterion", crit.holds));
            if (!crit.holds)
                rep.witness.push_back(int_line("witness element x", crit.witness_element));
            return;
        }
    }
    verify(rep, "lattice verdict and element criterion agreed on every nonzero ideal");
}

void check_l213(RingContext& ctx, CheckReport& rep) {
    if (!commutative_gate(ctx, rep)) return;
    const LatticeAnalysis& an = ctx.analysis();
    for (int j = 0; j < an.count(); ++j) {
        if (j == an.zero_index()) continue;
        for (int i = 0; i < an.count(); ++i) {
            if (i == an.zero_index() || !an.leq(i, j)) continue;
            ++rep.instances;
            const ElementCriterionVerdict crit =
                nil_essential_element_criterion(an.ideal(i), an.ideal(j));
            if (crit.holds != ctx.ne_within(i, j)) {
                refute(rep,
                       "relative lattice verdict and relative element "
                       "criterion disagree");
                rep.witness.push_back(ideal_line("I", an, i));
                rep.witness.push_back(ideal_line("J", an, j));
                rep.witness.push_back(
                    bool_line("lattice verdict", ctx.ne_within(i, j)));
                rep.witness.push_back(bool_line("element criterion", crit.holds));
                return;
            }
        }
    }
    verify(rep,
           "relative lattice verdict and relative element criterion agreed "
           "on every nested pair of nonzero ideals");
}

void check_p214(RingContext& ctx, CheckReport& rep) {
    if (!commutative_gate(ctx, rep)) return;
    const LatticeAnalysis& an = ctx.analysis();
    for (int i = 0; i < an.count(); ++i) {
        ++rep.instances;
        const int r = an.lattice().index_of(radical_of_ideal(an.ideal(i)));
        if (!ctx.ne_within(i, r)) {
            refute(rep, "an ideal is not nil-essential inside its radical");
            rep.witness.push_back(ideal_line("I", an, i));
            rep.witness.push_back(ideal_line("rad(I)", an, r));
            return;
        }
    }
    verify(rep, "every ideal was nil-essential inside its radical");
}

void check_p215(RingContext& ctx, CheckReport& rep) {
    const LatticeAnalysis& an = ctx.analysis();
    const int m = an.count();
    for (int j1 = 0; j1 < m; ++j1) {
        for (int j2 = j1; j2 < m; ++j2) {
            if (an.intersection_index(j1, j2) != an.zero_index()) continue;
            for (int i1 = 0; i1 < m; ++i1) {
                if (!an.leq(i1, j1)) continue;
                for (int i2 = 0; i2 < m; ++i2) {
                    if (!an.leq(i2, j2)) continue;
                    ++rep.instances;
                    const bool lhs =
                        ctx.ne_within(i1, j1) && ctx.ne_within(i2, j2);
                    const int si = an.sum_index(i1, i2);
                    const int sj = an.sum_index(j1, j2);
                    const bool rhs = ctx.ne_within(si, sj);
                    if (lhs != rhs) {
                        refute(rep,
                               "componentwise nil-essentiality and "
                               "nil-essentiality of the direct sum disagree");
                        rep.witness.push_back(ideal_line("I1", an, i1));
                        rep.witness.push_back(ideal_line("J1", an, j1));
                        rep.witness.push_back(ideal_line("I2", an, i2));
                        rep.witness.push_back(ideal_line("J2", an, j2));
                        rep.witness.push_back(ideal_line("I1+I2", an, si));
                        rep.witness.push_back(ideal_line("J1+J2", an, sj));
                        rep.witness.push_back(bool_line("componentwise", lhs));
                        rep.witness.push_back(bool_line("direct sum", rhs));
                        return;
                    }
                }
            }
        }
    }
    verify(rep,
           "componentwise nil-essentiality matched nil-essentiality of the "
           "direct sum for every split pair");
}

void check_p216(RingContext& ctx, CheckReport& rep) {
    if (!commutative_gate(ctx, rep)) return;
    const LatticeAnalysis& an = ctx.analysis();
    for (int j = 0; j < an.count(); ++j) {
        for (int i = 0; i < an.count(); ++i) {
            if (!an.leq(i, j) || !ctx.ne_within(i, j)) continue;
            for (int a : an.ideal(j).elements()) {
                ++rep.instances;
                const Ideal quot = ideal_quotient(an.ideal(i), a);
                const int q = an.lattice().index_of(quot);
                if (!an.nil_essential(q).holds) {
                    refute(rep,
                           "an ideal quotient of a relatively nil-essential "
                           "ideal is not nil-essential");
                    rep.witness.push_back(ideal_line("I", an, i));
                    rep.witness.push_back(ideal_line("J", an, j));
                    rep.witness.push_back(
                        "a = " + ctx.ring()->element_names()[std::size_t(a)]);
                    rep.witness.push_back(ideal_line("(I : a)", an, q));
                    rep.witness.push_back(
                        ideal_line("mu", an, an.nil_essential(q).witness_index));
                    return;
                }
            }
        }
    }
    verify(rep,
           "every ideal quotient (I : a), a ranging over the larger ideal, "
           "was nil-essential in the ring");
}

void check_d217(RingContext& ctx, CheckReport& rep) {
    const LatticeAnalysis& an = ctx.analysis();
    for (int j = 0; j < an.count(); ++j) {
        for (int i = 0; i < an.count(); ++i) {
            if (!an.leq(i, j)) continue;
            ++rep.instances;
            std::vector<int> inclusion(std::size_t(ctx.ring()->order()), -1);
            for (int x : an.ideal(i).elements()) inclusion[std::size_t(x)] = x;
            const ModuleHom f =
                ModuleHom::checked(an.ideal(i), an.ideal(j), inclusion);
            const bool mono_verdict = is_nil_essential_mono(f, an).holds;
            if (mono_verdict != ctx.ne_within(i, j)) {
                refute(rep,
                       "inclusion-map verdict disagrees with relative "
                       "nil-essentiality");
                rep.witness.push_back(ideal_line("I", an, i));
                rep.witness.push_back(ideal_line("J", an, j));
                rep.witness.push_back(bool_line("inclusion map", mono_verdict));
                rep.witness.push_back(
                    bool_line("containment", ctx.ne_within(i, j)));
                return;
            }
        }
    }
    verify(rep,
           "inclusion maps were nil-essential monomorphisms exactly for "
           "nil-essentially contained ideals");
}

void check_p218(RingContext& ctx, CheckReport& rep) {
    const LatticeAnalysis& an = ctx.analysis();
    for (int j = 0; j < an.count(); ++j) {
        const KernelCollection& kernels = ctx.hom_kernels(j);
        if (kernels.cap_hit) {
            skip(rep, "hom survey capped: " + kernels.cap_reason);
            return;
        }
        for (int i = 0; i < an.count(); ++i) {
            if (!an.leq(i, j)) continue;
            ++rep.instances;
            const MonoCharacterization mc =
                check_mono_characterization(an, i, j, kernels);
            if (mc.cap_hit) {
                skip(rep, "hom survey capped: " + mc.cap_reason);
                return;
            }
            if (!mc.agree) {
                refute(rep,
                       "the three formulations of nil-essential containment "
                       "disagree");
                rep.witness.push_back(ideal_line("I", an, i));
                rep.witness.push_back(ideal_line("J", an, j));
                rep.witness.push_back(bool_line("containment", mc.clause_containment));
                rep.witness.push_back(
                    bool_line("inclusion map", mc.clause_inclusion_mono));
                rep.witness.push_back(bool_line("hom kernels", mc.clause_kernels));
                if (mc.witness_kernel_index >= 0) {
                    rep.witness.push_back(
                        ideal_line("ker(f)", an, mc.witness_kernel_index));
                    rep.witness.push_back(map_line("f", mc.witness_map));
                }
                return;
            }
        }
    }
    verify(rep,
           "containment, inclusion-map, and hom-kernel formulations agreed "
           "on every nested pair");
}

void check_p219(RingContext& ctx, CheckReport& rep) {
    if (ctx.ring()->order() > ctx.entry().caps.endo_cap) {
        skip(rep, "ring order " + std::to_string(ctx.ring()->order()) +
                      " exceeds the endomorphism cap " +
                      std::to_string(ctx.entry().caps.endo_cap));
        return;
    }
    const LatticeAnalysis& an = ctx.analysis();
    const std::vector<RingHom>& endos = ctx.unital_endomorphisms();
    for (const RingHom& f : endos) {
        for (int j = 0; j < an.count(); ++j) {
            if (!an.nil_essential(j).holds) continue;
            ++rep.instances;
            const Ideal pre = preimage_ideal(f, an.ideal(j));
            const int p = an.lattice().index_of(pre);
            if (!an.nil_essential(p).holds) {
                refute(rep,
                       "a preimage of a nil-essential ideal under a unital "
                       "endomorphism is not nil-essential");
                rep.witness.push_back(map_line("f", f.map));
                rep.witness.push_back(ideal_line("J", an, j));
                rep.witness.push_back(ideal_line("preimage", an, p));
                rep.witness.push_back(
                    ideal_line("mu", an, an.nil_essential(p).witness_index));
                return;
            }
        }
    }
    verify(rep, "preimages of nil-essential ideals under all " +
                    std::to_string(endos.size()) +
                    " unital endomorphisms were nil-essential");
}

void check_r220(RingContext& ctx, CheckReport& rep) {
    if (ctx.ring()->construction_tag() != "ut3:2") {
        skip(rep,
             "statement describes the order-16 constant-diagonal "
             "upper-triangular ring");
        return;
    }
    const LatticeAnalysis& an = ctx.analysis();
    const int n = ctx.ring()->order();

    // The nine expected left ideals, by coordinate pattern (a,b,c,d) over
    // Z/2: the whole ring, zero, the three lines through E13, E12, and
    // E12+E13, the (b,c)- and (c,d)-planes, the plane {(0,b,c,b)}, and the
    // strictly-upper-triangular cube.
    auto members = [&](const std::vector<Ut3Coords>& coords) {
        boost::dynamic_bitset<> bits(n);
        for (const auto& c : coords) bits.set(std::size_t(ut3_index(2, c)));
        return bits;
    };
    std::vector<boost::dynamic_bitset<>> expected;
    {
        boost::dynamic_bitset<> all(n);
        all.set();
        expected.push_back(all);                                   // I1 = R
        expected.push_back(members({{0, 0, 0, 0}}));               // I2 = 0
        expected.push_back(members({{0, 0, 0, 0}, {0, 0, 1, 0}}));  // I3
        expected.push_back(members({{0, 0, 0, 0}, {0, 1, 0, 0}}));  // I4
        expected.push_back(members(
            {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 1, 0}}));  // I5
        expected.push_back(members(
            {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}}));  // I6
        expected.push_back(members({{0, 0, 0, 0}, {0, 1, 1, 0}}));  // I7
        std::vector<Ut3Coords> cube;
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) cube.push_back({0, b, c, d});
        expected.push_back(members(cube));                          // I8
        expected.push_back(members(
            {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 1, 1, 1}}));  // I9
    }

    ++rep.instances;
    if (an.count() != int(expected.size())) {
        refute(rep, "expected exactly 9 left ideals, found " +
                        std::to_string(an.count()));
        return;
    }
    std::vector<int> where(expected.size(), -1);
    for (std::size_t e = 0; e < expected.size(); ++e) {
        ++rep.instances;
        for (int i = 0; i < an.count(); ++i) {
            if (an.ideal(i).membership() == expected[e]) {
                where[e] = i;
                break;
            }
        }
        if (where[e] < 0) {
            refute(rep, "expected left ideal #" + std::to_string(e + 1) +
                            " is missing from the lattice");
            return;
        }
    }

    const int i2 = where[1], i3 = where[2], i4 = where[3], i5 = where[4],
              i7 = where[6], i8 = where[7];
    auto expect = [&](bool condition, const std::string& what,
                      std::vector<std::string> lines) {
        if (rep.status == CheckStatus::refuted) return;
        ++rep.instances;
        if (!condition) {
            refute(rep, what);
            for (auto& l : lines) rep.witness.push_back(std::move(l));
        }
    };

    expect(an.nil_essential(i3).holds && !an.essential(i3).holds,
           "the E13 line must be nil-essential but not essential",
           {ideal_line("I3", an, i3)});
    expect(an.nil_essential(i4).holds && !an.essential(i4).holds,
           "the E12 line must be nil-essential but not essential",
           {ideal_line("I4", an, i4)});

    std::vector<int> trivial;
    for (int mu = 0; mu < an.count(); ++mu)
        if (an.intersection_index(i3, mu) == an.zero_index())
            trivial.push_back(mu);
    std::vector<int> expected_trivial = {i2, i4, i7};
    std::sort(expected_trivial.begin(), expected_trivial.end());
    expect(trivial == expected_trivial,
           "the ideals meeting the E13 line trivially must be exactly the "
           "zero ideal, the E12 line, and the E12+E13 line",
           {ideal_line("I3", an, i3)});

    int ne_count = 0;
    for (int i = 0; i < an.count(); ++i)
        if (an.nil_essential(i).holds) ++ne_count;
    expect(ne_count == 8 && !an.nil_essential(i2).holds,
           "exactly the eight nonzero left ideals must be nil-essential",
           {int_line("nil-essential count", ne_count)});

    std::vector<int> essential;
    for (int i = 0; i < an.count(); ++i)
        if (an.essential(i).holds) essential.push_back(i);
    std::vector<int> expected_essential = {i5, i8, an.ring_index()};
    std::sort(expected_essential.begin(), expected_essential.end());
    expect(essential == expected_essential,
           "the essential left ideals must be exactly the (b,c)-plane, the "
           "strictly-upper cube, and the whole ring",
           {int_line("essential count", int(essential.size()))});

    if (rep.status != CheckStatus::refuted)
        verify(rep,
               "the left ideal lattice has exactly the nine expected members "
               "with the expected essentiality pattern");
}

void check_p222(RingContext& ctx, CheckReport& rep) {
    if (!commutative_gate(ctx, rep)) return;
    if (!nonzero_sets_gate(ctx, rep)) return;
    const LatticeAnalysis& an = ctx.analysis();
    const MultiplicativeSet nzd = non_zero_divisors(ctx.ring());
    const LocalizationFacts facts = ctx.localize_and_classify(nzd);
    for (int i = 0; i < an.count(); ++i) {
        ++rep.instances;
        const bool base_ne = an.nil_essential(i).holds;
        const bool local_ne = facts.localized_nil_essential[std::size_t(i)] != 0;
        if (base_ne != local_ne) {
            refute(rep,
                   "nil-essentiality changed under localization at the "
                   "non-zero-divisors");
            rep.witness.push_back("S = " + facts.set_display);
            rep.witness.push_back(ideal_line("I", an, i));
            rep.witness.push_back(
                "S^-1 I = " + facts.localized_display[std::size_t(i)]);
            rep.witness.push_back(bool_line("I nil-essential", base_ne));
            rep.witness.push_back(bool_line("S^-1 I nil-essential", local_ne));
            return;
        }
    }
    verify(rep,
           "nil-essentiality transferred both ways under localization at the "
           "non-zero-divisors S = " + facts.set_display);
}

// The one-directional localization claim is annotated in its source as
// failing in general, so a live counterexample is reported as expected
// behavior (with the witness), never as a refutation; X223 carries the
// existence duty for that counterexample.
void check_c223(RingContext& ctx, CheckReport& rep) {
    if (!commutative_gate(ctx, rep)) return;
    if (!nonzero_sets_gate(ctx, rep)) return;
    const LatticeAnalysis& an = ctx.analysis();
    for (const LocalizationFacts& facts : ctx.localization_survey()) {
        for (int i = 0; i < an.count(); ++i) {
            ++rep.instances;
            if (facts.localized_nil_essential[std::size_t(i)] != 0 &&
                !an.nil_essential(i).holds) {
                verify(rep,
                       "the claimed implication fails here, as its source "
                       "itself warns; the caveat's witness follows");
                rep.witness.push_back("S = " + facts.set_display);
                rep.witness.push_back(ideal_line("I", an, i));
                rep.witness.push_back(
                    "S^-1 I = " + facts.localized_display[std::size_t(i)]);
                rep.witness.push_back(
                    ideal_line("mu", an, an.nil_essential(i).witness_index));
                return;
            }
        }
    }
    verify(rep,
           "no localization promoted a non-nil-essential ideal on this ring; "
           "the claimed implication held over every multiplicative subset");
}

void check_x223(RingContext& ctx, CheckReport& rep) {
    if (!commutative_gate(ctx, rep)) return;
    if (!nonzero_sets_gate(ctx, rep)) return;
    const LatticeAnalysis& an = ctx.analysis();
    for (const LocalizationFacts& facts : ctx.localization_survey()) {
        for (int i = 0; i < an.count(); ++i) {
            ++rep.instances;
            if (facts.localized_nil_essential[std::size_t(i)] != 0 &&
                !an.nil_essential(i).holds) {
                verify(rep,
                       "counterexample confirmed: the localized ideal is "
                       "nil-essential while the base ideal is not");
                rep.witness.push_back("S = " + facts.set_display);
                rep.witness.push_back(ideal_line("I", an, i));
                rep.witness.push_back(
                    "S^-1 I = " + facts.localized_display[std::size_t(i)]);
                rep.witness.push_back(
                    ideal_line("mu", an, an.nil_essential(i).witness_index));
                return;
            }
        }
    }
    skip(rep,
         "no multiplicative subset and ideal of this ring realize the "
         "counterexample");
}

void check_e224(RingContext& ctx, CheckReport& rep) {
    const std::string& tag = ctx.ring()->construction_tag();
    bool prime_power = false;
    if (tag.rfind("cyclic:", 0) == 0) {
        int n = std::stoi(tag.substr(7));
        if (n >= 2) {
            int p = 2;
            while (n % p != 0) ++p;
            while (n % p == 0) n /= p;
            prime_power = (n == 1);
        }
    }
    if (!prime_power) {
        skip(rep, "hypothesis names the rings Z/p^k, p prime, k >= 1");
        return;
    }
    const LatticeAnalysis& an = ctx.analysis();
    for (const LocalizationFacts& facts : ctx.localization_survey()) {
        for (int i = 0; i < an.count(); ++i) {
            ++rep.instances;
            const bool base_ess = an.essential(i).holds;
            const bool local_ne =
                facts.localized_nil_essential[std::size_t(i)] != 0;
            if (base_ess != local_ne) {
                refute(rep,
                       "essentiality of the base ideal and nil-essentiality "
                       "of its localization disagree");
                rep.witness.push_back("S = " + facts.set_display);
                rep.witness.push_back(ideal_line("I", an, i));
                rep.witness.push_back(
                    "S^-1 I = " + facts.localized_display[std::size_t(i)]);
                rep.witness.push_back(bool_line("I essential", base_ess));
                rep.witness.push_back(bool_line("S^-1 I nil-essential", local_ne));
                return;
            }
        }
    }
    verify(rep, "essential ideals were exactly those with nil-essential "
                "localizations, over all " +
                    std::to_string(ctx.localization_survey().size()) +
                    " multiplicative subsets");
}

using CheckFn = void (*)(RingContext&, CheckReport&);

const std::vector<std::pair<std::string, CheckFn>>& check_table() {
    static const std::vector<std::pair<std::string, CheckFn>> table = {
        {"P201", check_p201},   {"C202", check_c202}, {"X202", check_x202},
        {"C203", check_c203},   {"C204", check_c204}, {"C205", check_c205},
        {"X205", check_x205},   {"P206", check_p206}, {"P207", check_p207},
        {"C208", check_c208},   {"C209", check_c209}, {"C210", check_c210},
        {"R211a", check_r211a}, {"L212", check_l212}, {"L213", check_l213},
        {"P214", check_p214},   {"P215", check_p215}, {"P216", check_p216},
        {"D217", check_d217},   {"P218", check_p218}, {"P219", check_p219},
        {"R220", check_r220},   {"P222", check_p222}, {"C223", check_c223},
        {"X223", check_x223},   {"E224", check_e224},
    };
    return table;
}

}  // namespace

CheckReport run_check(const std::string& check_id, RingContext& context) {
    CheckFn fn = nullptr;
    for (const auto& [id, f] : check_table())
        if (id == check_id) fn = f;
    if (!fn) throw InvalidParameter("unknown check id: " + check_id);

    CheckReport rep;
    rep.check_id = check_id;
    rep.ring = context.entry().spec.to_string();
    rep.sidedness = context.sidedness_name();
    const auto t0 = std::chrono::steady_clock::now();
    fn(context, rep);
    const auto t1 = std::chrono::steady_clock::now();
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

std::vector<CheckReport> run_suite(const Corpus& corpus,
                                   const std::vector<std::string>& selection,
                                   int jobs) {
    std::vector<std::string> requested = selection;
    if (requested.empty()) requested = corpus.selection;
    for (const auto& id : requested) registry_entry(id);  // validate early

    // Normalize any subset to registry order so the report layout does not
    // depend on how the selection was spelled.
    std::vector<std::string> ids;
    if (requested.empty()) {
        for (const auto& info : registry()) ids.push_back(info.id);
    } else {
        const std::set<std::string> wanted(requested.begin(), requested.end());
        for (const auto& info : registry())
            if (wanted.count(info.id) != 0) ids.push_back(info.id);
    }

    const int n = int(corpus.entries.size());
    std::vector<std::vector<CheckReport>> rows;
    rows.resize(std::size_t(n));
    std::vector<std::exception_ptr> errors;
    errors.resize(std::size_t(n));

    const int threads = std::max(1, jobs);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int e = 0; e < n; ++e) {
        try {
            RingContext ctx(corpus.entries[std::size_t(e)]);
            for (const auto& id : ids)
                rows[std::size_t(e)].push_back(run_check(id, ctx));
        } catch (...) {
            errors[std::size_t(e)] = std::current_exception();
        }
    }
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);

    std::vector<CheckReport> flat;
    for (auto& row : rows)
        for (auto& rep : row) flat.push_back(std::move(rep));
    return flat;
}

// ---------------------------------------------------------------------------
// hunts
// ---------------------------------------------------------------------------

namespace {

/// Returns true when the hunt is finished (witness found or budget spent).
using HuntFn = bool (*)(RingContext&, HuntResult&);

bool spend(HuntResult& res) {
    ++res.instances;
    return res.instances >= res.budget;
}

bool hunt_x202(RingContext& ctx, HuntResult& res) {
    const LatticeAnalysis& an = ctx.analysis();
    for (int a = 0; a < an.count(); ++a) {
        for (int b = a + 1; b < an.count(); ++b) {
            const bool out_of_budget = spend(res);
            const int m = an.intersection_index(a, b);
            if (an.nil_essential(a).holds && an.nil_essential(b).holds &&
                !an.nil_essential(m).holds) {
                res.found = true;
                res.witness.push_back(ideal_line("I", an, a));
                res.witness.push_back(ideal_line("J", an, b));
                res.witness.push_back(ideal_line("meet(I,J)", an, m));
                return true;
            }
            if (out_of_budget) return true;
        }
    }
    return false;
}

bool hunt_x205(RingContext& ctx, HuntResult& res) {
    const LatticeAnalysis& an = ctx.analysis();
    const int zero = an.zero_index();
    for (int i = 0; i < an.count(); ++i) {
        if (i == zero) continue;
        const bool out_of_budget = spend(res);
        if (an.nil_essential(i).holds && an.product_index(i, i) == zero &&
            !an.nil_essential(zero).holds) {
            res.found = true;
            res.witness.push_back(ideal_line("I", an, i));
            res.witness.push_back(ideal_line("I*I", an, zero));
            return true;
        }
        if (out_of_budget) return true;
    }
    return false;
}

bool hunt_x223(RingContext& ctx, HuntResult& res) {
    if (!ctx.ring()->commutative() || ctx.ring()->order() == 1) return false;
    const LatticeAnalysis& an = ctx.analysis();
    for (const LocalizationFacts& facts : ctx.localization_survey()) {
        for (int i = 0; i < an.count(); ++i) {
            const bool out_of_budget = spend(res);
            if (facts.localized_nil_essential[std::size_t(i)] != 0 &&
                !an.nil_essential(i).holds) {
                res.found = true;
                res.witness.push_back("S = " + facts.set_display);
                res.witness.push_back(ideal_line("I", an, i));
                res.witness.push_back(
                    "S^-1 I = " + facts.localized_display[std::size_t(i)]);
                return true;
            }
            if (out_of_budget) return true;
        }
    }
    return false;
}

bool hunt_p201_converse(RingContext& ctx, HuntResult& res) {
    const LatticeAnalysis& an = ctx.analysis();
    for (int i = 0; i < an.count(); ++i) {
        for (int j = 0; j < an.count(); ++j) {
            if (i == j || !an.leq(i, j)) continue;
            const bool out_of_budget = spend(res);
            if (an.nil_essential(j).holds && !an.nil_essential(i).holds) {
                res.found = true;
                res.witness.push_back(ideal_line("I", an, i));
                res.witness.push_back(ideal_line("J", an, j));
                res.witness.push_back(
                    ideal_line("mu", an, an.nil_essential(i).witness_index));
                return true;
            }
            if (out_of_budget) return true;
        }
    }
    return false;
}

bool hunt_p206_converse(RingContext& ctx, HuntResult& res) {
    const LatticeAnalysis& an = ctx.analysis();
    const int m = an.count();
    for (int k = 0; k < m; ++k) {
        for (int j = 0; j < m; ++j) {
            if (!an.leq(j, k)) continue;
            for (int i = 0; i < m; ++i) {
                if (!an.leq(i, j)) continue;
                const bool out_of_budget = spend(res);
                if (ctx.ne_within(i, j) && ctx.ne_within(j, k) &&
                    !ctx.ne_within(i, k)) {
                    res.found = true;
                    res.witness.push_back("part = intermediate-stages");
                    res.witness.push_back(ideal_line("I", an, i));
                    res.witness.push_back(ideal_line("J", an, j));
                    res.witness.push_back(ideal_line("K", an, k));
                    return true;
                }
                if (out_of_budget) return true;
            }
        }
    }
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < m; ++i) {
            if (!an.leq(i, k)) continue;
            for (int l = i; l < m; ++l) {
                if (!an.leq(l, k)) continue;
                const bool out_of_budget = spend(res);
                const int meet = an.intersection_index(i, l);
                if (ctx.ne_within(i, k) && ctx.ne_within(l, k) &&
                    !ctx.ne_within(meet, k)) {
                    res.found = true;
                    res.witness.push_back("part = intersection-terms");
                    res.witness.push_back(ideal_line("I", an, i));
                    res.witness.push_back(ideal_line("L", an, l));
                    res.witness.push_back(ideal_line("K", an, k));
                    res.witness.push_back(ideal_line("meet(I,L)", an, meet));
                    return true;
                }
                if (out_of_budget) return true;
            }
        }
    }
    return false;
}

const std::vector<std::pair<CheckInfo, HuntFn>>& hunt_table() {
    static const std::vector<std::pair<CheckInfo, HuntFn>> table = {
        {{"X202",
          "hunt: two nil-essential ideals with a non-nil-essential intersection"},
         hunt_x202},
        {{"X205",
          "hunt: a nil-essential ideal squaring to the non-nil-essential zero ideal"},
         hunt_x205},
        {{"X223",
          "hunt: a localization that is nil-essential over a base ideal that is not"},
         hunt_x223},
        {{"P201-converse-probe",
          "hunt: an ideal that is not nil-essential below one that is"},
         hunt_p201_converse},
        {{"P206-converse-probe",
          "hunt: relative nil-essentiality failing to compose or to descend "
          "to an intersection"},
         hunt_p206_converse},
    };
    return table;
}

}  // namespace

const std::vector<CheckInfo>& huntable_claims() {
    static const std::vector<CheckInfo> ids = [] {
        std::vector<CheckInfo> out;
        for (const auto& [info, fn] : hunt_table()) out.push_back(info);
        return out;
    }();
    return ids;
}

HuntResult hunt_counterexample(const std::string& claim_id,
                               const Corpus& corpus, long budget) {
    if (budget <= 0) throw InvalidParameter("hunt budget must be positive");
    HuntFn fn = nullptr;
    for (const auto& [info, f] : hunt_table())
        if (info.id == claim_id) fn = f;
    if (!fn) throw InvalidParameter("unknown hunt claim id: " + claim_id);

    HuntResult res;
    res.claim_id = claim_id;
    res.budget = budget;
    for (const auto& entry : corpus.entries) {
        RingContext ctx(entry);
        ++res.rings_searched;
        const bool finished = fn(ctx, res);
        if (res.found) res.ring = entry.spec.to_string();
        if (finished) break;
    }
    return res;
}

}  // namespace nilring
