#include <string>
#include <vector>

#include "doctest.h"
#include "nilring/localization.hpp"
#include "nilring/predicates.hpp"
#include "nilring/registry.hpp"

using namespace nilring;

TEST_CASE("multiplicative closures") {
    const RingPtr z6 = make_cyclic_ring(6);
    const MultiplicativeSet s = multiplicative_closure(z6, {3});
    CHECK(s.members == std::vector<int>{1, 3});
    CHECK(s.display() == "{1,3}");
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(2));

    // closure always contains 1, even from an empty seed
    CHECK(multiplicative_closure(z6, {}).members == std::vector<int>{1});

    const RingPtr z8 = make_cyclic_ring(8);
    CHECK_THROWS_AS(multiplicative_closure(z8, {2}), ZeroInClosure);
    try {
        multiplicative_closure(z8, {2});
    } catch (const ZeroInClosure& e) {
        CHECK(e.chain() == "2 * 2 * 2 = 0");
    }
    CHECK_THROWS_AS(multiplicative_closure(z8, {0}), ZeroInClosure);
    CHECK_THROWS_AS(multiplicative_closure(make_ut3_ring(2), {}), NotCommutative);
    CHECK_THROWS_AS(multiplicative_closure(make_cyclic_ring(1), {}), ZeroInClosure);
}

TEST_CASE("non-zero-divisors") {
    CHECK(non_zero_divisors(make_cyclic_ring(12)).members ==
          std::vector<int>{1, 5, 7, 11});
    CHECK(non_zero_divisors(make_cyclic_ring(6)).members == std::vector<int>{1, 5});
    CHECK(non_zero_divisors(make_cyclic_ring(8)).members ==
          std::vector<int>{1, 3, 5, 7});
    CHECK(non_zero_divisors(make_cyclic_ring(5)).members ==
          std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("multiplicative set enumeration is exhaustive and canonical") {
    const RingPtr z6 = make_cyclic_ring(6);
    const auto sets = enumerate_multiplicative_sets(z6);
    std::vector<std::string> displays;
    for (const auto& s : sets) displays.push_back(s.display());
    CHECK(displays == std::vector<std::string>{"{1}", "{1,3}", "{1,4}", "{1,5}",
                                               "{1,2,4}", "{1,3,5}", "{1,2,4,5}"});
    CHECK(enumerate_multiplicative_sets(make_cyclic_ring(8)).size() == 5);
    CHECK(enumerate_multiplicative_sets(make_cyclic_ring(12)).size() == 30);

    // brute cross-check on Z/12: every 0-free multiplicatively closed subset
    // containing 1 must appear exactly once
    const RingPtr z12 = make_cyclic_ring(12);
    const auto z12_sets = enumerate_multiplicative_sets(z12);
    long closed_count = 0;
    for (unsigned mask = 0; mask < (1u << 12); ++mask) {
        if (!(mask & 2u) || (mask & 1u)) continue;  // must contain 1, avoid 0
        bool closed = true;
        for (int a = 0; closed && a < 12; ++a)
            for (int b = 0; closed && b < 12; ++b)
                if ((mask >> a & 1u) && (mask >> b & 1u) &&
                    !(mask >> z12->mul(a, b) & 1u))
                    closed = false;
        if (closed) ++closed_count;
    }
    CHECK(closed_count == long(z12_sets.size()));
}

TEST_CASE("localizing the integers mod 6 away from 3") {
    const RingPtr z6 = make_cyclic_ring(6);
    const LocalizedRing loc = localize_ring(z6, multiplicative_closure(z6, {3}));
    CHECK(loc.result->order() == 2);
    CHECK(loc.kernel.display() == "(2)");
    CHECK(loc.canonical.unital);
    CHECK(loc.class_reps[0] == std::pair<int, int>{0, 1});
    // the canonical map factors exactly through the kernel
    for (int x = 0; x < 6; ++x)
        CHECK((loc.canonical(x) == loc.canonical(0)) == loc.kernel.contains(x));

    const Ideal i3 = principal_ideal(z6, 3, Sidedness::two_sided);
    const Ideal i2 = principal_ideal(z6, 2, Sidedness::two_sided);
    CHECK(localize_ideal(loc, i3).is_whole_ring());  // 3 becomes a unit
    CHECK(localize_ideal(loc, i2).is_zero());        // (2) is the kernel
}

TEST_CASE("localizing at the non-zero-divisors changes nothing") {
    const RingPtr z12 = make_cyclic_ring(12);
    const LocalizedRing loc = localize_ring(z12, non_zero_divisors(z12));
    CHECK(loc.result->order() == 12);
    CHECK(loc.kernel.is_zero());
    std::vector<bool> hit(12, false);
    for (int x = 0; x < 12; ++x) hit[std::size_t(loc.canonical(x))] = true;
    for (bool h : hit) CHECK(h);  // the canonical map is a bijection
}

TEST_CASE("survey verdicts match direct localization") {
    // The survey memoizes verdicts per kernel; recompute every localization
    // directly and demand identical facts.
    for (const char* spec :
         {"cyclic:4", "cyclic:6", "cyclic:8", "cyclic:12", "product:cyclic:2+cyclic:4"}) {
        CAPTURE(spec);
        RingContext ctx(CorpusEntry{RingSpec::parse(spec), Caps{}});
        const LatticeAnalysis& an = ctx.analysis();
        const auto& sets = ctx.multiplicative_sets();
        const auto& survey = ctx.localization_survey();
        REQUIRE(survey.size() == sets.size());
        for (std::size_t k = 0; k < sets.size(); ++k) {
            CAPTURE(sets[k].display());
            const LocalizationFacts& facts = survey[k];
            CHECK(facts.set_display == sets[k].display());
            CHECK(facts.set_members == sets[k].members);

            const LocalizedRing loc = localize_ring(ctx.ring(), sets[k]);
            CHECK(facts.kernel_index == an.lattice().index_of(loc.kernel));
            CHECK(facts.result_order == loc.result->order());
            const LatticeAnalysis loc_an(
                enumerate_ideals(loc.result, Sidedness::two_sided));
            for (int i = 0; i < an.count(); ++i) {
                const Ideal localized = localize_ideal(loc, an.ideal(i));
                CHECK(facts.localized_display[std::size_t(i)] == localized.display());
                const int li = loc_an.lattice().index_of(localized);
                CHECK(bool(facts.localized_nil_essential[std::size_t(i)]) ==
                      loc_an.nil_essential(li).holds);
            }
        }
    }
}
