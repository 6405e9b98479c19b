#include <set>

#include "doctest.h"
#include "nilring/hom.hpp"

using namespace nilring;

namespace {

LatticeAnalysis analyze(const RingPtr& ring, Sidedness side) {
    return LatticeAnalysis(enumerate_ideals(ring, side), kernels::Mode::serial);
}

}  // namespace

TEST_CASE("ring endomorphism enumeration") {
    CHECK(enumerate_ring_endomorphisms(make_cyclic_ring(6), true).size() == 1);
    CHECK(enumerate_ring_endomorphisms(make_cyclic_ring(6), false).size() == 4);

    const RingPtr z2z2 = make_product_ring({make_cyclic_ring(2), make_cyclic_ring(2)});
    const auto unital = enumerate_ring_endomorphisms(z2z2, true);
    CHECK(unital.size() == 4);  // identity, swap, (a,b)->(a,a), (a,b)->(b,b)
    CHECK(enumerate_ring_endomorphisms(z2z2, false).size() == 9);

    const RingPtr ut = make_ut3_ring(2);
    const auto ut_unital = enumerate_ring_endomorphisms(ut, true);
    CHECK(ut_unital.size() == 32);
    CHECK(enumerate_ring_endomorphisms(ut, false).size() == 33);

    // all maps are distinct, genuinely unital, and closed under composition
    std::set<std::vector<int>> tables;
    for (const RingHom& f : ut_unital) {
        CHECK(f.unital);
        CHECK(f(ut->one()) == ut->one());
        tables.insert(f.map);
    }
    CHECK(tables.size() == ut_unital.size());
    for (const RingHom& f : ut_unital)
        for (const RingHom& g : ut_unital) {
            std::vector<int> composed(f.map.size());
            for (std::size_t x = 0; x < composed.size(); ++x)
                composed[x] = f.map[std::size_t(g.map[x])];
            CHECK(tables.count(composed) == 1);
        }
}

TEST_CASE("endomorphism enumeration respects the cap") {
    Caps caps;
    caps.endo_cap = 4;
    CHECK_THROWS_AS(enumerate_ring_endomorphisms(make_cyclic_ring(12), true, caps),
                    CapExceeded);
}

TEST_CASE("module hom enumeration over the integers mod 12") {
    const RingPtr r = make_cyclic_ring(12);
    const LatticeAnalysis an = analyze(r, Sidedness::two_sided);
    REQUIRE(an.count() == 6);
    const Ideal& i6 = an.ideal(1);
    const Ideal& i4 = an.ideal(2);
    const Ideal& i2 = an.ideal(4);
    REQUIRE(i2.display() == "(2)");

    // Hom((2), (2)) is multiplication by 0..5 on a cyclic module of size 6.
    CHECK(enumerate_module_homs(i2, i2).size() == 6);
    // (4) has additive order 3 and (6) has order 2: only the zero map fits.
    CHECK(enumerate_module_homs(i4, i6).size() == 1);

    for (const ModuleHom& f : enumerate_module_homs(i2, i2)) {
        // entries outside the source are unset
        for (int x = 0; x < r->order(); ++x)
            CHECK((f.map[std::size_t(x)] >= 0) == i2.contains(x));
        CHECK(kernel_ideal(f).size() * image_ideal(f).size() == i2.size());
    }

    std::vector<int> identity(12, -1);
    for (int x : i2.elements()) identity[std::size_t(x)] = x;
    const ModuleHom id = ModuleHom::checked(i2, i2, identity);
    CHECK(id.injective());
    CHECK(kernel_ideal(id).is_zero());
    CHECK(image_ideal(id) == i2);

    std::vector<int> broken = identity;
    broken[2] = 4;  // no longer additive: 2+2 = 4 but 4+4 = 8
    CHECK_THROWS_AS(ModuleHom::checked(i2, i2, broken), InvalidParameter);

    Caps tight;
    tight.hom_target_cap = 2;
    CHECK_THROWS_AS(enumerate_module_homs(i2, an.ideal(5), tight), CapExceeded);
}

TEST_CASE("preimages under ring homs are ideals") {
    const RingPtr r = make_cyclic_ring(12);
    const Ideal i6 = principal_ideal(r, 6, Sidedness::two_sided);
    const QuotientResult q = make_quotient_ring(r, i6);
    const LatticeAnalysis qan = analyze(q.ring, Sidedness::two_sided);
    REQUIRE(qan.count() == 4);  // quotient is the integers mod 6

    // preimage of zero is the kernel; preimages refine to the lattice over (6)
    CHECK(preimage_ideal(q.projection, zero_ideal(q.ring, Sidedness::two_sided)) == i6);
    CHECK(preimage_ideal(q.projection, unit_ideal(q.ring, Sidedness::two_sided))
              .is_whole_ring());
    for (int i = 0; i < qan.count(); ++i) {
        const Ideal pre = preimage_ideal(q.projection, qan.ideal(i));
        CHECK(pre.size() == qan.ideal(i).size() * i6.size());
        CHECK(is_subideal(i6, pre));
    }
}

TEST_CASE("nil-essential monomorphisms via inclusions") {
    const RingPtr r = make_cyclic_ring(12);
    const LatticeAnalysis an = analyze(r, Sidedness::two_sided);
    const Ideal& i6 = an.ideal(1);
    const Ideal& i4 = an.ideal(2);
    const Ideal& i2 = an.ideal(4);

    auto inclusion = [&](const Ideal& inner, const Ideal& outer) {
        std::vector<int> map(std::size_t(r->order()), -1);
        for (int x : inner.elements()) map[std::size_t(x)] = x;
        return ModuleHom::checked(inner, outer, map);
    };

    CHECK_FALSE(is_nil_essential_mono(inclusion(i6, i2), an).holds);  // (4) defeats it
    CHECK(is_nil_essential_mono(inclusion(i4, i2), an).holds);        // only (6) is missed
    CHECK(is_nil_essential_mono(inclusion(i2, i2), an).holds);

    std::vector<int> zero_map(std::size_t(r->order()), -1);
    for (int x : i2.elements()) zero_map[std::size_t(x)] = 0;
    CHECK_THROWS_AS(is_nil_essential_mono(ModuleHom::checked(i2, i2, zero_map), an),
                    NotMono);
}

TEST_CASE("hom kernel survey over the integers mod 12") {
    const RingPtr r = make_cyclic_ring(12);
    const LatticeAnalysis an = analyze(r, Sidedness::two_sided);
    const KernelCollection kc = collect_hom_kernels(an, 4);  // source (2)
    CHECK(kc.source_index == 4);
    CHECK_FALSE(kc.cap_hit);
    CHECK(kc.hom_count == 20);
    // every ideal under (2) occurs as a kernel: (0), (6), (4), (2)
    std::vector<int> kernel_indices;
    for (const auto& entry : kc.entries) kernel_indices.push_back(entry.kernel_index);
    CHECK(kernel_indices == std::vector<int>{0, 1, 2, 4});
    for (const auto& entry : kc.entries) {
        const ModuleHom f = ModuleHom::checked(an.ideal(4), an.ideal(entry.target_index),
                                               entry.example_map);
        CHECK(an.lattice().index_of(kernel_ideal(f)) == entry.kernel_index);
    }

    Caps tight;
    tight.hom_target_cap = 2;
    const KernelCollection capped = collect_hom_kernels(an, 4, tight);
    CHECK(capped.cap_hit);
    CHECK_FALSE(capped.cap_reason.empty());
}

TEST_CASE("the three-clause mono characterization agrees with itself") {
    const RingPtr r = make_cyclic_ring(12);
    const LatticeAnalysis an = analyze(r, Sidedness::two_sided);
    for (int j = 0; j < an.count(); ++j) {
        const KernelCollection kc = collect_hom_kernels(an, j);
        for (int i = 0; i < an.count(); ++i) {
            if (!an.leq(i, j)) continue;
            const MonoCharacterization mc = check_mono_characterization(an, i, j, kc);
            CAPTURE(i);
            CAPTURE(j);
            CHECK_FALSE(mc.cap_hit);
            CHECK(mc.agree);
            CHECK(mc.clause_containment == mc.clause_inclusion_mono);
            CHECK(mc.clause_containment == mc.clause_kernels);
        }
    }
    // spot values: (6) inside (2) fails, (4) inside (2) holds
    const MonoCharacterization fails = check_mono_characterization(an, 1, 4);
    CHECK_FALSE(fails.clause_containment);
    const MonoCharacterization holds = check_mono_characterization(an, 2, 4);
    CHECK(holds.clause_containment);
}
