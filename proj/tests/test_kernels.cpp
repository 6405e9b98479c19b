#include <cstdint>
#include <vector>

#include "doctest.h"
#include "nilring/kernels.hpp"
#include "nilring/ring.hpp"

using namespace nilring;
using kernels::Mode;

namespace {

std::vector<RingPtr> sample_rings() {
    return {
        make_cyclic_ring(1),
        make_cyclic_ring(12),
        make_cyclic_ring(36),
        make_ut3_ring(2),
        make_ut3_ring(3),
        make_product_ring({make_cyclic_ring(2), make_cyclic_ring(8)}),
    };
}

std::vector<std::uint16_t> copy_add(const FiniteRing& r) {
    const int n = r.order();
    std::vector<std::uint16_t> v(std::size_t(n) * std::size_t(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) v[std::size_t(a) * n + b] = std::uint16_t(r.add(a, b));
    return v;
}

std::vector<std::uint16_t> copy_mul(const FiniteRing& r) {
    const int n = r.order();
    std::vector<std::uint16_t> v(std::size_t(n) * std::size_t(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) v[std::size_t(a) * n + b] = std::uint16_t(r.mul(a, b));
    return v;
}

}  // namespace

TEST_CASE("serial and parallel kernels agree on valid rings") {
    for (const RingPtr& ring : sample_rings()) {
        CAPTURE(ring->construction_tag());
        const TableView t = ring->tables();
        CHECK_FALSE(kernels::find_axiom_violation(t, Mode::serial).has_value());
        CHECK_FALSE(kernels::find_axiom_violation(t, Mode::parallel).has_value());
        CHECK(kernels::element_nilpotency_mask(t, Mode::serial) ==
              kernels::element_nilpotency_mask(t, Mode::parallel));
        CHECK(kernels::tables_commutative(t, Mode::serial) ==
              kernels::tables_commutative(t, Mode::parallel));
    }
}

TEST_CASE("nilpotency mask matches the brute-force power walk") {
    for (const RingPtr& ring : sample_rings()) {
        CAPTURE(ring->construction_tag());
        const auto mask = kernels::element_nilpotency_mask(ring->tables(), Mode::parallel);
        REQUIRE(int(mask.size()) == ring->order());
        for (int a = 0; a < ring->order(); ++a) {
            bool brute = false;
            int p = a;
            for (int k = 1; k <= ring->order() && !brute; ++k) {
                if (p == ring->zero()) brute = true;
                p = ring->mul(p, a);
            }
            CHECK(bool(mask[std::size_t(a)]) == brute);
            CHECK(bool(mask[std::size_t(a)]) == ring->nilpotent_element(a));
        }
    }
}

TEST_CASE("commutativity scan matches the table definition") {
    for (const RingPtr& ring : sample_rings()) {
        CAPTURE(ring->construction_tag());
        bool brute = true;
        for (int a = 0; brute && a < ring->order(); ++a)
            for (int b = 0; brute && b < ring->order(); ++b)
                if (ring->mul(a, b) != ring->mul(b, a)) brute = false;
        CHECK(kernels::tables_commutative(ring->tables(), Mode::serial) == brute);
        CHECK(ring->commutative() == brute);
    }
}

TEST_CASE("serial and parallel report the same first axiom violation") {
    const RingPtr base = make_cyclic_ring(6);
    const int n = base->order();
    struct Tamper {
        const char* label;
        bool in_mul;
        int row, col, value;
    };
    // Each tamper breaks at least one ring law somewhere in the tables.
    const std::vector<Tamper> tampers = {
        {"additive entry", false, 2, 3, 0},
        {"additive identity row", false, 0, 4, 1},
        {"multiplicative identity", true, 1, 1, 0},
        {"product entry", true, 2, 3, 1},
        {"another product entry", true, 5, 2, 3},
    };
    for (const Tamper& tamper : tampers) {
        CAPTURE(tamper.label);
        auto add = copy_add(*base);
        auto mul = copy_mul(*base);
        auto& table = tamper.in_mul ? mul : add;
        table[std::size_t(tamper.row) * n + tamper.col] = std::uint16_t(tamper.value);
        const TableView t{n, add.data(), mul.data(), base->zero(), base->one()};
        const auto serial = kernels::find_axiom_violation(t, Mode::serial);
        const auto parallel = kernels::find_axiom_violation(t, Mode::parallel);
        REQUIRE(serial.has_value());
        REQUIRE(parallel.has_value());
        CHECK(serial->axiom == parallel->axiom);
        CHECK(serial->witness == parallel->witness);
        CHECK_THROWS_AS(FiniteRing::create(add, mul, base->zero(), base->one(),
                                           base->element_names(), "tampered"),
                        AxiomViolation);
    }
}

TEST_CASE("a wrong identity element is reported as a violation") {
    const RingPtr base = make_cyclic_ring(6);
    auto add = copy_add(*base);
    auto mul = copy_mul(*base);
    const TableView t{base->order(), add.data(), mul.data(), base->zero(), 2};
    const auto serial = kernels::find_axiom_violation(t, Mode::serial);
    const auto parallel = kernels::find_axiom_violation(t, Mode::parallel);
    REQUIRE(serial.has_value());
    REQUIRE(parallel.has_value());
    CHECK(serial->axiom == parallel->axiom);
    CHECK(serial->witness == parallel->witness);
}
