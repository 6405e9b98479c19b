// Compares the OpenMP kernels against their serial reference
// implementations on the largest corpus rings. Run with --benchmark_filter
// to focus on one family.

#include <benchmark/benchmark.h>

#include "nilring/kernels.hpp"
#include "nilring/predicates.hpp"

using namespace nilring;
using kernels::Mode;

namespace {

const FiniteRing& ut3_3() {
    static const RingPtr ring = make_ut3_ring(3);  // order 81
    return *ring;
}

const FiniteRing& z8_squared() {
    static const RingPtr ring =
        make_product_ring({make_cyclic_ring(8), make_cyclic_ring(8)});  // order 64
    return *ring;
}

const IdealLattice& ut3_3_left_lattice() {
    static const IdealLattice lattice =
        enumerate_ideals(make_ut3_ring(3), Sidedness::left);
    return lattice;
}

void axiom_scan(benchmark::State& state, const FiniteRing& ring, Mode mode) {
    const TableView t = ring.tables();
    for (auto _ : state) {
        auto issue = kernels::find_axiom_violation(t, mode);
        benchmark::DoNotOptimize(issue);
    }
}

void nilpotency_mask(benchmark::State& state, const FiniteRing& ring, Mode mode) {
    const TableView t = ring.tables();
    for (auto _ : state) {
        auto mask = kernels::element_nilpotency_mask(t, mode);
        benchmark::DoNotOptimize(mask);
    }
}

void lattice_analysis(benchmark::State& state, Mode mode) {
    for (auto _ : state) {
        LatticeAnalysis analysis(ut3_3_left_lattice(), mode);
        benchmark::DoNotOptimize(analysis.count());
    }
}

void bm_axiom_scan_ut3_serial(benchmark::State& s) { axiom_scan(s, ut3_3(), Mode::serial); }
void bm_axiom_scan_ut3_parallel(benchmark::State& s) { axiom_scan(s, ut3_3(), Mode::parallel); }
void bm_axiom_scan_product_serial(benchmark::State& s) { axiom_scan(s, z8_squared(), Mode::serial); }
void bm_axiom_scan_product_parallel(benchmark::State& s) { axiom_scan(s, z8_squared(), Mode::parallel); }
void bm_nilpotency_mask_serial(benchmark::State& s) { nilpotency_mask(s, ut3_3(), Mode::serial); }
void bm_nilpotency_mask_parallel(benchmark::State& s) { nilpotency_mask(s, ut3_3(), Mode::parallel); }
void bm_lattice_analysis_serial(benchmark::State& s) { lattice_analysis(s, Mode::serial); }
void bm_lattice_analysis_parallel(benchmark::State& s) { lattice_analysis(s, Mode::parallel); }

BENCHMARK(bm_axiom_scan_ut3_serial);
BENCHMARK(bm_axiom_scan_ut3_parallel);
BENCHMARK(bm_axiom_scan_product_serial);
BENCHMARK(bm_axiom_scan_product_parallel);
BENCHMARK(bm_nilpotency_mask_serial);
BENCHMARK(bm_nilpotency_mask_parallel);
BENCHMARK(bm_lattice_analysis_serial);
BENCHMARK(bm_lattice_analysis_parallel);

}  // namespace

BENCHMARK_MAIN();
