#include <benchmark/benchmark.h>

#include "cdlat/cd_engine.hpp"
#include "cdlat/constructors.hpp"
#include "cdlat/subgroup_enum.hpp"
#include "cdlat/subgroup_ops.hpp"

namespace {

using namespace cdlat;

void BM_CayleyBuildZM(benchmark::State& state) {
    for (auto _ : state) {
        Group g = zm_group(13, 4, 5);
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(BM_CayleyBuildZM);

void BM_Closure(benchmark::State& state) {
    Group g = symmetric_group(5);
    std::vector<int> gens = g.canonical_generators();
    for (auto _ : state) {
        Bitset c = closure(g, std::span<const int>(gens.data(), gens.size()));
        benchmark::DoNotOptimize(c.count());
    }
}
BENCHMARK(BM_Closure);

void BM_Centralizer(benchmark::State& state) {
    Group g = dihedral_group(100);
    Bitset rot = *g.named_subgroup("rotations");
    for (auto _ : state) {
        Bitset c = centralizer(g, rot);
        benchmark::DoNotOptimize(c.count());
    }
}
BENCHMARK(BM_Centralizer);

void BM_AllSubgroupsS4(benchmark::State& state) {
    Group g = symmetric_group(4);
    for (auto _ : state) {
        auto inv = all_subgroups(g);
        benchmark::DoNotOptimize(inv.subgroups.size());
    }
}
BENCHMARK(BM_AllSubgroupsS4);

void BM_CdLatticeOracleQ8(benchmark::State& state) {
    Group g = quaternion8_group();
    for (auto _ : state) {
        CDReport r = cd_lattice(g, CdMethod::brute_force);
        benchmark::DoNotOptimize(r.max_measure);
    }
}
BENCHMARK(BM_CdLatticeOracleQ8);

void BM_CdLatticeClosureHeisenberg3(benchmark::State& state) {
    Group g = heisenberg_gf(3);
    CdLimits limits;
    limits.aut_limits.max_order = 0;
    for (auto _ : state) {
        CDReport r = cd_lattice(g, CdMethod::closure_family, limits);
        benchmark::DoNotOptimize(r.max_measure);
    }
}
BENCHMARK(BM_CdLatticeClosureHeisenberg3);

void BM_CentralizerFamilyF21(benchmark::State& state) {
    Group g = build_group(
        GroupSpec::semidirect(GroupSpec::cyclic(7), GroupSpec::cyclic(3), {{{2}}}));
    for (auto _ : state) {
        auto family = centralizer_closed_family(g);
        benchmark::DoNotOptimize(family.size());
    }
}
BENCHMARK(BM_CentralizerFamilyF21);

} // namespace

BENCHMARK_MAIN();
