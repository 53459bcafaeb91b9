#include <benchmark/benchmark.h>

#include "lattica/congruence.hpp"
#include "lattica/constructions.hpp"
#include "lattica/corpus.hpp"
#include "lattica/verify.hpp"

using namespace lattica;

namespace {

void BM_AllCongruencesChain(benchmark::State& state) {
    FiniteLattice L = chain(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(all_congruences(L, Sig::LAT).size());
}
BENCHMARK(BM_AllCongruencesChain)->Arg(6)->Arg(9)->Arg(12);

void BM_BruteForceOracle(benchmark::State& state) {
    FiniteLattice L = chain(static_cast<int>(state.range(0)));
    AlgebraRef A = make_algebra(L, Sig::LAT);
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_congruences(A, state.range(0)).size());
}
BENCHMARK(BM_BruteForceOracle)->Arg(6)->Arg(8);

void BM_PrincipalOnTowerMember(benchmark::State& state) {
    TowerFamily F =
        tower(Structure{m_lattice(3)}, static_cast<int>(state.range(0)), StepVariant::PLAIN);
    const FiniteLattice& L = lattice_of(F.members.back());
    AlgebraRef A = make_algebra(L, Sig::LAT);
    for (auto _ : state)
        benchmark::DoNotOptimize(principal_congruence(A, 0, L.size() - 1).block_count());
}
BENCHMARK(BM_PrincipalOnTowerMember)->Arg(4)->Arg(8);

void BM_TowerBuild(benchmark::State& state) {
    Structure seed{m_lattice(3)};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            structure_size(tower(seed, static_cast<int>(state.range(0)), StepVariant::PLAIN)
                               .members.back()));
}
BENCHMARK(BM_TowerBuild)->Arg(4)->Arg(8);

void BM_SandwichConLaw(benchmark::State& state) {
    FiniteLattice L = chain(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(laws::sandwich_con_law(L, std::nullopt).ok);
}
BENCHMARK(BM_SandwichConLaw)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
