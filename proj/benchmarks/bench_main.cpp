#include "tamefit/arithmetic_data.hpp"
#include "tamefit/finite_modules.hpp"
#include "tamefit/ideal_lattice.hpp"
#include "tamefit/verifier.hpp"

#include "support/generators.hpp"

#include <benchmark/benchmark.h>

using namespace tamefit;

namespace {

void BM_SiegelZeta(benchmark::State& state) {
    QuadraticFieldData field(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(siegel_zeta_minus1(field));
}
BENCHMARK(BM_SiegelZeta)->Arg(5)->Arg(497)->Arg(4997);

void BM_W2Field(benchmark::State& state) {
    QuadraticFieldData field(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(w2_field(field));
}
BENCHMARK(BM_W2Field)->Arg(5)->Arg(8)->Arg(493);

void BM_IdealFromGenerators(benchmark::State& state) {
    testgen::Rng rng(testgen::kDefaultSeed);
    std::vector<std::vector<GroupRingElement>> pools;
    for (int i = 0; i < 64; ++i) {
        std::vector<GroupRingElement> gens;
        for (int g = 0; g < 3; ++g)
            gens.push_back(testgen::random_integral_element(rng, 50));
        pools.push_back(std::move(gens));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(GroupRingIdeal::from_generators(pools[i]));
        } catch (const std::invalid_argument&) {
        }
        i = (i + 1) % pools.size();
    }
}
BENCHMARK(BM_IdealFromGenerators);

void BM_FittingIdeal(benchmark::State& state) {
    testgen::Rng rng(testgen::kDefaultSeed + 1);
    std::vector<AbelianTauModule> modules;
    while (modules.size() < 32) {
        AbelianTauModule m = testgen::random_tau_module(rng, 3, 16);
        if (m.rank() == static_cast<std::size_t>(state.range(0)))
            modules.push_back(std::move(m));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(modules[i].presentation().fitting_ideal());
        i = (i + 1) % modules.size();
    }
}
BENCHMARK(BM_FittingIdeal)->Arg(1)->Arg(2)->Arg(3);

void BM_AnnihilatorBruteforce(benchmark::State& state) {
    IntMat action(1, 1);
    action.at(0, 0) = 49;
    AbelianTauModule m({Integer(120)}, action);
    for (auto _ : state)
        benchmark::DoNotOptimize(m.annihilator_bruteforce());
}
BENCHMARK(BM_AnnihilatorBruteforce);

void BM_VerifyCase(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_case(state.range(0)));
}
BENCHMARK(BM_VerifyCase)->Arg(5)->Arg(8)->Arg(493);

void BM_BatchTo500(benchmark::State& state) {
    std::vector<long> discs;
    for (long d = 5; d <= 500; ++d)
        if (is_fundamental_discriminant(d)) discs.push_back(d);
    for (auto _ : state) {
        bool all = true;
        for (long d : discs) all = all && verify_case(d).pass();
        benchmark::DoNotOptimize(all);
    }
}
BENCHMARK(BM_BatchTo500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
