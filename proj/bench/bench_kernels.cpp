// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "multidfa/experiment.hpp"
#include "multidfa/fitness.hpp"
#include "multidfa/genome.hpp"
#include "multidfa/languages.hpp"

using namespace multidfa;

namespace {

LabeledSample bench_sample() {
    ExperimentConfig cfg;
    cfg.languages = {LanguageId::A_PLUS, LanguageId::AB_GE2, LanguageId::A_BPLUS_A, LanguageId::APLUS_BPLUS};
    cfg.density = 0.5;
    cfg.total_strings = 200;
    Rng rng(1);
    return make_dataset(cfg, rng).train;
}

std::vector<Genome> bench_population(const LabeledSample& sample, std::size_t size) {
    Rng rng(2);
    std::vector<Genome> pop = init_population(sample.positives(), sample.alphabet());
    std::uniform_int_distribution<std::size_t> pick(0, pop.size() - 1);
    while (pop.size() < size) {
        Genome g = pop[pick(rng)];
        for (int i = 0; i < 8; ++i) g = mutate(g, rng, 0.2);
        pop.push_back(std::move(g));
    }
    return pop;
}

GridSpec bench_grid() {
    GridSpec spec;
    spec.ks = {2, 3};
    spec.densities = {0.10, 0.20};
    spec.seeds = {1};
    spec.record_timing = false;
    return spec;
}

void BM_FitnessSerial(benchmark::State& state) {
    const LabeledSample sample = bench_sample();
    const auto pop = bench_population(sample, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_population_serial(pop, sample, 4));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FitnessParallel(benchmark::State& state) {
    const LabeledSample sample = bench_sample();
    const auto pop = bench_population(sample, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_population(pop, sample, 4));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GridSerial(benchmark::State& state) {
    const GridSpec spec = bench_grid();
    for (auto _ : state) benchmark::DoNotOptimize(run_grid_serial(spec));
}

void BM_GridParallel(benchmark::State& state) {
    const GridSpec spec = bench_grid();
    for (auto _ : state) benchmark::DoNotOptimize(run_grid(spec));
}

}  // namespace

BENCHMARK(BM_FitnessSerial)->Arg(128)->Arg(1024)->UseRealTime();
BENCHMARK(BM_FitnessParallel)->Arg(128)->Arg(1024)->UseRealTime();
BENCHMARK(BM_GridSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GridParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
