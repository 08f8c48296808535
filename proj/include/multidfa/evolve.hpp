#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "multidfa/clustering.hpp"
#include "multidfa/fitness.hpp"
#include "multidfa/genome.hpp"
#include "multidfa/sample.hpp"

namespace multidfa {

struct EaConfig {
    int k = 1;
    std::size_t population_size = 64;
    std::size_t max_generations = 500;
    double mutation_rate = 0.8;          // per offspring
    double output_mutation_share = 0.2;  // chance a mutation hits the output array
    double crossover_rate = 0.9;         // per parent pair
    std::uint64_t rng_seed = 0;
    bool parallel_fitness = true;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// Reads flat `key = value` lines (keys named like the fields above, `#`
/// comments allowed) over `base`. Throws DataError on unknown keys or bad
/// values, naming the line.
[[nodiscard]] EaConfig read_ea_config(std::istream& in, EaConfig base = {});
[[nodiscard]] EaConfig load_ea_config(const std::filesystem::path& path, EaConfig base = {});

struct GenerationStats {
    std::size_t generation = 0;
    FitnessPair best;
    std::size_t front_size = 0;
};

struct EaResult {
    Genome best;
    FitnessPair best_fitness;
    std::vector<GenerationStats> history;  // entry 0 is the initial population
};

/// One single-string PTA per positive, in shortlex order of the positives.
[[nodiscard]] std::vector<Genome> init_population(const StringSet& positives, const Alphabet& alphabet);

/// (μ + λ) NSGA-II over genomes with μ = λ = population_size. Each
/// generation draws parents by binary tournament on (front, crowding),
/// applies crossover and mutation at the configured rates, scores the
/// offspring and selects the next population from parents and offspring
/// pooled. Stops at the first perfect (0, 0) individual or after
/// max_generations. Deterministic for a given rng_seed: the random stream is
/// only consumed by the sequential variation step.
[[nodiscard]] EaResult evolve(const LabeledSample& sample, const EaConfig& config);

/// Transition clustering of the decoded best individual on the positives.
[[nodiscard]] std::vector<SubDfa> extract_solution(const Genome& best, const LabeledSample& sample);

/// CSV with header `generation,best_f1,best_f2,front_size`.
void write_history_csv(std::ostream& out, const std::vector<GenerationStats>& history);

}  // namespace multidfa
