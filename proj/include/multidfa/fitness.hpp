#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "multidfa/genome.hpp"
#include "multidfa/sample.hpp"

namespace multidfa {

/// Two minimized objectives: f1 = 1 − accuracy, f2 = |1 − n/k| where n is
/// the number of sub-DFAs obtained by transition clustering.
struct FitnessPair {
    double f1 = 0.0;
    double f2 = 0.0;

    [[nodiscard]] static FitnessPair from(double accuracy, std::size_t n, int k);
    [[nodiscard]] bool perfect() const { return f1 == 0.0 && f2 == 0.0; }

    friend auto operator<=>(const FitnessPair&, const FitnessPair&) = default;
};

[[nodiscard]] FitnessPair fitness(const Dfa& dfa, const LabeledSample& sample, int k);
[[nodiscard]] FitnessPair fitness(const Genome& genome, const LabeledSample& sample, int k);

/// Reference implementation: one genome after another.
[[nodiscard]] std::vector<FitnessPair> evaluate_population_serial(std::span<const Genome> population,
                                                                  const LabeledSample& sample, int k);

/// Same results as the serial version, genomes scored concurrently with
/// OpenMP.
[[nodiscard]] std::vector<FitnessPair> evaluate_population(std::span<const Genome> population,
                                                           const LabeledSample& sample, int k);

}  // namespace multidfa
