#include "multidfa/fitness.hpp"

#include <cmath>
#include <stdexcept>

#include "multidfa/clustering.hpp"

namespace multidfa {

FitnessPair FitnessPair::from(double accuracy, std::size_t n, int k) {
    if (k < 1) throw std::invalid_argument("fitness: k must be at least 1");
    return {1.0 - accuracy, std::abs(1.0 - static_cast<double>(n) / static_cast<double>(k))};
}

FitnessPair fitness(const Dfa& dfa, const LabeledSample& sample, int k) {
    return FitnessPair::from(accuracy(dfa, sample), count_path_records(dfa, sample.positives()), k);
}

FitnessPair fitness(const Genome& genome, const LabeledSample& sample, int k) {
    return fitness(decode(genome), sample, k);
}

std::vector<FitnessPair> evaluate_population_serial(std::span<const Genome> population, const LabeledSample& sample,
                                                    int k) {
    std::vector<FitnessPair> scores(population.size());
    for (std::size_t i = 0; i < population.size(); ++i) scores[i] = fitness(population[i], sample, k);
    return scores;
}

std::vector<FitnessPair> evaluate_population(std::span<const Genome> population, const LabeledSample& sample,
                                             int k) {
    if (k < 1) throw std::invalid_argument("fitness: k must be at least 1");
    std::vector<FitnessPair> scores(population.size());
    const auto count = static_cast<std::ptrdiff_t>(population.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        scores[static_cast<std::size_t>(i)] = fitness(population[static_cast<std::size_t>(i)], sample, k);
    }
    return scores;
}

}  // namespace multidfa
