#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "multidfa/fitness.hpp"

namespace multidfa {

/// a is no worse than b in both objectives and strictly better in one.
[[nodiscard]] bool dominates(const FitnessPair& a, const FitnessPair& b);

/// Fast non-dominated sorting. Each front lists indices in ascending order.
[[nodiscard]] std::vector<std::vector<std::size_t>> non_dominated_fronts(std::span<const FitnessPair> scores);

/// Crowding distance of each member of `front` (same order as `front`);
/// boundary members of either objective get +infinity.
[[nodiscard]] std::vector<double> crowding_distance(std::span<const FitnessPair> scores,
                                                    std::span<const std::size_t> front);

struct Selection {
    std::vector<std::size_t> indices;  // into the scored population
    std::vector<std::size_t> rank;     // front number of each selected index
    std::vector<double> crowding;      // crowding distance within its front
};

/// NSGA-II environmental selection: whole fronts in order, the last one cut
/// by descending crowding distance (stable, so ties keep input order).
/// Throws std::invalid_argument if target_size exceeds the population.
[[nodiscard]] Selection nsga2_select(std::span<const FitnessPair> scores, std::size_t target_size);

}  // namespace multidfa
