#include "multidfa/nsga2.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace multidfa {

bool dominates(const FitnessPair& a, const FitnessPair& b) {
    return a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
}

std::vector<std::vector<std::size_t>> non_dominated_fronts(std::span<const FitnessPair> scores) {
    const std::size_t n = scores.size();
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<std::size_t> dominators(n, 0);
    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> current;

    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (dominates(scores[p], scores[q])) {
                dominated[p].push_back(q);
            } else if (dominates(scores[q], scores[p])) {
                ++dominators[p];
            }
        }
        if (dominators[p] == 0) current.push_back(p);
    }
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t p : current) {
            for (std::size_t q : dominated[p]) {
                if (--dominators[q] == 0) next.push_back(q);
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(std::span<const FitnessPair> scores, std::span<const std::size_t> front) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    const std::size_t m = front.size();
    std::vector<double> distance(m, 0.0);
    if (m <= 2) {
        std::fill(distance.begin(), distance.end(), kInf);
        return distance;
    }

    std::vector<std::size_t> order(m);
    for (auto objective : {&FitnessPair::f1, &FitnessPair::f2}) {
        const auto other = objective == &FitnessPair::f1 ? &FitnessPair::f2 : &FitnessPair::f1;
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const auto& x = scores[front[a]];
            const auto& y = scores[front[b]];
            if (x.*objective != y.*objective) return x.*objective < y.*objective;
            return x.*other < y.*other;
        });
        const double lo = scores[front[order.front()]].*objective;
        const double hi = scores[front[order.back()]].*objective;
        distance[order.front()] = kInf;
        distance[order.back()] = kInf;
        if (hi <= lo) continue;
        for (std::size_t i = 1; i + 1 < m; ++i) {
            const double gap = scores[front[order[i + 1]]].*objective - scores[front[order[i - 1]]].*objective;
            distance[order[i]] += gap / (hi - lo);
        }
    }
    return distance;
}

Selection nsga2_select(std::span<const FitnessPair> scores, std::size_t target_size) {
    if (target_size > scores.size()) throw std::invalid_argument("nsga2_select: target exceeds population");
    Selection out;
    const auto fronts = non_dominated_fronts(scores);
    for (std::size_t rank = 0; rank < fronts.size() && out.indices.size() < target_size; ++rank) {
        const auto& front = fronts[rank];
        const auto distance = crowding_distance(scores, front);
        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        const std::size_t room = target_size - out.indices.size();
        if (front.size() > room) {
            std::stable_sort(order.begin(), order.end(),
                             [&distance](std::size_t a, std::size_t b) { return distance[a] > distance[b]; });
            order.resize(room);
        }
        for (std::size_t i : order) {
            out.indices.push_back(front[i]);
            out.rank.push_back(rank);
            out.crowding.push_back(distance[i]);
        }
    }
    return out;
}

}  // namespace multidfa
