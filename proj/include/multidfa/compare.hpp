#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "multidfa/dfa.hpp"

namespace multidfa {

/// Shortest string (ties broken lexicographically) of length at most
/// `max_len` on which `a` and `b` disagree. Breadth-first search over the
/// product automaton, with an explicit dead state standing in for undefined
/// transitions. Throws std::invalid_argument if the alphabets differ.
[[nodiscard]] std::optional<std::string> difference_witness(const Dfa& a, const Dfa& b, std::size_t max_len);

/// Automaton for the union of the languages of `dfas` (reachable part of the
/// product). All inputs must share one alphabet; an empty span yields the
/// one-state automaton for ∅.
[[nodiscard]] Dfa dfa_union(std::span<const Dfa> dfas);

}  // namespace multidfa
