#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "multidfa/dfa.hpp"
#include "multidfa/strings.hpp"

namespace multidfa {

struct Transition {
    StateId from = 0;
    std::size_t symbol = 0;
    StateId to = 0;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Transitions traversed while reading a string from the start state
/// (sorted, without repeats) together with the state the string ends in.
struct PathRecord {
    std::vector<Transition> transitions;
    StateId final_state = 0;

    friend auto operator<=>(const PathRecord&, const PathRecord&) = default;
};

/// A restriction of a parent automaton to one path record.
struct SubDfa {
    Dfa dfa;  // states renumbered in ascending parent order
    std::vector<StateId> parent_state;
    PathRecord record;
    StringSet strings;  // the positives sharing this record
};

/// Path record of `input`, or empty if `dfa` does not accept it.
[[nodiscard]] std::optional<PathRecord> accepted_path(const Dfa& dfa, std::string_view input);

/// Groups the accepted positives by path record; each distinct record gives
/// one sub-automaton made of exactly the traversed states and transitions,
/// whose single accepting state is the record's final state. Sub-automata
/// appear in order of the first positive (lexicographic) producing them.
[[nodiscard]] std::vector<SubDfa> transition_clustering(const Dfa& dfa, const StringSet& positives);

/// Number of distinct path records; what transition_clustering(...).size()
/// returns, without building the sub-automata.
[[nodiscard]] std::size_t count_path_records(const Dfa& dfa, const StringSet& positives);

}  // namespace multidfa
