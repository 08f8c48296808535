#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "multidfa/dfa.hpp"

namespace multidfa {

/// Canonical text form:
///
///     dfa
///     alphabet a b
///     states 3
///     start 0
///     accepting 2
///     transition 0 a 1
///     transition 1 b 2
///
/// Transitions are listed by (state, symbol index). `#` starts a comment
/// line; blank lines are ignored on input.
[[nodiscard]] std::string serialize(const Dfa& dfa);

/// Throws DataError naming the offending line on malformed text or when the
/// automaton invariants do not hold.
[[nodiscard]] Dfa deserialize(std::string_view text);

/// Graphviz digraph: doublecircle nodes for accepting states, an invisible
/// point node with an arrow into the start state.
[[nodiscard]] std::string to_dot(const Dfa& dfa, std::string_view name = "dfa");

[[nodiscard]] Dfa load_dfa(const std::filesystem::path& path);
void save_dfa(const std::filesystem::path& path, const Dfa& dfa);

}  // namespace multidfa
