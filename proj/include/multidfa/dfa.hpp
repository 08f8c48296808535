#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "multidfa/alphabet.hpp"

namespace multidfa {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

/// Deterministic finite automaton with a partial transition function.
///
/// States are the integers [0, state_count). Transitions are stored as a
/// dense row-major state × symbol table where kNoState marks an undefined
/// entry. A missing transition rejects the input being read.
class Dfa {
public:
    Dfa() = default;
    Dfa(Alphabet alphabet, std::size_t state_count, StateId start = 0);

    [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
    [[nodiscard]] std::size_t state_count() const { return accepting_.size(); }
    [[nodiscard]] StateId start() const { return start_; }

    /// δ(from, symbol) or kNoState.
    [[nodiscard]] StateId target(StateId from, std::size_t symbol) const {
        return delta_[static_cast<std::size_t>(from) * alphabet_.size() + symbol];
    }
    [[nodiscard]] std::span<const StateId> row(StateId from) const {
        return {delta_.data() + static_cast<std::size_t>(from) * alphabet_.size(), alphabet_.size()};
    }
    [[nodiscard]] bool is_accepting(StateId q) const { return accepting_.at(q) != 0; }
    [[nodiscard]] std::vector<StateId> accepting_states() const;
    [[nodiscard]] std::size_t transition_count() const;

    void set_start(StateId q);
    void set_transition(StateId from, std::size_t symbol, StateId to);
    void set_transition(StateId from, char symbol, StateId to);
    void clear_transition(StateId from, std::size_t symbol);
    void set_accepting(StateId q, bool accepting = true);

    friend bool operator==(const Dfa&, const Dfa&) = default;

private:
    void check_state(StateId q) const;

    Alphabet alphabet_;
    StateId start_ = 0;
    std::vector<StateId> delta_;
    std::vector<std::uint8_t> accepting_;
};

/// δ*(start, input); empty when some transition along the way is undefined
/// or a character is not in the alphabet.
[[nodiscard]] std::optional<StateId> run(const Dfa& dfa, std::string_view input);

[[nodiscard]] bool accepts(const Dfa& dfa, std::string_view input);

}  // namespace multidfa
