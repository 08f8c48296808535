#include "multidfa/dfa.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace multidfa {

Dfa::Dfa(Alphabet alphabet, std::size_t state_count, StateId start)
    : alphabet_(std::move(alphabet)),
      start_(start),
      delta_(state_count * alphabet_.size(), kNoState),
      accepting_(state_count, 0) {
    if (state_count == 0) throw std::invalid_argument("a DFA needs at least one state");
    if (state_count >= kNoState) throw std::invalid_argument("too many states");
    check_state(start);
}

void Dfa::check_state(StateId q) const {
    if (q >= state_count()) {
        throw std::out_of_range("state " + std::to_string(q) + " out of range (" + std::to_string(state_count()) +
                                " states)");
    }
}

std::vector<StateId> Dfa::accepting_states() const {
    std::vector<StateId> out;
    for (std::size_t q = 0; q < accepting_.size(); ++q) {
        if (accepting_[q] != 0) out.push_back(static_cast<StateId>(q));
    }
    return out;
}

std::size_t Dfa::transition_count() const {
    return static_cast<std::size_t>(std::count_if(delta_.begin(), delta_.end(), [](StateId t) { return t != kNoState; }));
}

void Dfa::set_start(StateId q) {
    check_state(q);
    start_ = q;
}

void Dfa::set_transition(StateId from, std::size_t symbol, StateId to) {
    check_state(from);
    check_state(to);
    if (symbol >= alphabet_.size()) throw std::out_of_range("symbol index out of range");
    delta_[static_cast<std::size_t>(from) * alphabet_.size() + symbol] = to;
}

void Dfa::set_transition(StateId from, char symbol, StateId to) {
    const auto index = alphabet_.index_of(symbol);
    if (!index) throw std::invalid_argument(std::string("symbol '") + symbol + "' is not in the alphabet");
    set_transition(from, *index, to);
}

void Dfa::clear_transition(StateId from, std::size_t symbol) {
    check_state(from);
    if (symbol >= alphabet_.size()) throw std::out_of_range("symbol index out of range");
    delta_[static_cast<std::size_t>(from) * alphabet_.size() + symbol] = kNoState;
}

void Dfa::set_accepting(StateId q, bool accepting) {
    check_state(q);
    accepting_[q] = accepting ? 1 : 0;
}

std::optional<StateId> run(const Dfa& dfa, std::string_view input) {
    StateId q = dfa.start();
    for (char c : input) {
        const auto symbol = dfa.alphabet().index_of(c);
        if (!symbol) return std::nullopt;
        q = dfa.target(q, *symbol);
        if (q == kNoState) return std::nullopt;
    }
    return q;
}

bool accepts(const Dfa& dfa, std::string_view input) {
    const auto q = run(dfa, input);
    return q && dfa.is_accepting(*q);
}

}  // namespace multidfa
