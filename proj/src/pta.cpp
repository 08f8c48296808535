#include "multidfa/pta.hpp"

#include <unordered_map>

#include "multidfa/error.hpp"

namespace multidfa {

Dfa build_pta(const StringSet& positives, const Alphabet& alphabet) {
    if (positives.empty()) throw DataError("empty positive sample");
    for (const auto& s : positives) {
        for (char c : s) {
            if (!alphabet.contains(c)) throw DataError(std::string("symbol '") + c + "' is not in the alphabet");
        }
    }

    const auto prefixes = prefix_closure(positives);
    std::unordered_map<std::string_view, StateId> state_of;
    state_of.reserve(prefixes.size());
    for (std::size_t i = 0; i < prefixes.size(); ++i) state_of.emplace(prefixes[i], static_cast<StateId>(i));

    Dfa pta(alphabet, prefixes.size(), 0);
    for (std::size_t i = 1; i < prefixes.size(); ++i) {
        const std::string_view p = prefixes[i];
        const StateId parent = state_of.at(p.substr(0, p.size() - 1));
        pta.set_transition(parent, *alphabet.index_of(p.back()), static_cast<StateId>(i));
    }
    for (const auto& s : positives) pta.set_accepting(state_of.at(s));
    return pta;
}

}  // namespace multidfa
