#include "multidfa/clustering.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace multidfa {

std::optional<PathRecord> accepted_path(const Dfa& dfa, std::string_view input) {
    PathRecord record;
    record.transitions.reserve(input.size());
    StateId q = dfa.start();
    for (char c : input) {
        const auto symbol = dfa.alphabet().index_of(c);
        if (!symbol) return std::nullopt;
        const StateId t = dfa.target(q, *symbol);
        if (t == kNoState) return std::nullopt;
        record.transitions.push_back({q, *symbol, t});
        q = t;
    }
    if (!dfa.is_accepting(q)) return std::nullopt;
    std::sort(record.transitions.begin(), record.transitions.end());
    record.transitions.erase(std::unique(record.transitions.begin(), record.transitions.end()),
                             record.transitions.end());
    record.final_state = q;
    return record;
}

std::vector<SubDfa> transition_clustering(const Dfa& dfa, const StringSet& positives) {
    std::vector<SubDfa> subs;
    std::map<PathRecord, std::size_t> slot;
    for (const auto& s : positives) {
        auto record = accepted_path(dfa, s);
        if (!record) continue;
        const auto [it, inserted] = slot.emplace(*record, subs.size());
        if (!inserted) {
            subs[it->second].strings.insert(s);
            continue;
        }

        std::set<StateId> states{dfa.start(), record->final_state};
        for (const auto& t : record->transitions) {
            states.insert(t.from);
            states.insert(t.to);
        }
        SubDfa sub;
        sub.parent_state.assign(states.begin(), states.end());
        auto local = [&sub](StateId parent) {
            return static_cast<StateId>(std::lower_bound(sub.parent_state.begin(), sub.parent_state.end(), parent) -
                                        sub.parent_state.begin());
        };
        sub.dfa = Dfa(dfa.alphabet(), sub.parent_state.size(), local(dfa.start()));
        for (const auto& t : record->transitions) sub.dfa.set_transition(local(t.from), t.symbol, local(t.to));
        sub.dfa.set_accepting(local(record->final_state));
        sub.record = std::move(*record);
        sub.strings.insert(s);
        subs.push_back(std::move(sub));
    }
    return subs;
}

std::size_t count_path_records(const Dfa& dfa, const StringSet& positives) {
    std::set<PathRecord> records;
    for (const auto& s : positives) {
        if (auto record = accepted_path(dfa, s)) records.insert(std::move(*record));
    }
    return records.size();
}

}  // namespace multidfa
