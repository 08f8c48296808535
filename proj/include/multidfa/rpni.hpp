#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multidfa/dfa.hpp"
#include "multidfa/sample.hpp"
#include "multidfa/strings.hpp"

namespace multidfa {

struct RpniOptions {
    /// Mark PTA states reached by negative strings as rejecting and refuse
    /// merges that fold such a state together with an accepting one. The
    /// negative-sample check still runs; this only prunes earlier.
    bool reject_marks = false;
};

/// Positive strings whose PTA accepting state has been folded into a state,
/// indexed by state.
using Provenance = std::vector<StringSet>;

/// Red/blue bookkeeping of one state-merging run.
///
/// Invariants: red ∩ blue = ∅, the start state is red, every blue state is
/// the target of a transition leaving a red state, and both lists are sorted
/// ascending. `origin[q]` is the lexicographically least PTA prefix folded
/// into q; it drives `choose`.
struct MergeContext {
    Dfa dfa;
    std::vector<StateId> red;
    std::vector<StateId> blue;
    Provenance provenance;
    std::vector<std::string> origin;
    std::vector<std::uint8_t> rejecting;  // empty unless reject marks are on

    /// PTA of the positives, red = {ε}, blue = the children of ε.
    static MergeContext from_sample(const LabeledSample& sample, const RpniOptions& options = {});
};

struct MergeOutcome {
    Dfa dfa;
    Provenance provenance;
    std::vector<std::string> origin;
    std::vector<std::uint8_t> rejecting;
    /// Old state index -> new index of the state it was folded into.
    std::vector<StateId> renumber;
    /// Positive strings whose accepting state disappeared in the merge.
    StringSet eliminated;
};

/// Redirects the transition into `blue_state` to `red_state` and folds the
/// tree rooted at `blue_state` into the automaton, determinizing as it goes
/// (accepting flags, provenance and origins are unioned). Surviving states
/// keep their relative order. Empty when reject marks are on and the fold
/// puts an accepting and a rejecting state together.
///
/// Throws std::invalid_argument unless `blue_state` roots a tree that does
/// not contain `red_state`.
[[nodiscard]] std::optional<MergeOutcome> merge_fold(const MergeContext& context, StateId red_state,
                                                     StateId blue_state);

/// True iff `dfa` accepts none of `negatives`.
[[nodiscard]] bool rpni_compatible(const Dfa& dfa, const StringSet& negatives);

/// The blue state with the alphabetically least origin (index breaks ties).
/// Throws std::invalid_argument on an empty set.
[[nodiscard]] StateId choose(std::span<const StateId> blue, std::span<const std::string> origin);

/// Moves `blue_state` to red and turns every non-red target of a red state
/// blue.
[[nodiscard]] MergeContext promote(StateId blue_state, MergeContext context);

/// Applies a merge of `blue_state` computed by merge_fold and refreshes the
/// blue set.
[[nodiscard]] MergeContext commit_merge(MergeContext context, StateId blue_state, MergeOutcome outcome);

struct MergeEvent {
    std::string red_origin;
    std::string blue_origin;
    std::size_t states_before = 0;
    std::size_t states_after = 0;
    StringSet eliminated;
};

struct RpniTrace {
    std::vector<MergeEvent> merges;
    std::size_t promotions = 0;
};

/// Red/blue RPNI: consistent with the sample, deterministic given the
/// choose order and ascending red candidate order. Throws DataError on an
/// empty or inconsistent sample.
[[nodiscard]] Dfa standard_rpni(const LabeledSample& sample, const RpniOptions& options = {},
                                RpniTrace* trace = nullptr);

struct SplitResult {
    std::vector<Dfa> dfas;
    /// assignments[i] holds the positives dfas[i] was learned from; together
    /// they partition the original positives.
    std::vector<StringSet> assignments;
    /// The merge that triggered each extraction, in order.
    std::vector<MergeEvent> splits;
};

/// RPNI with extraction of sub-automata at big merges: a compatible merge
/// that eliminates at least |S+|/k accepting strings or at least |Q|/k
/// states (k > 1) hands the eliminated strings to a separate standard RPNI
/// run and restarts on the remaining positives with the eliminated ones
/// added to the negatives and k halved (floor). Returns at most k automata,
/// all rejecting the original negatives.
[[nodiscard]] SplitResult rpni_splitting(const LabeledSample& sample, int k, const RpniOptions& options = {});

}  // namespace multidfa
