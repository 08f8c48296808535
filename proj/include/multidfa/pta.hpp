#pragma once

#include "multidfa/alphabet.hpp"
#include "multidfa/dfa.hpp"
#include "multidfa/strings.hpp"

namespace multidfa {

/// Prefix tree acceptor of `positives`: one state per element of
/// prefix(positives), numbered in shortlex order of the prefix (state 0 is ε),
/// with δ(u, a) = ua and the positives as accepting states.
///
/// Throws DataError on an empty set or a symbol outside `alphabet`.
[[nodiscard]] Dfa build_pta(const StringSet& positives, const Alphabet& alphabet);

}  // namespace multidfa
