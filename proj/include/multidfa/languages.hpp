#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "multidfa/dfa.hpp"
#include "multidfa/genome.hpp"
#include "multidfa/strings.hpp"

namespace multidfa {

/// The six target languages of the experiments, over Σ = {a, b, c}:
/// a+, (ab)^{≥2}, (abc)+, ab+a, a+b+ and a(bc)+a.
enum class LanguageId { A_PLUS, AB_GE2, ABC_PLUS, A_BPLUS_A, APLUS_BPLUS, A_BC_PLUS_A };

inline constexpr std::array<LanguageId, 6> kAllLanguages{LanguageId::A_PLUS,    LanguageId::AB_GE2,
                                                         LanguageId::ABC_PLUS,  LanguageId::A_BPLUS_A,
                                                         LanguageId::APLUS_BPLUS, LanguageId::A_BC_PLUS_A};

inline constexpr std::string_view kExperimentSymbols = "abc";
/// Upper bound on the length of a sampled string.
inline constexpr std::size_t kMaxSampleLength = 24;
/// Success probability of the geometric repetition counts.
inline constexpr double kRepetitionP = 0.3;

[[nodiscard]] std::string_view language_name(LanguageId id);
[[nodiscard]] std::optional<LanguageId> parse_language(std::string_view name);

/// Membership by direct inspection of the string (no automaton involved).
[[nodiscard]] bool is_member(LanguageId id, std::string_view s);

/// Hand-built minimal automaton over {a, b, c} for the language.
[[nodiscard]] Dfa reference_dfa(LanguageId id);

/// Number of members of length at most kMaxSampleLength.
[[nodiscard]] std::size_t members_within_cap(LanguageId id);

/// One member: every repeated block occurs its minimum number of times plus
/// a Geometric(kRepetitionP) count, redrawn until the string fits the cap.
[[nodiscard]] std::string sample_member(LanguageId id, Rng& rng);

/// `count` distinct members, redrawing on collision. Throws DataError when
/// the cap leaves fewer than `count` members.
[[nodiscard]] StringSet sample_language(LanguageId id, std::size_t count, Rng& rng);

}  // namespace multidfa
