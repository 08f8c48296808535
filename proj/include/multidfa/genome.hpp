#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "multidfa/alphabet.hpp"
#include "multidfa/dfa.hpp"

namespace multidfa {

using Rng = std::mt19937_64;

/// Fixed-layout DFA encoding used by the evolutionary learner: a
/// state_count × |Σ| transition matrix (row-major, kNoState = undefined) and
/// an output array with 1 for accepting states. State 0 is the start state.
struct Genome {
    Alphabet alphabet;
    std::size_t state_count = 0;
    std::vector<StateId> matrix;
    std::vector<std::uint8_t> output;

    [[nodiscard]] std::size_t width() const { return alphabet.size(); }
    [[nodiscard]] StateId cell(std::size_t state, std::size_t symbol) const { return matrix[state * width() + symbol]; }

    friend bool operator==(const Genome&, const Genome&) = default;
};

/// Encodes `dfa`. A start state other than 0 is swapped with state 0 so the
/// genome layout holds; decode(encode(d)) == d whenever d.start() == 0.
[[nodiscard]] Genome encode(const Dfa& dfa);
[[nodiscard]] Dfa decode(const Genome& genome);

/// Throws std::invalid_argument when matrix/output sizes or targets are off.
void validate(const Genome& genome);

/// Copy of `genome` with output[state] flipped.
[[nodiscard]] Genome flip_output(const Genome& genome, std::size_t state);
/// Copy of `genome` with matrix cell `index` (row-major) set to `value`.
[[nodiscard]] Genome set_cell(const Genome& genome, std::size_t index, StateId value);

/// Changes exactly one entry. With probability `output_share` (or always,
/// when the alphabet is empty) a uniformly drawn output entry is flipped;
/// otherwise a uniformly drawn matrix cell gets a new value drawn uniformly
/// from {0..state_count−1} ∪ {undefined} minus its current value.
[[nodiscard]] Genome mutate(const Genome& genome, Rng& rng, double output_share);

/// Single-point crossover at `cut`, an index into the row-major matrix of
/// the parents padded with undefined rows to a common state count. Child 1
/// takes p1's cells before the cut and p2's from it, child 2 the reverse;
/// outputs switch parent at state cut / |Σ|. Throws std::invalid_argument on
/// mismatched alphabets or a cut past the end.
[[nodiscard]] std::pair<Genome, Genome> crossover_at(const Genome& p1, const Genome& p2, std::size_t cut);

/// crossover_at with a cut drawn uniformly from [0, padded cell count].
[[nodiscard]] std::pair<Genome, Genome> crossover(const Genome& p1, const Genome& p2, Rng& rng);

/// Stable text key used to break fitness ties between genomes.
[[nodiscard]] std::string genome_key(const Genome& genome);

}  // namespace multidfa
