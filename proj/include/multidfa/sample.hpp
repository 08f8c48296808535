#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>

#include "multidfa/alphabet.hpp"
#include "multidfa/dfa.hpp"
#include "multidfa/strings.hpp"

namespace multidfa {

/// Positive and negative example strings over a common alphabet.
/// Construction throws DataError when a string carries both labels or uses a
/// symbol outside the alphabet.
class LabeledSample {
public:
    LabeledSample() = default;
    /// Alphabet inferred as the sorted symbols of positives ∪ negatives.
    LabeledSample(StringSet positives, StringSet negatives);
    LabeledSample(StringSet positives, StringSet negatives, Alphabet alphabet);

    [[nodiscard]] const StringSet& positives() const { return positives_; }
    [[nodiscard]] const StringSet& negatives() const { return negatives_; }
    [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
    [[nodiscard]] std::size_t size() const { return positives_.size() + negatives_.size(); }

    friend bool operator==(const LabeledSample&, const LabeledSample&) = default;

private:
    StringSet positives_;
    StringSet negatives_;
    Alphabet alphabet_;
};

/// Fraction of the sample classified correctly: accepted positives plus
/// rejected negatives over the sample size. Throws on an empty sample.
[[nodiscard]] double accuracy(const Dfa& dfa, const LabeledSample& sample);

// Abbadingo-style text: a header line "<count> <alphabet_size>", then one
// line per string "<1|0> <length> <sym> <sym> ...".
[[nodiscard]] LabeledSample read_sample(std::istream& in);
[[nodiscard]] LabeledSample load_sample(const std::filesystem::path& path);
void write_sample(std::ostream& out, const LabeledSample& sample);

}  // namespace multidfa
