#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "multidfa/alphabet.hpp"

namespace multidfa {

using StringSet = std::set<std::string>;

/// Length first, then lexicographic.
struct ShortlexLess {
    bool operator()(std::string_view a, std::string_view b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

[[nodiscard]] std::vector<std::string> shortlex_sorted(const StringSet& strings);

/// prefix(S): every prefix of every string, ε included, in shortlex order.
[[nodiscard]] std::vector<std::string> prefix_closure(const StringSet& strings);

/// Σ^{≤max_len} in shortlex order. Intended for bounded checks; the result
/// grows as |Σ|^max_len.
[[nodiscard]] std::vector<std::string> enumerate_strings(const Alphabet& alphabet, std::size_t max_len);

/// Renders ε as the literal "ε" and leaves other strings untouched.
[[nodiscard]] std::string display_string(std::string_view s);

}  // namespace multidfa
