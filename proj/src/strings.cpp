#include "multidfa/strings.hpp"

#include <algorithm>

namespace multidfa {

std::vector<std::string> shortlex_sorted(const StringSet& strings) {
    std::vector<std::string> out(strings.begin(), strings.end());
    std::stable_sort(out.begin(), out.end(), ShortlexLess{});
    return out;
}

std::vector<std::string> prefix_closure(const StringSet& strings) {
    std::set<std::string, ShortlexLess> prefixes;
    for (const auto& s : strings) {
        for (std::size_t len = 0; len <= s.size(); ++len) prefixes.insert(s.substr(0, len));
    }
    return {prefixes.begin(), prefixes.end()};
}

std::vector<std::string> enumerate_strings(const Alphabet& alphabet, std::size_t max_len) {
    std::vector<std::string> out{""};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (char c : alphabet.symbols()) out.push_back(out[i] + c);
        }
        level_begin = level_end;
    }
    return out;
}

std::string display_string(std::string_view s) { return s.empty() ? std::string("ε") : std::string(s); }

}  // namespace multidfa
