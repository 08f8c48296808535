#include "multidfa/alphabet.hpp"

#include <algorithm>

namespace multidfa {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    std::sort(symbols_.begin(), symbols_.end(),
              [](char a, char b) { return static_cast<unsigned char>(a) < static_cast<unsigned char>(b); });
    symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
    index_.fill(-1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        index_[static_cast<unsigned char>(symbols_[i])] = static_cast<std::int16_t>(i);
    }
}

bool Alphabet::covers(std::string_view s) const {
    return std::all_of(s.begin(), s.end(), [this](char c) { return contains(c); });
}

Alphabet Alphabet::merged_with(const Alphabet& other) const { return Alphabet(symbols_ + other.symbols_); }

}  // namespace multidfa
