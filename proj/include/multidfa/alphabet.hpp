#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace multidfa {

/// Ordered set of single-character symbols. Symbol indices follow ascending
/// (unsigned) character order, which is also the order used for every
/// lexicographic comparison in the library.
class Alphabet {
public:
    Alphabet() { index_.fill(-1); }

    /// Builds an alphabet from any characters; duplicates are dropped.
    explicit Alphabet(std::string_view symbols);

    /// Sorted set of every symbol occurring in `strings`.
    template <typename Range>
    static Alphabet of_strings(const Range& strings) {
        std::string all;
        for (const auto& s : strings) all += s;
        return Alphabet(all);
    }

    [[nodiscard]] std::size_t size() const { return symbols_.size(); }
    [[nodiscard]] bool empty() const { return symbols_.empty(); }
    [[nodiscard]] const std::string& symbols() const { return symbols_; }
    [[nodiscard]] char symbol(std::size_t index) const { return symbols_.at(index); }

    [[nodiscard]] std::optional<std::size_t> index_of(char c) const {
        const auto i = index_[static_cast<unsigned char>(c)];
        if (i < 0) return std::nullopt;
        return static_cast<std::size_t>(i);
    }
    [[nodiscard]] bool contains(char c) const { return index_of(c).has_value(); }

    /// True when every character of `s` is a symbol of this alphabet.
    [[nodiscard]] bool covers(std::string_view s) const;

    /// Union of two alphabets.
    [[nodiscard]] Alphabet merged_with(const Alphabet& other) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

private:
    std::string symbols_;
    std::array<std::int16_t, 256> index_{};
};

}  // namespace multidfa
