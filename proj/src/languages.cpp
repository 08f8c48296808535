#include "multidfa/languages.hpp"

#include <stdexcept>

#include "multidfa/error.hpp"

namespace multidfa {

namespace {

// w == block^n for some n >= min_reps.
bool is_power(std::string_view w, std::string_view block, std::size_t min_reps) {
    if (w.size() % block.size() != 0 || w.size() / block.size() < min_reps) return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != block[i % block.size()]) return false;
    }
    return true;
}

bool all_of_char(std::string_view w, char c) { return w.find_first_not_of(c) == std::string_view::npos; }

std::string repeat(std::string_view block, std::size_t n) {
    std::string out;
    out.reserve(block.size() * n);
    for (std::size_t i = 0; i < n; ++i) out += block;
    return out;
}

}  // namespace

std::string_view language_name(LanguageId id) {
    switch (id) {
        case LanguageId::A_PLUS: return "A_PLUS";
        case LanguageId::AB_GE2: return "AB_GE2";
        case LanguageId::ABC_PLUS: return "ABC_PLUS";
        case LanguageId::A_BPLUS_A: return "A_BPLUS_A";
        case LanguageId::APLUS_BPLUS: return "APLUS_BPLUS";
        case LanguageId::A_BC_PLUS_A: return "A_BC_PLUS_A";
    }
    throw std::invalid_argument("unknown language id");
}

std::optional<LanguageId> parse_language(std::string_view name) {
    for (LanguageId id : kAllLanguages) {
        if (language_name(id) == name) return id;
    }
    return std::nullopt;
}

bool is_member(LanguageId id, std::string_view s) {
    switch (id) {
        case LanguageId::A_PLUS: return !s.empty() && all_of_char(s, 'a');
        case LanguageId::AB_GE2: return is_power(s, "ab", 2);
        case LanguageId::ABC_PLUS: return is_power(s, "abc", 1);
        case LanguageId::A_BPLUS_A:
            return s.size() >= 3 && s.front() == 'a' && s.back() == 'a' && all_of_char(s.substr(1, s.size() - 2), 'b');
        case LanguageId::APLUS_BPLUS: {
            const auto split = s.find_first_not_of('a');
            return split != 0 && split != std::string_view::npos && all_of_char(s.substr(split), 'b');
        }
        case LanguageId::A_BC_PLUS_A:
            return s.size() >= 4 && s.front() == 'a' && s.back() == 'a' && is_power(s.substr(1, s.size() - 2), "bc", 1);
    }
    return false;
}

Dfa reference_dfa(LanguageId id) {
    const Alphabet sigma(kExperimentSymbols);
    switch (id) {
        case LanguageId::A_PLUS: {
            Dfa d(sigma, 2);
            d.set_transition(0, 'a', 1);
            d.set_transition(1, 'a', 1);
            d.set_accepting(1);
            return d;
        }
        case LanguageId::AB_GE2: {
            Dfa d(sigma, 5);
            d.set_transition(0, 'a', 1);
            d.set_transition(1, 'b', 2);
            d.set_transition(2, 'a', 3);
            d.set_transition(3, 'b', 4);
            d.set_transition(4, 'a', 3);
            d.set_accepting(4);
            return d;
        }
        case LanguageId::ABC_PLUS: {
            Dfa d(sigma, 4);
            d.set_transition(0, 'a', 1);
            d.set_transition(1, 'b', 2);
            d.set_transition(2, 'c', 3);
            d.set_transition(3, 'a', 1);
            d.set_accepting(3);
            return d;
        }
        case LanguageId::A_BPLUS_A: {
            Dfa d(sigma, 4);
            d.set_transition(0, 'a', 1);
            d.set_transition(1, 'b', 2);
            d.set_transition(2, 'b', 2);
            d.set_transition(2, 'a', 3);
            d.set_accepting(3);
            return d;
        }
        case LanguageId::APLUS_BPLUS: {
            Dfa d(sigma, 3);
            d.set_transition(0, 'a', 1);
            d.set_transition(1, 'a', 1);
            d.set_transition(1, 'b', 2);
            d.set_transition(2, 'b', 2);
            d.set_accepting(2);
            return d;
        }
        case LanguageId::A_BC_PLUS_A: {
            Dfa d(sigma, 5);
            d.set_transition(0, 'a', 1);
            d.set_transition(1, 'b', 2);
            d.set_transition(2, 'c', 3);
            d.set_transition(3, 'b', 2);
            d.set_transition(3, 'a', 4);
            d.set_accepting(4);
            return d;
        }
    }
    throw std::invalid_argument("unknown language id");
}

std::size_t members_within_cap(LanguageId id) {
    const std::size_t cap = kMaxSampleLength;
    switch (id) {
        case LanguageId::A_PLUS: return cap;                  // a^1 .. a^cap
        case LanguageId::AB_GE2: return cap / 2 - 1;          // n = 2 .. cap/2
        case LanguageId::ABC_PLUS: return cap / 3;            // n = 1 .. cap/3
        case LanguageId::A_BPLUS_A: return cap - 2;           // n = 1 .. cap-2
        case LanguageId::APLUS_BPLUS: return (cap - 1) * cap / 2;  // m + n <= cap
        case LanguageId::A_BC_PLUS_A: return (cap - 2) / 2;   // n = 1 .. (cap-2)/2
    }
    return 0;
}

std::string sample_member(LanguageId id, Rng& rng) {
    std::geometric_distribution<std::size_t> extra(kRepetitionP);
    while (true) {
        std::string s;
        switch (id) {
            case LanguageId::A_PLUS: s = repeat("a", 1 + extra(rng)); break;
            case LanguageId::AB_GE2: s = repeat("ab", 2 + extra(rng)); break;
            case LanguageId::ABC_PLUS: s = repeat("abc", 1 + extra(rng)); break;
            case LanguageId::A_BPLUS_A: s = "a" + repeat("b", 1 + extra(rng)) + "a"; break;
            case LanguageId::APLUS_BPLUS: {
                const std::size_t m = 1 + extra(rng);
                const std::size_t n = 1 + extra(rng);
                s = repeat("a", m) + repeat("b", n);
                break;
            }
            case LanguageId::A_BC_PLUS_A: s = "a" + repeat("bc", 1 + extra(rng)) + "a"; break;
        }
        if (s.size() <= kMaxSampleLength) return s;
    }
}

StringSet sample_language(LanguageId id, std::size_t count, Rng& rng) {
    if (count == 0) throw std::invalid_argument("sample_language: count must be at least 1");
    if (count > members_within_cap(id)) {
        throw DataError("cannot draw " + std::to_string(count) + " distinct strings of " +
                        std::string(language_name(id)) + " with length <= " + std::to_string(kMaxSampleLength));
    }
    StringSet out;
    while (out.size() < count) out.insert(sample_member(id, rng));
    return out;
}

}  // namespace multidfa
