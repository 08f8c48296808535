#include "multidfa/sample.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "multidfa/error.hpp"

namespace multidfa {

namespace {

void check_consistent(const StringSet& positives, const StringSet& negatives, const Alphabet& alphabet) {
    for (const auto& s : positives) {
        if (negatives.contains(s)) {
            throw DataError("sample is inconsistent: \"" + s + "\" is labeled both positive and negative");
        }
    }
    for (const auto* set : {&positives, &negatives}) {
        for (const auto& s : *set) {
            for (char c : s) {
                if (!alphabet.contains(c)) {
                    throw DataError(std::string("symbol '") + c + "' of \"" + s + "\" is not in the alphabet");
                }
            }
        }
    }
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
    throw DataError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

LabeledSample::LabeledSample(StringSet positives, StringSet negatives)
    : positives_(std::move(positives)), negatives_(std::move(negatives)) {
    alphabet_ = Alphabet::of_strings(positives_).merged_with(Alphabet::of_strings(negatives_));
    check_consistent(positives_, negatives_, alphabet_);
}

LabeledSample::LabeledSample(StringSet positives, StringSet negatives, Alphabet alphabet)
    : positives_(std::move(positives)), negatives_(std::move(negatives)), alphabet_(std::move(alphabet)) {
    check_consistent(positives_, negatives_, alphabet_);
}

double accuracy(const Dfa& dfa, const LabeledSample& sample) {
    if (sample.size() == 0) throw std::invalid_argument("accuracy of an empty sample");
    std::size_t correct = 0;
    for (const auto& s : sample.positives()) correct += accepts(dfa, s) ? 1 : 0;
    for (const auto& s : sample.negatives()) correct += accepts(dfa, s) ? 0 : 1;
    return static_cast<double>(correct) / static_cast<double>(sample.size());
}

LabeledSample read_sample(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_line()) throw DataError("empty sample file");
    long long count = -1;
    long long alphabet_size = -1;
    {
        std::istringstream header(line);
        std::string extra;
        if (!(header >> count >> alphabet_size) || count < 0 || alphabet_size < 0 || (header >> extra)) {
            fail_at(line_no, "expected header \"<count> <alphabet_size>\"");
        }
    }

    StringSet positives;
    StringSet negatives;
    for (long long i = 0; i < count; ++i) {
        if (!next_line()) {
            throw DataError("expected " + std::to_string(count) + " strings, found " + std::to_string(i));
        }
        std::istringstream fields(line);
        std::string label;
        long long length = -1;
        if (!(fields >> label >> length) || length < 0) fail_at(line_no, "expected \"<label> <length> <symbols...>\"");
        if (label != "0" && label != "1") fail_at(line_no, "label must be 0 or 1, got \"" + label + "\"");
        std::string word;
        std::string token;
        while (fields >> token) {
            if (token.size() != 1) fail_at(line_no, "symbol \"" + token + "\" is not a single character");
            word += token;
        }
        if (static_cast<long long>(word.size()) != length) {
            fail_at(line_no, "declared length " + std::to_string(length) + " but read " + std::to_string(word.size()) +
                                 " symbols");
        }
        auto& own = label == "1" ? positives : negatives;
        const auto& other = label == "1" ? negatives : positives;
        if (other.contains(word)) fail_at(line_no, "\"" + word + "\" appears with both labels");
        own.insert(std::move(word));
    }
    if (next_line()) fail_at(line_no, "trailing data after " + std::to_string(count) + " strings");

    LabeledSample sample(std::move(positives), std::move(negatives));
    if (static_cast<long long>(sample.alphabet().size()) > alphabet_size) {
        throw DataError("header declares " + std::to_string(alphabet_size) + " symbols but the strings use " +
                        std::to_string(sample.alphabet().size()));
    }
    return sample;
}

LabeledSample load_sample(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open sample file " + path.string());
    try {
        return read_sample(in);
    } catch (const DataError& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

void write_sample(std::ostream& out, const LabeledSample& sample) {
    out << sample.size() << ' ' << sample.alphabet().size() << '\n';
    auto emit = [&out](const StringSet& strings, char label) {
        for (const auto& s : shortlex_sorted(strings)) {
            out << label << ' ' << s.size();
            for (char c : s) out << ' ' << c;
            out << '\n';
        }
    };
    emit(sample.positives(), '1');
    emit(sample.negatives(), '0');
}

}  // namespace multidfa
