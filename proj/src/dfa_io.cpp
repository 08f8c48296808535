#include "multidfa/dfa_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "multidfa/error.hpp"

namespace multidfa {

std::string serialize(const Dfa& dfa) {
    std::ostringstream out;
    out << "dfa\nalphabet";
    for (char c : dfa.alphabet().symbols()) out << ' ' << c;
    out << "\nstates " << dfa.state_count() << "\nstart " << dfa.start() << "\naccepting";
    for (StateId q : dfa.accepting_states()) out << ' ' << q;
    out << '\n';
    for (StateId q = 0; q < dfa.state_count(); ++q) {
        for (std::size_t s = 0; s < dfa.alphabet().size(); ++s) {
            const StateId t = dfa.target(q, s);
            if (t != kNoState) out << "transition " << q << ' ' << dfa.alphabet().symbol(s) << ' ' << t << '\n';
        }
    }
    return out.str();
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Dfa parse() {
        std::string line;
        std::istringstream in{std::string(text_)};
        while (std::getline(in, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            handle(line);
        }
        if (!seen_header_) fail_eof("missing \"dfa\" header");
        if (!dfa_) fail_eof("missing \"states\" line");
        if (!seen_start_) fail_eof("missing \"start\" line");
        if (!seen_accepting_) fail_eof("missing \"accepting\" line");
        return std::move(*dfa_);
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw DataError("line " + std::to_string(line_no_) + ": " + what);
    }
    [[noreturn]] void fail_eof(const std::string& what) const {
        throw DataError("line " + std::to_string(line_no_ + 1) + ": " + what);
    }

    StateId read_state(std::istringstream& fields, const char* what) {
        long long value = -1;
        if (!(fields >> value)) fail(std::string("expected ") + what);
        if (value < 0 || static_cast<unsigned long long>(value) >= dfa_->state_count()) {
            fail(std::string(what) + " " + std::to_string(value) + " out of range");
        }
        return static_cast<StateId>(value);
    }

    void expect_end(std::istringstream& fields) {
        std::string extra;
        if (fields >> extra) fail("unexpected token \"" + extra + "\"");
    }

    void require_states(const std::string& key) {
        if (!dfa_) fail("\"" + key + "\" before \"states\"");
    }

    void handle(const std::string& line) {
        std::istringstream fields(line);
        std::string key;
        fields >> key;
        if (!seen_header_) {
            if (key != "dfa") fail("expected \"dfa\" header, got \"" + key + "\"");
            seen_header_ = true;
            expect_end(fields);
            return;
        }
        if (key == "alphabet") {
            if (alphabet_) fail("duplicate \"alphabet\" line");
            std::string symbols;
            std::string token;
            while (fields >> token) {
                if (token.size() != 1) fail("symbol \"" + token + "\" is not a single character");
                if (symbols.find(token[0]) != std::string::npos) fail("duplicate symbol \"" + token + "\"");
                symbols += token;
            }
            alphabet_ = Alphabet(symbols);
        } else if (key == "states") {
            if (dfa_) fail("duplicate \"states\" line");
            if (!alphabet_) fail("\"states\" before \"alphabet\"");
            long long n = 0;
            if (!(fields >> n) || n <= 0) fail("state count must be a positive integer");
            expect_end(fields);
            dfa_.emplace(*alphabet_, static_cast<std::size_t>(n), 0);
        } else if (key == "start") {
            require_states(key);
            if (seen_start_) fail("duplicate \"start\" line");
            dfa_->set_start(read_state(fields, "start state"));
            expect_end(fields);
            seen_start_ = true;
        } else if (key == "accepting") {
            require_states(key);
            if (seen_accepting_) fail("duplicate \"accepting\" line");
            while (!(fields >> std::ws).eof()) dfa_->set_accepting(read_state(fields, "accepting state"));
            seen_accepting_ = true;
        } else if (key == "transition") {
            require_states(key);
            const StateId from = read_state(fields, "source state");
            std::string symbol;
            if (!(fields >> symbol) || symbol.size() != 1) fail("expected a single-character symbol");
            const auto index = dfa_->alphabet().index_of(symbol[0]);
            if (!index) fail("symbol \"" + symbol + "\" is not in the alphabet");
            const StateId to = read_state(fields, "target state");
            expect_end(fields);
            if (dfa_->target(from, *index) != kNoState) {
                fail("second transition for state " + std::to_string(from) + " on \"" + symbol + "\"");
            }
            dfa_->set_transition(from, *index, to);
        } else {
            fail("unknown key \"" + key + "\"");
        }
    }

    std::string_view text_;
    std::size_t line_no_ = 0;
    bool seen_header_ = false;
    bool seen_start_ = false;
    bool seen_accepting_ = false;
    std::optional<Alphabet> alphabet_;
    std::optional<Dfa> dfa_;
};

}  // namespace

Dfa deserialize(std::string_view text) { return Parser(text).parse(); }

std::string to_dot(const Dfa& dfa, std::string_view name) {
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n  rankdir=LR;\n  __start [shape=point];\n";
    for (StateId q = 0; q < dfa.state_count(); ++q) {
        out << "  q" << q << " [label=\"" << q << "\", shape=" << (dfa.is_accepting(q) ? "doublecircle" : "circle")
            << "];\n";
    }
    out << "  __start -> q" << dfa.start() << ";\n";
    for (StateId q = 0; q < dfa.state_count(); ++q) {
        for (std::size_t s = 0; s < dfa.alphabet().size(); ++s) {
            const StateId t = dfa.target(q, s);
            if (t != kNoState) {
                out << "  q" << q << " -> q" << t << " [label=\"" << dfa.alphabet().symbol(s) << "\"];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

Dfa load_dfa(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open DFA file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return deserialize(buffer.str());
    } catch (const DataError& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

void save_dfa(const std::filesystem::path& path, const Dfa& dfa) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write DFA file " + path.string());
    out << serialize(dfa);
    if (!out) throw DataError("failed writing " + path.string());
}

}  // namespace multidfa
