#include "multidfa/compare.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

namespace multidfa {

namespace {

// Product states use index n for the dead state of an n-state component.
struct ProductIndex {
    std::size_t a_states;
    std::size_t b_states;

    [[nodiscard]] std::size_t size() const { return (a_states + 1) * (b_states + 1); }
    [[nodiscard]] std::size_t encode(std::size_t qa, std::size_t qb) const { return qa * (b_states + 1) + qb; }
};

std::size_t step(const Dfa& dfa, std::size_t q, std::size_t symbol) {
    if (q == dfa.state_count()) return q;
    const StateId t = dfa.target(static_cast<StateId>(q), symbol);
    return t == kNoState ? dfa.state_count() : t;
}

bool accepting(const Dfa& dfa, std::size_t q) {
    return q < dfa.state_count() && dfa.is_accepting(static_cast<StateId>(q));
}

}  // namespace

std::optional<std::string> difference_witness(const Dfa& a, const Dfa& b, std::size_t max_len) {
    if (!(a.alphabet() == b.alphabet())) throw std::invalid_argument("difference_witness: alphabets differ");

    const ProductIndex index{a.state_count(), b.state_count()};
    constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
    struct Visit {
        std::size_t parent = kUnseen;
        std::size_t qa = 0;
        std::size_t qb = 0;
        std::size_t depth = 0;
        char symbol = 0;
    };
    std::vector<Visit> visits(index.size());
    std::vector<bool> seen(index.size(), false);

    auto spell = [&](std::size_t node) {
        std::string w;
        while (visits[node].parent != kUnseen) {
            w.push_back(visits[node].symbol);
            node = visits[node].parent;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    // FIFO with symbols expanded in ascending order visits product states in
    // shortlex order of their access strings.
    const std::size_t root = index.encode(a.start(), b.start());
    visits[root] = {kUnseen, a.start(), b.start(), 0, 0};
    seen[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
        const std::size_t node = queue.front();
        queue.pop_front();
        const Visit v = visits[node];
        if (accepting(a, v.qa) != accepting(b, v.qb)) return spell(node);
        if (v.depth == max_len) continue;
        for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
            const std::size_t na = step(a, v.qa, s);
            const std::size_t nb = step(b, v.qb, s);
            const std::size_t next = index.encode(na, nb);
            if (seen[next]) continue;
            seen[next] = true;
            visits[next] = {node, na, nb, v.depth + 1, a.alphabet().symbol(s)};
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

Dfa dfa_union(std::span<const Dfa> dfas) {
    if (dfas.empty()) return Dfa(Alphabet(), 1, 0);
    const Alphabet& alphabet = dfas.front().alphabet();
    for (const auto& d : dfas) {
        if (!(d.alphabet() == alphabet)) throw std::invalid_argument("dfa_union: alphabets differ");
    }

    using Tuple = std::vector<StateId>;
    std::map<Tuple, StateId> ids;
    std::vector<Tuple> tuples;
    std::vector<std::vector<StateId>> edges;

    auto intern = [&](Tuple t) {
        auto [it, inserted] = ids.emplace(t, static_cast<StateId>(tuples.size()));
        if (inserted) tuples.push_back(std::move(t));
        return it->second;
    };

    Tuple start;
    for (const auto& d : dfas) start.push_back(d.start());
    intern(start);
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        std::vector<StateId> row(alphabet.size(), kNoState);
        for (std::size_t s = 0; s < alphabet.size(); ++s) {
            Tuple next(dfas.size(), kNoState);
            bool alive = false;
            for (std::size_t c = 0; c < dfas.size(); ++c) {
                const StateId q = tuples[i][c];
                if (q == kNoState) continue;
                next[c] = dfas[c].target(q, s);
                alive = alive || next[c] != kNoState;
            }
            if (alive) row[s] = intern(std::move(next));
        }
        edges.push_back(std::move(row));
    }

    Dfa out(alphabet, tuples.size(), 0);
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        for (std::size_t s = 0; s < alphabet.size(); ++s) {
            if (edges[i][s] != kNoState) out.set_transition(static_cast<StateId>(i), s, edges[i][s]);
        }
        for (std::size_t c = 0; c < dfas.size(); ++c) {
            if (tuples[i][c] != kNoState && dfas[c].is_accepting(tuples[i][c])) {
                out.set_accepting(static_cast<StateId>(i));
                break;
            }
        }
    }
    return out;
}

}  // namespace multidfa
