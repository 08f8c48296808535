#include "multidfa/genome.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace multidfa {

Genome encode(const Dfa& dfa) {
    const std::size_t n = dfa.state_count();
    const std::size_t w = dfa.alphabet().size();
    // Relabel so that the start state becomes 0.
    auto relabel = [s = dfa.start()](StateId q) -> StateId {
        if (q == s) return 0;
        if (q == 0) return s;
        return q;
    };

    Genome g{dfa.alphabet(), n, std::vector<StateId>(n * w, kNoState), std::vector<std::uint8_t>(n, 0)};
    for (StateId q = 0; q < n; ++q) {
        const StateId nq = relabel(q);
        for (std::size_t s = 0; s < w; ++s) {
            const StateId t = dfa.target(q, s);
            if (t != kNoState) g.matrix[nq * w + s] = relabel(t);
        }
        g.output[nq] = dfa.is_accepting(q) ? 1 : 0;
    }
    return g;
}

void validate(const Genome& g) {
    if (g.state_count == 0) throw std::invalid_argument("genome has no states");
    if (g.matrix.size() != g.state_count * g.width()) throw std::invalid_argument("genome matrix has the wrong size");
    if (g.output.size() != g.state_count) throw std::invalid_argument("genome output has the wrong size");
    for (StateId t : g.matrix) {
        if (t != kNoState && t >= g.state_count) throw std::invalid_argument("genome transition target out of range");
    }
    for (auto o : g.output) {
        if (o > 1) throw std::invalid_argument("genome output entry is not 0 or 1");
    }
}

Dfa decode(const Genome& g) {
    validate(g);
    Dfa dfa(g.alphabet, g.state_count, 0);
    const std::size_t w = g.width();
    for (StateId q = 0; q < g.state_count; ++q) {
        for (std::size_t s = 0; s < w; ++s) {
            const StateId t = g.matrix[q * w + s];
            if (t != kNoState) dfa.set_transition(q, s, t);
        }
        dfa.set_accepting(q, g.output[q] != 0);
    }
    return dfa;
}

Genome flip_output(const Genome& genome, std::size_t state) {
    Genome child = genome;
    child.output.at(state) ^= 1U;
    return child;
}

Genome set_cell(const Genome& genome, std::size_t index, StateId value) {
    if (value != kNoState && value >= genome.state_count) throw std::invalid_argument("set_cell: target out of range");
    Genome child = genome;
    child.matrix.at(index) = value;
    return child;
}

Genome mutate(const Genome& genome, Rng& rng, double output_share) {
    std::bernoulli_distribution hit_output(output_share);
    if (genome.matrix.empty() || hit_output(rng)) {
        std::uniform_int_distribution<std::size_t> pick(0, genome.state_count - 1);
        return flip_output(genome, pick(rng));
    }
    std::uniform_int_distribution<std::size_t> pick_cell(0, genome.matrix.size() - 1);
    const std::size_t cell = pick_cell(rng);

    // Values 0..n-1 stand for states, n for undefined; skip the current one.
    const std::size_t n = genome.state_count;
    const StateId current = genome.matrix[cell];
    const std::size_t current_code = current == kNoState ? n : current;
    std::uniform_int_distribution<std::size_t> pick_value(0, n - 1);
    std::size_t code = pick_value(rng);
    if (code >= current_code) ++code;
    return set_cell(genome, cell, code == n ? kNoState : static_cast<StateId>(code));
}

namespace {

Genome padded(const Genome& g, std::size_t states) {
    Genome out = g;
    out.state_count = states;
    out.matrix.resize(states * g.width(), kNoState);
    out.output.resize(states, 0);
    return out;
}

}  // namespace

std::pair<Genome, Genome> crossover_at(const Genome& p1, const Genome& p2, std::size_t cut) {
    if (!(p1.alphabet == p2.alphabet)) throw std::invalid_argument("crossover: parents use different alphabets");
    const std::size_t n = std::max(p1.state_count, p2.state_count);
    const std::size_t w = p1.width();
    Genome a = padded(p1, n);
    Genome b = padded(p2, n);
    if (cut > a.matrix.size()) throw std::invalid_argument("crossover: cut past the end of the matrix");

    const auto cut_it = static_cast<std::ptrdiff_t>(cut);
    std::swap_ranges(a.matrix.begin() + cut_it, a.matrix.end(), b.matrix.begin() + cut_it);
    const std::size_t output_cut = w == 0 ? n : cut / w;
    std::swap_ranges(a.output.begin() + static_cast<std::ptrdiff_t>(output_cut), a.output.end(),
                     b.output.begin() + static_cast<std::ptrdiff_t>(output_cut));
    return {std::move(a), std::move(b)};
}

std::pair<Genome, Genome> crossover(const Genome& p1, const Genome& p2, Rng& rng) {
    const std::size_t cells = std::max(p1.state_count, p2.state_count) * p1.width();
    std::uniform_int_distribution<std::size_t> pick(0, cells);
    return crossover_at(p1, p2, pick(rng));
}

std::string genome_key(const Genome& g) {
    std::string key = std::to_string(g.state_count) + ':';
    for (StateId t : g.matrix) {
        key += t == kNoState ? std::string("-") : std::to_string(t);
        key += ',';
    }
    key += '|';
    for (auto o : g.output) key += static_cast<char>('0' + o);
    return key;
}

}  // namespace multidfa
