#include "multidfa/evolve.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "multidfa/error.hpp"
#include "multidfa/nsga2.hpp"
#include "multidfa/pta.hpp"

namespace multidfa {

void EaConfig::validate() const {
    if (k < 1) throw std::invalid_argument("EA config: k must be at least 1");
    if (population_size < 2) throw std::invalid_argument("EA config: population_size must be at least 2");
    for (double rate : {mutation_rate, output_mutation_share, crossover_rate}) {
        if (!(rate >= 0.0 && rate <= 1.0)) throw std::invalid_argument("EA config: rates must lie in [0, 1]");
    }
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& text, std::size_t line) {
    std::istringstream in(text);
    T value{};
    std::string rest;
    if (!(in >> value) || (in >> rest)) {
        throw DataError("line " + std::to_string(line) + ": bad value \"" + text + "\"");
    }
    return value;
}

}  // namespace

EaConfig read_ea_config(std::istream& in, EaConfig config) {
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string text = trim(raw);
        if (text.empty() || text.front() == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw DataError("line " + std::to_string(line) + ": expected key = value");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key == "k") {
            config.k = parse_number<int>(value, line);
        } else if (key == "population_size") {
            config.population_size = parse_number<std::size_t>(value, line);
        } else if (key == "max_generations") {
            config.max_generations = parse_number<std::size_t>(value, line);
        } else if (key == "mutation_rate") {
            config.mutation_rate = parse_number<double>(value, line);
        } else if (key == "output_mutation_share") {
            config.output_mutation_share = parse_number<double>(value, line);
        } else if (key == "crossover_rate") {
            config.crossover_rate = parse_number<double>(value, line);
        } else if (key == "rng_seed") {
            config.rng_seed = parse_number<std::uint64_t>(value, line);
        } else if (key == "parallel_fitness") {
            config.parallel_fitness = parse_number<int>(value, line) != 0;
        } else {
            throw DataError("line " + std::to_string(line) + ": unknown key \"" + key + "\"");
        }
    }
    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    }
    return config;
}

EaConfig load_ea_config(const std::filesystem::path& path, EaConfig base) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config file " + path.string());
    try {
        return read_ea_config(in, base);
    } catch (const DataError& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

std::vector<Genome> init_population(const StringSet& positives, const Alphabet& alphabet) {
    if (positives.empty()) throw DataError("empty positive sample");
    std::vector<Genome> population;
    population.reserve(positives.size());
    for (const auto& s : shortlex_sorted(positives)) population.push_back(encode(build_pta({s}, alphabet)));
    return population;
}

namespace {

struct Scored {
    std::vector<Genome> genomes;
    std::vector<FitnessPair> scores;
    Selection ranking;  // ranking.indices is the identity after selection
};

std::size_t best_index(const std::vector<Genome>& genomes, const std::vector<FitnessPair>& scores) {
    std::size_t best = 0;
    std::string best_key;
    for (std::size_t i = 1; i < genomes.size(); ++i) {
        if (scores[i] < scores[best]) {
            best = i;
            best_key.clear();
        } else if (scores[i] == scores[best]) {
            if (best_key.empty()) best_key = genome_key(genomes[best]);
            std::string key = genome_key(genomes[i]);
            if (key < best_key) {
                best = i;
                best_key = std::move(key);
            }
        }
    }
    return best;
}

GenerationStats stats_of(std::size_t generation, const Scored& pop) {
    const std::size_t best = best_index(pop.genomes, pop.scores);
    const auto front_size =
        static_cast<std::size_t>(std::count(pop.ranking.rank.begin(), pop.ranking.rank.end(), std::size_t{0}));
    return {generation, pop.scores[best], front_size};
}

Scored reorder(std::vector<Genome> genomes, std::vector<FitnessPair> scores, std::size_t target) {
    Scored out;
    Selection sel = nsga2_select(scores, target);
    out.genomes.reserve(sel.indices.size());
    out.scores.reserve(sel.indices.size());
    for (std::size_t i : sel.indices) {
        out.genomes.push_back(std::move(genomes[i]));
        out.scores.push_back(scores[i]);
    }
    std::iota(sel.indices.begin(), sel.indices.end(), std::size_t{0});
    out.ranking = std::move(sel);
    return out;
}

}  // namespace

EaResult evolve(const LabeledSample& sample, const EaConfig& config) {
    config.validate();
    if (sample.positives().empty()) throw DataError("empty positive sample");

    auto score = [&](std::span<const Genome> genomes) {
        return config.parallel_fitness ? evaluate_population(genomes, sample, config.k)
                                       : evaluate_population_serial(genomes, sample, config.k);
    };

    Rng rng(config.rng_seed);
    auto initial = init_population(sample.positives(), sample.alphabet());
    auto initial_scores = score(initial);
    const std::size_t initial_size = std::min(initial.size(), config.population_size);
    Scored pop = reorder(std::move(initial), std::move(initial_scores), initial_size);

    EaResult result;
    result.history.push_back(stats_of(0, pop));

    auto tournament = [&]() {
        std::uniform_int_distribution<std::size_t> pick(0, pop.genomes.size() - 1);
        const std::size_t a = pick(rng);
        const std::size_t b = pick(rng);
        const auto& r = pop.ranking;
        if (r.rank[b] < r.rank[a] || (r.rank[b] == r.rank[a] && r.crowding[b] > r.crowding[a])) return b;
        return a;
    };
    std::bernoulli_distribution do_crossover(config.crossover_rate);
    std::bernoulli_distribution do_mutation(config.mutation_rate);

    for (std::size_t gen = 1; gen <= config.max_generations && !result.history.back().best.perfect(); ++gen) {
        std::vector<Genome> offspring;
        offspring.reserve(config.population_size + 1);
        while (offspring.size() < config.population_size) {
            const auto& p1 = pop.genomes[tournament()];
            const auto& p2 = pop.genomes[tournament()];
            auto children = do_crossover(rng) ? crossover(p1, p2, rng) : std::pair<Genome, Genome>{p1, p2};
            for (Genome* child : {&children.first, &children.second}) {
                if (do_mutation(rng)) *child = mutate(*child, rng, config.output_mutation_share);
            }
            offspring.push_back(std::move(children.first));
            if (offspring.size() < config.population_size) offspring.push_back(std::move(children.second));
        }
        auto offspring_scores = score(offspring);

        std::vector<Genome> pool = std::move(pop.genomes);
        std::vector<FitnessPair> pool_scores = std::move(pop.scores);
        pool.insert(pool.end(), std::make_move_iterator(offspring.begin()), std::make_move_iterator(offspring.end()));
        pool_scores.insert(pool_scores.end(), offspring_scores.begin(), offspring_scores.end());
        const std::size_t target = std::min(config.population_size, pool.size());
        pop = reorder(std::move(pool), std::move(pool_scores), target);
        result.history.push_back(stats_of(gen, pop));
    }

    const std::size_t best = best_index(pop.genomes, pop.scores);
    result.best = pop.genomes[best];
    result.best_fitness = pop.scores[best];
    return result;
}

std::vector<SubDfa> extract_solution(const Genome& best, const LabeledSample& sample) {
    return transition_clustering(decode(best), sample.positives());
}

void write_history_csv(std::ostream& out, const std::vector<GenerationStats>& history) {
    out << "generation,best_f1,best_f2,front_size\n";
    const auto old_precision = out.precision(17);
    for (const auto& g : history) {
        out << g.generation << ',' << g.best.f1 << ',' << g.best.f2 << ',' << g.front_size << '\n';
    }
    out.precision(old_precision);
}

}  // namespace multidfa
