#include "multidfa/experiment.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "multidfa/error.hpp"
#include "multidfa/rpni.hpp"

namespace multidfa {

std::string_view method_name(Method m) { return m == Method::RP ? "RP" : "EA"; }

std::optional<Method> parse_method(std::string_view name) {
    if (name == "RP") return Method::RP;
    if (name == "EA") return Method::EA;
    return std::nullopt;
}

StringSet negative_strings(std::span<const LanguageId> languages) {
    StringSet out;
    for (const auto& s : enumerate_strings(Alphabet(kExperimentSymbols), 2)) {
        if (s.empty()) continue;
        const bool member = std::any_of(languages.begin(), languages.end(),
                                        [&s](LanguageId id) { return is_member(id, s); });
        if (!member) out.insert(s);
    }
    return out;
}

namespace {

// n items spread over `parts` slots, the first n % parts slots get one more.
std::vector<std::size_t> spread(std::size_t n, std::size_t parts) {
    std::vector<std::size_t> out(parts, n / parts);
    for (std::size_t i = 0; i < n % parts; ++i) ++out[i];
    return out;
}

constexpr std::size_t kMaxTestRedraws = 100000;

}  // namespace

Dataset make_dataset(const ExperimentConfig& config, Rng& rng) {
    const std::size_t k = config.languages.size();
    if (k == 0) throw std::invalid_argument("make_dataset: no languages selected");
    if (!(config.density > 0.0 && config.density < 1.0)) {
        throw DataError("density must lie strictly between 0 and 1");
    }
    if (config.total_strings < 2 * k) throw DataError("too few strings for the selected languages");

    const auto wanted =
        static_cast<std::size_t>(std::ceil(config.density * static_cast<double>(config.total_strings) - 1e-9));
    if (wanted == 0) throw DataError("density leaves the training set empty");

    const auto draws = spread(config.total_strings, k);
    auto train_draws = spread(wanted, k);
    Dataset out;
    StringSet positives;
    std::vector<StringSet> train_of(k);
    for (std::size_t i = 0; i < k; ++i) {
        train_draws[i] = std::clamp<std::size_t>(train_draws[i], 1, draws[i] - 1);
        for (std::size_t j = 0; j < train_draws[i]; ++j) train_of[i].insert(sample_member(config.languages[i], rng));
        positives.insert(train_of[i].begin(), train_of[i].end());
        out.train_draws += train_draws[i];
    }
    for (std::size_t i = 0; i < k; ++i) {
        const LanguageId id = config.languages[i];
        for (std::size_t j = train_draws[i]; j < draws[i]; ++j) {
            std::size_t attempts = 0;
            std::string s = sample_member(id, rng);
            while (positives.contains(s)) {
                if (++attempts == kMaxTestRedraws) {
                    throw DataError("cannot draw test strings of " + std::string(language_name(id)) +
                                    " outside the training set");
                }
                s = sample_member(id, rng);
            }
            out.test.push_back({std::move(s), id});
        }
    }
    out.train = LabeledSample(std::move(positives), negative_strings(config.languages), Alphabet(kExperimentSymbols));
    return out;
}

double purity(std::span<const TestItem> test, std::span<const Dfa> learned) {
    if (test.empty()) throw std::invalid_argument("purity: empty test set");
    if (learned.empty()) return 0.0;

    std::map<LanguageId, std::vector<std::size_t>> hits;  // per language, per learned DFA
    for (const auto& item : test) {
        auto& row = hits[item.language];
        row.resize(learned.size(), 0);
        for (std::size_t o = 0; o < learned.size(); ++o) row[o] += accepts(learned[o], item.text) ? 1 : 0;
    }
    std::size_t total = 0;
    for (const auto& [id, row] : hits) total += *std::max_element(row.begin(), row.end());
    return static_cast<double>(total) / static_cast<double>(test.size());
}

std::vector<Dfa> learn(Method method, const LabeledSample& train, int k, const EaConfig& ea, std::uint64_t seed) {
    if (method == Method::RP) return rpni_splitting(train, k).dfas;

    EaConfig config = ea;
    config.k = k;
    config.rng_seed = seed;
    const auto result = evolve(train, config);
    std::vector<Dfa> out;
    for (auto& sub : extract_solution(result.best, train)) out.push_back(std::move(sub.dfa));
    return out;
}

std::vector<GridCell> grid_cells(const GridSpec& spec) {
    std::vector<GridCell> cells;
    const std::size_t n = kAllLanguages.size();
    for (int k : spec.ks) {
        if (k < 1 || static_cast<std::size_t>(k) > n) throw std::invalid_argument("grid: k must lie in [1, 6]");
        // Subsets as ascending index tuples, enumerated lexicographically.
        std::vector<std::size_t> pick(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
        while (true) {
            std::vector<LanguageId> langs;
            for (std::size_t i : pick) langs.push_back(kAllLanguages[i]);
            for (double density : spec.densities) {
                for (Method method : spec.methods) {
                    for (std::uint64_t seed : spec.seeds) cells.push_back({method, k, langs, density, seed});
                }
            }
            std::size_t i = pick.size();
            while (i > 0 && pick[i - 1] == n - pick.size() + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return cells;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t cell_seed(const GridCell& cell) {
    std::uint64_t mask = 0;
    for (LanguageId id : cell.languages) mask |= 1ULL << static_cast<unsigned>(id);
    std::uint64_t h = splitmix(cell.seed);
    for (std::uint64_t part : {static_cast<std::uint64_t>(cell.k), mask, std::bit_cast<std::uint64_t>(cell.density),
                               static_cast<std::uint64_t>(cell.method)}) {
        h = splitmix(h ^ part);
    }
    return h;
}

ReportRow run_cell(const GridCell& cell, const GridSpec& spec) {
    ReportRow row;
    row.cell = cell;
    const auto started = std::chrono::steady_clock::now();
    try {
        const std::uint64_t seed = cell_seed(cell);
        Rng rng(seed);
        ExperimentConfig config{cell.languages, cell.density, cell.method, spec.total_strings, seed, spec.ea};
        const Dataset data = make_dataset(config, rng);
        const auto learned = learn(cell.method, data.train, cell.k, spec.ea, splitmix(seed));
        row.purity = purity(data.test, learned);
        row.dfa_count = learned.size();
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    if (spec.record_timing) {
        row.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    }
    return row;
}

namespace {

auto row_key(const ReportRow& r) {
    return std::make_tuple(static_cast<int>(r.cell.method), r.cell.k, languages_label(r.cell.languages),
                           r.cell.density, r.cell.seed);
}

void sort_rows(std::vector<ReportRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ReportRow& a, const ReportRow& b) { return row_key(a) < row_key(b); });
}

}  // namespace

std::vector<ReportRow> run_grid_serial(const GridSpec& spec) {
    const auto cells = grid_cells(spec);
    std::vector<ReportRow> rows;
    rows.reserve(cells.size());
    for (const auto& cell : cells) rows.push_back(run_cell(cell, spec));
    sort_rows(rows);
    return rows;
}

std::vector<ReportRow> run_grid(const GridSpec& spec) {
    const auto cells = grid_cells(spec);
    GridSpec inner = spec;
    inner.ea.parallel_fitness = false;
    std::vector<ReportRow> rows(cells.size());
    const auto count = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        rows[static_cast<std::size_t>(i)] = run_cell(cells[static_cast<std::size_t>(i)], inner);
    }
    sort_rows(rows);
    return rows;
}

std::string languages_label(std::span<const LanguageId> languages) {
    std::string out;
    for (LanguageId id : languages) {
        if (!out.empty()) out += '+';
        out += language_name(id);
    }
    return out;
}

void write_results_csv(std::ostream& out, std::span<const ReportRow> rows) {
    out << "method,k,languages,density,seed,purity,dfa_count,runtime_ms\n";
    const auto old_precision = out.precision(12);
    for (const auto& r : rows) {
        if (!r.error.empty()) continue;
        out << method_name(r.cell.method) << ',' << r.cell.k << ',' << languages_label(r.cell.languages) << ','
            << r.cell.density << ',' << r.cell.seed << ',' << r.purity << ',' << r.dfa_count << ',' << r.runtime_ms
            << '\n';
    }
    out.precision(old_precision);
}

void write_summary_csv(std::ostream& out, std::span<const ReportRow> rows) {
    std::map<std::tuple<int, int, double>, std::vector<double>> groups;
    for (const auto& r : rows) {
        if (r.error.empty()) groups[{static_cast<int>(r.cell.method), r.cell.k, r.cell.density}].push_back(r.purity);
    }
    out << "method,k,density,runs,mean_purity,stddev_purity\n";
    const auto old_precision = out.precision(12);
    for (const auto& [key, values] : groups) {
        const auto [method, k, density] = key;
        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= static_cast<double>(values.size());
        double var = 0.0;
        for (double v : values) var += (v - mean) * (v - mean);
        const double stddev = values.size() > 1 ? std::sqrt(var / static_cast<double>(values.size() - 1)) : 0.0;
        out << method_name(static_cast<Method>(method)) << ',' << k << ',' << density << ',' << values.size() << ','
            << mean << ',' << stddev << '\n';
    }
    out.precision(old_precision);
}

void write_errors_csv(std::ostream& out, std::span<const ReportRow> rows) {
    out << "method,k,languages,density,seed,error\n";
    for (const auto& r : rows) {
        if (r.error.empty()) continue;
        std::string message = r.error;
        std::replace(message.begin(), message.end(), '"', '\'');
        out << method_name(r.cell.method) << ',' << r.cell.k << ',' << languages_label(r.cell.languages) << ','
            << r.cell.density << ',' << r.cell.seed << ",\"" << message << "\"\n";
    }
}

}  // namespace multidfa
