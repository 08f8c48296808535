#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multidfa/evolve.hpp"
#include "multidfa/languages.hpp"
#include "multidfa/sample.hpp"

namespace multidfa {

enum class Method { RP, EA };

[[nodiscard]] std::string_view method_name(Method m);
[[nodiscard]] std::optional<Method> parse_method(std::string_view name);

struct ExperimentConfig {
    std::vector<LanguageId> languages;
    double density = 0.1;
    Method method = Method::RP;
    std::size_t total_strings = 100;
    std::uint64_t seed = 0;
    std::optional<EaConfig> ea;
};

struct TestItem {
    std::string text;
    LanguageId language;
};

struct Dataset {
    LabeledSample train;
    /// Labeled test draws; a string may repeat but never occurs in train.
    std::vector<TestItem> test;
    std::size_t train_draws = 0;
};

/// (Σ¹ ∪ Σ²) over {a, b, c} minus every member of the given languages.
[[nodiscard]] StringSet negative_strings(std::span<const LanguageId> languages);

/// total_strings draws split evenly over the languages. ⌈density · total⌉
/// of them (at least one per language) are training draws whose distinct
/// strings form S+; the rest form the test set, each test draw redrawn while
/// it collides with a training string. S− comes from negative_strings.
/// Throws DataError if the configuration leaves no training strings or test
/// draws cannot avoid the training strings.
[[nodiscard]] Dataset make_dataset(const ExperimentConfig& config, Rng& rng);

/// (1/|T|) Σ_i max_o |T ∩ i ∩ L(o)|. Zero when `learned` is empty; throws
/// std::invalid_argument on an empty test set.
[[nodiscard]] double purity(std::span<const TestItem> test, std::span<const Dfa> learned);

/// Runs the learner with parameter k: RPNI-splitting, or the EA followed by
/// transition clustering of its best individual.
[[nodiscard]] std::vector<Dfa> learn(Method method, const LabeledSample& train, int k, const EaConfig& ea,
                                     std::uint64_t seed);

struct GridSpec {
    std::vector<int> ks{2, 3, 4, 5};
    std::vector<double> densities{0.02, 0.05, 0.10, 0.15, 0.20};
    std::vector<Method> methods{Method::RP};
    std::vector<std::uint64_t> seeds{1};
    std::size_t total_strings = 100;
    EaConfig ea;
    bool record_timing = true;
};

struct GridCell {
    Method method = Method::RP;
    int k = 0;
    std::vector<LanguageId> languages;
    double density = 0.0;
    std::uint64_t seed = 0;
};

struct ReportRow {
    GridCell cell;
    double purity = 0.0;
    std::size_t dfa_count = 0;
    double runtime_ms = 0.0;
    std::string error;  // non-empty when the run failed
};

/// Every (k, language subset, density, method, seed) combination, subsets
/// in lexicographic order of language indices.
[[nodiscard]] std::vector<GridCell> grid_cells(const GridSpec& spec);

/// Seed of a cell's random stream, derived from every field of the cell.
[[nodiscard]] std::uint64_t cell_seed(const GridCell& cell);

[[nodiscard]] ReportRow run_cell(const GridCell& cell, const GridSpec& spec);

/// Reference implementation: cells one after another.
[[nodiscard]] std::vector<ReportRow> run_grid_serial(const GridSpec& spec);
/// Cells run concurrently with OpenMP; same rows as the serial version
/// (timings aside).
[[nodiscard]] std::vector<ReportRow> run_grid(const GridSpec& spec);

[[nodiscard]] std::string languages_label(std::span<const LanguageId> languages);

/// Header `method,k,languages,density,seed,purity,dfa_count,runtime_ms`;
/// failed runs are skipped here and go to write_errors_csv.
void write_results_csv(std::ostream& out, std::span<const ReportRow> rows);
/// Mean and sample standard deviation of purity per (method, k, density).
void write_summary_csv(std::ostream& out, std::span<const ReportRow> rows);
void write_errors_csv(std::ostream& out, std::span<const ReportRow> rows);

}  // namespace multidfa
