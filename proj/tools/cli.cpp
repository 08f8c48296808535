#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "multidfa/clustering.hpp"
#include "multidfa/dfa_io.hpp"
#include "multidfa/error.hpp"
#include "multidfa/evolve.hpp"
#include "multidfa/experiment.hpp"
#include "multidfa/pta.hpp"
#include "multidfa/rpni.hpp"
#include "multidfa/sample.hpp"

namespace multidfa::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
    std::string sample;
    std::string dfa;
    std::string out_dir = ".";
    std::string config;
    int k = 1;
    std::uint64_t seed = 0;
    std::size_t population = 0;
    std::size_t generations = 0;
    bool reject_marks = false;

    std::vector<std::uint64_t> seeds;
    std::vector<int> ks{2, 3, 4, 5};
    std::vector<double> densities{0.02, 0.05, 0.10, 0.15, 0.20};
    std::vector<std::string> methods{"RP"};
    std::size_t total = 100;
    bool serial = false;
    bool no_timing = false;
};

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw DataError("cannot create output directory " + dir.string());
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw DataError("cannot write " + path.string());
    return file;
}

std::string join(const StringSet& strings) {
    std::string out;
    for (const auto& s : shortlex_sorted(strings)) {
        if (!out.empty()) out += ' ';
        out += display_string(s);
    }
    return out;
}

// Writes <stem>.sub<i>.dfa files and reports one line per file.
void emit_subs(const std::vector<Dfa>& dfas, const std::vector<StringSet>& strings, const fs::path& out_dir,
               const std::string& stem, std::ostream& out) {
    ensure_dir(out_dir);
    for (std::size_t i = 0; i < dfas.size(); ++i) {
        const fs::path path = out_dir / (stem + ".sub" + std::to_string(i) + ".dfa");
        save_dfa(path, dfas[i]);
        out << path.string() << ": " << dfas[i].state_count() << " states; " << join(strings[i]) << '\n';
    }
}

void cmd_pta(const Options& o, std::ostream& out) {
    const auto sample = load_sample(o.sample);
    out << serialize(build_pta(sample.positives(), sample.alphabet()));
}

void cmd_rpni(const Options& o, std::ostream& out) {
    const auto sample = load_sample(o.sample);
    out << serialize(standard_rpni(sample, RpniOptions{o.reject_marks}));
}

void cmd_rpni_split(const Options& o, std::ostream& out) {
    const auto sample = load_sample(o.sample);
    const auto result = rpni_splitting(sample, o.k, RpniOptions{o.reject_marks});
    emit_subs(result.dfas, result.assignments, o.out_dir, fs::path(o.sample).stem().string(), out);
}

void cmd_ea(const Options& o, std::ostream& out) {
    const auto sample = load_sample(o.sample);
    EaConfig config;
    if (!o.config.empty()) config = load_ea_config(o.config);
    config.k = o.k;
    config.rng_seed = o.seed;
    if (o.population != 0) config.population_size = o.population;
    if (o.generations != 0) config.max_generations = o.generations;
    config.validate();

    const auto result = evolve(sample, config);
    const auto subs = extract_solution(result.best, sample);
    std::vector<Dfa> dfas;
    std::vector<StringSet> strings;
    for (const auto& sub : subs) {
        dfas.push_back(sub.dfa);
        strings.push_back(sub.strings);
    }
    const std::string stem = fs::path(o.sample).stem().string();
    emit_subs(dfas, strings, o.out_dir, stem, out);

    const fs::path history = fs::path(o.out_dir) / (stem + ".history.csv");
    auto file = open_out(history);
    write_history_csv(file, result.history);
    out << history.string() << ": " << result.history.size() << " generations; best f1=" << result.best_fitness.f1
        << " f2=" << result.best_fitness.f2 << '\n';
}

void cmd_cluster(const Options& o, std::ostream& out) {
    const Dfa dfa = load_dfa(o.dfa);
    const auto sample = load_sample(o.sample);
    for (char c : sample.alphabet().symbols()) {
        if (!dfa.alphabet().contains(c)) throw DataError(std::string("sample symbol '") + c + "' is not in the DFA alphabet");
    }
    const auto subs = transition_clustering(dfa, sample.positives());
    std::vector<Dfa> dfas;
    std::vector<StringSet> strings;
    for (const auto& sub : subs) {
        dfas.push_back(sub.dfa);
        strings.push_back(sub.strings);
    }
    emit_subs(dfas, strings, o.out_dir, fs::path(o.dfa).stem().string(), out);
}

void cmd_bench(const Options& o, std::ostream& out) {
    GridSpec spec;
    spec.ks = o.ks;
    spec.densities = o.densities;
    spec.seeds = o.seeds;
    spec.total_strings = o.total;
    spec.record_timing = !o.no_timing;
    spec.methods.clear();
    for (const auto& name : o.methods) spec.methods.push_back(*parse_method(name));
    if (o.population != 0) spec.ea.population_size = o.population;
    if (o.generations != 0) spec.ea.max_generations = o.generations;

    const auto rows = o.serial ? run_grid_serial(spec) : run_grid(spec);
    const fs::path dir = o.out_dir;
    ensure_dir(dir);
    {
        auto file = open_out(dir / "results.csv");
        write_results_csv(file, rows);
    }
    {
        auto file = open_out(dir / "summary.csv");
        write_summary_csv(file, rows);
    }
    std::size_t failed = 0;
    for (const auto& r : rows) failed += r.error.empty() ? 0 : 1;
    {
        auto file = open_out(dir / "errors.csv");
        write_errors_csv(file, rows);
    }
    out << rows.size() << " runs, " << failed << " failed; wrote " << (dir / "results.csv").string() << ", "
        << (dir / "summary.csv").string() << ", " << (dir / "errors.csv").string() << '\n';
}

void cmd_dot(const Options& o, std::ostream& out) { out << to_dot(load_dfa(o.dfa), fs::path(o.dfa).stem().string()); }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Learn sets of DFAs from labeled strings", "multidfa"};
    app.require_subcommand(1);
    Options o;

    auto* pta = app.add_subcommand("pta", "Print the prefix tree acceptor of a sample's positives");
    pta->add_option("--sample", o.sample, "Sample file")->required();

    auto* rpni = app.add_subcommand("rpni", "Run standard RPNI and print the learned DFA");
    rpni->add_option("--sample", o.sample, "Sample file")->required();
    rpni->add_flag("--reject-marks", o.reject_marks, "Prune merges using negative-prefix marks");

    auto* split = app.add_subcommand("rpni-split", "Run RPNI-splitting and write one DFA file per sub-automaton");
    split->add_option("--sample", o.sample, "Sample file")->required();
    split->add_option("--k", o.k, "Maximum number of DFAs")->required()->check(CLI::PositiveNumber);
    split->add_option("--out", o.out_dir, "Output directory");
    split->add_flag("--reject-marks", o.reject_marks, "Prune merges using negative-prefix marks");

    auto* ea = app.add_subcommand("ea", "Run the evolutionary learner and write its sub-DFAs and history");
    ea->add_option("--sample", o.sample, "Sample file")->required();
    ea->add_option("--k", o.k, "Number of DFAs to aim for")->required()->check(CLI::PositiveNumber);
    ea->add_option("--seed", o.seed, "Random seed")->required();
    ea->add_option("--pop", o.population, "Population size")->check(CLI::Range(2, 1000000));
    ea->add_option("--gens", o.generations, "Maximum number of generations")->check(CLI::PositiveNumber);
    ea->add_option("--config", o.config, "key=value configuration file");
    ea->add_option("--out", o.out_dir, "Output directory");

    auto* cluster = app.add_subcommand("cluster", "Split a DFA into sub-DFAs by transition clustering");
    cluster->add_option("--dfa", o.dfa, "DFA file")->required();
    cluster->add_option("--sample", o.sample, "Sample file (positives are used)")->required();
    cluster->add_option("--out", o.out_dir, "Output directory");

    auto* bench = app.add_subcommand("bench", "Run the purity experiment grid");
    bench->add_option("--out", o.out_dir, "Output directory")->required();
    bench->add_option("--seeds", o.seeds, "Comma-separated seeds")->required()->delimiter(',');
    bench->add_option("--k", o.ks, "Comma-separated numbers of languages")->delimiter(',')->check(CLI::Range(1, 6));
    bench->add_option("--densities", o.densities, "Comma-separated training densities")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0));
    bench->add_option("--methods", o.methods, "Comma-separated methods (RP, EA)")
        ->delimiter(',')
        ->check(CLI::IsMember({"RP", "EA"}));
    bench->add_option("--total", o.total, "Strings generated per run")->check(CLI::PositiveNumber);
    bench->add_option("--pop", o.population, "EA population size")->check(CLI::Range(2, 1000000));
    bench->add_option("--gens", o.generations, "EA maximum generations")->check(CLI::PositiveNumber);
    bench->add_flag("--serial", o.serial, "Run grid cells one after another");
    bench->add_flag("--no-timing", o.no_timing, "Write 0 for runtimes so output is reproducible byte for byte");

    auto* dot = app.add_subcommand("dot", "Print a DFA file as Graphviz");
    dot->add_option("--dfa", o.dfa, "DFA file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "multidfa: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (pta->parsed()) cmd_pta(o, out);
        if (rpni->parsed()) cmd_rpni(o, out);
        if (split->parsed()) cmd_rpni_split(o, out);
        if (ea->parsed()) cmd_ea(o, out);
        if (cluster->parsed()) cmd_cluster(o, out);
        if (bench->parsed()) cmd_bench(o, out);
        if (dot->parsed()) cmd_dot(o, out);
    } catch (const DataError& e) {
        err << "multidfa: " << e.what() << '\n';
        return kExitData;
    } catch (const fs::filesystem_error& e) {
        err << "multidfa: " << e.what() << '\n';
        return kExitData;
    } catch (const std::invalid_argument& e) {
        err << "multidfa: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace multidfa::cli
