#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "multidfa/error.hpp"
#include "multidfa/experiment.hpp"
#include "multidfa/languages.hpp"
#include "multidfa/rpni.hpp"
#include "test_support.hpp"

using namespace multidfa;
namespace mt = multidfa::testing;

namespace {

const std::vector<std::string>& sigma_upto_12() {
    static const std::vector<std::string> all = mt::all_strings("abc", 12);
    return all;
}

std::vector<std::vector<LanguageId>> all_subsets() {
    std::vector<std::vector<LanguageId>> out;
    for (unsigned mask = 0; mask < 64; ++mask) {
        std::vector<LanguageId> subset;
        for (std::size_t i = 0; i < 6; ++i)
            if (mask & (1u << i)) subset.push_back(kAllLanguages[i]);
        if (subset.size() >= 2 && subset.size() <= 5) out.push_back(subset);
    }
    return out;
}

Dfa accept_all(const Alphabet& alphabet) {
    Dfa d(alphabet, 1, 0);
    for (std::size_t s = 0; s < alphabet.size(); ++s) d.set_transition(0, s, 0);
    d.set_accepting(0);
    return d;
}

}  // namespace

TEST_CASE("membership predicates") {
    CHECK(is_member(LanguageId::A_BC_PLUS_A, "abca"));
    CHECK(is_member(LanguageId::A_BC_PLUS_A, "abcbca"));
    CHECK_FALSE(is_member(LanguageId::A_BC_PLUS_A, "aa"));
    CHECK_FALSE(is_member(LanguageId::AB_GE2, "ab"));
    CHECK(is_member(LanguageId::AB_GE2, "abab"));
    CHECK(is_member(LanguageId::ABC_PLUS, "abc"));
    CHECK(is_member(LanguageId::A_BPLUS_A, "abbba"));
    CHECK_FALSE(is_member(LanguageId::A_BPLUS_A, "aa"));
    CHECK(is_member(LanguageId::APLUS_BPLUS, "aabbb"));
    CHECK_FALSE(is_member(LanguageId::APLUS_BPLUS, "aba"));
    CHECK(is_member(LanguageId::A_PLUS, "a"));
    CHECK_FALSE(is_member(LanguageId::A_PLUS, ""));
    for (LanguageId id : kAllLanguages) CHECK(parse_language(language_name(id)) == id);
    CHECK_FALSE(parse_language("NOPE").has_value());
}

TEST_CASE("target languages are pairwise disjoint up to length 12") {
    for (const auto& w : sigma_upto_12()) {
        int hits = 0;
        for (LanguageId id : kAllLanguages) hits += is_member(id, w);
        if (hits > 1) FAIL("shared string " << w);
    }
}

TEST_CASE("reference automata agree with the predicates") {
    for (LanguageId id : kAllLanguages) {
        const Dfa d = reference_dfa(id);
        CHECK(d.state_count() <= 6);
        std::size_t mismatches = 0;
        for (const auto& w : sigma_upto_12()) mismatches += mt::simulate(d, w) != is_member(id, w);
        CHECK_MESSAGE(mismatches == 0, language_name(id));
    }
}

TEST_CASE("member counts under the length cap") {
    CHECK(members_within_cap(LanguageId::A_PLUS) == 24);
    CHECK(members_within_cap(LanguageId::AB_GE2) == 11);
    CHECK(members_within_cap(LanguageId::ABC_PLUS) == 8);
    CHECK(members_within_cap(LanguageId::A_BPLUS_A) == 22);
    CHECK(members_within_cap(LanguageId::A_BC_PLUS_A) == 11);
    // a^i b^j with i, j >= 1 and i + j <= 24
    CHECK(members_within_cap(LanguageId::APLUS_BPLUS) == 23 * 24 / 2);
}

TEST_CASE("sample_language") {
    Rng rng(5);
    const StringSet five = sample_language(LanguageId::A_PLUS, 5, rng);
    CHECK(five.size() == 5);
    for (const auto& s : five) CHECK(is_member(LanguageId::A_PLUS, s));

    for (int i = 0; i < 500; ++i) {
        const std::string s = sample_member(LanguageId::AB_GE2, rng);
        CHECK(s != "ab");
        CHECK(is_member(LanguageId::AB_GE2, s));
        CHECK(s.size() <= kMaxSampleLength);
    }
    for (LanguageId id : kAllLanguages)
        for (const auto& s : sample_language(id, 8, rng)) CHECK(is_member(id, s));
    CHECK_THROWS_AS((void)sample_language(LanguageId::ABC_PLUS, 9, rng), DataError);
}

TEST_CASE("negative strings") {
    CHECK(negative_strings(std::vector<LanguageId>{}).size() == 12);
    const StringSet a_plus = negative_strings(std::vector<LanguageId>{LanguageId::A_PLUS});
    CHECK(a_plus.size() == 10);
    CHECK_FALSE(a_plus.contains("a"));
    CHECK_FALSE(a_plus.contains("aa"));
    CHECK(negative_strings(std::vector<LanguageId>{LanguageId::A_PLUS, LanguageId::APLUS_BPLUS}).size() == 9);
}

TEST_CASE("make_dataset") {
    ExperimentConfig cfg;
    cfg.languages = {LanguageId::A_PLUS, LanguageId::A_BPLUS_A};
    cfg.density = 0.10;
    Rng rng(3);
    const Dataset d = make_dataset(cfg, rng);
    CHECK(d.train_draws == 10);
    CHECK(d.train.positives().size() <= 10);
    CHECK(d.test.size() == 90);
    for (const auto& item : d.test) {
        CHECK(is_member(item.language, item.text));
        CHECK_FALSE(d.train.positives().contains(item.text));
    }
    for (const auto& s : d.train.negatives()) CHECK_FALSE(d.train.positives().contains(s));

    Rng again(3);
    const Dataset e = make_dataset(cfg, again);
    CHECK(e.train == d.train);
    CHECK(e.test.size() == d.test.size());
    CHECK(std::equal(e.test.begin(), e.test.end(), d.test.begin(),
                     [](const TestItem& x, const TestItem& y) { return x.text == y.text && x.language == y.language; }));

    cfg.density = 0.0;
    CHECK_THROWS_AS((void)make_dataset(cfg, rng), DataError);
}

TEST_CASE("purity examples") {
    const std::vector<TestItem> t{{"a", LanguageId::A_PLUS}, {"ab", LanguageId::APLUS_BPLUS}};
    Dfa just_a(Alphabet(kExperimentSymbols), 2, 0);
    just_a.set_transition(0, 'a', 1);
    just_a.set_accepting(1);
    CHECK(purity(t, std::vector<Dfa>{just_a}) == 0.5);
    CHECK(purity(t, std::vector<Dfa>{accept_all(Alphabet(kExperimentSymbols))}) == 1.0);
    CHECK(purity(t, std::vector<Dfa>{Dfa(Alphabet(kExperimentSymbols), 1, 0)}) == 0.0);
    CHECK(purity(t, std::vector<Dfa>{}) == 0.0);
    CHECK_THROWS((void)purity(std::vector<TestItem>{}, std::vector<Dfa>{just_a}));
}

TEST_CASE("purity of the reference automata is 1 on every subset") {
    const auto subsets = all_subsets();
    CHECK(subsets.size() == 56);
    std::mt19937_64 shuffle_rng(0);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        ExperimentConfig cfg;
        cfg.languages = subsets[i];
        cfg.density = 0.10;
        Rng rng(i);
        const Dataset d = make_dataset(cfg, rng);
        std::vector<Dfa> refs;
        for (LanguageId id : subsets[i]) refs.push_back(reference_dfa(id));
        CHECK(purity(d.test, refs) == 1.0);

        const Dfa reject(Alphabet(kExperimentSymbols), 1, 0);
        CHECK(purity(d.test, std::vector<Dfa>{reject}) == 0.0);

        std::vector<Dfa> mixed{reference_dfa(subsets[i][0]), reject, accept_all(Alphabet(kExperimentSymbols))};
        auto test = d.test;
        const double before = purity(test, mixed);
        std::shuffle(test.begin(), test.end(), shuffle_rng);
        std::shuffle(mixed.begin(), mixed.end(), shuffle_rng);
        CHECK(purity(test, mixed) == before);
    }
}

TEST_CASE("grid cells") {
    GridSpec spec;
    spec.seeds = {1, 2};
    const auto cells = grid_cells(spec);
    CHECK(cells.size() == 56 * 5 * 2);
    std::map<int, std::size_t> per_k;
    for (const auto& c : cells) ++per_k[c.k];
    CHECK(per_k[2] == 15 * 10);
    CHECK(per_k[3] == 20 * 10);
    CHECK(per_k[4] == 15 * 10);
    CHECK(per_k[5] == 6 * 10);
    CHECK(cell_seed(cells[0]) != cell_seed(cells[1]));
    CHECK(cell_seed(cells[0]) == cell_seed(grid_cells(spec)[0]));
}

TEST_CASE("serial and parallel grid agree") {
    GridSpec spec;
    spec.ks = {2, 3};
    spec.densities = {0.05, 0.20};
    spec.seeds = {1, 2};
    spec.record_timing = false;
    const auto serial = run_grid_serial(spec);
    const auto parallel = run_grid(spec);
    REQUIRE(serial.size() == parallel.size());
    std::ostringstream a;
    std::ostringstream b;
    write_results_csv(a, serial);
    write_results_csv(b, parallel);
    CHECK(a.str() == b.str());
    for (const auto& row : serial) {
        CHECK(row.error.empty());
        CHECK(row.purity >= 0.0);
        CHECK(row.purity <= 1.0);
        CHECK(row.dfa_count <= static_cast<std::size_t>(row.cell.k));
    }
}

TEST_CASE("grid with the evolutionary learner") {
    GridSpec spec;
    spec.ks = {2};
    spec.densities = {0.05};
    spec.methods = {Method::EA};
    spec.ea.population_size = 16;
    spec.ea.max_generations = 10;
    spec.record_timing = false;
    const auto rows = run_grid(spec);
    CHECK(rows.size() == 15);
    std::ostringstream a;
    std::ostringstream b;
    write_results_csv(a, rows);
    write_results_csv(b, run_grid_serial(spec));
    CHECK(a.str() == b.str());
    for (const auto& row : rows) {
        CHECK(row.error.empty());
        CHECK(row.purity >= 0.0);
        CHECK(row.purity <= 1.0);
    }
}

TEST_CASE("error rows go to the errors file") {
    ReportRow ok;
    ok.cell = {Method::RP, 2, {LanguageId::A_PLUS, LanguageId::AB_GE2}, 0.1, 1};
    ok.purity = 0.75;
    ReportRow bad = ok;
    bad.error = "boom \"quoted\"";
    const std::vector<ReportRow> rows{ok, bad};
    std::ostringstream results;
    std::ostringstream errors;
    write_results_csv(results, rows);
    write_errors_csv(errors, rows);
    CHECK(results.str() == "method,k,languages,density,seed,purity,dfa_count,runtime_ms\nRP,2,A_PLUS+AB_GE2,0.1,1,0.75,0,0\n");
    CHECK(errors.str() == "method,k,languages,density,seed,error\nRP,2,A_PLUS+AB_GE2,0.1,1,\"boom 'quoted'\"\n");
}

TEST_CASE("splitting beats a single automaton on a+ vs (ab)^{>=2}") {
    const std::vector<LanguageId> langs{LanguageId::A_PLUS, LanguageId::AB_GE2};
    double split_sum = 0.0;
    double single_sum = 0.0;
    std::ofstream out("rp_vs_baseline.csv");
    out << "seed,rp_purity,rp_dfas,single_purity\n";
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        ExperimentConfig cfg{langs, 0.20, Method::RP, 100, seed, std::nullopt};
        Rng rng(seed);
        const Dataset d = make_dataset(cfg, rng);
        const auto split = rpni_splitting(d.train, 2).dfas;
        const std::vector<Dfa> single{standard_rpni(d.train)};
        const double p_split = purity(d.test, split);
        const double p_single = purity(d.test, single);
        out << seed << ',' << p_split << ',' << split.size() << ',' << p_single << '\n';
        split_sum += p_split;
        single_sum += p_single;
    }
    MESSAGE("mean purity: split " << split_sum / 10 << ", single " << single_sum / 10);
    CHECK(split_sum >= single_sum);
}
