#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "multidfa/compare.hpp"
#include "multidfa/dfa_io.hpp"
#include "multidfa/error.hpp"
#include "multidfa/pta.hpp"
#include "multidfa/sample.hpp"
#include "multidfa/strings.hpp"
#include "test_support.hpp"

using namespace multidfa;
namespace mt = multidfa::testing;

namespace {

Dfa pta_of(const StringSet& s) { return build_pta(s, Alphabet::of_strings(s)); }

std::size_t count_lines_starting(const std::string& text, const std::string& head) {
    std::istringstream in(text);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) {
        const auto first = line.find_first_not_of(' ');
        if (first != std::string::npos && line.compare(first, head.size(), head) == 0) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("alphabet is sorted and deduplicated") {
    const Alphabet a("cabca");
    CHECK(a.symbols() == "abc");
    CHECK(a.index_of('c') == 2u);
    CHECK_FALSE(a.contains('d'));
    CHECK(a.covers("abba"));
    CHECK_FALSE(a.covers("abd"));
    CHECK(Alphabet("ab").merged_with(Alphabet("bc")) == Alphabet("abc"));
}

TEST_CASE("strings helpers") {
    CHECK(ShortlexLess{}("b", "aa"));
    CHECK_FALSE(ShortlexLess{}("ab", "aa"));
    CHECK(prefix_closure({"ab", "b"}) == std::vector<std::string>{"", "a", "b", "ab"});
    CHECK(enumerate_strings(Alphabet("ab"), 2) == mt::all_strings("ab", 2));
    CHECK(display_string("") == "ε");
}

TEST_CASE("build_pta on {aa, ab}") {
    const Dfa d = pta_of({"aa", "ab"});
    REQUIRE(d.state_count() == 4);
    CHECK(d.start() == 0);
    // shortlex: ε=0, a=1, aa=2, ab=3
    CHECK(d.target(0, 0) == 1);
    CHECK(d.target(0, 1) == kNoState);
    CHECK(d.target(1, 0) == 2);
    CHECK(d.target(1, 1) == 3);
    CHECK(d.accepting_states() == std::vector<StateId>{2, 3});
    CHECK(d.transition_count() == 3);
}

TEST_CASE("build_pta on the empty string") {
    const Dfa d = build_pta({""}, Alphabet("a"));
    CHECK(d.state_count() == 1);
    CHECK(d.is_accepting(0));
    CHECK(d.transition_count() == 0);
}

TEST_CASE("build_pta on the worked sample matches a prefix-set oracle") {
    std::set<std::string> prefixes;
    for (const auto& s : mt::kWorkedPositives)
        for (std::size_t i = 0; i <= s.size(); ++i) prefixes.insert(s.substr(0, i));
    CHECK(prefixes.size() == 21);

    const Dfa d = build_pta(mt::kWorkedPositives, Alphabet("ab"));
    CHECK(d.state_count() == 21);
    CHECK(d.accepting_states().size() == 9);
}

TEST_CASE("build_pta errors") {
    CHECK_THROWS_WITH_AS((void)build_pta({}, Alphabet("a")), "empty positive sample", DataError);
    try {
        (void)build_pta({"ax"}, Alphabet("a"));
        FAIL("expected DataError");
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find('x') != std::string::npos);
    }
}

TEST_CASE("PTA accepts exactly its positives") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 50; ++round) {
        const LabeledSample s = mt::random_sample(rng, 10, 0, 3, 6);
        const Dfa d = build_pta(s.positives(), s.alphabet());
        CHECK(d.state_count() == prefix_closure(s.positives()).size());
        for (const auto& w : mt::all_strings(s.alphabet().symbols(), 6))
            CHECK(accepts(d, w) == s.positives().contains(w));
    }
}

TEST_CASE("run with a partial transition function") {
    const Dfa d = pta_of({"aa"});
    CHECK(run(d, "a") == StateId{1});
    CHECK_FALSE(d.is_accepting(1));
    CHECK_FALSE(run(d, "ab").has_value());
    CHECK_FALSE(accepts(d, "ab"));
    CHECK_FALSE(accepts(d, "z"));
}

TEST_CASE("traces on the standard result") {
    const Dfa d = mt::worked_rpni();
    CHECK(run(d, "bba") == d.start());
    CHECK(d.is_accepting(d.start()));
    CHECK(accepts(d, "aa"));
    CHECK_FALSE(accepts(d, "a"));
    CHECK(load_dfa(MULTIDFA_DATA_DIR "/rpni_result.dfa") == d);
}

TEST_CASE("accuracy") {
    const LabeledSample s = mt::worked_sample();
    CHECK(accuracy(mt::worked_rpni(), s) == 1.0);
    CHECK(accuracy(build_pta(s.positives(), s.alphabet()), s) == 1.0);

    const LabeledSample five({"a", "aa", "aaa", "aaaa", "aaaaa"}, {"b", "bb", "bbb", "bbbb", "bbbbb"});
    const Dfa empty(five.alphabet(), 1, 0);
    CHECK(accuracy(empty, five) == 0.5);

    CHECK_THROWS((void)accuracy(empty, LabeledSample{}));
}

TEST_CASE("sample validation") {
    CHECK_THROWS_AS(LabeledSample({"a"}, {"a"}), DataError);
    CHECK_THROWS_AS(LabeledSample({"ab"}, {}, Alphabet("a")), DataError);
    CHECK(LabeledSample({"ab"}, {"c"}).alphabet() == Alphabet("abc"));
}

TEST_CASE("sample reader") {
    std::istringstream ok("4 2\n1 2 a b\n0 1 b\n1 0\n0 2 b b\n");
    const LabeledSample s = read_sample(ok);
    CHECK(s.positives() == StringSet{"", "ab"});
    CHECK(s.negatives() == StringSet{"b", "bb"});

    std::ostringstream out;
    write_sample(out, s);
    std::istringstream again(out.str());
    CHECK(read_sample(again) == s);

    CHECK(load_sample(MULTIDFA_DATA_DIR "/split_example.abb") == mt::worked_sample());
}

TEST_CASE("sample reader errors carry line numbers") {
    const std::vector<std::pair<std::string, std::string>> bad{
        {"2 2\n1 1 a\n", "expected 2"},     // fewer strings than declared
        {"1 2\n2 1 a\n", "line 2"},         // bad label
        {"1 2\n1 2 a\n", "line 2"},         // length mismatch
        {"1 2\n1 1 ab\n", "line 2"},        // multi-character symbol
        {"2 2\n1 1 a\n0 1 a\n", "a"},       // label conflict
        {"x\n", "line 1"},
    };
    for (const auto& [text, needle] : bad) {
        std::istringstream in(text);
        try {
            (void)read_sample(in);
            FAIL("accepted: " << text);
        } catch (const DataError& e) {
            CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos, std::string(e.what()));
        }
    }
    CHECK_THROWS_AS((void)load_sample("/nonexistent/sample.abb"), DataError);
}

TEST_CASE("difference_witness basics") {
    const Dfa d = mt::worked_rpni();
    CHECK_FALSE(difference_witness(d, d, 10).has_value());

    Dfa eps(Alphabet("ab"), 1, 0);
    eps.set_accepting(0);
    const Dfa none(Alphabet("ab"), 1, 0);
    CHECK(difference_witness(eps, none, 5) == std::string{});
    CHECK_THROWS_AS((void)difference_witness(eps, Dfa(Alphabet("abc"), 1, 0), 3), std::invalid_argument);

    Dfa late(Alphabet("ab"), 4, 0);
    late.set_transition(0, 'b', 1);
    late.set_transition(1, 'a', 2);
    late.set_transition(2, 'b', 3);
    late.set_accepting(3);
    CHECK(difference_witness(late, none, 3) == "bab");
    CHECK_FALSE(difference_witness(late, none, 2).has_value());
}

TEST_CASE("difference_witness agrees with enumeration on random automata") {
    std::mt19937_64 rng(2024);
    const Alphabet ab("ab");
    for (int round = 0; round < 300; ++round) {
        const Dfa a = mt::random_dfa(rng, ab, 6);
        const Dfa b = mt::random_dfa(rng, ab, 6);
        const std::size_t len = round % 9;
        CHECK(difference_witness(a, b, len) == mt::brute_force_witness(a, b, len));
    }
}

TEST_CASE("dfa_union accepts the union") {
    std::mt19937_64 rng(5);
    const Alphabet abc("abc");
    for (int round = 0; round < 50; ++round) {
        const std::vector<Dfa> parts{mt::random_dfa(rng, abc, 4), mt::random_dfa(rng, abc, 4),
                                     mt::random_dfa(rng, abc, 3)};
        const Dfa u = dfa_union(parts);
        for (const auto& w : mt::all_strings("abc", 5)) {
            const bool any = std::ranges::any_of(parts, [&](const Dfa& p) { return mt::simulate(p, w); });
            CHECK(mt::simulate(u, w) == any);
        }
    }
}

TEST_CASE("serialization round trip") {
    const Dfa small = pta_of({"a"});
    CHECK(deserialize(serialize(small)) == small);

    const Dfa fig = mt::cluster_dfa();
    CHECK(deserialize(serialize(fig)) == fig);
    CHECK(load_dfa(MULTIDFA_DATA_DIR "/cluster_example.dfa") == fig);
    CHECK(fig.state_count() == 8);
    // The automaton has 12 labelled edges; a 13th would be an
    // invisible layout loop on state 1.
    CHECK(fig.transition_count() == 12);
    CHECK(count_lines_starting(serialize(fig), "transition ") == 12);

    std::mt19937_64 rng(9);
    for (int round = 0; round < 50; ++round) {
        const Dfa d = mt::random_dfa(rng, Alphabet("abc"), 6);
        CHECK(deserialize(serialize(d)) == d);
    }
}

TEST_CASE("deserialize rejects malformed text with a line number") {
    const std::vector<std::string> bad{
        "dfa\nalphabet a\nstates 2\nstart 5\n",
        "dfa\nalphabet a\nstates 2\nstart 0\ntransition 0 b 1\n",
        "dfa\nalphabet a\nstates 2\nstart 0\ntransition 0 a 1\ntransition 0 a 0\n",
        "dfa\nalphabet a\nstates x\n",
        "nonsense\n",
    };
    for (const auto& text : bad) {
        try {
            (void)deserialize(text);
            FAIL("accepted: " << text);
        } catch (const DataError& e) {
            CHECK_MESSAGE(std::string(e.what()).find("line") != std::string::npos, std::string(e.what()));
        }
    }
    CHECK_THROWS_AS((void)load_dfa("/nonexistent/x.dfa"), DataError);
}

TEST_CASE("to_dot") {
    Dfa one(Alphabet("a"), 1, 0);
    one.set_accepting(0);
    const std::string dot = to_dot(one);
    CHECK(count_lines_starting(dot, "q0 [") == 1);
    CHECK(count_lines_starting(dot, "q") == 1);
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("__start -> q0") != std::string::npos);

    const std::string fig = to_dot(mt::cluster_dfa());
    CHECK(count_lines_starting(fig, "q") == 8 + 12);
}
