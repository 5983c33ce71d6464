#include <doctest.h>

#include <map>

#include "funl/dfa.hpp"
#include "support/builders.hpp"
#include "support/random_automata.hpp"

using namespace funl;
using namespace funl::testsupport;

namespace {

ObservationIndex make_index(const std::vector<Word>& qs, const std::vector<Word>& ts) {
    ObservationIndex index;
    for (const auto& q : qs) index.add_state_word(q);
    for (const auto& t : ts) index.add_test_word(t);
    return index;
}

/// Independent minimality oracle: distinct acceptance behaviors over
/// all words of length < n among reachable states.
std::size_t nerode_class_count(const Dfa& d) {
    auto words = words_up_to(d.alphabet, d.num_states);
    std::set<std::vector<bool>> behaviors;
    std::vector<bool> reachable(d.num_states, false);
    std::vector<State> stack{d.initial};
    reachable[d.initial] = true;
    while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        for (std::size_t a = 0; a < d.alphabet.size(); ++a)
            if (!reachable[d.delta[s][a]]) {
                reachable[d.delta[s][a]] = true;
                stack.push_back(d.delta[s][a]);
            }
    }
    for (State s = 0; s < d.num_states; ++s) {
        if (!reachable[s]) continue;
        std::vector<bool> behavior;
        for (const auto& w : words) {
            State cur = s;
            for (char a : w) cur = d.step(cur, a);
            behavior.push_back(d.accepting[cur]);
        }
        behaviors.insert(std::move(behavior));
    }
    return behaviors.size();
}

} // namespace

TEST_CASE("rows over the target {a}") {
    DfaTeacher teacher(dfa_single_a());
    CHECK(dfa_row("", {""}, teacher) == std::vector<bool>{false});
    CHECK(dfa_row("a", {"", "a"}, teacher) == std::vector<bool>{true, false});
    CHECK(dfa_row("a", {}, teacher).empty());
}

TEST_CASE("closedness check") {
    SUBCASE("initial index for {a} fails with witness a") {
        DfaTeacher teacher(dfa_single_a());
        auto index = make_index({}, {});
        CHECK(DfaDomain::check_epi(index, teacher) == Word("a"));
    }
    SUBCASE("after adding a it passes") {
        DfaTeacher teacher(dfa_single_a());
        auto index = make_index({"a"}, {});
        CHECK_FALSE(DfaDomain::check_epi(index, teacher));
    }
    SUBCASE("empty language is always closed") {
        DfaTeacher teacher(dfa_empty_language());
        auto index = make_index({"aa"}, {"a"});
        CHECK_FALSE(DfaDomain::check_epi(index, teacher));
    }
}

TEST_CASE("consistency check") {
    DfaTeacher teacher(dfa_single_a());
    SUBCASE("prefixes of aaa with T={eps} are inconsistent, witness a") {
        auto index = make_index({"aaa"}, {});
        CHECK(DfaDomain::check_mono(index, teacher) == Word("a"));
    }
    SUBCASE("distinct rows are vacuously consistent") {
        auto index = make_index({"a"}, {});
        CHECK_FALSE(DfaDomain::check_mono(index, teacher));
    }
    SUBCASE("singleton Q is always consistent") {
        auto index = make_index({}, {});
        CHECK_FALSE(DfaDomain::check_mono(index, teacher));
    }
}

TEST_CASE("hypothesis construction for {a}") {
    DfaTeacher teacher(dfa_single_a());
    SUBCASE("two-state hypothesis accepting a(aa)*") {
        auto index = make_index({"a"}, {});
        Dfa h = DfaDomain::build_hypothesis(index, teacher);
        CHECK(h.num_states == 2);
        CHECK(h.initial == 0);
        CHECK(h.accepting == std::vector<bool>{false, true});
        CHECK(h.delta == std::vector<std::vector<State>>{{1}, {0}});
        CHECK(h.state_names == std::vector<std::string>{"ε", "a"});
        CHECK(evaluate(h, "a"));
        CHECK(evaluate(h, "aaa")); // wrong on the target, right per the table
    }
    SUBCASE("three-state hypothesis equals the minimal automaton") {
        auto index = make_index({"aaa"}, {"a"});
        Dfa h = DfaDomain::build_hypothesis(index, teacher);
        CHECK(h.num_states == 3);
        CHECK(h.accepting == std::vector<bool>{false, true, false});
        CHECK(h.delta == std::vector<std::vector<State>>{{1}, {2}, {2}});
        CHECK_FALSE(dfa_equiv(h, dfa_single_a()));
    }
    SUBCASE("not-automatable input is rejected") {
        auto index = make_index({}, {});
        CHECK_THROWS_AS(DfaDomain::build_hypothesis(index, teacher), NotAutomatableError);
    }
}

TEST_CASE("hypothesis for the empty language is one rejecting state") {
    DfaTeacher teacher(dfa_empty_language());
    auto index = make_index({}, {});
    Dfa h = DfaDomain::build_hypothesis(index, teacher);
    CHECK(h.num_states == 1);
    CHECK_FALSE(h.accepting[0]);
    CHECK(h.delta[0][0] == 0);
}

TEST_CASE("transition targets do not depend on the chosen representative") {
    // Whenever two state words share a row over T, consistency makes
    // them share the row over T+AT, so every candidate representative
    // resolves to the same class.
    DfaTeacher teacher(dfa_single_a());
    auto index = make_index({"aaa"}, {"a"});
    auto tests = std::vector<Word>(index.test_words().begin(), index.test_words().end());
    auto wide = index.tests_with_extensions(teacher.alphabet());
    std::map<std::vector<bool>, std::set<std::vector<bool>>> wide_rows_per_narrow;
    for (const auto& q : index.state_words())
        wide_rows_per_narrow[dfa_row(q, tests, teacher)].insert(dfa_row(q, wide, teacher));
    for (const auto& [narrow, wides] : wide_rows_per_narrow) CHECK(wides.size() == 1);
}

TEST_CASE("minimize_dfa") {
    SUBCASE("the minimal automaton for {a} is a fixpoint") {
        Dfa m = minimize_dfa(dfa_single_a());
        CHECK(m.num_states == 3);
        CHECK(dfa_isomorphic(m, dfa_single_a()));
    }
    SUBCASE("four-state chain for {a} shrinks to three states") {
        Dfa chain = make_dfa("a", 0, {false, true, false, false}, {{1}, {2}, {3}, {3}});
        Dfa m = minimize_dfa(chain);
        CHECK(m.num_states == 3);
        CHECK(nerode_class_count(chain) == 3);
        CHECK_FALSE(dfa_equiv(m, chain));
    }
    SUBCASE("idempotent") {
        Dfa chain = make_dfa("a", 0, {false, true, false, false}, {{1}, {2}, {3}, {3}});
        Dfa once = minimize_dfa(chain);
        Dfa twice = minimize_dfa(once);
        CHECK(dfa_isomorphic(once, twice));
        CHECK(once.num_states == twice.num_states);
    }
    SUBCASE("matches the brute-force class count on random automata") {
        Rng rng(7301);
        for (int i = 0; i < 50; ++i) {
            Dfa d = random_dfa(rng, 8, "ab");
            CHECK(minimize_dfa(d).num_states == nerode_class_count(d));
        }
    }
}

TEST_CASE("dfa_equiv") {
    SUBCASE("a(aa)* against {a} yields aaa") {
        Dfa left = make_dfa("a", 0, {false, true}, {{1}, {0}});
        CHECK(dfa_equiv(left, dfa_single_a()) == Word("aaa"));
    }
    SUBCASE("reflexive") {
        CHECK_FALSE(dfa_equiv(dfa_single_a(), dfa_single_a()));
    }
    SUBCASE("empty vs {eps} differs at the empty word") {
        Dfa accepts_eps = make_dfa("a", 0, {true, false}, {{1}, {1}});
        CHECK(dfa_equiv(dfa_empty_language(), accepts_eps) == Word(""));
    }
    SUBCASE("alphabet mismatch throws") {
        Dfa other = make_dfa("ab", 0, {false}, {{0, 0}});
        CHECK_THROWS_AS(dfa_equiv(dfa_single_a(), other), AlphabetMismatchError);
    }
    SUBCASE("counterexample is shortlex-least on random pairs") {
        Rng rng(991);
        auto words = words_up_to("ab", 6);
        for (int i = 0; i < 40; ++i) {
            Dfa x = random_dfa(rng, 4, "ab");
            Dfa y = random_dfa(rng, 4, "ab");
            auto cex = dfa_equiv(x, y);
            std::optional<Word> expected;
            for (const auto& w : words)
                if (evaluate(x, w) != evaluate(y, w)) {
                    expected = w;
                    break;
                }
            if (expected) CHECK(cex == expected);
            if (cex && !expected) CHECK(cex->size() > 6);
        }
    }
}

TEST_CASE("factor size is monotone in Q and T") {
    Rng rng(5021);
    for (int i = 0; i < 25; ++i) {
        Dfa target = random_dfa(rng, 6, "ab");
        DfaTeacher teacher(target);
        auto index = make_index({"ab"}, {"b"});
        std::size_t base = DfaDomain::factor_size(index, teacher);
        auto grown_q = index;
        grown_q.add_state_word("ba");
        CHECK(DfaDomain::factor_size(grown_q, teacher) >= base);
        auto grown_t = index;
        grown_t.add_test_word("ab");
        CHECK(DfaDomain::factor_size(grown_t, teacher) >= base);
    }
}
