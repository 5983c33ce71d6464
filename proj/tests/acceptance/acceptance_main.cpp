// Acceptance suite: runs every top-level requirement and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "funl/learner.hpp"
#include "funl/serialize.hpp"
#include "support/builders.hpp"
#include "support/random_automata.hpp"

using namespace funl;
using namespace funl::testsupport;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/// Consistency of a hypothesis with the observations that produced it:
/// H(qt) = L(qt) and H(qat) = L(qat), checked exhaustively.
template <typename Domain>
bool hypothesis_consistent(const typename Domain::Automaton& h,
                           const typename Domain::Automaton& target,
                           const ObservationIndex& index, const std::string& alphabet) {
    for (const auto& q : index.state_words())
        for (const auto& t : index.test_words()) {
            if (Domain::value(h, q + t) != Domain::value(target, q + t)) return false;
            for (char a : alphabet)
                if (Domain::value(h, q + a + t) != Domain::value(target, q + a + t))
                    return false;
        }
    return true;
}

/// One learner run with all the invariant probes attached.
template <typename Domain>
struct ObservedRun {
    typename Domain::Automaton learned;
    std::vector<typename Domain::Automaton> hypotheses;
    bool measure_ok = true;
    bool consistency_ok = true;
    bool single_add_ok = true;
};

template <typename Domain>
ObservedRun<Domain> observed_learn(const typename Domain::Automaton& target, LearnMode mode,
                                   std::size_t minimal_measure) {
    typename Domain::TeacherType teacher(target);
    ObservedRun<Domain> run;
    std::size_t q_size = 1, t_size = 1;
    LearnHooks<typename Domain::Automaton> hooks;
    hooks.on_repair = [&](bool, const Word&, const ObservationIndex& index) {
        if (Domain::factor_size(index, teacher) > minimal_measure) run.measure_ok = false;
        if (mode == LearnMode::Optimized) {
            std::size_t grown = (index.state_words().size() - q_size) +
                                (index.test_words().size() - t_size);
            if (grown != 1) run.single_add_ok = false;
        }
        q_size = index.state_words().size();
        t_size = index.test_words().size();
    };
    hooks.on_counterexample = [&](const Word&, const ObservationIndex& index) {
        q_size = index.state_words().size();
        t_size = index.test_words().size();
    };
    hooks.on_hypothesis = [&](const typename Domain::Automaton& h, const ObservationIndex& index,
                              std::size_t factor_size) {
        q_size = index.state_words().size();
        t_size = index.test_words().size();
        if (factor_size > minimal_measure) run.measure_ok = false;
        if (!hypothesis_consistent<Domain>(h, target, index, teacher.alphabet()))
            run.consistency_ok = false;
        run.hypotheses.push_back(h);
    };
    run.learned = learn<Domain>(teacher, mode, {}, &hooks).first;
    return run;
}

// ---------------------------------------------------------------- 1

void criterion_golden_trace(Criterion& c) {
    auto start = std::chrono::steady_clock::now();
    DfaTeacher teacher(dfa_single_a());
    std::vector<std::string> events;
    std::vector<Dfa> hypotheses;
    LearnHooks<Dfa> hooks;
    hooks.on_repair = [&](bool epi, const Word& w, const ObservationIndex&) {
        events.push_back(std::string(epi ? "epi:" : "mono:") + w);
    };
    hooks.on_hypothesis = [&](const Dfa& h, const ObservationIndex&, std::size_t) {
        events.push_back("hyp");
        hypotheses.push_back(h);
    };
    hooks.on_counterexample = [&](const Word& w, const ObservationIndex&) {
        events.push_back("cex:" + w);
    };
    auto [learned, stats] = learn<DfaDomain>(teacher, LearnMode::Basic, {}, &hooks);

    if (events != std::vector<std::string>{"epi:a", "hyp", "cex:aaa", "mono:a", "hyp"})
        c.fail("event order mismatch");
    Dfa figure_left = make_dfa("a", 0, {false, true}, {{1}, {0}});
    Dfa figure_right = dfa_single_a();
    if (hypotheses.size() != 2)
        c.fail("expected exactly two hypotheses");
    else {
        if (hypotheses[0].num_states != 2 || hypotheses[0].accepting != figure_left.accepting ||
            hypotheses[0].delta != figure_left.delta || hypotheses[0].initial != 0)
            c.fail("first hypothesis is not the two-state a(aa)* automaton");
        if (learned.num_states != 3 || learned.accepting != figure_right.accepting ||
            learned.delta != figure_right.delta || learned.initial != 0)
            c.fail("final hypothesis is not the three-state automaton for {a}");
    }
    if (stats.equiv_queries != 2) c.fail("expected exactly 2 equivalence queries");
    if (seconds_since(start) >= 1.0) c.fail("runtime exceeded 1 s");
}

// ------------------------------------------------------------- 2..7

struct CrossChecks {
    Criterion* modes_agree;      // 5
    Criterion* measure_bound;    // 6
    Criterion* consistency;      // 7
};

template <typename Domain, typename EquivFn, typename IsoFn>
void round_trip_domain(Criterion& c, CrossChecks cross, std::size_t instances,
                       const std::function<typename Domain::Automaton(Rng&)>& generate,
                       const std::function<typename Domain::Automaton(
                           const typename Domain::Automaton&)>& minimize,
                       const std::function<std::size_t(const typename Domain::Automaton&)>& measure,
                       EquivFn equiv, IsoFn isomorphic,
                       const std::function<bool(const typename Domain::Automaton&,
                                                const typename Domain::Automaton&)>& values_agree,
                       Rng& rng) {
    for (std::size_t i = 0; i < instances; ++i) {
        auto target = generate(rng);
        auto minimal = minimize(target);
        std::size_t bound = measure(minimal);

        auto basic = observed_learn<Domain>(target, LearnMode::Basic, bound);
        auto optimized = observed_learn<Domain>(target, LearnMode::Optimized, bound);

        std::string tag = " (instance " + std::to_string(i) + ")";
        for (const auto* run : {&basic, &optimized}) {
            if (!isomorphic(run->learned, minimal))
                c.fail("learned automaton differs from the minimized target" + tag);
            if (!values_agree(run->learned, target))
                c.fail("learned values differ from the target" + tag);
            if (!run->measure_ok)
                cross.measure_bound->fail("measure exceeded the minimal automaton's" + tag);
            if (!run->consistency_ok)
                cross.consistency->fail("hypothesis/observation mismatch" + tag);
            for (std::size_t x = 0; x < run->hypotheses.size(); ++x)
                for (std::size_t y = x + 1; y < run->hypotheses.size(); ++y)
                    if (!equiv(run->hypotheses[x], run->hypotheses[y]))
                        cross.measure_bound->fail("two hypotheses accept the same language" + tag);
        }
        if (!optimized.single_add_ok)
            cross.modes_agree->fail("an optimized repair added more than one word" + tag);
        if (equiv(basic.learned, optimized.learned).has_value())
            cross.modes_agree->fail("basic and optimized learned different languages" + tag);
    }
}

// ---------------------------------------------------------------- 8

void criterion_lcp_red(Criterion& c) {
    std::mt19937_64 rng(86420);
    std::bernoulli_distribution is_undef(0.35);
    std::uniform_int_distribution<int> len(0, 5);
    std::uniform_int_distribution<int> letter(0, 1);
    std::uniform_int_distribution<int> width(0, 6);
    for (int i = 0; i < 1000; ++i) {
        PartialRow row;
        int n = width(rng);
        for (int k = 0; k < n; ++k) {
            if (is_undef(rng)) {
                row.push_back(std::nullopt);
                continue;
            }
            std::string s;
            int m = len(rng);
            for (int j = 0; j < m; ++j) s += "xy"[letter(rng)];
            row.push_back(SstValue(s));
        }
        PartialRow reduced = red(row);
        if (red(reduced) != reduced) c.fail("red is not idempotent");
        if (nowhere_defined(row)) {
            if (lcp(row).has_value()) c.fail("lcp of a nowhere-defined row must be undefined");
            if (reduced != row) c.fail("red must map nowhere-defined rows to themselves");
        } else {
            if (lcp(reduced) != SstValue(""))
                c.fail("lcp after red must be the empty word");
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (row[k].has_value() != reduced[k].has_value())
                    c.fail("red changed definedness of an entry");
                else if (row[k] && *row[k] != *lcp(row) + *reduced[k])
                    c.fail("entry does not factor as lcp . reduced entry");
            }
        }
    }
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "golden trace for {a} over {a} (basic mode)"},
        {2, "DFA round trip, 200 random targets, both modes"},
        {3, "WFA round trip, 100 random targets, exact values"},
        {4, "SST round trip, 100 random targets, values incl. undefined"},
        {5, "basic and optimized modes agree; optimized adds one word per repair"},
        {6, "factor measure bounded by the minimum; hypotheses pairwise inequivalent"},
        {7, "every hypothesis consistent with its observations"},
        {8, "lcp/red property suite, 1000 random rows"},
    };
    Criterion& c1 = criteria[0];
    Criterion& c2 = criteria[1];
    Criterion& c3 = criteria[2];
    Criterion& c4 = criteria[3];
    Criterion& c5 = criteria[4];
    Criterion& c6 = criteria[5];
    Criterion& c7 = criteria[6];
    Criterion& c8 = criteria[7];

    auto guarded = [](Criterion& c, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
    };

    guarded(c1, [&] { criterion_golden_trace(c1); });

    CrossChecks cross{&c5, &c6, &c7};

    guarded(c2, [&] {
        auto start = std::chrono::steady_clock::now();
        Rng rng(1001);
        round_trip_domain<DfaDomain>(
            c2, cross, 200, [](Rng& r) { return random_dfa(r, 10, "ab"); },
            [](const Dfa& d) { return minimize_dfa(d); },
            [](const Dfa& d) { return d.num_states; },
            [](const Dfa& a, const Dfa& b) { return dfa_equiv(a, b); },
            [](const Dfa& a, const Dfa& b) { return dfa_isomorphic(a, b); },
            [](const Dfa& a, const Dfa& b) { return !dfa_equiv(a, b).has_value(); }, rng);
        if (seconds_since(start) >= 30.0) c2.fail("runtime exceeded 30 s");
    });

    guarded(c3, [&] {
        Rng rng(2002);
        auto words = words_up_to("ab", 6);
        round_trip_domain<WfaDomain>(
            c3, cross, 100, [](Rng& r) { return random_wfa(r, 5, "ab", -2, 2); },
            [](const Wfa& w) { return minimize_wfa(w); },
            [](const Wfa& w) { return w.dim; },
            [](const Wfa& a, const Wfa& b) { return wfa_equiv(a, b); },
            [](const Wfa& learned, const Wfa& minimal) { return learned.dim == minimal.dim; },
            [&](const Wfa& a, const Wfa& b) {
                for (const auto& w : words)
                    if (evaluate(a, w) != evaluate(b, w)) return false;
                return true;
            },
            rng);
    });

    guarded(c4, [&] {
        Rng rng(3003);
        auto words = words_up_to("ab", 6);
        round_trip_domain<SstDomain>(
            c4, cross, 100, [](Rng& r) { return random_sst(r, 6, "ab", "xy", 0.2, 2); },
            [](const Sst& t) { return minimize_sst(t); },
            [](const Sst& t) { return t.num_states; },
            [](const Sst& a, const Sst& b) { return sst_equiv(a, b); },
            [](const Sst& a, const Sst& b) { return sst_isomorphic(a, b); },
            [&](const Sst& a, const Sst& b) {
                for (const auto& w : words)
                    if (evaluate(a, w) != evaluate(b, w)) return false;
                return true;
            },
            rng);
    });

    guarded(c8, [&] { criterion_lcp_red(c8); });

    bool all_ok = true;
    for (const auto& c : criteria) {
        all_ok = all_ok && c.ok;
        std::printf("%s criterion %d: %s%s%s\n", c.ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                    c.ok ? "" : " — ", c.ok ? "" : c.detail.c_str());
    }
    return all_ok ? 0 : 1;
}
