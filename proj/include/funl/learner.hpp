#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "funl/errors.hpp"
#include "funl/observation.hpp"
#include "funl/word.hpp"

namespace funl {

enum class LearnMode {
    Basic,     ///< repairs add the whole one-letter extension QA or AT
    Optimized, ///< repairs add a single witness word per failed check
};

/// Caps are guards against misuse (a teacher whose language has no
/// finite automaton in the domain), not tuning knobs.
struct LearnConfig {
    std::uint64_t max_iterations = 1'000'000; ///< repair steps and equivalence queries
    std::uint64_t max_queries = 1'000'000;    ///< distinct evaluation queries
};

/// Optional run observers; any member may be left empty. Used by the
/// CLI --trace output and by the test suites to watch invariants.
template <typename AutomatonT>
struct LearnHooks {
    std::function<void(const ObservationIndex&)> on_start;
    /// Fired after a repair is applied; witness is the failing word the
    /// check reported (also what optimized mode added).
    std::function<void(bool epi, const Word& witness, const ObservationIndex&)> on_repair;
    std::function<void(const AutomatonT&, const ObservationIndex&, std::size_t factor_size)>
        on_hypothesis;
    /// Fired after the counterexample and its prefixes were added to Q.
    std::function<void(const Word&, const ObservationIndex&)> on_counterexample;
};

/// Adds the counterexample and all its prefixes to Q; T is untouched.
inline void extend_with_counterexample(ObservationIndex& index, const Word& w) {
    index.add_state_word(w);
}

namespace detail {

inline void check_caps(const LearnStats& stats, const LearnConfig& cfg) {
    if (stats.while_iterations > cfg.max_iterations)
        throw CapExceededError("iteration cap exceeded");
    if (stats.eval_queries > cfg.max_queries)
        throw CapExceededError("evaluation query cap exceeded");
    if (stats.equiv_queries > cfg.max_iterations)
        throw CapExceededError("equivalence query cap exceeded");
}

} // namespace detail

/// Grows (Q,T) until both the closedness (epi) and consistency (mono)
/// checks pass. Each loop iteration repairs epi first, then mono on
/// the updated index, then re-checks both.
template <typename Domain>
void ensure_automatable(ObservationIndex& index, typename Domain::TeacherType& teacher,
                        LearnMode mode, const LearnConfig& cfg = {},
                        const LearnHooks<typename Domain::Automaton>* hooks = nullptr) {
    const std::string& alphabet = teacher.alphabet();
    for (;;) {
        bool repaired = false;
        if (auto witness = Domain::check_epi(index, teacher)) {
            if (mode == LearnMode::Optimized) {
                std::size_t before = index.state_words().size();
                index.add_state_word(*witness);
                if (index.state_words().size() != before + 1)
                    throw InternalError("optimized epi repair did not add exactly one word");
            } else {
                for (const auto& qa : index.state_extensions(alphabet))
                    index.add_state_word(qa);
            }
            ++teacher.stats().while_iterations;
            detail::check_caps(teacher.stats(), cfg);
            if (hooks && hooks->on_repair) hooks->on_repair(true, *witness, index);
            repaired = true;
        }
        if (auto witness = Domain::check_mono(index, teacher)) {
            if (mode == LearnMode::Optimized) {
                std::size_t before = index.test_words().size();
                index.add_test_word(*witness);
                if (index.test_words().size() != before + 1)
                    throw InternalError("optimized mono repair did not add exactly one word");
            } else {
                for (const auto& at : index.test_extensions(alphabet))
                    index.add_test_word(at);
            }
            ++teacher.stats().while_iterations;
            detail::check_caps(teacher.stats(), cfg);
            if (hooks && hooks->on_repair) hooks->on_repair(false, *witness, index);
            repaired = true;
        }
        if (!repaired) return;
    }
}

/// The full learning loop: repair (Q,T) until automatable, build a
/// hypothesis, ask an equivalence query, fold any counterexample (and
/// its prefixes) back into Q, repeat until the teacher agrees. With a
/// teacher whose minimal automaton is finite this terminates and the
/// result is that minimal automaton.
template <typename Domain>
std::pair<typename Domain::Automaton, LearnStats>
learn(typename Domain::TeacherType& teacher, LearnMode mode = LearnMode::Basic,
      const LearnConfig& cfg = {},
      const LearnHooks<typename Domain::Automaton>* hooks = nullptr) {
    ObservationIndex index;
    if (hooks && hooks->on_start) hooks->on_start(index);
    for (;;) {
        ensure_automatable<Domain>(index, teacher, mode, cfg, hooks);
        auto hypothesis = Domain::build_hypothesis(index, teacher);
        if (hooks && hooks->on_hypothesis)
            hooks->on_hypothesis(hypothesis, index, Domain::factor_size(index, teacher));
        detail::check_caps(teacher.stats(), cfg);
        auto cex = teacher.equivalence(hypothesis);
        detail::check_caps(teacher.stats(), cfg);
        if (!cex) return {std::move(hypothesis), teacher.stats()};
        extend_with_counterexample(index, *cex);
        if (hooks && hooks->on_counterexample) hooks->on_counterexample(*cex, index);
    }
}

} // namespace funl
