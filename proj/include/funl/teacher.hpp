#pragma once

#include <map>
#include <optional>
#include <utility>

#include "funl/errors.hpp"
#include "funl/observation.hpp"
#include "funl/word.hpp"

namespace funl {

// Each automaton type provides, via ADL:
//   ValueT evaluate(const AutomatonT&, const Word&);
//   std::optional<Word> find_counterexample(const AutomatonT& target,
//                                           const AutomatonT& hypothesis);
//   const std::string& input_alphabet(const AutomatonT&);

/// Oracle wrapping a known target automaton. Evaluation answers are
/// memoized; eval_queries counts cache misses only, so repeated
/// questions are free. The teacher owns the run's statistics so that
/// counts survive across hypothesis rebuilds.
template <typename AutomatonT, typename ValueT>
class Teacher {
public:
    using Automaton = AutomatonT;
    using Value = ValueT;

    explicit Teacher(AutomatonT target, bool enable_cache = true)
        : target_(std::move(target)), cache_enabled_(enable_cache) {}

    const AutomatonT& target() const { return target_; }
    const std::string& alphabet() const { return input_alphabet(target_); }

    /// Value of the target language on w.
    ValueT eval(const Word& w) {
        if (!letters_in_alphabet(w, alphabet()))
            throw BadLetterError("word '" + display_word(w) + "' uses letters outside the alphabet");
        if (!cache_enabled_) {
            ++stats_.eval_queries;
            return evaluate(target_, w);
        }
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
        ValueT v = evaluate(target_, w);
        cache_.emplace(w, v);
        ++stats_.eval_queries;
        return v;
    }

    /// nullopt means the hypothesis accepts the target language;
    /// otherwise the shortest (lex tie-break) separating word.
    std::optional<Word> equivalence(const AutomatonT& hypothesis) {
        if (input_alphabet(hypothesis) != alphabet())
            throw AlphabetMismatchError("hypothesis alphabet differs from the target's");
        ++stats_.equiv_queries;
        std::optional<Word> cex = find_counterexample(target_, hypothesis);
        if (cex) {
            if (evaluate(target_, *cex) == evaluate(hypothesis, *cex))
                throw InternalError("equivalence backend returned a non-separating word");
            stats_.counterexamples.push_back(*cex);
        }
        return cex;
    }

    const LearnStats& stats() const { return stats_; }
    LearnStats& stats() { return stats_; }

private:
    AutomatonT target_;
    bool cache_enabled_;
    std::map<Word, ValueT> cache_;
    LearnStats stats_;
};

} // namespace funl
