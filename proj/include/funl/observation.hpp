#pragma once

#include <cstdint>
#include <set>
#include <string_view>
#include <vector>

#include "funl/word.hpp"

namespace funl {

/// The pair (Q,T) of word sets driving the learner: Q holds state
/// words and is prefix-closed, T holds test words and is
/// suffix-closed. Both always contain the empty word. The derived
/// one-letter extensions QA and AT are computed on demand and never
/// stored.
class ObservationIndex {
public:
    ObservationIndex() {
        state_words_.insert(Word{});
        test_words_.insert(Word{});
    }

    const std::set<Word, ShortlexLess>& state_words() const { return state_words_; }
    const std::set<Word, ShortlexLess>& test_words() const { return test_words_; }

    bool has_state_word(const Word& w) const { return state_words_.count(w) > 0; }
    bool has_test_word(const Word& w) const { return test_words_.count(w) > 0; }

    /// Insert w and all its prefixes into Q.
    void add_state_word(const Word& w) {
        for (auto& p : prefixes(w)) state_words_.insert(std::move(p));
    }

    /// Insert t and all its suffixes into T.
    void add_test_word(const Word& t) {
        for (auto& s : suffixes(t)) test_words_.insert(std::move(s));
    }

    /// QA = {qa : q in Q, a in alphabet}, in shortlex order.
    std::vector<Word> state_extensions(std::string_view alphabet) const {
        std::set<Word, ShortlexLess> out;
        for (const auto& q : state_words_)
            for (char a : alphabet) out.insert(q + a);
        return {out.begin(), out.end()};
    }

    /// AT = {at : a in alphabet, t in T}, in shortlex order.
    std::vector<Word> test_extensions(std::string_view alphabet) const {
        std::set<Word, ShortlexLess> out;
        for (const auto& t : test_words_)
            for (char a : alphabet) out.insert(a + t);
        return {out.begin(), out.end()};
    }

    /// T together with AT, in shortlex order.
    std::vector<Word> tests_with_extensions(std::string_view alphabet) const {
        std::set<Word, ShortlexLess> out(test_words_.begin(), test_words_.end());
        for (const auto& t : test_words_)
            for (char a : alphabet) out.insert(a + t);
        return {out.begin(), out.end()};
    }

    /// Re-checks the closure invariants; used by tests after mutations.
    bool valid() const {
        if (!state_words_.count(Word{}) || !test_words_.count(Word{})) return false;
        for (const auto& q : state_words_)
            if (!q.empty() && !state_words_.count(q.substr(0, q.size() - 1))) return false;
        for (const auto& t : test_words_)
            if (!t.empty() && !test_words_.count(t.substr(1))) return false;
        return true;
    }

private:
    std::set<Word, ShortlexLess> state_words_;
    std::set<Word, ShortlexLess> test_words_;
};

/// Query accounting for one learner run.
struct LearnStats {
    std::uint64_t eval_queries = 0;   ///< distinct words sent to the teacher
    std::uint64_t equiv_queries = 0;
    std::uint64_t while_iterations = 0; ///< applied closedness/consistency repairs
    std::vector<Word> counterexamples;
};

} // namespace funl
