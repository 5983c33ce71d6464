#pragma once

#include <optional>
#include <string>
#include <vector>

#include "funl/matrix.hpp"
#include "funl/observation.hpp"
#include "funl/rational.hpp"
#include "funl/teacher.hpp"
#include "funl/word.hpp"

namespace funl {

/// Weighted automaton over the exact rationals. The value of a word is
/// alpha * M_{w1} * ... * M_{wk} * beta. Dimension 0 (the zero
/// function) is a legal value everywhere.
struct Wfa {
    std::string alphabet;              ///< sorted distinct chars
    std::size_t dim = 0;
    std::vector<Rational> alpha;       ///< 1 x dim
    std::vector<RatMatrix> transitions; ///< per letter index, dim x dim
    std::vector<Rational> beta;        ///< dim x 1

    std::size_t letter_index(char a) const;
};

inline const std::string& input_alphabet(const Wfa& w) { return w.alphabet; }

Rational evaluate(const Wfa& w, const Word& word);

/// Forward reachability reduction followed by the backward
/// observability reduction; the result has the minimal dimension among
/// automata computing the same function.
Wfa minimize_wfa(const Wfa& w);

/// nullopt when the functions are equal; otherwise the shortlex-least
/// word on which they differ, found by a breadth-first basis closure
/// of the difference automaton's forward-reachable vectors.
std::optional<Word> wfa_equiv(const Wfa& a, const Wfa& b);

inline std::optional<Word> find_counterexample(const Wfa& target, const Wfa& hypothesis) {
    return wfa_equiv(hypothesis, target);
}

using WfaTeacher = Teacher<Wfa, Rational>;

/// Observation row of w over tests: entry i is L(w . tests[i]).
std::vector<Rational> wfa_row(const Word& w, const std::vector<Word>& tests, WfaTeacher& teacher);

/// The vector-space learning domain: rows live in K^T, the factor
/// object is the row space of the Q x T value block, closedness and
/// consistency become rank conditions.
struct WfaDomain {
    using Automaton = Wfa;
    using Value = Rational;
    using TeacherType = WfaTeacher;

    static const char* name() { return "wfa"; }

    /// Rank of the Q x T value matrix.
    static std::size_t factor_size(const ObservationIndex& index, TeacherType& teacher);

    /// nullopt when every row(qa, T) lies in the span of the Q-rows;
    /// otherwise the least qa escaping the span.
    static std::optional<Word> check_epi(const ObservationIndex& index, TeacherType& teacher);

    /// nullopt when adding any single column at keeps the rank of the
    /// Q-block unchanged; otherwise the least rank-raising at.
    static std::optional<Word> check_mono(const ObservationIndex& index, TeacherType& teacher);

    /// Basis words are the pivot rows of the Q x T block in shortlex
    /// order; alpha / transition rows are exact coordinate solves.
    static Wfa build_hypothesis(const ObservationIndex& index, TeacherType& teacher);

    static Value value(const Wfa& w, const Word& word) { return evaluate(w, word); }
};

} // namespace funl
