#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "funl/observation.hpp"
#include "funl/teacher.hpp"
#include "funl/word.hpp"

namespace funl {

using State = std::size_t;

/// Deterministic complete automaton. delta is total: one successor per
/// state and letter. state_names is presentation-only (DOT labels) and
/// ignored by every structural operation.
struct Dfa {
    std::string alphabet;                    ///< sorted distinct chars
    std::size_t num_states = 0;
    State initial = 0;
    std::vector<bool> accepting;             ///< size num_states
    std::vector<std::vector<State>> delta;   ///< [state][letter index]
    std::vector<std::string> state_names;    ///< empty or size num_states

    std::size_t letter_index(char a) const;
    State step(State s, char a) const { return delta[s][letter_index(a)]; }
    State run(const Word& w) const;
};

inline const std::string& input_alphabet(const Dfa& d) { return d.alphabet; }

/// Membership of w in the automaton's language.
bool evaluate(const Dfa& d, const Word& w);

/// Reachable restriction followed by the Nerode quotient; the result
/// accepts the same language with the minimum number of states.
Dfa minimize_dfa(const Dfa& d);

/// nullopt when the languages are equal; otherwise the shortlex-least
/// word in the symmetric difference (breadth-first product search).
std::optional<Word> dfa_equiv(const Dfa& a, const Dfa& b);

/// Structural equality after canonical breadth-first renumbering. Both
/// inputs must be reachable (e.g. minimize_dfa output or a learner
/// hypothesis).
bool dfa_isomorphic(const Dfa& a, const Dfa& b);

/// Teacher backend hook used by Teacher<Dfa, bool>.
inline std::optional<Word> find_counterexample(const Dfa& target, const Dfa& hypothesis) {
    return dfa_equiv(hypothesis, target);
}

using DfaTeacher = Teacher<Dfa, bool>;

/// Observation row of w over the given tests: entry i is L(w . tests[i]).
std::vector<bool> dfa_row(const Word& w, const std::vector<Word>& tests, DfaTeacher& teacher);

/// The Set-valued learning domain: rows are bit vectors, the factor
/// object is the set of distinct rows, closedness/consistency are the
/// classic observation-table conditions.
struct DfaDomain {
    using Automaton = Dfa;
    using Value = bool;
    using TeacherType = DfaTeacher;

    static const char* name() { return "dfa"; }

    /// Number of distinct rows of Q over T.
    static std::size_t factor_size(const ObservationIndex& index, TeacherType& teacher);

    /// nullopt when closed; otherwise the least qa whose row over T
    /// matches no Q-row (equivalently: whose addition to Q grows the
    /// factor object).
    static std::optional<Word> check_epi(const ObservationIndex& index, TeacherType& teacher);

    /// nullopt when consistent; otherwise the least at whose column
    /// separates some pair of T-equivalent state words.
    static std::optional<Word> check_mono(const ObservationIndex& index, TeacherType& teacher);

    /// Requires both checks to pass. States are the classes of Q under
    /// row equality over T+AT, named by their shortlex-least member.
    static Dfa build_hypothesis(const ObservationIndex& index, TeacherType& teacher);

    static Value value(const Dfa& d, const Word& w) { return evaluate(d, w); }
};

} // namespace funl
