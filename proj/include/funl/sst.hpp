#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "funl/observation.hpp"
#include "funl/teacher.hpp"
#include "funl/word.hpp"

namespace funl {

/// Value of a transduction on one word: an output word, or nullopt for
/// undefined. Undefined is distinct from the empty output everywhere.
using SstValue = std::optional<std::string>;

using State = std::size_t;

struct SstTransition {
    State to = 0;
    std::string out;
    friend bool operator==(const SstTransition&, const SstTransition&) = default;
};

/// Subsequential transducer: deterministic, with an optional initial
/// (state, initial output), partial transitions emitting output words,
/// and partial per-state final outputs. A word's value is the initial
/// output, then the transition outputs along it, then the final output
/// of the last state; missing any piece makes the value undefined.
struct Sst {
    std::string input_alphabet;   ///< sorted distinct chars
    std::string output_alphabet;  ///< sorted distinct chars
    std::size_t num_states = 0;
    std::optional<std::pair<State, std::string>> initial;
    std::vector<std::vector<std::optional<SstTransition>>> delta; ///< [state][letter index]
    std::vector<std::optional<std::string>> final_out;            ///< [state]

    std::size_t letter_index(char a) const;

    friend bool operator==(const Sst&, const Sst&) = default;
};

inline const std::string& input_alphabet(const Sst& t) { return t.input_alphabet; }

SstValue evaluate(const Sst& t, const Word& w);

/// A row of transduction values over an ordered test list; entry i is
/// f(w . tests[i]). Undefined entries are first-class.
using PartialRow = std::vector<SstValue>;

bool nowhere_defined(const PartialRow& row);

/// Undefined when the row is nowhere defined; otherwise the longest
/// common prefix of the defined entries.
SstValue lcp(const PartialRow& row);

/// Strips lcp(row) from every defined entry; the nowhere-defined row
/// maps to itself. red is idempotent and lcp(red(row)) is empty for
/// any row that is somewhere defined.
PartialRow red(const PartialRow& row);

/// Trim, push outputs forward into the onward form, merge states with
/// equal residual transductions, renumber breadth-first. The result is
/// the canonical minimal transducer for the same transduction.
Sst minimize_sst(const Sst& t);

/// Structural equality after breadth-first renumbering, without
/// re-minimizing. Inputs are expected to already be minimal onward
/// machines (minimize_sst output or a converged hypothesis).
bool sst_isomorphic(const Sst& a, const Sst& b);

/// nullopt when both compute the same transduction; otherwise the
/// shortlex-least word where the values differ in definedness or
/// content.
std::optional<Word> sst_equiv(const Sst& a, const Sst& b);

inline std::optional<Word> find_counterexample(const Sst& target, const Sst& hypothesis) {
    return sst_equiv(hypothesis, target);
}

using SstTeacher = Teacher<Sst, SstValue>;

PartialRow sst_row(const Word& w, const std::vector<Word>& tests, SstTeacher& teacher);

/// The transducer learning domain. Rows are partial output rows; two
/// state words are T-equivalent when their reduced rows agree entry by
/// entry (undefined positions included). Nowhere-defined rows do not
/// contribute to the factor object, and the consistency check also
/// requires each state word's lcp (and its definedness) to be stable
/// under the one-letter test extensions.
struct SstDomain {
    using Automaton = Sst;
    using Value = SstValue;
    using TeacherType = SstTeacher;

    static const char* name() { return "sst"; }

    /// Number of distinct reduced rows among the somewhere-defined
    /// rows of Q over T.
    static std::size_t factor_size(const ObservationIndex& index, TeacherType& teacher);

    /// nullopt when every somewhere-defined row(qa, T) reduces to some
    /// Q-row's reduction; otherwise the least unmatched qa.
    static std::optional<Word> check_epi(const ObservationIndex& index, TeacherType& teacher);

    /// nullopt when no single test extension at either changes some
    /// state word's lcp (including undefined becoming defined) or
    /// separates two T-equivalent state words; otherwise the least
    /// such at.
    static std::optional<Word> check_mono(const ObservationIndex& index, TeacherType& teacher);

    static Sst build_hypothesis(const ObservationIndex& index, TeacherType& teacher);

    static Value value(const Sst& t, const Word& w) { return evaluate(t, w); }
};

} // namespace funl
