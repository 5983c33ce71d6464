#include "funl/wfa.hpp"

#include <deque>

#include "funl/errors.hpp"

namespace funl {

std::size_t Wfa::letter_index(char a) const {
    auto pos = alphabet.find(a);
    if (pos == std::string::npos)
        throw BadLetterError(std::string("letter '") + a + "' not in alphabet");
    return pos;
}

Rational evaluate(const Wfa& w, const Word& word) {
    std::vector<Rational> v = w.alpha;
    for (char a : word) v = multiply_row(v, w.transitions[w.letter_index(a)]);
    return dot(v, w.beta);
}

namespace {

/// Basis of the span of {seed * M_w : w} (or of {M_w * seed} when
/// transposed first). Vectors are discovered breadth-first by word
/// length, letters in alphabet order; the generating word of each
/// basis vector is recorded.
struct ForwardClosure {
    RowSpaceBasis basis;
    std::vector<Word> words;
};

ForwardClosure forward_closure(const std::vector<Rational>& seed,
                               const std::vector<RatMatrix>& transitions,
                               const std::string& alphabet, std::size_t dim) {
    ForwardClosure out{RowSpaceBasis(dim), {}};
    std::deque<std::pair<Word, std::vector<Rational>>> queue;
    queue.emplace_back(Word{}, seed);
    while (!queue.empty()) {
        auto [word, vec] = queue.front();
        queue.pop_front();
        if (!out.basis.insert(vec)) continue;
        out.words.push_back(word);
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            queue.emplace_back(word + alphabet[i], multiply_row(vec, transitions[i]));
    }
    return out;
}

RatMatrix transpose(const RatMatrix& m) {
    RatMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(c, r) = m.at(r, c);
    return out;
}

std::vector<Rational> solve_in_basis(const RowSpaceBasis& basis, const std::vector<Rational>& v,
                                     const char* what) {
    auto coords = coordinates_in_row_span(basis.members(), v);
    if (!coords) throw InternalError(std::string("vector escaped a closed span in ") + what);
    return *coords;
}

} // namespace

Wfa minimize_wfa(const Wfa& w) {
    // Forward step: restrict to the span of {alpha * M_w}.
    ForwardClosure fwd = forward_closure(w.alpha, w.transitions, w.alphabet, w.dim);
    std::size_t fdim = fwd.basis.size();
    Wfa fred;
    fred.alphabet = w.alphabet;
    fred.dim = fdim;
    fred.alpha = fdim == 0 ? std::vector<Rational>{}
                           : solve_in_basis(fwd.basis, w.alpha, "minimize_wfa forward");
    fred.beta = multiply_col(fwd.basis.members(), w.beta);
    for (std::size_t a = 0; a < w.alphabet.size(); ++a) {
        RatMatrix m(fdim, fdim);
        for (std::size_t i = 0; i < fdim; ++i) {
            auto image = multiply_row(fwd.basis.members().row(i), w.transitions[a]);
            m.set_row(i, solve_in_basis(fwd.basis, image, "minimize_wfa forward"));
        }
        fred.transitions.push_back(std::move(m));
    }

    // Backward step: restrict to the span of {M_w * beta}.
    std::vector<RatMatrix> transposed;
    transposed.reserve(fred.transitions.size());
    for (const auto& m : fred.transitions) transposed.push_back(transpose(m));
    ForwardClosure bwd = forward_closure(fred.beta, transposed, w.alphabet, fdim);
    std::size_t bdim = bwd.basis.size();
    Wfa out;
    out.alphabet = w.alphabet;
    out.dim = bdim;
    out.beta = bdim == 0 ? std::vector<Rational>{}
                         : solve_in_basis(bwd.basis, fred.beta, "minimize_wfa backward");
    out.alpha = multiply_col(bwd.basis.members(), fred.alpha);
    for (std::size_t a = 0; a < w.alphabet.size(); ++a) {
        RatMatrix m(bdim, bdim);
        for (std::size_t i = 0; i < bdim; ++i) {
            auto image = multiply_row(bwd.basis.members().row(i), transposed[a]);
            m.set_row(i, solve_in_basis(bwd.basis, image, "minimize_wfa backward"));
        }
        out.transitions.push_back(transpose(m));
    }
    return out;
}

std::optional<Word> wfa_equiv(const Wfa& a, const Wfa& b) {
    if (a.alphabet != b.alphabet)
        throw AlphabetMismatchError("wfa_equiv: alphabets differ");
    // Difference automaton: direct sum with the second beta negated.
    std::size_t dim = a.dim + b.dim;
    std::vector<Rational> alpha(dim), beta(dim);
    for (std::size_t i = 0; i < a.dim; ++i) alpha[i] = a.alpha[i], beta[i] = a.beta[i];
    for (std::size_t i = 0; i < b.dim; ++i)
        alpha[a.dim + i] = b.alpha[i], beta[a.dim + i] = -b.beta[i];
    std::vector<RatMatrix> transitions;
    for (std::size_t l = 0; l < a.alphabet.size(); ++l) {
        RatMatrix m(dim, dim);
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) m.at(i, j) = a.transitions[l].at(i, j);
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j)
                m.at(a.dim + i, a.dim + j) = b.transitions[l].at(i, j);
        transitions.push_back(std::move(m));
    }
    // Close the forward-reachable subspace breadth-first; the first
    // basis vector with a nonzero product against beta was generated by
    // the shortlex-least separating word.
    RowSpaceBasis basis(dim);
    std::deque<std::pair<Word, std::vector<Rational>>> queue;
    queue.emplace_back(Word{}, alpha);
    while (!queue.empty()) {
        auto [word, vec] = queue.front();
        queue.pop_front();
        if (!basis.insert(vec)) continue;
        if (!dot(vec, beta).is_zero()) return word;
        for (std::size_t l = 0; l < a.alphabet.size(); ++l)
            queue.emplace_back(word + a.alphabet[l], multiply_row(vec, transitions[l]));
    }
    return std::nullopt;
}

std::vector<Rational> wfa_row(const Word& w, const std::vector<Word>& tests, WfaTeacher& teacher) {
    std::vector<Rational> row;
    row.reserve(tests.size());
    for (const auto& t : tests) row.push_back(teacher.eval(w + t));
    return row;
}

namespace {

std::vector<Word> sorted_tests(const ObservationIndex& index) {
    return {index.test_words().begin(), index.test_words().end()};
}

/// Pivot rows of the Q x T block in shortlex word order.
RowSpaceBasis q_row_basis(const ObservationIndex& index, WfaTeacher& teacher,
                          const std::vector<Word>& tests, std::vector<Word>* basis_words) {
    RowSpaceBasis basis(tests.size());
    for (const auto& q : index.state_words())
        if (basis.insert(wfa_row(q, tests, teacher)) && basis_words)
            basis_words->push_back(q);
    return basis;
}

} // namespace

std::size_t WfaDomain::factor_size(const ObservationIndex& index, TeacherType& teacher) {
    auto tests = sorted_tests(index);
    return q_row_basis(index, teacher, tests, nullptr).size();
}

std::optional<Word> WfaDomain::check_epi(const ObservationIndex& index, TeacherType& teacher) {
    auto tests = sorted_tests(index);
    RowSpaceBasis basis = q_row_basis(index, teacher, tests, nullptr);
    for (const auto& qa : index.state_extensions(teacher.alphabet())) {
        if (index.has_state_word(qa)) continue;
        if (!basis.contains(wfa_row(qa, tests, teacher))) return qa;
    }
    return std::nullopt;
}

std::optional<Word> WfaDomain::check_mono(const ObservationIndex& index, TeacherType& teacher) {
    auto tests = sorted_tests(index);
    std::vector<Word> state_words(index.state_words().begin(), index.state_words().end());
    RatMatrix block(state_words.size(), tests.size());
    for (std::size_t r = 0; r < state_words.size(); ++r)
        block.set_row(r, wfa_row(state_words[r], tests, teacher));
    std::size_t base_rank = rank(block);
    for (const auto& at : index.test_extensions(teacher.alphabet())) {
        if (index.has_test_word(at)) continue;
        RatMatrix extended(state_words.size(), tests.size() + 1);
        for (std::size_t r = 0; r < state_words.size(); ++r) {
            for (std::size_t c = 0; c < tests.size(); ++c)
                extended.at(r, c) = block.at(r, c);
            extended.at(r, tests.size()) = teacher.eval(state_words[r] + at);
        }
        if (rank(extended) > base_rank) return at;
    }
    return std::nullopt;
}

Wfa WfaDomain::build_hypothesis(const ObservationIndex& index, TeacherType& teacher) {
    if (check_epi(index, teacher) || check_mono(index, teacher))
        throw NotAutomatableError("build_hypothesis_wfa: (Q,T) is not automatable");

    auto tests = sorted_tests(index);
    std::vector<Word> basis_words;
    RowSpaceBasis basis = q_row_basis(index, teacher, tests, &basis_words);

    Wfa h;
    h.alphabet = teacher.alphabet();
    h.dim = basis.size();
    if (h.dim == 0) {
        h.alpha = {};
        h.beta = {};
        for (std::size_t a = 0; a < h.alphabet.size(); ++a)
            h.transitions.emplace_back(0, 0);
        return h;
    }
    h.alpha = *coordinates_in_row_span(basis.members(), wfa_row(Word{}, tests, teacher));
    h.beta.reserve(h.dim);
    for (const auto& b : basis_words) h.beta.push_back(teacher.eval(b));
    for (std::size_t a = 0; a < h.alphabet.size(); ++a) {
        RatMatrix m(h.dim, h.dim);
        for (std::size_t i = 0; i < h.dim; ++i) {
            auto row = wfa_row(basis_words[i] + h.alphabet[a], tests, teacher);
            auto coords = coordinates_in_row_span(basis.members(), row);
            if (!coords)
                throw InternalError("build_hypothesis_wfa: successor row escaped the span after epi check");
            m.set_row(i, *coords);
        }
        h.transitions.push_back(std::move(m));
    }
    return h;
}

} // namespace funl
