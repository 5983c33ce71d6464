#include "funl/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "funl/errors.hpp"

namespace funl {

std::size_t Dfa::letter_index(char a) const {
    auto pos = alphabet.find(a);
    if (pos == std::string::npos)
        throw BadLetterError(std::string("letter '") + a + "' not in alphabet");
    return pos;
}

State Dfa::run(const Word& w) const {
    State s = initial;
    for (char a : w) s = step(s, a);
    return s;
}

bool evaluate(const Dfa& d, const Word& w) { return d.accepting[d.run(w)]; }

namespace {

std::vector<State> reachable_states(const Dfa& d) {
    std::vector<bool> seen(d.num_states, false);
    std::deque<State> queue{d.initial};
    seen[d.initial] = true;
    std::vector<State> order;
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        order.push_back(s);
        for (std::size_t i = 0; i < d.alphabet.size(); ++i) {
            State t = d.delta[s][i];
            if (!seen[t]) {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    return order;
}

} // namespace

Dfa minimize_dfa(const Dfa& d) {
    if (d.num_states == 0) throw InternalError("DFA with no states");
    std::vector<State> order = reachable_states(d);
    std::vector<std::size_t> dense(d.num_states, SIZE_MAX);
    for (std::size_t i = 0; i < order.size(); ++i) dense[order[i]] = i;
    std::size_t n = order.size();

    // Moore partition refinement on the reachable part. Each pass
    // refines the partition, so the block count grows until stable.
    std::vector<std::size_t> block(n);
    std::size_t num_blocks = 0;
    {
        std::map<bool, std::size_t> initial_block;
        for (std::size_t i = 0; i < n; ++i) {
            auto [it, ins] = initial_block.emplace(d.accepting[order[i]], initial_block.size());
            block[i] = it->second;
        }
        num_blocks = initial_block.size();
    }
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> signature_block;
        std::vector<std::size_t> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::size_t> sig{block[i]};
            for (std::size_t a = 0; a < d.alphabet.size(); ++a)
                sig.push_back(block[dense[d.delta[order[i]][a]]]);
            auto [it, inserted] = signature_block.emplace(std::move(sig), signature_block.size());
            next[i] = it->second;
        }
        bool stable = signature_block.size() == num_blocks;
        num_blocks = signature_block.size();
        block = std::move(next);
        if (stable) break;
    }
    Dfa out;
    out.alphabet = d.alphabet;
    out.num_states = num_blocks;
    out.initial = block[dense[d.initial]];
    out.accepting.assign(num_blocks, false);
    out.delta.assign(num_blocks, std::vector<State>(d.alphabet.size(), 0));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t b = block[i];
        out.accepting[b] = d.accepting[order[i]];
        for (std::size_t a = 0; a < d.alphabet.size(); ++a)
            out.delta[b][a] = block[dense[d.delta[order[i]][a]]];
    }
    return out;
}

std::optional<Word> dfa_equiv(const Dfa& a, const Dfa& b) {
    if (a.alphabet != b.alphabet)
        throw AlphabetMismatchError("dfa_equiv: alphabets differ");
    // Breadth-first search over the product automaton; states are
    // discovered in shortlex order of their least access words, so the
    // first acceptance disagreement yields the shortlex-least
    // separating word.
    std::map<std::pair<State, State>, bool> seen;
    std::deque<std::pair<std::pair<State, State>, Word>> queue;
    auto visit = [&](State sa, State sb, const Word& w)
        -> std::optional<Word> {
        if (!seen.emplace(std::make_pair(sa, sb), true).second) return std::nullopt;
        if (a.accepting[sa] != b.accepting[sb]) return w;
        queue.emplace_back(std::make_pair(sa, sb), w);
        return std::nullopt;
    };
    if (auto w = visit(a.initial, b.initial, Word{})) return w;
    while (!queue.empty()) {
        auto [pair, w] = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < a.alphabet.size(); ++i) {
            char letter = a.alphabet[i];
            if (auto res = visit(a.delta[pair.first][i], b.delta[pair.second][i], w + letter))
                return res;
        }
    }
    return std::nullopt;
}

namespace {

/// Renumbers states in breadth-first discovery order from the initial
/// state; complete automata make this canonical.
Dfa bfs_renumber(const Dfa& d) {
    std::vector<State> order = reachable_states(d);
    std::vector<std::size_t> dense(d.num_states, SIZE_MAX);
    for (std::size_t i = 0; i < order.size(); ++i) dense[order[i]] = i;
    Dfa out;
    out.alphabet = d.alphabet;
    out.num_states = order.size();
    out.initial = 0;
    out.accepting.assign(order.size(), false);
    out.delta.assign(order.size(), std::vector<State>(d.alphabet.size(), 0));
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.accepting[i] = d.accepting[order[i]];
        for (std::size_t a = 0; a < d.alphabet.size(); ++a)
            out.delta[i][a] = dense[d.delta[order[i]][a]];
    }
    return out;
}

} // namespace

bool dfa_isomorphic(const Dfa& a, const Dfa& b) {
    if (a.alphabet != b.alphabet) return false;
    Dfa ca = bfs_renumber(a);
    Dfa cb = bfs_renumber(b);
    return ca.num_states == cb.num_states && ca.accepting == cb.accepting &&
           ca.delta == cb.delta;
}

std::vector<bool> dfa_row(const Word& w, const std::vector<Word>& tests, DfaTeacher& teacher) {
    std::vector<bool> row;
    row.reserve(tests.size());
    for (const auto& t : tests) row.push_back(teacher.eval(w + t));
    return row;
}

namespace {

std::vector<Word> sorted_tests(const ObservationIndex& index) {
    return {index.test_words().begin(), index.test_words().end()};
}

} // namespace

std::size_t DfaDomain::factor_size(const ObservationIndex& index, TeacherType& teacher) {
    auto tests = sorted_tests(index);
    std::set<std::vector<bool>> rows;
    for (const auto& q : index.state_words()) rows.insert(dfa_row(q, tests, teacher));
    return rows.size();
}

std::optional<Word> DfaDomain::check_epi(const ObservationIndex& index, TeacherType& teacher) {
    auto tests = sorted_tests(index);
    std::set<std::vector<bool>> q_rows;
    for (const auto& q : index.state_words()) q_rows.insert(dfa_row(q, tests, teacher));
    for (const auto& qa : index.state_extensions(teacher.alphabet())) {
        if (index.has_state_word(qa)) continue;
        if (!q_rows.count(dfa_row(qa, tests, teacher))) return qa;
    }
    return std::nullopt;
}

std::optional<Word> DfaDomain::check_mono(const ObservationIndex& index, TeacherType& teacher) {
    auto tests = sorted_tests(index);
    // Group Q by row over T, then look for the least at that splits a group.
    std::map<std::vector<bool>, std::vector<Word>> classes;
    for (const auto& q : index.state_words())
        classes[dfa_row(q, tests, teacher)].push_back(q);
    for (const auto& at : index.test_extensions(teacher.alphabet())) {
        if (index.has_test_word(at)) continue;
        for (const auto& [row, members] : classes) {
            if (members.size() < 2) continue;
            bool first = teacher.eval(members.front() + at);
            for (std::size_t i = 1; i < members.size(); ++i)
                if (teacher.eval(members[i] + at) != first) return at;
        }
    }
    return std::nullopt;
}

Dfa DfaDomain::build_hypothesis(const ObservationIndex& index, TeacherType& teacher) {
    if (check_epi(index, teacher) || check_mono(index, teacher))
        throw NotAutomatableError("build_hypothesis_dfa: (Q,T) is not automatable");

    const std::string& alphabet = teacher.alphabet();
    auto tests = sorted_tests(index);
    auto wide_tests = index.tests_with_extensions(alphabet);

    // States: classes of Q under row equality over T + AT, represented
    // by the shortlex-least member (Q iterates in shortlex order).
    std::map<std::vector<bool>, State> class_of_wide_row;
    std::vector<Word> representative;
    std::map<Word, State> state_of_word;
    for (const auto& q : index.state_words()) {
        auto wide = dfa_row(q, wide_tests, teacher);
        auto [it, inserted] = class_of_wide_row.emplace(std::move(wide), representative.size());
        if (inserted) representative.push_back(q);
        state_of_word[q] = it->second;
    }

    // Transition targets resolve through rows over T alone.
    std::map<std::vector<bool>, State> class_of_narrow_row;
    for (const auto& q : index.state_words())
        class_of_narrow_row.emplace(dfa_row(q, tests, teacher), state_of_word[q]);

    Dfa h;
    h.alphabet = alphabet;
    h.num_states = representative.size();
    h.initial = state_of_word[Word{}];
    h.accepting.assign(h.num_states, false);
    h.delta.assign(h.num_states, std::vector<State>(alphabet.size(), 0));
    h.state_names.reserve(h.num_states);
    for (const auto& rep : representative) h.state_names.push_back(display_word(rep));
    for (std::size_t s = 0; s < h.num_states; ++s) {
        h.accepting[s] = teacher.eval(representative[s]);
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            auto row = dfa_row(representative[s] + alphabet[a], tests, teacher);
            auto it = class_of_narrow_row.find(row);
            if (it == class_of_narrow_row.end())
                throw InternalError("build_hypothesis_dfa: unmatched successor row after epi check");
            h.delta[s][a] = it->second;
        }
    }
    return h;
}

} // namespace funl
