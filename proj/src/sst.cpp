#include "funl/sst.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "funl/errors.hpp"

namespace funl {

std::size_t Sst::letter_index(char a) const {
    auto pos = input_alphabet.find(a);
    if (pos == std::string::npos)
        throw BadLetterError(std::string("letter '") + a + "' not in input alphabet");
    return pos;
}

SstValue evaluate(const Sst& t, const Word& w) {
    if (!t.initial) return std::nullopt;
    State s = t.initial->first;
    std::string out = t.initial->second;
    for (char a : w) {
        const auto& tr = t.delta[s][t.letter_index(a)];
        if (!tr) return std::nullopt;
        out += tr->out;
        s = tr->to;
    }
    if (!t.final_out[s]) return std::nullopt;
    return out + *t.final_out[s];
}

bool nowhere_defined(const PartialRow& row) {
    for (const auto& e : row)
        if (e) return false;
    return true;
}

namespace {

std::string common_prefix(const std::string& a, const std::string& b) {
    std::size_t n = 0;
    while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
    return a.substr(0, n);
}

} // namespace

SstValue lcp(const PartialRow& row) {
    SstValue acc;
    for (const auto& e : row) {
        if (!e) continue;
        acc = acc ? common_prefix(*acc, *e) : *e;
    }
    return acc;
}

PartialRow red(const PartialRow& row) {
    SstValue p = lcp(row);
    if (!p) return row;
    PartialRow out;
    out.reserve(row.size());
    for (const auto& e : row)
        out.push_back(e ? SstValue(e->substr(p->size())) : std::nullopt);
    return out;
}

namespace {

Sst empty_sst(const Sst& like) {
    Sst out;
    out.input_alphabet = like.input_alphabet;
    out.output_alphabet = like.output_alphabet;
    return out;
}

/// Strips the prefix p from s; the caller guarantees p is a prefix.
std::string strip_prefix(const std::string& p, const std::string& s, const char* what) {
    if (s.compare(0, p.size(), p) != 0)
        throw InternalError(std::string(what) + ": expected prefix missing");
    return s.substr(p.size());
}

/// Renumbers states in breadth-first discovery order from the initial
/// state, dropping unreachable ones.
Sst bfs_renumber(const Sst& t) {
    if (!t.initial) return empty_sst(t);
    std::vector<std::size_t> dense(t.num_states, SIZE_MAX);
    std::vector<State> order;
    std::deque<State> queue{t.initial->first};
    dense[t.initial->first] = 0;
    order.push_back(t.initial->first);
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        for (std::size_t a = 0; a < t.input_alphabet.size(); ++a) {
            const auto& tr = t.delta[s][a];
            if (!tr || dense[tr->to] != SIZE_MAX) continue;
            dense[tr->to] = order.size();
            order.push_back(tr->to);
            queue.push_back(tr->to);
        }
    }
    Sst out = empty_sst(t);
    out.num_states = order.size();
    out.initial = {{0, t.initial->second}};
    out.delta.assign(order.size(),
                     std::vector<std::optional<SstTransition>>(t.input_alphabet.size()));
    out.final_out.assign(order.size(), std::nullopt);
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.final_out[i] = t.final_out[order[i]];
        for (std::size_t a = 0; a < t.input_alphabet.size(); ++a) {
            const auto& tr = t.delta[order[i]][a];
            if (tr) out.delta[i][a] = SstTransition{dense[tr->to], tr->out};
        }
    }
    return out;
}

} // namespace

Sst minimize_sst(const Sst& t) {
    if (!t.initial) return empty_sst(t);
    std::size_t letters = t.input_alphabet.size();

    // Trim: keep states both reachable from the initial state and able
    // to reach a final output.
    std::vector<bool> reach(t.num_states, false);
    {
        std::deque<State> queue{t.initial->first};
        reach[t.initial->first] = true;
        while (!queue.empty()) {
            State s = queue.front();
            queue.pop_front();
            for (std::size_t a = 0; a < letters; ++a)
                if (t.delta[s][a] && !reach[t.delta[s][a]->to]) {
                    reach[t.delta[s][a]->to] = true;
                    queue.push_back(t.delta[s][a]->to);
                }
        }
    }
    std::vector<bool> live(t.num_states, false);
    {
        std::deque<State> queue;
        for (State s = 0; s < t.num_states; ++s)
            if (t.final_out[s]) {
                live[s] = true;
                queue.push_back(s);
            }
        while (!queue.empty()) {
            State s = queue.front();
            queue.pop_front();
            for (State p = 0; p < t.num_states; ++p)
                for (std::size_t a = 0; a < letters; ++a)
                    if (!live[p] && t.delta[p][a] && t.delta[p][a]->to == s) {
                        live[p] = true;
                        queue.push_back(p);
                    }
        }
    }
    std::vector<std::size_t> dense(t.num_states, SIZE_MAX);
    std::vector<State> kept;
    for (State s = 0; s < t.num_states; ++s)
        if (reach[s] && live[s]) {
            dense[s] = kept.size();
            kept.push_back(s);
        }
    if (dense[t.initial->first] == SIZE_MAX) return empty_sst(t);

    Sst m = empty_sst(t);
    m.num_states = kept.size();
    m.initial = {{dense[t.initial->first], t.initial->second}};
    m.delta.assign(kept.size(), std::vector<std::optional<SstTransition>>(letters));
    m.final_out.assign(kept.size(), std::nullopt);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        m.final_out[i] = t.final_out[kept[i]];
        for (std::size_t a = 0; a < letters; ++a) {
            const auto& tr = t.delta[kept[i]][a];
            if (tr && dense[tr->to] != SIZE_MAX)
                m.delta[i][a] = SstTransition{dense[tr->to], tr->out};
        }
    }

    // Onward form: push each state's residual lcp forward. X[s] is the
    // lcp of the residual transduction at s, computed as the limit of
    // the lcp over residual values of increasing length.
    {
        std::vector<SstValue> x(m.num_states, std::nullopt); // nullopt = lcp of nothing yet
        for (;;) {
            bool changed = false;
            for (State s = 0; s < m.num_states; ++s) {
                SstValue acc;
                auto fold = [&acc](const std::string& w) {
                    acc = acc ? common_prefix(*acc, w) : w;
                };
                if (m.final_out[s]) fold(*m.final_out[s]);
                for (std::size_t a = 0; a < letters; ++a)
                    if (m.delta[s][a] && x[m.delta[s][a]->to])
                        fold(m.delta[s][a]->out + *x[m.delta[s][a]->to]);
                if (acc != x[s]) {
                    x[s] = acc;
                    changed = true;
                }
            }
            if (!changed) break;
        }
        for (State s = 0; s < m.num_states; ++s)
            if (!x[s]) throw InternalError("minimize_sst: trimmed state with empty residual");
        m.initial->second += *x[m.initial->first];
        for (State s = 0; s < m.num_states; ++s) {
            if (m.final_out[s])
                m.final_out[s] = strip_prefix(*x[s], *m.final_out[s], "minimize_sst onward");
            for (std::size_t a = 0; a < letters; ++a)
                if (m.delta[s][a])
                    m.delta[s][a]->out = strip_prefix(
                        *x[s], m.delta[s][a]->out + *x[m.delta[s][a]->to], "minimize_sst onward");
        }
    }

    // Merge states with equal residual transductions (Moore-style
    // refinement; on onward machines residual equality is exactly
    // signature equality).
    std::vector<std::size_t> block(m.num_states, 0);
    std::size_t num_blocks = 1;
    if (m.num_states == 0) num_blocks = 0;
    for (;;) {
        using Signature =
            std::pair<std::optional<std::string>,
                      std::vector<std::optional<std::pair<std::string, std::size_t>>>>;
        std::map<Signature, std::size_t> ids;
        std::vector<std::size_t> next(m.num_states);
        for (State s = 0; s < m.num_states; ++s) {
            Signature sig;
            sig.first = m.final_out[s];
            for (std::size_t a = 0; a < letters; ++a)
                sig.second.push_back(m.delta[s][a]
                                         ? std::optional(std::make_pair(m.delta[s][a]->out,
                                                                        block[m.delta[s][a]->to]))
                                         : std::nullopt);
            auto [it, ins] = ids.emplace(std::move(sig), ids.size());
            next[s] = it->second;
        }
        bool stable = ids.size() == num_blocks;
        num_blocks = ids.size();
        block = std::move(next);
        if (stable || m.num_states == 0) break;
    }

    Sst q = empty_sst(t);
    q.num_states = num_blocks;
    q.initial = {{block[m.initial->first], m.initial->second}};
    q.delta.assign(num_blocks, std::vector<std::optional<SstTransition>>(letters));
    q.final_out.assign(num_blocks, std::nullopt);
    for (State s = 0; s < m.num_states; ++s) {
        q.final_out[block[s]] = m.final_out[s];
        for (std::size_t a = 0; a < letters; ++a)
            if (m.delta[s][a])
                q.delta[block[s]][a] = SstTransition{block[m.delta[s][a]->to], m.delta[s][a]->out};
    }
    return bfs_renumber(q);
}

bool sst_isomorphic(const Sst& a, const Sst& b) {
    if (a.input_alphabet != b.input_alphabet) return false;
    return bfs_renumber(a) == bfs_renumber(b);
}

std::optional<Word> sst_equiv(const Sst& a, const Sst& b) {
    if (a.input_alphabet != b.input_alphabet || a.output_alphabet != b.output_alphabet)
        throw AlphabetMismatchError("sst_equiv: alphabets differ");
    Sst ca = minimize_sst(a);
    Sst cb = minimize_sst(b);
    if (ca == cb) return std::nullopt;

    // The canonical forms differ, so a divergence exists; find the
    // shortlex-least one by a breadth-first synchronized walk carrying
    // the pair of pending outputs in reduced form.
    std::size_t letters = a.input_alphabet.size();
    std::size_t max_out = 1;
    auto note = [&max_out](const std::string& s) { max_out = std::max(max_out, s.size()); };
    for (const Sst* m : {&ca, &cb}) {
        if (m->initial) note(m->initial->second);
        for (State s = 0; s < m->num_states; ++s) {
            if (m->final_out[s]) note(*m->final_out[s]);
            for (std::size_t l = 0; l < letters; ++l)
                if (m->delta[s][l]) note(m->delta[s][l]->out);
        }
    }
    std::size_t depth_bound =
        std::max<std::size_t>(1, ca.num_states) * std::max<std::size_t>(1, cb.num_states) *
            (1 + max_out) + 1;

    constexpr std::size_t kDead = SIZE_MAX;
    struct Config {
        State s1, s2;
        std::string p1, p2;
        auto operator<=>(const Config&) const = default;
    };
    auto normalize = [](Config c) {
        if (c.s1 == kDead) c.p1.clear();
        if (c.s2 == kDead) c.p2.clear();
        if (c.s1 != kDead && c.s2 != kDead) {
            std::size_t n = common_prefix(c.p1, c.p2).size();
            c.p1.erase(0, n);
            c.p2.erase(0, n);
        }
        return c;
    };
    auto diverges = [&](const Config& c) {
        SstValue v1 = c.s1 != kDead && ca.final_out[c.s1] ? SstValue(c.p1 + *ca.final_out[c.s1])
                                                          : std::nullopt;
        SstValue v2 = c.s2 != kDead && cb.final_out[c.s2] ? SstValue(c.p2 + *cb.final_out[c.s2])
                                                          : std::nullopt;
        return v1 != v2;
    };

    Config start = normalize({ca.initial ? ca.initial->first : kDead,
                              cb.initial ? cb.initial->first : kDead,
                              ca.initial ? ca.initial->second : std::string{},
                              cb.initial ? cb.initial->second : std::string{}});
    if (diverges(start)) return Word{};
    std::set<Config> seen{start};
    std::deque<std::pair<Config, Word>> queue{{start, Word{}}};
    while (!queue.empty()) {
        auto [c, w] = queue.front();
        queue.pop_front();
        if (w.size() >= depth_bound) continue;
        for (std::size_t l = 0; l < letters; ++l) {
            Config n = c;
            if (n.s1 != kDead) {
                const auto& tr = ca.delta[n.s1][l];
                if (tr) {
                    n.p1 += tr->out;
                    n.s1 = tr->to;
                } else {
                    n.s1 = kDead;
                }
            }
            if (n.s2 != kDead) {
                const auto& tr = cb.delta[n.s2][l];
                if (tr) {
                    n.p2 += tr->out;
                    n.s2 = tr->to;
                } else {
                    n.s2 = kDead;
                }
            }
            if (n.s1 == kDead && n.s2 == kDead) continue;
            n = normalize(n);
            Word nw = w + a.input_alphabet[l];
            if (diverges(n)) return nw;
            if (seen.insert(n).second) queue.emplace_back(n, nw);
        }
    }
    throw InternalError("sst_equiv: canonical forms differ but no divergence found in bound");
}

PartialRow sst_row(const Word& w, const std::vector<Word>& tests, SstTeacher& teacher) {
    PartialRow row;
    row.reserve(tests.size());
    for (const auto& t : tests) row.push_back(teacher.eval(w + t));
    return row;
}

namespace {

std::vector<Word> sorted_tests(const ObservationIndex& index) {
    return {index.test_words().begin(), index.test_words().end()};
}

} // namespace

std::size_t SstDomain::factor_size(const ObservationIndex& index, TeacherType& teacher) {
    auto tests = sorted_tests(index);
    std::set<PartialRow> rows;
    for (const auto& q : index.state_words()) {
        auto row = sst_row(q, tests, teacher);
        if (!nowhere_defined(row)) rows.insert(red(row));
    }
    return rows.size();
}

std::optional<Word> SstDomain::check_epi(const ObservationIndex& index, TeacherType& teacher) {
    auto tests = sorted_tests(index);
    std::set<PartialRow> q_rows;
    for (const auto& q : index.state_words()) {
        auto row = sst_row(q, tests, teacher);
        if (!nowhere_defined(row)) q_rows.insert(red(row));
    }
    for (const auto& qa : index.state_extensions(teacher.alphabet())) {
        if (index.has_state_word(qa)) continue;
        auto row = sst_row(qa, tests, teacher);
        if (nowhere_defined(row)) continue;
        if (!q_rows.count(red(row))) return qa;
    }
    return std::nullopt;
}

std::optional<Word> SstDomain::check_mono(const ObservationIndex& index, TeacherType& teacher) {
    auto tests = sorted_tests(index);
    std::vector<Word> state_words(index.state_words().begin(), index.state_words().end());
    std::vector<PartialRow> rows;
    rows.reserve(state_words.size());
    for (const auto& q : state_words) rows.push_back(sst_row(q, tests, teacher));

    // Classes of T-equivalent (somewhere-defined) state words.
    std::map<PartialRow, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < state_words.size(); ++i)
        if (!nowhere_defined(rows[i])) classes[red(rows[i])].push_back(i);

    for (const auto& at : index.test_extensions(teacher.alphabet())) {
        if (index.has_test_word(at)) continue;
        std::vector<SstValue> column(state_words.size());
        for (std::size_t i = 0; i < state_words.size(); ++i)
            column[i] = teacher.eval(state_words[i] + at);
        // (i) lcp stability, including undefined rows becoming defined.
        for (std::size_t i = 0; i < state_words.size(); ++i) {
            PartialRow extended = rows[i];
            extended.push_back(column[i]);
            if (lcp(extended) != lcp(rows[i])) return at;
        }
        // (ii) consistency: the column must not separate a T-equivalent pair.
        for (const auto& [key, members] : classes) {
            if (members.size() < 2) continue;
            auto reduced_with = [&](std::size_t i) {
                PartialRow extended = rows[i];
                extended.push_back(column[i]);
                return red(extended);
            };
            PartialRow first = reduced_with(members.front());
            for (std::size_t k = 1; k < members.size(); ++k)
                if (reduced_with(members[k]) != first) return at;
        }
    }
    return std::nullopt;
}

Sst SstDomain::build_hypothesis(const ObservationIndex& index, TeacherType& teacher) {
    if (check_epi(index, teacher) || check_mono(index, teacher))
        throw NotAutomatableError("build_hypothesis_sst: (Q,T) is not automatable");

    const std::string& alphabet = teacher.alphabet();
    auto tests = sorted_tests(index);
    auto wide_tests = index.tests_with_extensions(alphabet);

    Sst h;
    h.input_alphabet = alphabet;
    h.output_alphabet = teacher.target().output_alphabet;

    // States: classes of somewhere-defined state words under reduced
    // row equality over T + AT, named by their shortlex-least member.
    std::map<PartialRow, State> class_of_wide;
    std::vector<Word> representative;
    for (const auto& q : index.state_words()) {
        auto wide = sst_row(q, wide_tests, teacher);
        if (nowhere_defined(wide)) continue;
        auto [it, inserted] = class_of_wide.emplace(red(wide), representative.size());
        if (inserted) representative.push_back(q);
    }
    h.num_states = representative.size();
    h.delta.assign(h.num_states, std::vector<std::optional<SstTransition>>(alphabet.size()));
    h.final_out.assign(h.num_states, std::nullopt);

    // Targets of transitions resolve through reduced rows over T alone.
    std::map<PartialRow, State> class_of_narrow;
    for (const auto& q : index.state_words()) {
        auto narrow = sst_row(q, tests, teacher);
        if (nowhere_defined(narrow)) continue;
        auto wide = sst_row(q, wide_tests, teacher);
        class_of_narrow.emplace(red(narrow), class_of_wide.at(red(wide)));
    }

    auto lambda = [&](const Word& q) { return lcp(sst_row(q, wide_tests, teacher)); };
    auto rho = [&](const Word& w) { return lcp(sst_row(w, tests, teacher)); };

    // Initial: the class of the empty word with its observed lcp.
    {
        SstValue init_out = lambda(Word{});
        if (init_out) {
            auto wide = sst_row(Word{}, wide_tests, teacher);
            h.initial = {{class_of_wide.at(red(wide)), *init_out}};
        } else if (h.num_states != 0) {
            throw InternalError("build_hypothesis_sst: defined states but undefined start row");
        }
    }

    for (State s = 0; s < h.num_states; ++s) {
        const Word& q = representative[s];
        SstValue lam = lambda(q);
        if (!lam) throw InternalError("build_hypothesis_sst: state with undefined lcp");
        SstValue fin = teacher.eval(q);
        if (fin)
            h.final_out[s] = strip_prefix(*lam, *fin, "build_hypothesis_sst final");
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            Word qa = q + alphabet[a];
            SstValue out = rho(qa);
            if (!out) continue;
            auto narrow = sst_row(qa, tests, teacher);
            auto it = class_of_narrow.find(red(narrow));
            if (it == class_of_narrow.end())
                throw InternalError("build_hypothesis_sst: unmatched successor row after epi check");
            h.delta[s][a] =
                SstTransition{it->second, strip_prefix(*lam, *out, "build_hypothesis_sst transition")};
        }
    }
    return h;
}

} // namespace funl
