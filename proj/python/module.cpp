#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "funl/learner.hpp"
#include "funl/serialize.hpp"

namespace py = pybind11;
using namespace funl;

namespace {

LearnMode parse_mode(const std::string& mode) {
    if (mode == "basic") return LearnMode::Basic;
    if (mode == "optimized") return LearnMode::Optimized;
    throw py::value_error("mode must be 'basic' or 'optimized'");
}

template <typename Domain>
py::tuple learn_typed(typename Domain::Automaton target, LearnMode mode,
                      const LearnConfig& cfg) {
    typename Domain::TeacherType teacher(std::move(target));
    auto [learned, stats] = learn<Domain>(teacher, mode, cfg);
    py::dict stats_dict;
    stats_dict["eval_queries"] = stats.eval_queries;
    stats_dict["equiv_queries"] = stats.equiv_queries;
    stats_dict["while_iterations"] = stats.while_iterations;
    stats_dict["counterexamples"] = stats.counterexamples;
    return py::make_tuple(serialize_automaton(AnyAutomaton(std::move(learned))), stats_dict);
}

py::object value_to_python(bool v) { return py::bool_(v); }
py::object value_to_python(const Rational& v) { return py::str(v.str()); }
py::object value_to_python(const SstValue& v) {
    if (!v) return py::none();
    return py::str(*v);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Active learning, minimization and equivalence for word automata";

    m.def(
        "learn",
        [](const std::string& text, const std::string& mode, std::uint64_t max_iterations,
           std::uint64_t max_queries) {
            LearnConfig cfg;
            cfg.max_iterations = max_iterations;
            cfg.max_queries = max_queries;
            LearnMode m_ = parse_mode(mode);
            AnyAutomaton target = parse_automaton(text);
            return std::visit(
                [&](auto&& t) {
                    using T = std::decay_t<decltype(t)>;
                    if constexpr (std::is_same_v<T, Dfa>)
                        return learn_typed<DfaDomain>(std::move(t), m_, cfg);
                    else if constexpr (std::is_same_v<T, Wfa>)
                        return learn_typed<WfaDomain>(std::move(t), m_, cfg);
                    else
                        return learn_typed<SstDomain>(std::move(t), m_, cfg);
                },
                std::move(target));
        },
        py::arg("automaton"), py::arg("mode") = "basic",
        py::arg("max_iterations") = LearnConfig{}.max_iterations,
        py::arg("max_queries") = LearnConfig{}.max_queries,
        "Learn the minimal automaton for the target document; returns "
        "(automaton_json, stats).");

    m.def(
        "minimize",
        [](const std::string& text) {
            AnyAutomaton a = parse_automaton(text);
            AnyAutomaton out = std::visit(
                [](auto&& x) -> AnyAutomaton {
                    using T = std::decay_t<decltype(x)>;
                    if constexpr (std::is_same_v<T, Dfa>)
                        return minimize_dfa(x);
                    else if constexpr (std::is_same_v<T, Wfa>)
                        return minimize_wfa(x);
                    else
                        return minimize_sst(x);
                },
                std::move(a));
            return serialize_automaton(out);
        },
        py::arg("automaton"), "Canonical minimal form of the automaton document.");

    m.def(
        "equiv",
        [](const std::string& left, const std::string& right) -> py::object {
            AnyAutomaton l = parse_automaton(left);
            AnyAutomaton r = parse_automaton(right);
            if (l.index() != r.index())
                throw py::value_error("cannot compare automata of different types");
            std::optional<Word> cex = std::visit(
                [&](const auto& x) -> std::optional<Word> {
                    using T = std::decay_t<decltype(x)>;
                    const T& y = std::get<T>(r);
                    if constexpr (std::is_same_v<T, Dfa>)
                        return dfa_equiv(x, y);
                    else if constexpr (std::is_same_v<T, Wfa>)
                        return wfa_equiv(x, y);
                    else
                        return sst_equiv(x, y);
                },
                l);
            if (!cex) return py::none();
            return py::str(*cex);
        },
        py::arg("left"), py::arg("right"),
        "None when equivalent, otherwise the shortest separating word.");

    m.def(
        "evaluate",
        [](const std::string& text, const std::string& word) -> py::object {
            AnyAutomaton a = parse_automaton(text);
            return std::visit(
                [&](const auto& x) -> py::object {
                    if (!letters_in_alphabet(word, input_alphabet(x)))
                        throw py::value_error("word uses letters outside the alphabet");
                    return value_to_python(evaluate(x, word));
                },
                a);
        },
        py::arg("automaton"), py::arg("word"),
        "Value of the automaton on a word: bool for dfa, rational string "
        "for wfa, output string or None for sst.");

    m.def(
        "to_dot",
        [](const std::string& text) { return dot_export(parse_automaton(text)); },
        py::arg("automaton"), "GraphViz rendering of the automaton document.");

    m.def(
        "canonicalize",
        [](const std::string& text) { return serialize_automaton(parse_automaton(text)); },
        py::arg("automaton"), "Reserialize a document in canonical form.");

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_RuntimeError);
}
