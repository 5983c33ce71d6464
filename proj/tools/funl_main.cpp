#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "funl/learner.hpp"
#include "funl/serialize.hpp"

namespace {

using namespace funl;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AnyAutomaton load_automaton(const std::string& path) {
    std::vector<std::string> warnings;
    AnyAutomaton a = parse_automaton(read_file(path), &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << path << ": " << w << "\n";
    return a;
}

std::string format_word_set(const std::set<Word, ShortlexLess>& words) {
    std::string out = "{";
    bool first = true;
    for (const auto& w : words) {
        if (!first) out += ",";
        out += display_word(w);
        first = false;
    }
    return out + "}";
}

std::string stats_json(const LearnStats& stats) {
    nlohmann::json j;
    j["eval_queries"] = stats.eval_queries;
    j["equiv_queries"] = stats.equiv_queries;
    j["while_iterations"] = stats.while_iterations;
    j["counterexamples"] = stats.counterexamples;
    return j.dump();
}

void emit(const AnyAutomaton& a, const std::string& format) {
    if (format == "dot")
        std::cout << dot_export(a);
    else
        std::cout << serialize_automaton(a);
}

struct LearnOptions {
    std::string target_path;
    std::string mode = "basic";
    std::string emit_format = "json";
    bool stats = false;
    bool trace = false;
    LearnConfig config;
};

template <typename Domain>
int run_learn(typename Domain::Automaton target, const LearnOptions& opt) {
    typename Domain::TeacherType teacher(std::move(target));
    LearnMode mode = opt.mode == "optimized" ? LearnMode::Optimized : LearnMode::Basic;

    LearnHooks<typename Domain::Automaton> hooks;
    if (opt.trace) {
        hooks.on_start = [](const ObservationIndex& index) {
            std::cout << "trace start Q=" << format_word_set(index.state_words())
                      << " T=" << format_word_set(index.test_words()) << "\n";
        };
        hooks.on_repair = [](bool epi, const Word& witness, const ObservationIndex& index) {
            std::cout << "trace repair " << (epi ? "closedness" : "consistency")
                      << " witness=" << display_word(witness)
                      << " Q=" << format_word_set(index.state_words())
                      << " T=" << format_word_set(index.test_words()) << "\n";
        };
        hooks.on_hypothesis = [](const typename Domain::Automaton& h, const ObservationIndex&,
                                 std::size_t factor_size) {
            std::cout << "trace hypothesis factor_size=" << factor_size << "\n";
            std::cout << nlohmann::json::parse(serialize_automaton(h)).dump() << "\n";
        };
        hooks.on_counterexample = [](const Word& w, const ObservationIndex& index) {
            std::cout << "trace counterexample " << display_word(w)
                      << " Q=" << format_word_set(index.state_words()) << "\n";
        };
    }

    auto [learned, stats] =
        learn<Domain>(teacher, mode, opt.config, opt.trace ? &hooks : nullptr);
    emit(AnyAutomaton(std::move(learned)), opt.emit_format);
    if (opt.stats) std::cout << stats_json(stats) << "\n";
    return 0;
}

int cmd_learn(const LearnOptions& opt) {
    AnyAutomaton target = load_automaton(opt.target_path);
    return std::visit(
        [&](auto&& t) {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, Dfa>)
                return run_learn<DfaDomain>(std::move(t), opt);
            else if constexpr (std::is_same_v<T, Wfa>)
                return run_learn<WfaDomain>(std::move(t), opt);
            else
                return run_learn<SstDomain>(std::move(t), opt);
        },
        std::move(target));
}

int cmd_minimize(const std::string& path, const std::string& format) {
    AnyAutomaton a = load_automaton(path);
    AnyAutomaton minimized = std::visit(
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
    emit(minimized, format);
    return 0;
}

int cmd_equiv(const std::string& left_path, const std::string& right_path) {
    AnyAutomaton left = load_automaton(left_path);
    AnyAutomaton right = load_automaton(right_path);
    if (left.index() != right.index())
        throw ParseError("cannot compare automata of different types");
    std::optional<Word> cex = std::visit(
        [&](const auto& l) -> std::optional<Word> {
            using T = std::decay_t<decltype(l)>;
            const T& r = std::get<T>(right);
            if constexpr (std::is_same_v<T, Dfa>)
                return dfa_equiv(l, r);
            else if constexpr (std::is_same_v<T, Wfa>)
                return wfa_equiv(l, r);
            else
                return sst_equiv(l, r);
        },
        left);
    if (!cex) {
        std::cout << "equivalent\n";
        return 0;
    }
    std::cout << "counterexample: " << nlohmann::json(*cex).dump() << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Active learning, minimization and equivalence for deterministic automata, "
                 "rational-weighted automata and subsequential transducers"};
    app.require_subcommand(1);

    LearnOptions learn_opt;
    auto* learn_cmd = app.add_subcommand("learn", "Learn the minimal automaton for a target");
    learn_cmd->add_option("--target", learn_opt.target_path, "Target automaton file")->required();
    learn_cmd->add_option("--mode", learn_opt.mode, "Repair strategy")
        ->check(CLI::IsMember({"basic", "optimized"}));
    learn_cmd->add_option("--emit", learn_opt.emit_format, "Output format")
        ->check(CLI::IsMember({"json", "dot"}));
    learn_cmd->add_flag("--stats", learn_opt.stats, "Print query counts after the result");
    learn_cmd->add_flag("--trace", learn_opt.trace, "Print each (Q,T) snapshot and hypothesis");
    learn_cmd->add_option("--max-iterations", learn_opt.config.max_iterations,
                          "Cap on repair steps and equivalence queries");
    learn_cmd->add_option("--max-queries", learn_opt.config.max_queries,
                          "Cap on distinct evaluation queries");

    std::string minimize_path, minimize_format = "json";
    auto* minimize_cmd = app.add_subcommand("minimize", "Minimize an automaton");
    minimize_cmd->add_option("--input", minimize_path, "Automaton file")->required();
    minimize_cmd->add_option("--emit", minimize_format, "Output format")
        ->check(CLI::IsMember({"json", "dot"}));

    std::string left_path, right_path;
    auto* equiv_cmd = app.add_subcommand("equiv", "Decide equivalence of two automata");
    equiv_cmd->add_option("--left", left_path, "First automaton file")->required();
    equiv_cmd->add_option("--right", right_path, "Second automaton file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (learn_cmd->parsed()) return cmd_learn(learn_opt);
        if (minimize_cmd->parsed()) return cmd_minimize(minimize_path, minimize_format);
        if (equiv_cmd->parsed()) return cmd_equiv(left_path, right_path);
    } catch (const funl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
