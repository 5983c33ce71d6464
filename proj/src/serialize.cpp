#include "funl/serialize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "funl/errors.hpp"

namespace funl {

using nlohmann::json;

namespace {

std::string parse_alphabet(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        throw ParseError(std::string("missing or non-array '") + field + "'");
    std::set<char> letters;
    for (const auto& item : j[field]) {
        if (!item.is_string() || item.get<std::string>().size() != 1)
            throw ParseError(std::string("'") + field + "' entries must be single-character strings");
        if (!letters.insert(item.get<std::string>()[0]).second)
            throw ParseError(std::string("duplicate letter in '") + field + "'");
    }
    return {letters.begin(), letters.end()};
}

json alphabet_to_json(const std::string& alphabet) {
    json out = json::array();
    for (char a : alphabet) out.push_back(std::string(1, a));
    return out;
}

std::size_t parse_count(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_unsigned())
        throw ParseError(std::string("missing or invalid '") + field + "'");
    return j[field].get<std::size_t>();
}

State parse_state_ref(const json& j, std::size_t num_states, const std::string& where) {
    if (!j.is_number_unsigned() || j.get<std::size_t>() >= num_states)
        throw ParseError("state reference out of range in " + where);
    return j.get<State>();
}

State parse_state_key(const std::string& key, std::size_t num_states, const std::string& where) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(key, &pos);
    } catch (const std::exception&) {
        throw ParseError("non-numeric state key '" + key + "' in " + where);
    }
    if (pos != key.size() || v >= num_states)
        throw ParseError("state key '" + key + "' out of range in " + where);
    return v;
}

char parse_letter_key(const std::string& key, const std::string& alphabet,
                      const std::string& where) {
    if (key.size() != 1 || alphabet.find(key[0]) == std::string::npos)
        throw ParseError("letter '" + key + "' outside alphabet in " + where);
    return key[0];
}

Dfa parse_dfa(const json& j, std::vector<std::string>* warnings) {
    Dfa d;
    d.alphabet = parse_alphabet(j, "alphabet");
    d.num_states = parse_count(j, "states");
    if (d.num_states == 0) throw ParseError("dfa must have at least one state");
    if (!j.contains("initial")) throw ParseError("missing 'initial'");
    d.initial = parse_state_ref(j["initial"], d.num_states, "'initial'");
    d.accepting.assign(d.num_states, false);
    if (!j.contains("accepting") || !j["accepting"].is_array())
        throw ParseError("missing or non-array 'accepting'");
    for (const auto& s : j["accepting"])
        d.accepting[parse_state_ref(s, d.num_states, "'accepting'")] = true;

    std::vector<std::vector<std::optional<State>>> partial(
        d.num_states, std::vector<std::optional<State>>(d.alphabet.size()));
    if (!j.contains("transitions") || !j["transitions"].is_object())
        throw ParseError("missing or non-object 'transitions'");
    for (const auto& [skey, edges] : j["transitions"].items()) {
        State s = parse_state_key(skey, d.num_states, "'transitions'");
        if (!edges.is_object()) throw ParseError("transition row must be an object");
        for (const auto& [akey, target] : edges.items()) {
            char a = parse_letter_key(akey, d.alphabet, "'transitions'");
            partial[s][d.alphabet.find(a)] =
                parse_state_ref(target, d.num_states, "'transitions'");
        }
    }
    bool incomplete = false;
    for (const auto& row : partial)
        for (const auto& cell : row)
            if (!cell) incomplete = true;
    if (incomplete) {
        // The domain works with complete automata; route every missing
        // edge to a fresh rejecting sink.
        if (warnings)
            warnings->push_back("dfa transition map is partial; completed with a rejecting sink");
        State sink = d.num_states++;
        d.accepting.push_back(false);
        partial.emplace_back(d.alphabet.size(), sink);
        for (auto& row : partial)
            for (auto& cell : row)
                if (!cell) cell = sink;
    }
    d.delta.assign(d.num_states, std::vector<State>(d.alphabet.size()));
    for (State s = 0; s < d.num_states; ++s)
        for (std::size_t a = 0; a < d.alphabet.size(); ++a) d.delta[s][a] = *partial[s][a];
    return d;
}

Wfa parse_wfa(const json& j) {
    Wfa w;
    w.alphabet = parse_alphabet(j, "alphabet");
    w.dim = parse_count(j, "dim");
    auto parse_vector = [&](const char* field) {
        if (!j.contains(field) || !j[field].is_array() || j[field].size() != w.dim)
            throw ParseError(std::string("'") + field + "' must be an array of length dim");
        std::vector<Rational> out;
        for (const auto& e : j[field]) {
            if (!e.is_string()) throw ParseError(std::string("'") + field + "' entries must be strings");
            out.push_back(Rational::parse(e.get<std::string>()));
        }
        return out;
    };
    w.alpha = parse_vector("alpha");
    w.beta = parse_vector("beta");
    if (!j.contains("transitions") || !j["transitions"].is_object())
        throw ParseError("missing or non-object 'transitions'");
    for (char a : w.alphabet) {
        std::string key(1, a);
        if (!j["transitions"].contains(key))
            throw ParseError("missing transition matrix for letter '" + key + "'");
        const auto& rows = j["transitions"][key];
        if (!rows.is_array() || rows.size() != w.dim)
            throw ParseError("transition matrix for '" + key + "' must have dim rows");
        RatMatrix m(w.dim, w.dim);
        for (std::size_t r = 0; r < w.dim; ++r) {
            if (!rows[r].is_array() || rows[r].size() != w.dim)
                throw ParseError("transition matrix for '" + key + "' must be square of size dim");
            for (std::size_t c = 0; c < w.dim; ++c) {
                if (!rows[r][c].is_string())
                    throw ParseError("matrix entries must be rational strings");
                m.at(r, c) = Rational::parse(rows[r][c].get<std::string>());
            }
        }
        w.transitions.push_back(std::move(m));
    }
    for (const auto& [key, value] : j["transitions"].items())
        if (key.size() != 1 || w.alphabet.find(key[0]) == std::string::npos)
            throw ParseError("transition matrix for unknown letter '" + key + "'");
    return w;
}

Sst parse_sst(const json& j) {
    Sst t;
    t.input_alphabet = parse_alphabet(j, "alphabet");
    t.output_alphabet = parse_alphabet(j, "output_alphabet");
    t.num_states = parse_count(j, "states");
    auto check_output_word = [&](const std::string& w, const char* where) {
        if (!letters_in_alphabet(w, t.output_alphabet))
            throw ParseError(std::string(where) + " uses letters outside output_alphabet");
        return w;
    };
    if (j.contains("initial") && !j["initial"].is_null()) {
        const auto& init = j["initial"];
        if (!init.is_object() || !init.contains("state") || !init.contains("out") ||
            !init["out"].is_string())
            throw ParseError("'initial' must be null or {state, out}");
        if (t.num_states == 0) throw ParseError("'initial' present but 'states' is 0");
        t.initial = {{parse_state_ref(init["state"], t.num_states, "'initial'"),
                      check_output_word(init["out"].get<std::string>(), "'initial' output")}};
    }
    t.delta.assign(t.num_states,
                   std::vector<std::optional<SstTransition>>(t.input_alphabet.size()));
    t.final_out.assign(t.num_states, std::nullopt);
    if (j.contains("transitions")) {
        if (!j["transitions"].is_object()) throw ParseError("'transitions' must be an object");
        for (const auto& [skey, edges] : j["transitions"].items()) {
            State s = parse_state_key(skey, t.num_states, "'transitions'");
            if (!edges.is_object()) throw ParseError("transition row must be an object");
            for (const auto& [akey, tr] : edges.items()) {
                char a = parse_letter_key(akey, t.input_alphabet, "'transitions'");
                if (!tr.is_object() || !tr.contains("to") || !tr.contains("out") ||
                    !tr["out"].is_string())
                    throw ParseError("sst transition must be {to, out}");
                t.delta[s][t.input_alphabet.find(a)] = SstTransition{
                    parse_state_ref(tr["to"], t.num_states, "'transitions'"),
                    check_output_word(tr["out"].get<std::string>(), "transition output")};
            }
        }
    }
    if (j.contains("finals")) {
        if (!j["finals"].is_object()) throw ParseError("'finals' must be an object");
        for (const auto& [skey, out] : j["finals"].items()) {
            State s = parse_state_key(skey, t.num_states, "'finals'");
            if (!out.is_string()) throw ParseError("final outputs must be strings");
            t.final_out[s] = check_output_word(out.get<std::string>(), "final output");
        }
    }
    return t;
}

json to_json(const Dfa& d) {
    json j;
    j["type"] = "dfa";
    j["alphabet"] = alphabet_to_json(d.alphabet);
    j["states"] = d.num_states;
    j["initial"] = d.initial;
    json accepting = json::array();
    for (State s = 0; s < d.num_states; ++s)
        if (d.accepting[s]) accepting.push_back(s);
    j["accepting"] = std::move(accepting);
    json transitions = json::object();
    for (State s = 0; s < d.num_states; ++s) {
        json row = json::object();
        for (std::size_t a = 0; a < d.alphabet.size(); ++a)
            row[std::string(1, d.alphabet[a])] = d.delta[s][a];
        transitions[std::to_string(s)] = std::move(row);
    }
    j["transitions"] = std::move(transitions);
    return j;
}

json to_json(const Wfa& w) {
    json j;
    j["type"] = "wfa";
    j["alphabet"] = alphabet_to_json(w.alphabet);
    j["dim"] = w.dim;
    auto vec = [](const std::vector<Rational>& v) {
        json out = json::array();
        for (const auto& r : v) out.push_back(r.str());
        return out;
    };
    j["alpha"] = vec(w.alpha);
    j["beta"] = vec(w.beta);
    json transitions = json::object();
    for (std::size_t a = 0; a < w.alphabet.size(); ++a) {
        json rows = json::array();
        for (std::size_t r = 0; r < w.dim; ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < w.dim; ++c) row.push_back(w.transitions[a].at(r, c).str());
            rows.push_back(std::move(row));
        }
        transitions[std::string(1, w.alphabet[a])] = std::move(rows);
    }
    j["transitions"] = std::move(transitions);
    return j;
}

json to_json(const Sst& t) {
    json j;
    j["type"] = "sst";
    j["alphabet"] = alphabet_to_json(t.input_alphabet);
    j["output_alphabet"] = alphabet_to_json(t.output_alphabet);
    j["states"] = t.num_states;
    if (t.initial)
        j["initial"] = {{"state", t.initial->first}, {"out", t.initial->second}};
    else
        j["initial"] = nullptr;
    json transitions = json::object();
    for (State s = 0; s < t.num_states; ++s) {
        json row = json::object();
        for (std::size_t a = 0; a < t.input_alphabet.size(); ++a)
            if (t.delta[s][a])
                row[std::string(1, t.input_alphabet[a])] = {{"to", t.delta[s][a]->to},
                                                            {"out", t.delta[s][a]->out}};
        if (!row.empty()) transitions[std::to_string(s)] = std::move(row);
    }
    j["transitions"] = std::move(transitions);
    json finals = json::object();
    for (State s = 0; s < t.num_states; ++s)
        if (t.final_out[s]) finals[std::to_string(s)] = *t.final_out[s];
    j["finals"] = std::move(finals);
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

AnyAutomaton parse_automaton(const std::string& text, std::vector<std::string>* warnings) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ParseError("document must be an object with a string 'type'");
    std::string type = j["type"].get<std::string>();
    try {
        if (type == "dfa") return parse_dfa(j, warnings);
        if (type == "wfa") return parse_wfa(j);
        if (type == "sst") return parse_sst(j);
    } catch (const ParseError& e) {
        throw ParseError("in " + type + " document: " + e.what());
    }
    throw ParseError("unknown automaton type '" + type + "'");
}

std::string serialize_automaton(const Dfa& d) { return dump(to_json(d)); }
std::string serialize_automaton(const Wfa& w) { return dump(to_json(w)); }
std::string serialize_automaton(const Sst& t) { return dump(to_json(t)); }

std::string serialize_automaton(const AnyAutomaton& automaton) {
    return std::visit([](const auto& a) { return serialize_automaton(a); }, automaton);
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string state_label(const Dfa& d, State s) {
    if (s < d.state_names.size() && !d.state_names[s].empty()) return d.state_names[s];
    return std::to_string(s);
}

} // namespace

std::string dot_export(const Dfa& d) {
    std::ostringstream os;
    os << "digraph dfa {\n  rankdir=LR;\n  __init [shape=point, label=\"\"];\n";
    for (State s = 0; s < d.num_states; ++s)
        os << "  n" << s << " [label=" << dot_quote(state_label(d, s)) << ", shape="
           << (d.accepting[s] ? "doublecircle" : "circle") << "];\n";
    os << "  __init -> n" << d.initial << ";\n";
    for (State s = 0; s < d.num_states; ++s)
        for (std::size_t a = 0; a < d.alphabet.size(); ++a)
            os << "  n" << s << " -> n" << d.delta[s][a]
               << " [label=" << dot_quote(std::string(1, d.alphabet[a])) << "];\n";
    os << "}\n";
    return os.str();
}

std::string dot_export(const Wfa& w) {
    std::ostringstream os;
    os << "digraph wfa {\n  rankdir=LR;\n";
    if (w.dim == 0) {
        os << "  empty [shape=plaintext, label=\"zero automaton (dim 0)\"];\n}\n";
        return os.str();
    }
    os << "  __init [shape=point, label=\"\"];\n  __out [shape=point, label=\"\"];\n";
    for (std::size_t i = 0; i < w.dim; ++i)
        os << "  n" << i << " [label=\"q" << i << "\", shape=circle];\n";
    for (std::size_t i = 0; i < w.dim; ++i)
        if (!w.alpha[i].is_zero())
            os << "  __init -> n" << i << " [label=" << dot_quote(w.alpha[i].str()) << "];\n";
    for (std::size_t a = 0; a < w.alphabet.size(); ++a)
        for (std::size_t i = 0; i < w.dim; ++i)
            for (std::size_t j = 0; j < w.dim; ++j) {
                const Rational& weight = w.transitions[a].at(i, j);
                if (weight.is_zero()) continue;
                os << "  n" << i << " -> n" << j << " [label="
                   << dot_quote(std::string(1, w.alphabet[a]) + " : " + weight.str()) << "];\n";
            }
    for (std::size_t i = 0; i < w.dim; ++i)
        if (!w.beta[i].is_zero())
            os << "  n" << i << " -> __out [label=" << dot_quote(w.beta[i].str()) << "];\n";
    os << "}\n";
    return os.str();
}

std::string dot_export(const Sst& t) {
    std::ostringstream os;
    os << "digraph sst {\n  rankdir=LR;\n";
    if (t.num_states == 0) {
        os << "  empty [shape=plaintext, label=\"empty transducer\"];\n}\n";
        return os.str();
    }
    os << "  __init [shape=point, label=\"\"];\n";
    for (State s = 0; s < t.num_states; ++s)
        os << "  n" << s << " [label=\"" << s << "\", shape="
           << (t.final_out[s] ? "doublecircle" : "circle") << "];\n";
    if (t.initial)
        os << "  __init -> n" << t.initial->first
           << " [label=" << dot_quote(t.initial->second) << "];\n";
    for (State s = 0; s < t.num_states; ++s)
        for (std::size_t a = 0; a < t.input_alphabet.size(); ++a)
            if (t.delta[s][a])
                os << "  n" << s << " -> n" << t.delta[s][a]->to << " [label="
                   << dot_quote(std::string(1, t.input_alphabet[a]) + " / " + t.delta[s][a]->out)
                   << "];\n";
    bool first = true;
    for (State s = 0; s < t.num_states; ++s) {
        if (!t.final_out[s]) continue;
        if (first) {
            os << "  __out [shape=point, label=\"\"];\n";
            first = false;
        }
        os << "  n" << s << " -> __out [label=" << dot_quote(*t.final_out[s]) << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string dot_export(const AnyAutomaton& automaton) {
    return std::visit([](const auto& a) { return dot_export(a); }, automaton);
}

} // namespace funl
