#pragma once

#include <string>
#include <variant>
#include <vector>

#include "funl/dfa.hpp"
#include "funl/sst.hpp"
#include "funl/wfa.hpp"

namespace funl {

using AnyAutomaton = std::variant<Dfa, Wfa, Sst>;

/// Parses a JSON automaton document ({"type": "dfa"|"wfa"|"sst", ...}).
/// All structural invariants are re-checked; a partial DFA transition
/// map is completed with a fresh rejecting sink and a warning. Throws
/// ParseError with a location on malformed input.
AnyAutomaton parse_automaton(const std::string& text,
                             std::vector<std::string>* warnings = nullptr);

/// Canonical serialization: rationals reduced, object keys sorted,
/// two-space indentation, trailing newline. parse followed by
/// serialize is the identity on canonical documents.
std::string serialize_automaton(const AnyAutomaton& automaton);
std::string serialize_automaton(const Dfa& d);
std::string serialize_automaton(const Wfa& w);
std::string serialize_automaton(const Sst& t);

/// GraphViz export. DFA accepting states are double-circled; WFA edges
/// are labeled "a : p/q" with zero-weight edges omitted; SST edges are
/// labeled "a / out".
std::string dot_export(const AnyAutomaton& automaton);
std::string dot_export(const Dfa& d);
std::string dot_export(const Wfa& w);
std::string dot_export(const Sst& t);

} // namespace funl
