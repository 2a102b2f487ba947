#pragma once

#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "alca/errors.hpp"
#include "alca/machine.hpp"
#include "alca/timeset.hpp"
#include "json.hpp"

namespace alca {

namespace detail {

using json = nlohmann::json;

inline std::string file_state_name(const std::string& name) {
  return name == kLambda ? std::string(kLambdaAscii) : name;
}

inline std::string display_state_name(const std::string& name) {
  return name == kLambdaAscii ? std::string(kLambda) : name;
}

inline void expect_keys(const json& obj, const std::set<std::string>& allowed, const std::set<std::string>& required,
                        const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.contains(it.key())) throw SchemaError(where + ": unknown field '" + it.key() + "'");
  for (const auto& k : required)
    if (!obj.contains(k)) throw SchemaError(where + ": missing field '" + k + "'");
}

inline std::vector<std::string> string_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw SchemaError(where + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw SchemaError(where + " must be a list of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline Time natural(const json& v, const std::string& where) {
  if (!v.is_number_unsigned()) throw SchemaError(where + " must be a natural number");
  return v.get<Time>();
}

inline std::vector<Time> natural_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw SchemaError(where + " must be a list of natural numbers");
  std::vector<Time> out;
  for (const auto& e : v) out.push_back(natural(e, where));
  return out;
}

inline TimeSet parse_times(const json& v) {
  expect_keys(v, {"explicit", "from", "period", "residues"}, {"explicit", "from", "period", "residues"},
              "times");
  return TimeSet::make(natural_list(v.at("explicit"), "times.explicit"), natural(v.at("from"), "times.from"),
                       natural(v.at("period"), "times.period"),
                       natural_list(v.at("residues"), "times.residues"));
}

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

// Reads a machine file. Syntax problems raise ParseError (with line and
// column), content problems SchemaError. The result is validated.
inline Machine parse_machine(std::string_view text) {
  using detail::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(e.what(), line, column);
  }
  detail::expect_keys(doc, {"kind", "alphabet", "states", "initial", "transitions"},
                      {"kind", "alphabet", "states", "initial", "transitions"}, "machine");
  if (!doc.at("kind").is_string()) throw SchemaError("kind must be \"fsm\" or \"tfsm\"");
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind != "fsm" && kind != "tfsm") throw SchemaError("kind must be \"fsm\" or \"tfsm\"");

  auto states = detail::string_list(doc.at("states"), "states");
  for (auto& s : states) s = detail::display_state_name(s);
  auto initial = detail::string_list(doc.at("initial"), "initial");
  for (auto& s : initial) s = detail::display_state_name(s);

  const json& trs = doc.at("transitions");
  if (!trs.is_array()) throw SchemaError("transitions must be a list");
  std::vector<NamedTransition> transitions;
  for (const auto& t : trs) {
    detail::expect_keys(t, {"from", "symbol", "to", "times"}, {"from", "symbol", "to"}, "transition");
    for (const char* k : {"from", "symbol", "to"})
      if (!t.at(k).is_string()) throw SchemaError(std::string("transition.") + k + " must be a string");
    NamedTransition nt{detail::display_state_name(t.at("from").get<std::string>()), t.at("symbol").get<std::string>(),
                       detail::display_state_name(t.at("to").get<std::string>()), TimeSet::all()};
    if (t.contains("times")) {
      if (kind == "fsm") throw SchemaError("an fsm must not carry time guards");
      nt.guard = detail::parse_times(t.at("times"));
    }
    transitions.push_back(std::move(nt));
  }
  return make_machine(detail::string_list(doc.at("alphabet"), "alphabet"), std::move(states), initial,
                      transitions);
}

// Canonical file rendering: one transition per line, states and transitions
// in canonical order, "times" only for guards other than all-times.
inline std::string serialize_machine(const Machine& in) {
  using detail::json;
  Machine m = in;
  validate(m);
  auto names = [&](const std::vector<std::string>& v) {
    json arr = json::array();
    for (const auto& s : v) arr.push_back(detail::file_state_name(s));
    return arr;
  };
  std::vector<std::string> initial;
  for (StateId x : m.initial) initial.push_back(m.states[x]);

  std::ostringstream os;
  os << "{\n";
  os << "  \"kind\": " << json(m.is_fsm() ? "fsm" : "tfsm").dump() << ",\n";
  os << "  \"alphabet\": " << json(m.alphabet.symbols()).dump() << ",\n";
  os << "  \"states\": " << names(m.states).dump() << ",\n";
  os << "  \"initial\": " << names(initial).dump() << ",\n";
  os << "  \"transitions\": [";
  for (std::size_t i = 0; i < m.transitions.size(); ++i) {
    const auto& t = m.transitions[i];
    std::string line = "{\"from\":" + json(detail::file_state_name(m.states[t.from])).dump() +
                       ",\"symbol\":" + json(m.alphabet.name(t.symbol)).dump() +
                       ",\"to\":" + json(detail::file_state_name(m.states[t.to])).dump();
    if (!t.guard.is_all()) {
      line += ",\"times\":{\"explicit\":" + json(t.guard.explicit_times()).dump() +
              ",\"from\":" + std::to_string(t.guard.from()) + ",\"period\":" + std::to_string(t.guard.period()) +
              ",\"residues\":" + json(t.guard.residues()).dump() + "}";
    }
    line += "}";
    os << (i ? ",\n    " : "\n    ") << line;
  }
  os << (m.transitions.empty() ? "]\n" : "\n  ]\n");
  os << "}\n";
  return os.str();
}

// Graphviz rendering. Initial states get an arrow from a point node; edge
// labels are `symbol` or `symbol [times]`.
inline std::string export_dot(const Machine& in) {
  Machine m = in;
  validate(m);
  std::ostringstream os;
  os << "digraph machine {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < m.states.size(); ++i)
    os << "  q" << i << " [label=\"" << detail::dot_escape(m.states[i]) << "\"];\n";
  for (std::size_t i = 0; i < m.initial.size(); ++i) {
    os << "  init" << i << " [shape=point, label=\"\"];\n";
    os << "  init" << i << " -> q" << m.initial[i] << ";\n";
  }
  for (const auto& t : m.transitions) {
    std::string label = m.alphabet.name(t.symbol);
    if (!t.guard.is_all()) label += " [" + t.guard.to_string() + "]";
    os << "  q" << t.from << " -> q" << t.to << " [label=\"" << detail::dot_escape(label) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace alca
