#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "alca/errors.hpp"
#include "alca/timeset.hpp"
#include "alca/word.hpp"

namespace alca {

using StateId = std::uint32_t;

struct Transition {
  StateId from = 0;
  SymbolId symbol = 0;
  StateId to = 0;
  TimeSet guard = TimeSet::all();

  friend bool operator==(const Transition&, const Transition&) = default;
};

// Finite state machine with eventually periodic time guards on transitions.
// With all guards equal to the all-times set it is an ordinary FSM.
//
// A validated machine keeps states in canonical order, initial states sorted
// and transitions sorted by (from, symbol, to) with no duplicate triple.
struct Machine {
  Alphabet alphabet;
  std::vector<std::string> states;
  std::vector<StateId> initial;
  std::vector<Transition> transitions;

  std::size_t state_count() const { return states.size(); }

  bool is_fsm() const {
    return std::all_of(transitions.begin(), transitions.end(),
                       [](const Transition& t) { return t.guard.is_all(); });
  }

  std::optional<StateId> find_state(std::string_view name) const {
    for (std::size_t i = 0; i < states.size(); ++i)
      if (states[i] == name) return static_cast<StateId>(i);
    return std::nullopt;
  }

  friend bool operator==(const Machine&, const Machine&) = default;
};

namespace detail {

// Sort key for state names: names that spell a word over the alphabet come
// first in shortlex order, anything else afterwards by byte order.
struct StateKey {
  int group;
  Word word;
  std::string name;

  friend bool operator<(const StateKey& a, const StateKey& b) {
    if (a.group != b.group) return a.group < b.group;
    if (a.group == 0) return shortlex_less(a.word, b.word);
    return a.name < b.name;
  }
};

inline StateKey state_key(const Alphabet& a, const std::string& name) {
  if (auto w = a.try_read(name)) return {0, *w, name};
  return {1, {}, name};
}

}  // namespace detail

// Checks every machine invariant and brings `m` into canonical form: guards
// are canonical, duplicate (from, symbol, to) triples are merged by uniting
// their guards, transitions with an empty guard are dropped and states are
// reordered canonically.
inline void validate(Machine& m) {
  if (m.alphabet.empty()) throw SchemaError("machine has an empty alphabet");
  const std::size_t n = m.states.size();
  {
    std::vector<std::string> sorted = m.states;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw SchemaError("duplicate state name '" + *dup + "'");
  }
  for (StateId x : m.initial)
    if (x >= n) throw SchemaError("initial state index out of range");
  for (const auto& t : m.transitions) {
    if (t.from >= n || t.to >= n) throw SchemaError("transition endpoint out of range");
    if (t.symbol >= m.alphabet.size()) throw SchemaError("transition symbol out of range");
  }

  std::vector<StateId> order(n);
  std::iota(order.begin(), order.end(), StateId{0});
  std::vector<detail::StateKey> keys;
  keys.reserve(n);
  for (const auto& s : m.states) keys.push_back(detail::state_key(m.alphabet, s));
  std::stable_sort(order.begin(), order.end(),
                   [&](StateId a, StateId b) { return keys[a] < keys[b]; });
  std::vector<StateId> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<StateId>(i);

  std::vector<std::string> states(n);
  for (std::size_t i = 0; i < n; ++i) states[i] = std::move(m.states[order[i]]);
  m.states = std::move(states);

  for (auto& x : m.initial) x = rank[x];
  std::sort(m.initial.begin(), m.initial.end());
  m.initial.erase(std::unique(m.initial.begin(), m.initial.end()), m.initial.end());

  std::map<std::tuple<StateId, SymbolId, StateId>, TimeSet> merged;
  for (const auto& t : m.transitions) {
    auto key = std::make_tuple(rank[t.from], t.symbol, rank[t.to]);
    auto it = merged.find(key);
    if (it == merged.end())
      merged.emplace(key, t.guard);
    else
      it->second = it->second.unite(t.guard);
  }
  m.transitions.clear();
  for (auto& [key, guard] : merged) {
    if (guard.is_empty()) continue;
    auto [f, s, to] = key;
    m.transitions.push_back(Transition{f, s, to, std::move(guard)});
  }
}

// Transition given by names, as read from files or written in tests.
struct NamedTransition {
  std::string from;
  std::string symbol;
  std::string to;
  TimeSet guard = TimeSet::all();
};

// Resolves names and validates; undeclared names raise SchemaError.
inline Machine make_machine(std::vector<std::string> alphabet, std::vector<std::string> states,
                            const std::vector<std::string>& initial,
                            const std::vector<NamedTransition>& transitions) {
  Machine m;
  m.alphabet = Alphabet(std::move(alphabet));
  m.states = std::move(states);
  auto state_id = [&](const std::string& name) {
    auto id = m.find_state(name);
    if (!id) throw SchemaError("undeclared state '" + name + "'");
    return *id;
  };
  for (const auto& s : initial) m.initial.push_back(state_id(s));
  for (const auto& t : transitions) {
    auto sym = m.alphabet.find(t.symbol);
    if (!sym) throw SchemaError("undeclared symbol '" + t.symbol + "'");
    m.transitions.push_back(Transition{state_id(t.from), *sym, state_id(t.to), t.guard});
  }
  validate(m);
  return m;
}

// Machine over `alphabet` with no states; its behavior is empty.
inline Machine empty_machine(Alphabet alphabet) {
  Machine m;
  m.alphabet = std::move(alphabet);
  return m;
}

// Keeps only the listed states (in the given order) and the transitions among
// them, then validates.
inline Machine restrict_states(const Machine& m, const std::vector<bool>& keep) {
  Machine out;
  out.alphabet = m.alphabet;
  std::vector<StateId> remap(m.states.size(), 0);
  for (std::size_t i = 0; i < m.states.size(); ++i) {
    if (!keep[i]) continue;
    remap[i] = static_cast<StateId>(out.states.size());
    out.states.push_back(m.states[i]);
  }
  for (StateId x : m.initial)
    if (keep[x]) out.initial.push_back(remap[x]);
  for (const auto& t : m.transitions)
    if (keep[t.from] && keep[t.to])
      out.transitions.push_back(Transition{remap[t.from], t.symbol, remap[t.to], t.guard});
  validate(out);
  return out;
}

}  // namespace alca
