#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "alca/errors.hpp"
#include "alca/machine.hpp"
#include "alca/reach.hpp"
#include "alca/timed.hpp"
#include "alca/word.hpp"

namespace alca {

// Outcome of an inclusion-style check. When it fails, `witness` lies in the
// left-over set (in the smaller side but not the larger).
struct Verdict {
  bool holds = true;
  std::optional<Lasso> witness;
  std::string note;
};

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

// ALCA_NODE_BUDGET if set to a positive integer, else the default.
inline std::size_t node_budget_from_env() {
  if (const char* v = std::getenv("ALCA_NODE_BUDGET")) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
  }
  return kDefaultNodeBudget;
}

struct InclusionOptions {
  std::size_t node_budget = kDefaultNodeBudget;
};

// σB: drops the first symbol of every signal. Initial states become the
// time-0 successors and every guard moves down by one time step.
inline Machine shift(const Machine& m) {
  Machine out;
  out.alphabet = m.alphabet;
  out.states = m.states;
  for (const auto& t : m.transitions) {
    if (std::find(m.initial.begin(), m.initial.end(), t.from) != m.initial.end() && t.guard.contains(0))
      out.initial.push_back(t.to);
    out.transitions.push_back(Transition{t.from, t.symbol, t.to, t.guard.shift_down(1)});
  }
  validate(out);
  return trim(out);
}

// Same alphabet up to symbol order; returns `m` re-indexed to `target`.
inline Machine with_alphabet(const Machine& m, const Alphabet& target) {
  if (m.alphabet == target) return m;
  if (m.alphabet.size() != target.size()) throw AlphabetMismatch("machines use different alphabets");
  std::vector<SymbolId> map(m.alphabet.size());
  for (SymbolId s = 0; s < m.alphabet.size(); ++s) {
    auto id = target.find(m.alphabet.name(s));
    if (!id) throw AlphabetMismatch("symbol '" + m.alphabet.name(s) + "' missing from other alphabet");
    map[s] = *id;
  }
  Machine out = m;
  out.alphabet = target;
  for (auto& t : out.transitions) t.symbol = map[t.symbol];
  validate(out);
  return out;
}

namespace detail {

struct ProductKey {
  StateId small;
  std::size_t phase;
  StateSet big;

  friend bool operator==(const ProductKey&, const ProductKey&) = default;
};

struct ProductKeyHash {
  std::size_t operator()(const ProductKey& k) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(k.small) * 1000003u ^ std::hash<std::size_t>{}(k.phase);
    for (StateId x : k.big) h = h * 31u + x + 0x9e3779b9u;
    return h;
  }
};

// Lexicographically least infinite word readable from `start` at time
// `time`, as a lasso appended to `prefix`. Greedy over live successor sets;
// the (set, phase) walk is deterministic and must close a cycle.
inline Lasso least_continuation(const TimedGraph& g, const Alphabet& a, Word prefix, StateSet start,
                                Time time) {
  const Clock& c = g.clock();
  std::map<std::pair<StateSet, std::size_t>, std::size_t> seen;
  std::size_t ph = c.phase(time);
  StateSet cur = g.live_only(start, ph);
  while (true) {
    if (ph >= c.threshold) {
      auto [it, fresh] = seen.emplace(std::make_pair(cur, ph), prefix.size());
      if (!fresh) {
        Word cycle(prefix.begin() + static_cast<std::ptrdiff_t>(it->second), prefix.end());
        prefix.resize(it->second);
        return Lasso{std::move(prefix), std::move(cycle)};
      }
    }
    std::size_t nph = c.next(ph);
    bool moved = false;
    for (SymbolId s = 0; s < a.size() && !moved; ++s) {
      StateSet next = g.live_only(g.post(cur, ph, s), nph);
      if (next.empty()) continue;
      prefix.push_back(s);
      cur = std::move(next);
      moved = true;
    }
    if (!moved) throw Error("least_continuation: no live successor from a live state set");
    ph = nph;
  }
}

}  // namespace detail

// behavior(small) ⊆ behavior(big). Behaviors of machines are limit-closed,
// so this is inclusion of live-prefix languages, decided by a breadth-first
// subset construction over (small state, phase, live big-state set). A node
// whose big set is empty yields the shortest, lexicographically least prefix
// of small that big cannot follow; it is completed to a witness lasso with
// the least infinite continuation in small.
inline Verdict includes(const Machine& big_in, const Machine& small_in, InclusionOptions opt = {}) {
  const Machine& small = small_in;
  const Machine big = with_alphabet(big_in, small.alphabet);
  const Clock clock = Clock::of(small).join(Clock::of(big));
  const TimedGraph gs(small, clock);
  const TimedGraph gb(big, clock);

  struct Node {
    detail::ProductKey key;
    std::size_t parent;
    SymbolId symbol;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::vector<Node> nodes;
  std::unordered_map<detail::ProductKey, std::size_t, detail::ProductKeyHash> index;
  std::deque<std::size_t> queue;

  auto word_to = [&](std::size_t v) {
    Word w;
    for (; nodes[v].parent != kRoot; v = nodes[v].parent) w.push_back(nodes[v].symbol);
    std::reverse(w.begin(), w.end());
    return w;
  };

  // returns the index of a dying node, if this discovery produced one
  auto discover = [&](detail::ProductKey key, std::size_t parent, SymbolId symbol) -> std::optional<std::size_t> {
    if (index.contains(key)) return std::nullopt;
    if (nodes.size() >= opt.node_budget)
      throw ResourceLimit("inclusion check exceeded the node budget of " + std::to_string(opt.node_budget));
    bool dies = key.big.empty();
    nodes.push_back(Node{key, parent, symbol});
    index.emplace(std::move(key), nodes.size() - 1);
    if (dies) return nodes.size() - 1;
    queue.push_back(nodes.size() - 1);
    return std::nullopt;
  };

  auto fail = [&](std::size_t v) {
    Verdict out;
    out.holds = false;
    Word u = word_to(v);
    Time t = u.size();
    out.witness = detail::least_continuation(gs, small.alphabet, u, StateSet{nodes[v].key.small}, t);
    out.note = "prefix " + small.alphabet.spell(u) + " has no continuation in the including machine";
    return out;
  };

  const StateSet big0 = gb.live_only(big.initial, 0);
  for (StateId s : small.initial) {
    if (!gs.live(s, 0)) continue;
    if (auto d = discover(detail::ProductKey{s, 0, big0}, kRoot, 0)) return fail(*d);
  }
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    const std::size_t ph = nodes[v].key.phase;
    const std::size_t nph = clock.next(ph);
    const StateId s = nodes[v].key.small;
    const StateSet bigset = nodes[v].key.big;
    for (const auto& e : gs.edges(s, ph)) {
      if (!gs.live(e.to, nph)) continue;
      StateSet nb = gb.live_only(gb.post(bigset, ph, e.symbol), nph);
      if (auto d = discover(detail::ProductKey{e.to, nph, std::move(nb)}, v, e.symbol)) return fail(*d);
    }
  }
  Verdict ok;
  ok.note = "explored " + std::to_string(nodes.size()) + " product nodes";
  return ok;
}

// Mutual inclusion; b ⊆ a is checked first, then a ⊆ b.
inline Verdict equivalent(const Machine& a, const Machine& b, InclusionOptions opt = {}) {
  Verdict v = includes(a, b, opt);
  if (!v.holds) {
    v.note = "second behavior is not contained in the first: " + v.note;
    return v;
  }
  v = includes(b, a, opt);
  if (!v.holds) v.note = "first behavior is not contained in the second: " + v.note;
  return v;
}

// σB ⊆ B
inline Verdict is_time_invariant(const Machine& m, InclusionOptions opt = {}) {
  Verdict v = includes(m, shift(m), opt);
  if (!v.holds) v.note = "witness is in the shifted behavior only";
  return v;
}

// σB = B
inline Verdict is_strictly_time_invariant(const Machine& m, InclusionOptions opt = {}) {
  const Machine shifted = shift(m);
  Verdict v = includes(m, shifted, opt);
  if (!v.holds) {
    v.note = "witness is in the shifted behavior but not in the behavior";
    return v;
  }
  v = includes(shifted, m, opt);
  if (!v.holds) v.note = "witness is in the behavior but not in the shifted behavior";
  return v;
}

}  // namespace alca
