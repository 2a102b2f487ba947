#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "alca/machine.hpp"
#include "alca/timed.hpp"
#include "alca/timeset.hpp"
#include "alca/word.hpp"

namespace alca {

using StateSet = std::vector<StateId>;  // sorted, unique

// t -> R_t, the states occupied at time t by some run from an initial state.
using ReachProfile = EventuallyPeriodic<StateSet>;

inline bool timeset_member(const TimeSet& set, Time t) { return set.contains(t); }

// Exact, canonical reachability profile. (R_t, phase) lives in a finite
// space, so the walk below must revisit a pair; the sequence of sets is
// periodic from the first visit on.
inline ReachProfile reach_profile(const Machine& m, const TimedGraph& g) {
  const Clock& c = g.clock();
  std::map<std::pair<StateSet, std::size_t>, Time> seen;
  std::vector<StateSet> sets;
  StateSet cur = m.initial;
  for (Time t = 0;; ++t) {
    std::size_t ph = c.phase(t);
    if (t >= c.threshold) {
      auto [it, fresh] = seen.emplace(std::make_pair(cur, ph), t);
      if (!fresh) return ReachProfile::canonical(std::move(sets), it->second, t - it->second);
    }
    sets.push_back(cur);
    StateSet next;
    for (StateId x : cur)
      for (const auto& e : g.edges(x, ph)) next.push_back(e.to);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
}

inline ReachProfile reach_profile(const Machine& m) { return reach_profile(m, TimedGraph(m)); }

namespace detail {

inline Machine trim_once(const Machine& m) {
  const TimedGraph g(m);
  const Clock& c = g.clock();
  const std::size_t k = c.phases();
  const std::size_t n = m.state_count();

  // live nodes reachable from live initial nodes
  std::vector<char> reached(g.node_count(), 0);
  std::vector<std::size_t> stack;
  for (StateId x : m.initial)
    if (g.live(x, 0) && !reached[g.node(x, 0)]) {
      reached[g.node(x, 0)] = 1;
      stack.push_back(g.node(x, 0));
    }
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    std::size_t nph = c.next(v % k);
    for (const auto& e : g.edges(v)) {
      std::size_t w = g.node(e.to, nph);
      if (g.live(e.to, nph) && !reached[w]) {
        reached[w] = 1;
        stack.push_back(w);
      }
    }
  }

  Machine out;
  out.alphabet = m.alphabet;
  out.states = m.states;
  for (StateId x : m.initial)
    if (g.live(x, 0)) out.initial.push_back(x);

  std::vector<bool> keep(n, false);
  for (StateId x : out.initial) keep[x] = true;
  for (const auto& t : m.transitions) {
    // drop the times at which the target has no infinite continuation
    TimeSet guard = TimeSet::from_predicate(c.threshold, c.period, [&](Time time) {
      std::size_t ph = c.phase(time);
      return t.guard.contains(time) && g.live(t.to, c.next(ph));
    });
    bool used = false;
    for (std::size_t ph = 0; ph < k && !used; ++ph)
      used = reached[g.node(t.from, ph)] && t.guard.contains(ph) && g.live(t.to, c.next(ph));
    if (!used) continue;
    keep[t.from] = keep[t.to] = true;
    out.transitions.push_back(Transition{t.from, t.symbol, t.to, std::move(guard)});
  }
  return restrict_states(out, keep);
}

}  // namespace detail

// Removes unreachable states and every transition/time at which a run would
// get stuck. The behavior is unchanged and every remaining state starts an
// infinite run at some time it is reachable.
inline Machine trim(const Machine& m) {
  Machine cur = m;
  validate(cur);
  while (true) {
    Machine next = detail::trim_once(cur);
    if (next == cur) return next;
    cur = std::move(next);
  }
}

inline void check_word(const Alphabet& a, const Word& w) {
  for (SymbolId s : w)
    if (s >= a.size()) throw SymbolError("word uses a symbol outside the alphabet");
}

// u is the restriction to [0, |u|-1] of some signal of the behavior.
inline bool is_live_prefix(const Machine& m, const Word& u) {
  check_word(m.alphabet, u);
  const TimedGraph g(m);
  const Clock& c = g.clock();
  StateSet cur = g.live_only(m.initial, 0);
  for (std::size_t t = 0; t < u.size() && !cur.empty(); ++t) {
    std::size_t ph = c.phase(t);
    cur = g.live_only(g.post(cur, ph, u[t]), c.phase(t + 1));
  }
  return !cur.empty();
}

// prefix . cycle^omega is in the behavior. The states reachable after each
// finite prefix evolve deterministically over (set, phase, lasso position),
// which must eventually repeat; since the run tree is finitely branching an
// infinite run exists iff no prefix empties the set.
inline bool lasso_member(const Machine& m, const Lasso& w) {
  check_word(m.alphabet, w.prefix);
  check_word(m.alphabet, w.cycle);
  if (w.cycle.empty()) throw SymbolError("lasso cycle must be nonempty");
  const TimedGraph g(m);
  const Clock& c = g.clock();
  const std::size_t span = w.prefix.size() + w.cycle.size();
  std::map<std::tuple<StateSet, std::size_t, std::size_t>, Time> seen;
  StateSet cur = m.initial;
  for (Time t = 0;; ++t) {
    if (cur.empty()) return false;
    std::size_t pos = t < span ? static_cast<std::size_t>(t)
                               : w.prefix.size() + static_cast<std::size_t>((t - w.prefix.size()) % w.cycle.size());
    std::size_t ph = c.phase(t);
    if (t >= c.threshold && t >= w.prefix.size())
      if (!seen.emplace(std::make_tuple(cur, ph, pos), t).second) return true;
    cur = g.post(cur, ph, w.at(static_cast<std::size_t>(t)));
  }
}

}  // namespace alca
