#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "alca/machine.hpp"
#include "alca/reach.hpp"
#include "alca/timed.hpp"
#include "alca/word.hpp"

namespace alca {

// t -> B|[t, t+l], the length-(l+1) windows the behavior admits at time t.
struct DominoProfile {
  std::size_t l = 0;
  EventuallyPeriodic<WordSet> sets;

  const WordSet& at(Time t) const { return sets.at(t); }

  friend bool operator==(const DominoProfile&, const DominoProfile&) = default;
};

namespace detail {

// Words of length t2 - t1 + 1 readable from `start` (occupied at t1) that
// end in a state live at t2 + 1. Enumeration is restricted to states that
// can still reach such an end, so no branch is explored in vain.
inline WordSet windows_from(const Machine& m, const TimedGraph& g, const StateSet& start, Time t1,
                            Time t2) {
  const Clock& c = g.clock();
  const std::size_t len = static_cast<std::size_t>(t2 - t1 + 1);
  const std::size_t n = g.state_count();

  // good[i][x]: from x at time t1 + i some word reaches a live end
  std::vector<std::vector<char>> good(len + 1, std::vector<char>(n, 0));
  for (StateId x = 0; x < n; ++x) good[len][x] = g.live(x, c.phase(t2 + 1));
  for (std::size_t i = len; i-- > 0;) {
    std::size_t ph = c.phase(t1 + i);
    for (StateId x = 0; x < n; ++x)
      for (const auto& e : g.edges(x, ph))
        if (good[i + 1][e.to]) {
          good[i][x] = 1;
          break;
        }
  }

  WordSet out{len, {}};
  Word word;
  auto extend = [&](auto&& self, const StateSet& cur, std::size_t i) -> void {
    if (i == len) {
      out.words.push_back(word);
      return;
    }
    std::size_t ph = c.phase(t1 + i);
    for (SymbolId s = 0; s < m.alphabet.size(); ++s) {
      StateSet next;
      for (StateId x : cur)
        for (const auto& e : g.edges(x, ph))
          if (e.symbol == s && good[i + 1][e.to]) next.push_back(e.to);
      if (next.empty()) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      word.push_back(s);
      self(self, next, i + 1);
      word.pop_back();
    }
  };
  StateSet first;
  for (StateId x : start)
    if (good[0][x]) first.push_back(x);
  if (!first.empty()) extend(extend, first, 0);
  return out;
}

}  // namespace detail

// B|[t1, t2]; {λ} when the interval is empty (t2 < t1).
inline WordSet restrict_window(const Machine& m, Time t1, std::int64_t t2) {
  if (t2 < static_cast<std::int64_t>(t1)) return WordSet::lambda();
  const TimedGraph g(m);
  const ReachProfile reach = reach_profile(m, g);
  return detail::windows_from(m, g, reach.at(t1), t1, static_cast<Time>(t2));
}

// Exact eventually periodic summary of t -> B|[t, t+l]. Beyond both the
// reachability threshold and the guard threshold the window set depends only
// on (R_t, phase), so lcm of both periods is a period of the profile.
inline DominoProfile domino_profile(const Machine& m, std::size_t l) {
  const TimedGraph g(m);
  const ReachProfile reach = reach_profile(m, g);
  const Clock& c = g.clock();
  const Time from = std::max(reach.from, c.threshold);
  const Time period = std::lcm(reach.period, c.period);
  std::vector<WordSet> values;
  values.reserve(static_cast<std::size_t>(from + period));
  for (Time t = 0; t < from + period; ++t)
    values.push_back(detail::windows_from(m, g, reach.at(t), t, t + l));
  return DominoProfile{l, EventuallyPeriodic<WordSet>::canonical(std::move(values), from, period)};
}

// Union over all t of B|[t, t+l].
inline WordSet domino_union(const DominoProfile& p) {
  WordSet out{p.l + 1, {}};
  p.sets.for_each_value([&](const WordSet& s) { out = out.unite(s); });
  return out;
}

inline WordSet domino_union(const Machine& m, std::size_t l) { return domino_union(domino_profile(m, l)); }

// [B|[0,-1], B|[0,0], ..., B|[0,l-2]]
inline std::vector<WordSet> initial_prefixes(const Machine& m, std::size_t l) {
  std::vector<WordSet> out;
  if (l == 0) return out;
  const TimedGraph g(m);
  out.push_back(WordSet::lambda());
  for (std::size_t r = 1; r < l; ++r)
    out.push_back(detail::windows_from(m, g, m.initial, 0, r - 1));
  return out;
}

}  // namespace alca
