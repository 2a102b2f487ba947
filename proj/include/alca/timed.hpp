#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "alca/machine.hpp"
#include "alca/timeset.hpp"

namespace alca {

// Folds the time axis onto finitely many phases: times below `threshold`
// are their own phase, later times are identified modulo `period`. A clock
// fits a machine when every guard is periodic with `period` from
// `threshold` on, so guard membership only depends on the phase.
struct Clock {
  Time threshold = 0;
  Time period = 1;

  std::size_t phases() const { return static_cast<std::size_t>(threshold + period); }

  std::size_t phase(Time t) const {
    if (t < threshold) return static_cast<std::size_t>(t);
    return static_cast<std::size_t>(threshold + (t - threshold) % period);
  }

  std::size_t next(std::size_t ph) const {
    return ph + 1 < phases() ? ph + 1 : static_cast<std::size_t>(threshold);
  }

  Clock join(const Clock& o) const {
    return Clock{std::max(threshold, o.threshold), std::lcm(period, o.period)};
  }

  static Clock of(const Machine& m) {
    Clock c;
    for (const auto& t : m.transitions) c = c.join(Clock{t.guard.from(), t.guard.period()});
    return c;
  }
};

namespace detail {

// Greatest set of nodes that each have a successor inside the set.
// `succ(v)` yields the successor node ids of v.
template <typename Succ>
std::vector<char> nodes_with_infinite_paths(std::size_t n, Succ&& succ) {
  std::vector<std::vector<std::size_t>> pred(n);
  std::vector<std::size_t> out_degree(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : succ(v)) {
      pred[w].push_back(v);
      ++out_degree[v];
    }
  }
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> work;
  for (std::size_t v = 0; v < n; ++v)
    if (out_degree[v] == 0) {
      alive[v] = 0;
      work.push_back(v);
    }
  while (!work.empty()) {
    std::size_t w = work.back();
    work.pop_back();
    for (std::size_t v : pred[w]) {
      if (!alive[v]) continue;
      if (--out_degree[v] == 0) {
        alive[v] = 0;
        work.push_back(v);
      }
    }
  }
  return alive;
}

}  // namespace detail

// Unrolling of a machine over the phases of a clock: node (state, phase)
// has an edge to (state', next(phase)) for each transition enabled at the
// phase. Edges of a node are ordered by (symbol, target state).
class TimedGraph {
 public:
  struct Edge {
    SymbolId symbol;
    StateId to;
  };

  TimedGraph(const Machine& m, Clock clock) : clock_(clock), states_(m.state_count()) {
    const std::size_t k = clock_.phases();
    offsets_.assign(states_ * k + 1, 0);
    std::vector<std::size_t> first(states_ + 1, m.transitions.size());
    for (std::size_t i = m.transitions.size(); i-- > 0;) first[m.transitions[i].from] = i;
    for (std::size_t x = states_; x-- > 0;) first[x] = std::min(first[x], first[x + 1]);

    for (std::size_t x = 0; x < states_; ++x) {
      for (std::size_t ph = 0; ph < k; ++ph) {
        for (std::size_t i = first[x]; i < first[x + 1]; ++i) {
          const auto& t = m.transitions[i];
          if (t.guard.contains(ph)) edges_.push_back(Edge{t.symbol, t.to});
        }
        offsets_[x * k + ph + 1] = edges_.size();
      }
    }
    live_ = detail::nodes_with_infinite_paths(states_ * k, [&](std::size_t v) {
      std::vector<std::size_t> out;
      std::size_t nph = clock_.next(v % k);
      for (const auto& e : edges(v)) out.push_back(node(e.to, nph));
      return out;
    });
  }

  explicit TimedGraph(const Machine& m) : TimedGraph(m, Clock::of(m)) {}

  const Clock& clock() const { return clock_; }
  std::size_t state_count() const { return states_; }
  std::size_t node_count() const { return states_ * clock_.phases(); }
  std::size_t node(StateId x, std::size_t ph) const { return x * clock_.phases() + ph; }

  std::span<const Edge> edges(std::size_t node) const {
    return {edges_.data() + offsets_[node], offsets_[node + 1] - offsets_[node]};
  }
  std::span<const Edge> edges(StateId x, std::size_t ph) const { return edges(node(x, ph)); }

  // An infinite run starts at (x, ph).
  bool live(StateId x, std::size_t ph) const { return live_[node(x, ph)] != 0; }

  // Sorted successor set of `from` at phase `ph` under `symbol`.
  std::vector<StateId> post(std::span<const StateId> from, std::size_t ph, SymbolId symbol) const {
    std::vector<StateId> out;
    for (StateId x : from)
      for (const auto& e : edges(x, ph))
        if (e.symbol == symbol) out.push_back(e.to);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<StateId> live_only(std::span<const StateId> set, std::size_t ph) const {
    std::vector<StateId> out;
    for (StateId x : set)
      if (live(x, ph)) out.push_back(x);
    return out;
  }

 private:
  Clock clock_;
  std::size_t states_;
  std::vector<std::size_t> offsets_;
  std::vector<Edge> edges_;
  std::vector<char> live_;
};

}  // namespace alca
