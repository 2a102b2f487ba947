#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "alca/domino.hpp"
#include "alca/machine.hpp"
#include "alca/reach.hpp"
#include "alca/timeset.hpp"
#include "alca/word.hpp"

namespace alca {

// States of the window-memory realization: the startup prefixes of length
// below l together with every length-l window the behavior admits. The state
// reached at time t is w|[max(0, t-l), t-1]. Sorted shortlex.
inline std::vector<Word> state_space(const Machine& m, std::size_t l) {
  std::vector<Word> out;
  if (l == 0) return {Word{}};
  for (const auto& s : initial_prefixes(m, l))
    out.insert(out.end(), s.words.begin(), s.words.end());
  const auto windows = domino_union(m, l - 1);
  out.insert(out.end(), windows.words.begin(), windows.words.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

// Shell machine over the word-named states; transitions are added by the
// caller and the result is validated and trimmed by finish_window_machine().
struct WindowMachineBuilder {
  Machine m;
  std::map<Word, StateId> ids;

  WindowMachineBuilder(const Alphabet& a, const std::vector<Word>& states) {
    m.alphabet = a;
    for (const auto& w : states) {
      ids.emplace(w, static_cast<StateId>(m.states.size()));
      m.states.push_back(a.spell(w));
    }
    m.initial.push_back(ids.at(Word{}));
  }

  void add(const Word& from, SymbolId s, const Word& to, TimeSet guard) {
    auto f = ids.find(from);
    auto t = ids.find(to);
    // targets outside the state space are never part of an admissible window
    if (f == ids.end() || t == ids.end()) return;
    m.transitions.push_back(Transition{f->second, s, t->second, std::move(guard)});
  }

  Machine finish() {
    validate(m);
    return trim(m);
  }
};

inline bool behavior_empty(const Machine& m) { return trim(m).initial.empty(); }

inline Word slide(const Word& xi, SymbolId s) {
  Word next(xi.begin() + 1, xi.end());
  next.push_back(s);
  return next;
}

}  // namespace detail

// Strongest synchronous l-complete approximation, realized as a tFSM over
// state_space(m, l) with initial state λ:
//   |ξ| < l:  ξ --ω--> ξω   whenever ξω ∈ B|[0, |ξ|]
//   |ξ| = l:  ξ --ω--> ξ[1..]ω at every t >= l with ξω ∈ B|[t-l, t]
// A startup state ξ is only ever occupied at time |ξ|, so startup edges are
// written with the all-times guard. A sliding guard that covers all of
// [l, ∞) is written as all-times for the same reason.
inline Machine strongest_sync(const Machine& m, std::size_t l) {
  if (detail::behavior_empty(m)) return empty_machine(m.alphabet);
  const auto states = state_space(m, l);
  detail::WindowMachineBuilder b(m.alphabet, states);
  const auto starts = initial_prefixes(m, l);

  for (std::size_t r = 0; r < l; ++r) {
    const WordSet next = restrict_window(m, 0, static_cast<std::int64_t>(r));
    for (const auto& xi : starts[r].words)
      for (SymbolId s = 0; s < m.alphabet.size(); ++s) {
        Word ext = xi;
        ext.push_back(s);
        if (next.contains(ext)) b.add(xi, s, ext, TimeSet::all());
      }
  }

  const DominoProfile profile = domino_profile(m, l);
  const TimeSet sliding_times = TimeSet::at_least(l);
  for (const auto& domino : domino_union(profile).words) {
    // {t' : domino ∈ B|[t', t'+l]}, then moved to transition time t = t' + l
    TimeSet when = TimeSet::from_predicate(profile.sets.from, profile.sets.period,
                                           [&](Time t) { return profile.at(t).contains(domino); })
                       .shift_up(l);
    if (when.includes(sliding_times)) when = TimeSet::all();
    Word xi(domino.begin(), domino.end() - 1);
    if (l == 0)
      b.add(Word{}, domino.back(), Word{}, std::move(when));
    else
      b.add(xi, domino.back(), detail::slide(xi, domino.back()), std::move(when));
  }
  return b.finish();
}

// Strongest asynchronous l-complete approximation, realized as an FSM over
// state_space(m, l) with initial state λ:
//   |ξ| < l:  ξ --ω--> ξω        whenever ξω ∈ B|[0, |ξ|]
//   |ξ| = l:  ξ --ω--> ξ[1..]ω   whenever ξω ∈ ⋃_t B|[t, t+l]
inline Machine strongest_async(const Machine& m, std::size_t l) {
  if (detail::behavior_empty(m)) return empty_machine(m.alphabet);
  const auto states = state_space(m, l);
  detail::WindowMachineBuilder b(m.alphabet, states);
  const auto starts = initial_prefixes(m, l);

  for (std::size_t r = 0; r < l; ++r) {
    const WordSet next = restrict_window(m, 0, static_cast<std::int64_t>(r));
    for (const auto& xi : starts[r].words)
      for (SymbolId s = 0; s < m.alphabet.size(); ++s) {
        Word ext = xi;
        ext.push_back(s);
        if (next.contains(ext)) b.add(xi, s, ext, TimeSet::all());
      }
  }

  for (const auto& domino : domino_union(m, l).words) {
    Word xi(domino.begin(), domino.end() - 1);
    if (l == 0)
      b.add(Word{}, domino.back(), Word{}, TimeSet::all());
    else
      b.add(xi, domino.back(), detail::slide(xi, domino.back()), TimeSet::all());
  }
  return b.finish();
}

}  // namespace alca
