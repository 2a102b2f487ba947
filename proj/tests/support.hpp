#pragma once

// Test helpers: independent reference semantics, random machine generators
// and the property checks shared by the unit suite and the acceptance run.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "alca/alca.hpp"

namespace alca::testing {

inline Machine fig5() { return fixture("fig5").machine; }

inline std::set<std::string> names(const Alphabet& a, const WordSet& s) {
  std::set<std::string> out;
  for (const auto& w : s.words) out.insert(a.spell(w));
  return out;
}

inline std::set<std::string> names(const Alphabet& a, const std::vector<Word>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(a.spell(w));
  return out;
}

inline Lasso lasso(const Machine& m, std::string_view u, std::string_view v) {
  return make_lasso(m.alphabet.read(u), m.alphabet.read(v));
}

// Plain (state names, symbol, target) triples; guards dropped.
inline std::set<std::tuple<std::string, std::string, std::string>> edge_names(const Machine& m) {
  std::set<std::tuple<std::string, std::string, std::string>> out;
  for (const auto& t : m.transitions) out.emplace(m.states[t.from], m.alphabet.name(t.symbol), m.states[t.to]);
  return out;
}

// ---------------------------------------------------------------------------
// Reference semantics. Written directly against Machine and TimeSet
// membership; no TimedGraph, trim or reach code is used.

namespace ref {

struct Fold {
  Time h = 0;
  Time p = 1;

  std::size_t size() const { return static_cast<std::size_t>(h + p); }
  Time norm(Time t) const { return t < h ? t : h + (t - h) % p; }
  Time next(Time t) const { return norm(t + 1); }
};

inline Fold fold_of(const Machine& m, Time h = 0, Time p = 1) {
  Fold f{h, p};
  for (const auto& t : m.transitions) {
    f.h = std::max(f.h, t.guard.from());
    f.p = std::lcm(f.p, t.guard.period());
  }
  return f;
}

// live[x][τ]: an infinite run leaves x at folded time τ.
inline std::vector<std::vector<char>> liveness(const Machine& m, const Fold& f) {
  std::vector<std::vector<char>> live(m.state_count(), std::vector<char>(f.size(), 1));
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateId x = 0; x < m.state_count(); ++x)
      for (Time tau = 0; tau < f.size(); ++tau) {
        if (!live[x][tau]) continue;
        bool ok = false;
        for (const auto& t : m.transitions)
          if (t.from == x && t.guard.contains(tau) && live[t.to][f.next(tau)]) ok = true;
        if (!ok) {
          live[x][tau] = 0;
          changed = true;
        }
      }
  }
  return live;
}

using Set = std::set<StateId>;

inline Set step(const Machine& m, const Set& from, Time t, SymbolId s) {
  Set out;
  for (const auto& tr : m.transitions)
    if (from.contains(tr.from) && tr.symbol == s && tr.guard.contains(t)) out.insert(tr.to);
  return out;
}

inline Set live_part(const Set& s, const std::vector<std::vector<char>>& live, Time tau) {
  Set out;
  for (StateId x : s)
    if (live[x][tau]) out.insert(x);
  return out;
}

inline bool live_prefix(const Machine& m, const Word& u) {
  const Fold f = fold_of(m);
  const auto live = liveness(m, f);
  Set cur(m.initial.begin(), m.initial.end());
  for (std::size_t t = 0; t < u.size(); ++t) cur = step(m, cur, f.norm(t), u[t]);
  return !live_part(cur, live, f.norm(u.size())).empty();
}

// u.v^w is accepted iff some initial (state, time 0) reaches a cycle of the
// product with the folded lasso position.
inline bool member(const Machine& m, const Lasso& w) {
  const Fold f = fold_of(m, w.prefix.size(), w.cycle.size());
  const std::size_t n = m.state_count() * f.size();
  auto id = [&](StateId x, Time tau) { return x * f.size() + static_cast<std::size_t>(tau); };
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& t : m.transitions)
    for (Time tau = 0; tau < f.size(); ++tau)
      if (t.guard.contains(tau) && w.at(tau) == t.symbol) succ[id(t.from, tau)].push_back(id(t.to, f.next(tau)));
  std::vector<char> alive(n, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      if (std::none_of(succ[v].begin(), succ[v].end(), [&](std::size_t x) { return alive[x]; })) {
        alive[v] = 0;
        changed = true;
      }
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack;
  for (StateId x : m.initial) stack.push_back(id(x, 0));
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = 1;
    if (alive[v]) return true;
    for (std::size_t x : succ[v]) stack.push_back(x);
  }
  return false;
}

// Layered comparison of the live-prefix languages of `small` and `big`.
// Layer n holds the distinct (small set, big set) pairs reached by prefixes
// of length n. Returns the first length at which small has a live prefix
// that big lacks, or -1 if none up to `depth`.
inline long first_gap(const Machine& big, const Machine& small, std::size_t depth) {
  const Fold fs = fold_of(small);
  const Fold fb = fold_of(big);
  const auto ls = liveness(small, fs);
  const auto lb = liveness(big, fb);
  std::set<std::pair<Set, Set>> layer;
  layer.emplace(live_part(Set(small.initial.begin(), small.initial.end()), ls, 0),
                live_part(Set(big.initial.begin(), big.initial.end()), lb, 0));
  for (std::size_t n = 0; n <= depth; ++n) {
    std::set<std::pair<Set, Set>> next;
    for (const auto& [s, b] : layer) {
      if (s.empty()) continue;
      if (b.empty()) return static_cast<long>(n);
      for (SymbolId a = 0; a < small.alphabet.size(); ++a) {
        Set s2 = live_part(step(small, s, fs.norm(n), a), ls, fs.norm(n + 1));
        if (s2.empty()) continue;
        next.emplace(std::move(s2), live_part(step(big, b, fb.norm(n), a), lb, fb.norm(n + 1)));
      }
    }
    layer = std::move(next);
  }
  return -1;
}

// Length bound past which no new (small state, big set, phase) combination
// can appear; both orientations of the product are covered.
inline std::size_t pumping_bound(const Machine& big, const Machine& small) {
  const Fold f = fold_of(big, fold_of(small).h, fold_of(small).p);
  const std::size_t a = small.state_count(), b = big.state_count();
  const std::size_t m = std::max(a * (std::size_t{1} << b), b * (std::size_t{1} << a));
  return m * f.size() + 1;
}

// Every live prefix of the given length, by enumeration over all words.
inline std::vector<Word> live_prefixes(const Machine& m, std::size_t length) {
  std::vector<Word> out;
  Word w(length, 0);
  const std::size_t k = m.alphabet.size();
  while (true) {
    if (live_prefix(m, w)) out.push_back(w);
    std::size_t i = length;
    while (i > 0 && w[i - 1] + 1 == k) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

}  // namespace ref

// ---------------------------------------------------------------------------
// Random machines.

inline TimeSet random_guard(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<Time> small(0, 3);
  switch (kind(rng)) {
    case 0:
      return TimeSet::singleton(small(rng));
    case 1:
      return TimeSet::at_least(small(rng) + 1);
    case 2: {
      Time p = small(rng) % 2 + 2;
      std::vector<Time> res;
      for (Time r = 0; r < p; ++r)
        if (rng() % 2) res.push_back(r);
      if (res.empty()) res.push_back(0);
      return TimeSet::make({}, small(rng) % 2, p, res);
    }
    case 3:
      return TimeSet::make({0, 2}, 3, 1, {});
    default:
      return TimeSet::all();
  }
}

// Random machine with up to `max_states` states, not trimmed; `timed` adds
// guards to some transitions.
inline Machine random_raw_machine(std::mt19937& rng, std::size_t max_states, std::size_t max_symbols, bool timed) {
  std::uniform_int_distribution<std::size_t> ns(1, max_states), nk(1, max_symbols);
  const std::size_t n = ns(rng), k = nk(rng);
  std::vector<std::string> symbols;
  for (std::size_t i = 0; i < k; ++i) symbols.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::string> states;
  for (std::size_t i = 0; i < n; ++i) states.push_back("s" + std::to_string(i));
  std::vector<std::string> initial{states[rng() % n]};
  if (n > 1 && rng() % 3 == 0) initial.push_back(states[rng() % n]);
  std::vector<NamedTransition> trs;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const double density = 0.25 + 0.35 * coin(rng);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t y = 0; y < n; ++y)
        if (coin(rng) < density / static_cast<double>(std::max<std::size_t>(1, n / 2)))
          trs.push_back({states[x], symbols[a], states[y], timed && coin(rng) < 0.3 ? random_guard(rng) : TimeSet::all()});
  return make_machine(symbols, states, initial, trs);
}

inline Machine random_machine(std::mt19937& rng, std::size_t max_states, std::size_t max_symbols, bool timed) {
  return trim(random_raw_machine(rng, max_states, max_symbols, timed));
}

// Random trim machine with nonempty behavior.
inline Machine random_nonempty(std::mt19937& rng, std::size_t max_states, std::size_t max_symbols, bool timed) {
  while (true) {
    Machine m = random_machine(rng, max_states, max_symbols, timed);
    if (!m.initial.empty()) return m;
  }
}

// Strongly connected FSM with every state initial; σB = B holds.
inline Machine random_strict_invariant(std::mt19937& rng, std::size_t max_states, std::size_t max_symbols) {
  std::uniform_int_distribution<std::size_t> ns(1, max_states), nk(1, max_symbols);
  const std::size_t n = ns(rng), k = nk(rng);
  std::vector<std::string> symbols, states;
  for (std::size_t i = 0; i < k; ++i) symbols.push_back(std::string(1, static_cast<char>('a' + i)));
  for (std::size_t i = 0; i < n; ++i) states.push_back("s" + std::to_string(i));
  std::vector<NamedTransition> trs;
  for (std::size_t x = 0; x < n; ++x) trs.push_back({states[x], symbols[rng() % k], states[(x + 1) % n]});
  const std::size_t extra = rng() % (n + 2);
  for (std::size_t i = 0; i < extra; ++i) trs.push_back({states[rng() % n], symbols[rng() % k], states[rng() % n]});
  return make_machine(symbols, states, states, trs);
}

// Random lassos over the machine's alphabet plus a few lassos read off its
// own runs, so that members are well represented.
inline std::vector<Lasso> sample_lassos(std::mt19937& rng, const Machine& m, std::size_t count) {
  std::vector<Lasso> out;
  const std::size_t k = m.alphabet.size();
  for (std::size_t i = 0; i < count; ++i) {
    Word u(rng() % 4), v(rng() % 3 + 1);
    for (auto& s : u) s = static_cast<SymbolId>(rng() % k);
    for (auto& s : v) s = static_cast<SymbolId>(rng() % k);
    out.push_back(Lasso{u, v});
  }
  // members: walk the machine greedily from a random live prefix
  for (std::size_t i = 0; i < count && !m.initial.empty(); ++i) {
    Word u;
    for (std::size_t t = 0; t < 6; ++t) {
      std::vector<SymbolId> options;
      for (SymbolId s = 0; s < k; ++s) {
        Word w = u;
        w.push_back(s);
        if (is_live_prefix(m, w)) options.push_back(s);
      }
      if (options.empty()) break;
      u.push_back(options[rng() % options.size()]);
    }
    for (std::size_t cut = 1; cut <= u.size(); ++cut) {
      Lasso w{Word(u.begin(), u.end() - static_cast<std::ptrdiff_t>(cut)),
              Word(u.end() - static_cast<std::ptrdiff_t>(cut), u.end())};
      if (ref::member(m, w)) {
        out.push_back(w);
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Property checks. Each returns a list of failure descriptions.

using Failures = std::vector<std::string>;

inline std::string describe(const Machine& m) { return serialize_machine(m); }

// A failed verdict must come with w in small and not in big, by the library
// and by the reference membership.
inline void check_witness(Failures& out, const std::string& what, const Machine& big, const Machine& small,
                          const Verdict& v) {
  if (v.holds) return;
  if (!v.witness) {
    out.push_back(what + ": false verdict without witness");
    return;
  }
  const Lasso& w = *v.witness;
  if (!lasso_member(small, w) || lasso_member(big, w) || !ref::member(small, w) || ref::member(big, w))
    out.push_back(what + ": invalid witness " + spell(small.alphabet, w));
}

inline Verdict checked_includes(Failures& out, const std::string& what, const Machine& big, const Machine& small) {
  Verdict v = includes(big, small);
  check_witness(out, what, big, small, v);
  return v;
}

inline Failures approximation_properties(const Machine& m, std::size_t l_max, std::mt19937& rng) {
  Failures out;
  std::vector<Machine> sync, async;
  for (std::size_t l = 0; l <= l_max + 1; ++l) {
    sync.push_back(strongest_sync(m, l));
    async.push_back(strongest_async(m, l));
  }
  const auto lassos = sample_lassos(rng, m, 6);
  for (std::size_t l = 0; l <= l_max; ++l) {
    const std::string tag = " l=" + std::to_string(l);
    // soundness B ⊆ B^l-sync ⊆ B^l-async
    if (!checked_includes(out, "B ⊆ sync" + tag, sync[l], m).holds) out.push_back("B ⊄ sync" + tag);
    if (!checked_includes(out, "sync ⊆ async" + tag, async[l], sync[l]).holds) out.push_back("sync ⊄ async" + tag);
    for (const auto& w : lassos)
      if (ref::member(m, w) && (!ref::member(sync[l], w) || !ref::member(async[l], w)))
        out.push_back("member lost by an approximation" + tag);
    // monotonicity in l
    if (!checked_includes(out, "sync mono" + tag, sync[l], sync[l + 1]).holds) out.push_back("sync not monotone" + tag);
    if (!checked_includes(out, "async mono" + tag, async[l], async[l + 1]).holds)
      out.push_back("async not monotone" + tag);
    // async ⇒ sync verdicts, witness validity of the completeness checks
    const auto rs = is_sync_l_complete(m, l);
    const auto ra = is_async_l_complete(m, l);
    if (ra.holds && !rs.holds) out.push_back("async complete but not sync complete" + tag);
    for (const auto* r : {&rs, &ra}) {
      if (r->holds) continue;
      const Machine& approx = r->kind == Completeness::sync ? sync[l] : async[l];
      if (!r->witness || !ref::member(approx, *r->witness) || ref::member(m, *r->witness))
        out.push_back(std::string("bad completeness witness ") + to_string(r->kind) + tag);
    }
    // idempotence of the asynchronous construction
    const Verdict idem = equivalent(async[l], strongest_async(async[l], l));
    if (!idem.holds) out.push_back("async not idempotent" + tag);
  }
  return out;
}

// includes() against the layered reference comparison up to the pumping
// bound; also checks that the witness prefix has the shortest possible
// length.
inline Failures inclusion_oracle(const Machine& big, const Machine& small) {
  Failures out;
  const Verdict v = includes(big, small);
  check_witness(out, "includes", big, small, v);
  const long gap = ref::first_gap(big, small, ref::pumping_bound(big, small));
  if (v.holds != (gap < 0)) {
    out.push_back("includes disagrees with the reference comparison");
    return out;
  }
  if (!v.holds) {
    // the witness leaves big exactly at the first gap
    Word u;
    for (std::size_t t = 0; t < static_cast<std::size_t>(gap); ++t) u.push_back(v.witness->at(t));
    if (!ref::live_prefix(small, u) || ref::live_prefix(big, u))
      out.push_back("witness does not leave big at the shortest distinguishing length");
  }
  return out;
}

inline Failures strict_invariance_properties(const Machine& m, std::size_t l_max) {
  Failures out;
  if (!is_strictly_time_invariant(m).holds) out.push_back("generated machine is not strictly time invariant");
  for (std::size_t l = 0; l <= l_max; ++l) {
    const Verdict v = equivalent(strongest_sync(m, l), strongest_async(m, l));
    if (!v.holds) out.push_back("sync and async differ at l=" + std::to_string(l));
  }
  return out;
}

}  // namespace alca::testing
