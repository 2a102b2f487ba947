#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "alca/errors.hpp"

namespace alca {

using Time = std::uint64_t;

// Eventually periodic sequence t -> value over the time axis.
//
// Values for t < from live in `prefix`; for t >= from the value is
// cycle[(t - from) % period]. Instances built through canonical() carry the
// minimal period and, for that period, the minimal threshold.
template <typename T>
struct EventuallyPeriodic {
  std::vector<T> prefix;
  Time from = 0;
  Time period = 1;
  std::vector<T> cycle;

  typename std::vector<T>::const_reference at(Time t) const {
    if (t < from) return prefix[static_cast<std::size_t>(t)];
    return cycle[static_cast<std::size_t>((t - from) % period)];
  }

  // `values` holds the sequence for t in [0, from + period) and is known to
  // repeat with `period` from `from` on.
  static EventuallyPeriodic canonical(std::vector<T> values, Time from, Time period) {
    if (period == 0) throw Error("EventuallyPeriodic: period must be positive");
    if (values.size() < from + period) throw Error("EventuallyPeriodic: too few values");
    values.resize(static_cast<std::size_t>(from + period));

    Time best = period;
    for (Time d = 1; d < period; ++d) {
      if (period % d != 0) continue;
      bool ok = true;
      for (Time i = d; i < period && ok; ++i) ok = values[from + i] == values[from + i % d];
      if (ok) {
        best = d;
        break;
      }
    }
    // shrink the threshold while the value just before it repeats one period later
    while (from > 0 && values[from - 1] == values[from - 1 + best]) --from;

    EventuallyPeriodic out;
    out.from = from;
    out.period = best;
    out.prefix.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(from));
    out.cycle.assign(values.begin() + static_cast<std::ptrdiff_t>(from),
                     values.begin() + static_cast<std::ptrdiff_t>(from + best));
    return out;
  }

  // Every distinct value the sequence takes.
  template <typename F>
  void for_each_value(F&& f) const {
    for (const auto& v : prefix) f(v);
    for (const auto& v : cycle) f(v);
  }

  friend bool operator==(const EventuallyPeriodic&, const EventuallyPeriodic&) = default;
};

// Eventually periodic subset of the naturals, kept in canonical form.
//
// t is a member iff t is in explicit_times, or t >= from and
// (t - from) % period is one of the residues.
class TimeSet {
 public:
  TimeSet() = default;  // empty set

  // Validates the raw fields and returns the canonical equivalent.
  static TimeSet make(std::vector<Time> explicit_times, Time from, Time period,
                      std::vector<Time> residues) {
    if (period == 0) throw SchemaError("time set: period must be positive");
    for (Time e : explicit_times)
      if (e >= from)
        throw SchemaError("time set: explicit time " + std::to_string(e) +
                          " is not below from=" + std::to_string(from));
    for (Time r : residues)
      if (r >= period)
        throw SchemaError("time set: residue " + std::to_string(r) + " is not below period=" +
                          std::to_string(period));
    TimeSet raw;
    std::sort(explicit_times.begin(), explicit_times.end());
    explicit_times.erase(std::unique(explicit_times.begin(), explicit_times.end()),
                         explicit_times.end());
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    raw.explicit_ = std::move(explicit_times);
    raw.from_ = from;
    raw.period_ = period;
    raw.residues_ = std::move(residues);
    return from_predicate(from, period, [&](Time t) { return raw.contains(t); });
  }

  static TimeSet all() { return make({}, 0, 1, {0}); }
  static TimeSet none() { return TimeSet{}; }
  static TimeSet singleton(Time t) { return make({t}, t + 1, 1, {}); }
  static TimeSet at_least(Time t) { return make({}, t, 1, {0}); }

  // Builds the set from a membership predicate known to be periodic with
  // `period` from `from` on.
  template <typename Pred>
  static TimeSet from_predicate(Time from, Time period, Pred&& member) {
    std::vector<bool> bits(static_cast<std::size_t>(from + period));
    for (Time t = 0; t < from + period; ++t) bits[t] = member(t);
    return from_sequence(EventuallyPeriodic<bool>::canonical(std::move(bits), from, period));
  }

  static TimeSet from_sequence(const EventuallyPeriodic<bool>& seq) {
    TimeSet out;
    out.from_ = seq.from;
    out.period_ = seq.period;
    for (Time t = 0; t < seq.from; ++t)
      if (seq.prefix[t]) out.explicit_.push_back(t);
    for (Time r = 0; r < seq.period; ++r)
      if (seq.cycle[r]) out.residues_.push_back(r);
    return out;
  }

  bool contains(Time t) const {
    if (t < from_) return std::binary_search(explicit_.begin(), explicit_.end(), t);
    return std::binary_search(residues_.begin(), residues_.end(), (t - from_) % period_);
  }

  const std::vector<Time>& explicit_times() const { return explicit_; }
  Time from() const { return from_; }
  Time period() const { return period_; }
  const std::vector<Time>& residues() const { return residues_; }

  bool is_all() const { return explicit_.empty() && from_ == 0 && residues_.size() == 1; }
  bool is_empty() const { return explicit_.empty() && residues_.empty(); }
  bool is_finite() const { return residues_.empty(); }

  TimeSet unite(const TimeSet& o) const {
    auto [h, p] = common_clock(o);
    return from_predicate(h, p, [&](Time t) { return contains(t) || o.contains(t); });
  }

  TimeSet intersect(const TimeSet& o) const {
    auto [h, p] = common_clock(o);
    return from_predicate(h, p, [&](Time t) { return contains(t) && o.contains(t); });
  }

  TimeSet complement() const {
    return from_predicate(from_, period_, [&](Time t) { return !contains(t); });
  }

  bool includes(const TimeSet& o) const { return o.intersect(complement()).is_empty(); }

  // {t : t + k in this}
  TimeSet shift_down(Time k = 1) const {
    Time h = from_ > k ? from_ - k : 0;
    return from_predicate(h, period_, [&](Time t) { return contains(t + k); });
  }

  // {t : t >= k and t - k in this}
  TimeSet shift_up(Time k) const {
    return from_predicate(from_ + k, period_, [&](Time t) { return t >= k && contains(t - k); });
  }

  // Human-readable rendering used in DOT labels and messages.
  std::string to_string() const {
    if (is_all()) return "all";
    if (is_empty()) return "{}";
    std::ostringstream os;
    bool first_part = true;
    if (!explicit_.empty()) {
      os << '{';
      for (std::size_t i = 0; i < explicit_.size(); ++i) os << (i ? "," : "") << explicit_[i];
      os << '}';
      first_part = false;
    }
    if (!residues_.empty()) {
      if (!first_part) os << " + ";
      if (period_ == 1) {
        os << "t>=" << from_;
      } else {
        os << "{t>=" << from_ << ": (t-" << from_ << ")%" << period_ << " in {";
        for (std::size_t i = 0; i < residues_.size(); ++i) os << (i ? "," : "") << residues_[i];
        os << "}}";
      }
    }
    return os.str();
  }

  friend bool operator==(const TimeSet&, const TimeSet&) = default;

 private:
  std::pair<Time, Time> common_clock(const TimeSet& o) const {
    return {std::max(from_, o.from_), std::lcm(period_, o.period_)};
  }

  std::vector<Time> explicit_;
  Time from_ = 0;
  Time period_ = 1;
  std::vector<Time> residues_;
};

}  // namespace alca
