#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "alca/approx.hpp"
#include "alca/behavior.hpp"
#include "alca/machine.hpp"

namespace alca {

enum class Completeness { sync, async };

inline const char* to_string(Completeness k) { return k == Completeness::sync ? "sync" : "async"; }

struct CompletenessReport {
  Completeness kind = Completeness::sync;
  std::size_t l = 0;
  bool holds = false;
  std::optional<Lasso> witness;  // in the approximation but not the behavior
  std::size_t approximation_state_count = 0;
  std::string note;
};

inline Machine strongest(const Machine& m, std::size_t l, Completeness kind) {
  return kind == Completeness::sync ? strongest_sync(m, l) : strongest_async(m, l);
}

namespace detail {

inline CompletenessReport completeness(const Machine& m, std::size_t l, Completeness kind,
                                       InclusionOptions opt) {
  const Machine approx = strongest(m, l, kind);
  // approximation ⊆ behavior is checked first, so a witness comes from B^l \ B
  const Verdict v = equivalent(m, approx, opt);
  CompletenessReport r;
  r.kind = kind;
  r.l = l;
  r.holds = v.holds;
  r.witness = v.witness;
  r.approximation_state_count = approx.state_count();
  r.note = v.note;
  return r;
}

}  // namespace detail

// B equals its strongest synchronous l-complete approximation.
inline CompletenessReport is_sync_l_complete(const Machine& m, std::size_t l, InclusionOptions opt = {}) {
  return detail::completeness(m, l, Completeness::sync, opt);
}

// B equals its strongest asynchronous l-complete approximation.
inline CompletenessReport is_async_l_complete(const Machine& m, std::size_t l, InclusionOptions opt = {}) {
  return detail::completeness(m, l, Completeness::async, opt);
}

inline CompletenessReport is_l_complete(const Machine& m, std::size_t l, Completeness kind,
                                        InclusionOptions opt = {}) {
  return detail::completeness(m, l, kind, opt);
}

// Least l <= l_max for which the check holds.
inline std::optional<std::size_t> minimal_l(const Machine& m, Completeness kind, std::size_t l_max,
                                            InclusionOptions opt = {}) {
  for (std::size_t l = 0; l <= l_max; ++l)
    if (detail::completeness(m, l, kind, opt).holds) return l;
  return std::nullopt;
}

// Memory span l. Machine behaviors are limit-closed (complete), and for
// complete behaviors memory span l coincides with l-completeness, so the
// verdict is that of the completeness check.
inline CompletenessReport memory_span_report(const Machine& m, std::size_t l, Completeness kind,
                                             InclusionOptions opt = {}) {
  CompletenessReport r = detail::completeness(m, l, kind, opt);
  r.note = std::string("behavior is limit-closed, so ") +
           (kind == Completeness::sync ? "synchronous" : "asynchronous") + " memory span " +
           std::to_string(l) + " coincides with " + to_string(kind) + " " + std::to_string(l) +
           "-completeness" + (r.note.empty() ? "" : "; " + r.note);
  return r;
}

}  // namespace alca
