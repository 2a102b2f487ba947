#pragma once

#include <string>
#include <vector>

#include "alca/errors.hpp"
#include "alca/machine.hpp"
#include "alca/timeset.hpp"

namespace alca {

// Reference machines of the running example, shipped with the library.
struct Fixture {
  std::string name;
  Machine machine;
  std::string provenance;
};

namespace detail {

inline Machine fig5_machine() {
  return make_machine({"a", "b"}, {"λ", "a", "b", "aa", "ab", "ba", "aaa", "aab", "aba", "baa"}, {"λ"},
                      {{"λ", "a", "a"},
                       {"λ", "b", "b"},
                       {"a", "a", "aa"},
                       {"a", "b", "ab"},
                       {"b", "a", "ba"},
                       {"aa", "a", "aaa"},
                       {"aa", "b", "aab"},
                       {"ab", "a", "aba"},
                       {"ba", "a", "baa"},
                       {"aaa", "b", "aab"},
                       {"aab", "a", "aba"},
                       {"aba", "a", "baa"},
                       {"baa", "b", "aab"}});
}

inline Machine window1_machine() {
  return make_machine({"a", "b"}, {"λ", "a", "b"}, {"λ"},
                      {{"λ", "a", "a"}, {"λ", "b", "b"}, {"a", "a", "a"}, {"a", "b", "b"}, {"b", "a", "a"}});
}

inline Machine window2_machine(TimeSet aa_loop) {
  return make_machine({"a", "b"}, {"λ", "a", "b", "aa", "ab", "ba"}, {"λ"},
                      {{"λ", "a", "a"},
                       {"λ", "b", "b"},
                       {"a", "a", "aa"},
                       {"a", "b", "ab"},
                       {"b", "a", "ba"},
                       {"aa", "a", "aa", std::move(aa_loop)},
                       {"aa", "b", "ab"},
                       {"ab", "a", "ba"},
                       {"ba", "a", "aa"}});
}

}  // namespace detail

inline std::vector<Fixture> fixtures() {
  using namespace detail;
  return {
      {"fig5", fig5_machine(),
       "FSM realizing B = {aaab(aab)^w, aab(aab)^w, ab(aab)^w, b(aab)^w} of the running example"},
      {"q1", window1_machine(), "tFSM Q1, strongest synchronous 1-complete approximation (all guards trivial)"},
      {"q2", window2_machine(TimeSet::singleton(2)),
       "tFSM Q2, strongest synchronous 2-complete approximation; aa self-loop enabled at transition time 2"},
      {"fig6-left", window1_machine(), "FSM of the strongest asynchronous 1-complete approximation"},
      {"fig6-right", window2_machine(TimeSet::all()), "FSM of the strongest asynchronous 2-complete approximation"},
      {"example5-p", make_machine({"a", "b"}, {"xi1", "xi2"}, {"xi1"}, {{"xi1", "a", "xi2"}, {"xi2", "b", "xi2"}}),
       "FSM P with behavior {ab^w} (time variant)"},
      {"example5-q",
       make_machine({"a", "b"}, {"xi"}, {"xi"}, {{"xi", "a", "xi", TimeSet::singleton(0)}, {"xi", "b", "xi"}}),
       "tFSM Q with behavior {ab^w, b^w} (time invariant)"},
  };
}

inline Fixture fixture(const std::string& name) {
  for (auto& f : fixtures())
    if (f.name == name) return f;
  throw Error("unknown fixture '" + name + "'");
}

}  // namespace alca
