#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>

#include "specmine/fsa.hpp"

namespace specmine {

/// True iff some path from the initial state to an accepting state spells
/// `word`. EMPTY edges are traversed freely; unknown operations reject.
bool accepts(const Fsa& fsa, std::span<const std::string> word);

/// Fresh initial state with one EMPTY edge into each input's initial state.
/// The result alphabet is the union of input alphabets. Throws ConfigError on
/// an empty list.
Fsa epsilon_union(std::span<const Fsa> models);

/// Rabin-Scott subset construction over reachable subsets, EMPTY-closed.
Fsa determinize(const Fsa& nfa);

/// Hopcroft partition refinement on the reachable part, completed with a dead
/// sink that is stripped again afterwards. Throws ConfigError unless
/// `dfa.deterministic()`.
Fsa minimize(const Fsa& dfa);

/// Copy restricted to states reachable from the initial state, renamed
/// q0, q1, ... in breadth-first order (edges visited by label, then target).
Fsa renumber_bfs(const Fsa& fsa);

/// The exact, finite set of words spelled by accepting paths that use no
/// transition more than `visit_limit` times. Sorted lexicographically.
struct BehaviorSet {
  std::set<OpSeq> traces;
  int visit_limit = 0;

  bool contains(const OpSeq& w) const { return traces.contains(w); }
  std::size_t size() const noexcept { return traces.size(); }
};

BehaviorSet enumerate_behaviors(const Fsa& fsa, int visit_limit);

/// Calls `visit` for every accepting path (words may repeat in NFAs) under the
/// per-transition bound. Returning false from `visit` stops the walk.
void for_each_bounded_path(const Fsa& fsa, int visit_limit,
                           const std::function<bool(const OpSeq&)>& visit);

/// Membership in enumerate_behaviors(fsa, visit_limit) without enumerating.
bool accepts_within(const Fsa& fsa, std::span<const std::string> word, int visit_limit);

/// Number of words in the intersection of the bounded behavior sets of the
/// given deterministic automata (one automaton: the size of its set). Uses
/// memoized counting over (states, usage vectors), so it scales to behavior
/// sets far too large to materialize. Throws ConfigError for non-DFA input and
/// Error on 64-bit overflow.
std::uint64_t count_bounded_behaviors(std::span<const Fsa* const> dfas, int visit_limit);

}  // namespace specmine
