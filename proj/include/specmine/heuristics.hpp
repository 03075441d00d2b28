#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>

#include "specmine/fsa.hpp"
#include "specmine/traces.hpp"

namespace specmine {

/// Answers whether a representative trace was observed.
using SupportOracle = std::function<bool(std::span<const std::string>)>;

/// Exact-sequence membership in `corpus`.
SupportOracle corpus_support(const TraceSet& corpus);

/// seq = prefix . unit^full_repeats . unit[0, partial_len) . suffix
struct CycleEvidence {
  std::size_t start_index = 0;
  OpSeq unit;
  std::size_t full_repeats = 0;
  std::size_t partial_len = 0;
  OpSeq prefix;
  OpSeq suffix;

  std::size_t consumed() const noexcept { return unit.size() * full_repeats + partial_len; }
  friend bool operator==(const CycleEvidence&, const CycleEvidence&) = default;
};

/// seq = prefix . op^bt . suffix, with `st` the count in the chosen supportive
/// trace (0 until loop_generalize picks one).
struct LoopEvidence {
  std::string op;
  std::size_t bt = 0;
  std::size_t st = 0;
  OpSeq prefix;
  OpSeq suffix;

  friend bool operator==(const LoopEvidence&, const LoopEvidence&) = default;
};

using RepeatEvidence = std::variant<CycleEvidence, LoopEvidence>;

/// Longest primitive unit (length >= 2) starting at `index` that repeats
/// consecutively at least `rc` times. A unit that is itself a power of a
/// shorter word is skipped so that a^4 reads as a loop, not (aa)^2.
std::optional<CycleEvidence> find_cycle_evidence(std::span<const std::string> seq,
                                                 std::size_t index, int rc);

/// Maximal run of seq[index] starting at index, if it is at least `rc` long.
std::optional<LoopEvidence> find_loop_evidence(std::span<const std::string> seq,
                                               std::size_t index, int rc);

/// Cycle evidence if any, otherwise loop evidence, otherwise nothing.
std::optional<RepeatEvidence> find_tandem_repeat(std::span<const std::string> seq,
                                                 std::size_t index, int rc);

/// How a loop is generalized: `mandatory_count` plain transitions of the loop
/// operation followed by a self-loop on it.
struct LoopGeneralization {
  std::size_t mandatory_count = 0;
  bool loop = true;

  friend bool operator==(const LoopGeneralization&, const LoopGeneralization&) = default;
};

/// Tries supportive traces prefix . op^st . suffix for st = 0, 1, ... while
/// bt - st >= rc and returns the first one observed. Empty when no
/// supportive trace exists, meaning the run stays a plain sequence.
std::optional<LoopGeneralization> loop_generalize(const LoopEvidence& evidence,
                                                  const SupportOracle& support, int rc);
std::optional<LoopGeneralization> loop_generalize(const LoopEvidence& evidence,
                                                  const TraceSet& corpus, int rc);

/// { prefix . w . suffix : w in loop_ops^i, 0 <= i <= rc }; its size is
/// sum_{i=0}^{rc} l^i for l = |loop_ops|. Every member must be observed
/// before a second loop is placed on the same state.
std::set<OpSeq> multiloop_rep_traces(std::span<const std::string> prefix,
                                     const std::set<std::string>& loop_ops,
                                     std::span<const std::string> suffix, int rc);

/// The shape chosen for supported cycle evidence. The ring is entered after
/// `mandatory_passes` plain traversals of the unit, and the rest of the trace
/// leaves the ring from the state `exit_offset` steps in.
struct CycleShape {
  std::size_t mandatory_passes = 0;
  std::size_t exit_offset = 0;

  friend bool operator==(const CycleShape&, const CycleShape&) = default;
};

/// Support check for cycle evidence. The representative trace is
/// prefix . unit[0, d) . suffix. For 2-cycles, when that trace is missing,
/// prefix . unit . unit[0, d) . suffix selects the shape with one mandatory
/// traversal.
std::optional<CycleShape> cycle_shape(const CycleEvidence& evidence,
                                      const SupportOracle& support);

struct CycleFragment {
  CycleShape shape;
  Fsa fsa;  ///< prefix path, ring over the unit, suffix path leaving the ring
};

std::optional<CycleFragment> cycle_generalize(const CycleEvidence& evidence,
                                              const TraceSet& corpus, int rc);

}  // namespace specmine
