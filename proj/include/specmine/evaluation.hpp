#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "specmine/fsa.hpp"
#include "specmine/models.hpp"
#include "specmine/traces.hpp"

namespace specmine {

enum class CoverageStrategy { path, state };

/// "path" or "state"; anything else throws ConfigError.
CoverageStrategy parse_strategy(std::string_view text);

/// path: every bounded behavior. state: a greedy minimum set of bounded
/// behaviors whose paths together visit every state that lies on some bounded
/// accepting path. Non-deterministic models are determinized first. Throws
/// ConfigError when visit_limit < 1 or no accepting state is reachable.
TraceSet generate_traces(const Fsa& model, CoverageStrategy strategy, int visit_limit);
TraceSet generate_traces(const GroundTruthModel& model, CoverageStrategy strategy,
                         int visit_limit);

struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_one() const noexcept { return num == den; }
  /// Three decimals.
  std::string str() const;
};

struct EvalReport {
  Ratio precision;
  Ratio recall;
  double elapsed_ms = 0.0;
  std::size_t mined_states = 0;
  std::size_t mined_transitions = 0;
  int visit_limit = 0;
  bool empty_mined = false;  ///< B_m was empty, precision set to 1

  std::uint64_t mined_behaviors = 0;
  std::uint64_t truth_behaviors = 0;
  std::uint64_t common_behaviors = 0;
};

/// Bounded behavior sets of both models under the same visit limit. When both
/// models are deterministic the sets are counted without materializing them.
EvalReport precision_recall(const Fsa& mined, const Fsa& truth, int visit_limit,
                            double elapsed_ms = 0.0);
EvalReport precision_recall(const Fsa& mined, const GroundTruthModel& truth, int visit_limit,
                            double elapsed_ms = 0.0);

/// Up to `max_count` behaviors of `mined` (lexicographic) that `truth` does
/// not produce under the visit limit.
std::vector<OpSeq> spurious_behaviors(const Fsa& mined, const Fsa& truth, int visit_limit,
                                      std::size_t max_count);

struct EvalRow {
  std::string name;
  std::string algorithm;
  std::string params;
  EvalReport report;
};

/// Header plus one line per row: name,algorithm,params,P,R,elapsed_ms,states,transitions
std::string to_csv(std::span<const EvalRow> rows);

/// Fixed-width table, one line per (model, algorithm).
std::string to_table(std::span<const EvalRow> rows);

}  // namespace specmine
