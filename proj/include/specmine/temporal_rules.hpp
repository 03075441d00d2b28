#pragma once

#include <set>
#include <string>

#include "specmine/traces.hpp"

namespace specmine {

enum class RuleKind { future, past };

/// future a -> b: every a is eventually followed by b.
/// past   a <- b: every b is preceded by an earlier a.
struct TemporalRule {
  RuleKind kind;
  std::string antecedent;
  std::string consequent;

  friend auto operator<=>(const TemporalRule&, const TemporalRule&) = default;
};

/// Every rule over the corpus alphabet that holds on every trace.
std::set<TemporalRule> mine_temporal_rules(const TraceSet& traces);

/// "a -> b" or "a <- b".
std::string to_string(const TemporalRule& rule);

/// One rule per line, sorted by their text.
std::string serialize_rules(const std::set<TemporalRule>& rules);

}  // namespace specmine
