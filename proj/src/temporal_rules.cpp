#include "specmine/temporal_rules.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "specmine/error.hpp"

namespace specmine {

std::set<TemporalRule> mine_temporal_rules(const TraceSet& traces) {
  if (traces.empty()) throw ConfigError("cannot mine rules from an empty corpus");
  const std::vector<std::string> ops(traces.alphabet().begin(), traces.alphabet().end());
  const std::size_t n = ops.size();
  // future[a][b] / past[a][b] stay true while no trace violates a -> b / a <- b.
  std::vector<std::vector<bool>> future(n, std::vector<bool>(n, true));
  std::vector<std::vector<bool>> past(n, std::vector<bool>(n, true));

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[ops[i]] = i;

  for (const auto& t : traces) {
    std::vector<std::size_t> ids;
    for (const auto& op : t.ops()) ids.push_back(index.at(op));
    const std::size_t len = ids.size();

    // seen_after[i][b]: b occurs strictly after position i.
    std::vector<bool> after(n, false);
    for (std::size_t i = len; i-- > 0;) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!after[b]) future[ids[i]][b] = false;
      }
      after[ids[i]] = true;
    }
    std::vector<bool> before(n, false);
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t a = 0; a < n; ++a) {
        if (!before[a]) past[a][ids[i]] = false;
      }
      before[ids[i]] = true;
    }
  }

  std::set<TemporalRule> rules;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      if (future[a][b]) rules.insert({RuleKind::future, ops[a], ops[b]});
      if (past[a][b]) rules.insert({RuleKind::past, ops[a], ops[b]});
    }
  }
  return rules;
}

std::string to_string(const TemporalRule& rule) {
  return rule.antecedent + (rule.kind == RuleKind::future ? " -> " : " <- ") + rule.consequent;
}

std::string serialize_rules(const std::set<TemporalRule>& rules) {
  std::vector<std::string> lines;
  for (const auto& r : rules) lines.push_back(to_string(r));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace specmine
