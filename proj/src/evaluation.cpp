#include "specmine/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <map>
#include <sstream>

#include "specmine/automata.hpp"
#include "specmine/error.hpp"

namespace specmine {

namespace {

void check_limit(int visit_limit) {
  if (visit_limit < 1) throw ConfigError("visit limit must be at least 1");
}

std::vector<StateId> path_states(const Fsa& dfa, const OpSeq& word) {
  std::vector<StateId> states{dfa.initial()};
  for (const auto& op : word) states.push_back(*dfa.step(states.back(), op));
  return states;
}

std::string fixed(double v, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << v;
  return os.str();
}

}  // namespace

CoverageStrategy parse_strategy(std::string_view text) {
  if (text == "path") return CoverageStrategy::path;
  if (text == "state") return CoverageStrategy::state;
  throw ConfigError("unknown coverage strategy '" + std::string(text) + "'");
}

TraceSet generate_traces(const Fsa& model, CoverageStrategy strategy, int visit_limit) {
  check_limit(visit_limit);
  const Fsa dfa = model.deterministic() ? model : determinize(model);
  BehaviorSet all = enumerate_behaviors(dfa, visit_limit);
  // a trace is never empty
  std::erase_if(all.traces, [](const OpSeq& w) { return w.empty(); });
  if (all.traces.empty()) throw ConfigError("model has no reachable accepting state");

  TraceSet out;
  if (strategy == CoverageStrategy::path) {
    for (const auto& w : all.traces) out.insert(Trace(w));
    return out;
  }

  std::vector<std::pair<const OpSeq*, std::set<StateId>>> candidates;
  std::set<StateId> uncovered;
  for (const auto& w : all.traces) {
    const auto states = path_states(dfa, w);
    std::set<StateId> visited(states.begin(), states.end());
    uncovered.insert(visited.begin(), visited.end());
    candidates.emplace_back(&w, std::move(visited));
  }
  // Greedy set cover; ties go to the lexicographically first behavior.
  while (!uncovered.empty()) {
    std::size_t best = 0, best_gain = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      std::size_t gain = 0;
      for (StateId s : candidates[i].second) gain += uncovered.contains(s);
      if (gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    for (StateId s : candidates[best].second) uncovered.erase(s);
    out.insert(Trace(*candidates[best].first));
  }
  return out;
}

TraceSet generate_traces(const GroundTruthModel& model, CoverageStrategy strategy,
                         int visit_limit) {
  return generate_traces(model.model, strategy, visit_limit);
}

std::string Ratio::str() const { return fixed(value(), 3); }

EvalReport precision_recall(const Fsa& mined, const Fsa& truth, int visit_limit,
                            double elapsed_ms) {
  check_limit(visit_limit);
  EvalReport r;
  r.elapsed_ms = elapsed_ms;
  r.mined_states = mined.num_states();
  r.mined_transitions = mined.num_transitions();
  r.visit_limit = visit_limit;

  if (mined.deterministic() && truth.deterministic()) {
    const Fsa* m[] = {&mined};
    const Fsa* g[] = {&truth};
    const Fsa* both[] = {&mined, &truth};
    r.mined_behaviors = count_bounded_behaviors(m, visit_limit);
    r.truth_behaviors = count_bounded_behaviors(g, visit_limit);
    r.common_behaviors = count_bounded_behaviors(both, visit_limit);
  } else {
    const BehaviorSet bm = enumerate_behaviors(mined, visit_limit);
    const BehaviorSet bg = enumerate_behaviors(truth, visit_limit);
    r.mined_behaviors = bm.size();
    r.truth_behaviors = bg.size();
    for (const auto& w : bm.traces) r.common_behaviors += bg.contains(w);
  }

  if (r.mined_behaviors == 0) {
    r.empty_mined = true;
    r.precision = {1, 1};
  } else {
    r.precision = {r.common_behaviors, r.mined_behaviors};
  }
  r.recall = r.truth_behaviors == 0 ? Ratio{1, 1} : Ratio{r.common_behaviors, r.truth_behaviors};
  return r;
}

EvalReport precision_recall(const Fsa& mined, const GroundTruthModel& truth, int visit_limit,
                            double elapsed_ms) {
  return precision_recall(mined, truth.model, visit_limit, elapsed_ms);
}

std::vector<OpSeq> spurious_behaviors(const Fsa& mined, const Fsa& truth, int visit_limit,
                                      std::size_t max_count) {
  check_limit(visit_limit);
  std::set<OpSeq> found;
  for_each_bounded_path(mined, visit_limit, [&](const OpSeq& w) {
    if (!accepts_within(truth, w, visit_limit)) found.insert(w);
    return true;
  });
  std::vector<OpSeq> out(found.begin(), found.end());
  if (out.size() > max_count) out.resize(max_count);
  return out;
}

std::string to_csv(std::span<const EvalRow> rows) {
  std::string out = "name,algorithm,params,P,R,elapsed_ms,states,transitions\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    out += row.name + ',' + row.algorithm + ',' + row.params + ',' + r.precision.str() + ',' +
           r.recall.str() + ',' + fixed(r.elapsed_ms, 3) + ',' + std::to_string(r.mined_states) +
           ',' + std::to_string(r.mined_transitions) + '\n';
  }
  return out;
}

std::string to_table(std::span<const EvalRow> rows) {
  std::size_t wn = 5, wa = 9;
  for (const auto& row : rows) {
    wn = std::max(wn, row.name.size());
    wa = std::max(wa, row.algorithm.size() + 1 + row.params.size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(wn)) << "model" << "  "
     << std::setw(static_cast<int>(wa)) << "algorithm" << "  " << std::right << std::setw(5)
     << "P" << "  " << std::setw(5) << "R" << "  " << std::setw(10) << "T(ms)" << "  "
     << std::setw(6) << "states" << '\n';
  for (const auto& row : rows) {
    const auto& r = row.report;
    const std::string algo = row.params.empty() ? row.algorithm : row.algorithm + ' ' + row.params;
    os << std::left << std::setw(static_cast<int>(wn)) << row.name << "  "
       << std::setw(static_cast<int>(wa)) << algo << "  " << std::right << std::setw(5)
       << r.precision.str() << "  " << std::setw(5) << r.recall.str() << "  " << std::setw(10)
       << fixed(r.elapsed_ms, 3) << "  " << std::setw(6) << r.mined_states
       << (r.empty_mined ? "  (no mined behaviors)" : "") << '\n';
  }
  return os.str();
}

}  // namespace specmine
