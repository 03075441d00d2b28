#include "specmine/heuristics.hpp"

#include <algorithm>

#include "specmine/automata.hpp"
#include "specmine/error.hpp"

namespace specmine {

namespace {

bool is_primitive(std::span<const std::string> unit) {
  const std::size_t n = unit.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = unit[i] == unit[i - p];
    if (periodic) return false;
  }
  return true;
}

OpSeq concat(std::initializer_list<std::span<const std::string>> parts) {
  OpSeq out;
  for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

StateId append_path(Fsa& fsa, StateId from, std::span<const std::string> ops) {
  for (const auto& op : ops) {
    const StateId next = fsa.add_state();
    fsa.add_transition(from, op, next);
    from = next;
  }
  return from;
}

}  // namespace

SupportOracle corpus_support(const TraceSet& corpus) {
  return [&corpus](std::span<const std::string> w) { return corpus.contains(w); };
}

std::optional<CycleEvidence> find_cycle_evidence(std::span<const std::string> seq,
                                                 std::size_t index, int rc) {
  if (rc < 2) throw ConfigError("repeat count must be at least 2");
  if (index >= seq.size()) return std::nullopt;
  const std::size_t reps_needed = static_cast<std::size_t>(rc);
  const std::size_t rest = seq.size() - index;
  for (std::size_t len = rest / reps_needed; len >= 2; --len) {
    const auto unit = seq.subspan(index, len);
    std::size_t reps = 1;
    while (index + (reps + 1) * len <= seq.size() &&
           std::equal(unit.begin(), unit.end(), seq.begin() + index + reps * len)) {
      ++reps;
    }
    if (reps < reps_needed || !is_primitive(unit)) continue;
    const std::size_t tail = index + reps * len;
    std::size_t partial = 0;
    while (partial + 1 < len && tail + partial < seq.size() && seq[tail + partial] == unit[partial]) {
      ++partial;
    }
    CycleEvidence ev;
    ev.start_index = index;
    ev.unit.assign(unit.begin(), unit.end());
    ev.full_repeats = reps;
    ev.partial_len = partial;
    ev.prefix.assign(seq.begin(), seq.begin() + index);
    ev.suffix.assign(seq.begin() + tail + partial, seq.end());
    return ev;
  }
  return std::nullopt;
}

std::optional<LoopEvidence> find_loop_evidence(std::span<const std::string> seq,
                                               std::size_t index, int rc) {
  if (rc < 2) throw ConfigError("repeat count must be at least 2");
  if (index >= seq.size()) return std::nullopt;
  std::size_t end = index;
  while (end < seq.size() && seq[end] == seq[index]) ++end;
  if (end - index < static_cast<std::size_t>(rc)) return std::nullopt;
  LoopEvidence ev;
  ev.op = seq[index];
  ev.bt = end - index;
  ev.prefix.assign(seq.begin(), seq.begin() + index);
  ev.suffix.assign(seq.begin() + end, seq.end());
  return ev;
}

std::optional<RepeatEvidence> find_tandem_repeat(std::span<const std::string> seq,
                                                 std::size_t index, int rc) {
  if (auto c = find_cycle_evidence(seq, index, rc)) return RepeatEvidence{std::move(*c)};
  if (auto l = find_loop_evidence(seq, index, rc)) return RepeatEvidence{std::move(*l)};
  return std::nullopt;
}

std::optional<LoopGeneralization> loop_generalize(const LoopEvidence& evidence,
                                                  const SupportOracle& support, int rc) {
  if (rc < 2) throw ConfigError("repeat count must be at least 2");
  const std::size_t need = static_cast<std::size_t>(rc);
  for (std::size_t st = 0; st <= evidence.bt && evidence.bt - st >= need; ++st) {
    OpSeq candidate = evidence.prefix;
    candidate.insert(candidate.end(), st, evidence.op);
    candidate.insert(candidate.end(), evidence.suffix.begin(), evidence.suffix.end());
    if (support(candidate)) return LoopGeneralization{st, true};
  }
  return std::nullopt;
}

std::optional<LoopGeneralization> loop_generalize(const LoopEvidence& evidence,
                                                  const TraceSet& corpus, int rc) {
  return loop_generalize(evidence, corpus_support(corpus), rc);
}

std::set<OpSeq> multiloop_rep_traces(std::span<const std::string> prefix,
                                     const std::set<std::string>& loop_ops,
                                     std::span<const std::string> suffix, int rc) {
  if (rc < 2) throw ConfigError("repeat count must be at least 2");
  std::set<OpSeq> out;
  std::vector<OpSeq> level{OpSeq{}};
  for (int i = 0; i <= rc; ++i) {
    for (const auto& w : level) out.insert(concat({prefix, w, suffix}));
    std::vector<OpSeq> next;
    for (const auto& w : level) {
      for (const auto& op : loop_ops) {
        OpSeq longer = w;
        longer.push_back(op);
        next.push_back(std::move(longer));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::optional<CycleShape> cycle_shape(const CycleEvidence& evidence,
                                      const SupportOracle& support) {
  const std::span<const std::string> unit = evidence.unit;
  const auto partial = unit.first(evidence.partial_len);
  if (support(concat({evidence.prefix, partial, evidence.suffix}))) {
    return CycleShape{0, evidence.partial_len};
  }
  if (unit.size() == 2 && support(concat({evidence.prefix, unit, partial, evidence.suffix}))) {
    return CycleShape{1, evidence.partial_len};
  }
  return std::nullopt;
}

std::optional<CycleFragment> cycle_generalize(const CycleEvidence& evidence,
                                              const TraceSet& corpus, int rc) {
  if (rc < 2) throw ConfigError("repeat count must be at least 2");
  if (evidence.unit.size() < 2 || evidence.full_repeats < static_cast<std::size_t>(rc)) {
    return std::nullopt;
  }
  auto shape = cycle_shape(evidence, corpus_support(corpus));
  if (!shape) return std::nullopt;

  Fsa fsa;
  StateId s = append_path(fsa, fsa.add_state(), evidence.prefix);
  for (std::size_t i = 0; i < shape->mandatory_passes; ++i) s = append_path(fsa, s, evidence.unit);
  std::vector<StateId> ring{s};
  for (std::size_t i = 0; i + 1 < evidence.unit.size(); ++i) {
    ring.push_back(fsa.add_state());
    fsa.add_transition(ring[i], evidence.unit[i], ring[i + 1]);
  }
  fsa.add_transition(ring.back(), evidence.unit.back(), ring.front());
  const StateId end = append_path(fsa, ring[shape->exit_offset], evidence.suffix);
  fsa.set_accepting(end);
  return CycleFragment{*shape, renumber_bfs(fsa)};
}

}  // namespace specmine
