#include "specmine/specminer.hpp"

#include <map>
#include <optional>
#include <vector>

#include "specmine/automata.hpp"
#include "specmine/error.hpp"
#include "specmine/heuristics.hpp"

namespace specmine {

namespace {

struct RingInfo {
  OpSeq outer_prefix;  // sequence before the ring, in the coordinates of its scan
  OpSeq unit;
  std::size_t offset = 0;
};

struct StateInfo {
  std::set<std::string> loops;
  OpSeq loop_prefix;  // sequence before the first loop was placed
  std::optional<RingInfo> ring;
};

// Builds the automaton for one trace. Each scan (the trace itself, or a cycle
// unit being generalized) has its own scope, and loop/ring bookkeeping only
// applies within the scope that created it.
class TraceGeneralizer {
 public:
  explicit TraceGeneralizer(int rc) : rc_(rc) {}

  Fsa run(std::span<const std::string> trace, const SupportOracle& support) {
    const StateId start = fsa_.add_state();
    const auto bound = scan(trace, start, support);
    fsa_.set_accepting(*bound.back());
    return renumber_bfs(fsa_);
  }

 private:
  using Boundaries = std::vector<std::optional<StateId>>;

  StateInfo& info(StateId s) { return info_[{scope_, s}]; }
  const StateInfo* find_info(StateId s) const {
    auto it = info_.find({scope_, s});
    return it == info_.end() ? nullptr : &it->second;
  }

  StateId plain(StateId from, std::span<const std::string> ops) {
    for (const auto& op : ops) {
      const StateId next = fsa_.add_state();
      fsa_.add_transition(from, op, next);
      from = next;
    }
    return from;
  }

  StateId detach(StateId from) {
    const StateId fresh = fsa_.add_state();
    fsa_.add_transition(from, kEmptyLabel, fresh);
    return fresh;
  }

  // The inner repetition `region` embedded in rc consecutive expansions of the
  // ring's unit at the ring position, followed by the rest of the sequence.
  OpSeq nesting_witness(const RingInfo& ring, std::span<const std::string> region,
                        std::span<const std::string> rest) const {
    const std::span<const std::string> unit = ring.unit;
    const auto head = unit.first(ring.offset);
    const auto tail = unit.subspan(ring.offset);
    OpSeq w = ring.outer_prefix;
    for (int i = 0; i < rc_; ++i) {
      w.insert(w.end(), head.begin(), head.end());
      w.insert(w.end(), region.begin(), region.end());
      w.insert(w.end(), tail.begin(), tail.end());
    }
    w.insert(w.end(), head.begin(), head.end());
    w.insert(w.end(), rest.begin(), rest.end());
    return w;
  }

  Boundaries scan(std::span<const std::string> seq, StateId start, const SupportOracle& support) {
    const int saved_scope = scope_;
    scope_ = next_scope_++;
    Boundaries bound(seq.size() + 1);
    StateId current = start;
    std::size_t i = 0;
    bound[0] = current;
    while (i < seq.size()) {
      if (auto cyc = find_cycle_evidence(seq, i, rc_)) {
        if (auto shape = cycle_shape(*cyc, support)) {
          current = place_cycle(seq, *cyc, *shape, current, support);
          i += cyc->consumed();
          bound[i] = current;
          continue;
        }
      }
      if (auto loop = find_loop_evidence(seq, i, rc_)) {
        current = place_loop(*loop, current, support);
        i += loop->bt;
        bound[i] = current;
        continue;
      }
      current = plain(current, seq.subspan(i, 1));
      bound[++i] = current;
    }
    scope_ = saved_scope;
    return bound;
  }

  StateId place_loop(const LoopEvidence& ev, StateId current, const SupportOracle& support) {
    const auto gen = loop_generalize(ev, support, rc_);
    if (!gen) {
      return plain(current, OpSeq(ev.bt, ev.op));
    }
    if (gen->mandatory_count > 0) {
      const StateId s = plain(current, OpSeq(gen->mandatory_count, ev.op));
      fsa_.add_transition(s, ev.op, s);
      StateInfo& si = info(s);
      si.loops.insert(ev.op);
      si.loop_prefix = ev.prefix;
      si.loop_prefix.insert(si.loop_prefix.end(), gen->mandatory_count, ev.op);
      return s;
    }

    StateId anchor = current;
    if (const StateInfo* si = find_info(anchor)) {
      bool admitted = true;
      if (!si->loops.empty() && !si->loops.contains(ev.op)) {
        auto ops = si->loops;
        ops.insert(ev.op);
        for (const auto& rep : multiloop_rep_traces(si->loop_prefix, ops, ev.suffix, rc_)) {
          if (!support(rep)) {
            admitted = false;
            break;
          }
        }
      }
      if (admitted && si->ring) {
        const OpSeq region(ev.bt, ev.op);
        admitted = support(nesting_witness(*si->ring, region, ev.suffix));
      }
      if (!admitted) anchor = detach(anchor);
    }
    fsa_.add_transition(anchor, ev.op, anchor);
    StateInfo& si = info(anchor);
    if (si.loops.empty()) si.loop_prefix = ev.prefix;
    si.loops.insert(ev.op);
    return anchor;
  }

  StateId place_cycle(std::span<const std::string> seq, const CycleEvidence& ev,
                      const CycleShape& shape, StateId current, const SupportOracle& support) {
    StateId anchor = current;
    if (const StateInfo* si = find_info(anchor)) {
      // No evidence pattern admits a cycle through a state that carries a
      // loop, so such a cycle always moves to a fresh state.
      bool admitted = si->loops.empty();
      if (admitted && si->ring) {
        const auto region = seq.subspan(ev.start_index, ev.consumed());
        admitted = support(nesting_witness(*si->ring, region, ev.suffix));
      }
      if (!admitted) anchor = detach(anchor);
    }

    // A unit variant v stands for the enclosing sequence with every full
    // repetition replaced by v.
    SupportOracle in_unit = [&, reps = ev.full_repeats](std::span<const std::string> v) {
      OpSeq w = ev.prefix;
      for (std::size_t r = 0; r < reps; ++r) w.insert(w.end(), v.begin(), v.end());
      const std::span<const std::string> unit = ev.unit;
      const auto partial = unit.first(ev.partial_len);
      w.insert(w.end(), partial.begin(), partial.end());
      w.insert(w.end(), ev.suffix.begin(), ev.suffix.end());
      return support(w);
    };

    StateId ring_start = anchor;
    OpSeq outer_prefix = ev.prefix;
    for (std::size_t m = 0; m < shape.mandatory_passes; ++m) {
      ring_start = *scan(ev.unit, ring_start, in_unit).back();
      outer_prefix.insert(outer_prefix.end(), ev.unit.begin(), ev.unit.end());
    }
    const Boundaries ring = scan(ev.unit, ring_start, in_unit);
    fsa_.add_transition(*ring.back(), kEmptyLabel, ring_start);
    for (std::size_t p = 0; p < ring.size(); ++p) {
      if (ring[p]) info(*ring[p]).ring = RingInfo{outer_prefix, ev.unit, p % ev.unit.size()};
    }
    if (ring[shape.exit_offset]) return *ring[shape.exit_offset];
    return plain(ring_start, std::span<const std::string>(ev.unit).first(shape.exit_offset));
  }

  int rc_;
  Fsa fsa_;
  std::map<std::pair<int, StateId>, StateInfo> info_;
  int scope_ = 0;
  int next_scope_ = 1;
};

}  // namespace

Fsa generalize_trace(const Trace& trace, const TraceSet& corpus, int rc) {
  if (rc < 2) throw ConfigError("repeat count must be at least 2");
  return TraceGeneralizer(rc).run(trace.ops(), corpus_support(corpus));
}

Fsa specminer(const TraceSet& traces, int rc) {
  if (rc < 2) throw ConfigError("repeat count must be at least 2");
  if (traces.empty()) throw ConfigError("cannot mine an empty corpus");
  std::vector<Fsa> per_trace;
  per_trace.reserve(traces.size());
  for (const auto& t : traces) per_trace.push_back(generalize_trace(t, traces, rc));
  return minimize(determinize(epsilon_union(per_trace)));
}

}  // namespace specmine
