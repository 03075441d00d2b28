#include "specmine/ktail.hpp"

#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "specmine/automata.hpp"
#include "specmine/error.hpp"

namespace specmine {

namespace {

using Tail = std::set<OpSeq>;

struct Quotient {
  std::vector<std::set<std::pair<std::string, std::size_t>>> edges;
  std::vector<bool> accepting;
};

void collect_tail(const Quotient& q, std::size_t s, int k, OpSeq& prefix, Tail& tail) {
  if (static_cast<int>(prefix.size()) == k) {
    tail.insert(prefix);
    return;
  }
  if (q.accepting[s]) tail.insert(prefix);
  for (const auto& [label, to] : q.edges[s]) {
    prefix.push_back(label);
    collect_tail(q, to, k, prefix, tail);
    prefix.pop_back();
  }
}

}  // namespace

Fsa ktail(const TraceSet& traces, int k) {
  if (k < 1) throw ConfigError("kTail depth must be at least 1");
  const Fsa pta = build_pta(traces);
  const std::size_t n = pta.num_states();

  std::vector<std::size_t> cls(n);  // current class of each PTA state
  std::iota(cls.begin(), cls.end(), 0);

  for (;;) {
    // Dense renumbering of the current classes.
    std::map<std::size_t, std::size_t> dense;
    for (std::size_t s = 0; s < n; ++s) dense.try_emplace(cls[s], dense.size());
    Quotient q;
    q.edges.resize(dense.size());
    q.accepting.assign(dense.size(), false);
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t c = dense[cls[s]];
      if (pta.is_accepting(s)) q.accepting[c] = true;
      for (const auto& e : pta.out(s)) q.edges[c].emplace(e.label, dense[cls[e.to]]);
    }

    std::map<Tail, std::size_t> first_with;
    std::vector<std::size_t> target(dense.size());
    bool merged = false;
    for (std::size_t c = 0; c < dense.size(); ++c) {
      Tail tail;
      OpSeq prefix;
      collect_tail(q, c, k, prefix, tail);
      auto [it, fresh] = first_with.try_emplace(std::move(tail), c);
      target[c] = it->second;
      merged = merged || !fresh;
    }
    const std::size_t initial_class = dense[cls[pta.initial()]];
    for (std::size_t s = 0; s < n; ++s) cls[s] = target[dense[cls[s]]];
    if (!merged) {
      Fsa nfa;
      for (const auto& sym : pta.alphabet()) nfa.add_symbol(sym);
      for (std::size_t c = 0; c < q.edges.size(); ++c) {
        nfa.add_state();
        nfa.set_accepting(c, q.accepting[c]);
      }
      nfa.set_initial(initial_class);
      for (std::size_t c = 0; c < q.edges.size(); ++c) {
        for (const auto& [label, to] : q.edges[c]) nfa.add_transition(c, label, to);
      }
      return minimize(determinize(nfa));
    }
  }
}

}  // namespace specmine
