#include "specmine/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <vector>

#include "specmine/error.hpp"

namespace specmine {

namespace {

using StateSet = std::vector<StateId>;  // sorted, unique

void close_under_empty(const Fsa& fsa, StateSet& set) {
  std::vector<bool> seen(fsa.num_states(), false);
  std::vector<StateId> stack(set.begin(), set.end());
  for (StateId s : set) seen[s] = true;
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (const auto& e : fsa.out(s)) {
      if (is_empty_label(e.label) && !seen[e.to]) {
        seen[e.to] = true;
        set.push_back(e.to);
        stack.push_back(e.to);
      }
    }
  }
  std::sort(set.begin(), set.end());
}

StateSet move(const Fsa& fsa, const StateSet& from, std::string_view label) {
  StateSet next;
  for (StateId s : from) {
    for (const auto& e : fsa.out(s)) {
      if (e.label == label) next.push_back(e.to);
    }
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  close_under_empty(fsa, next);
  return next;
}

std::vector<StateId> reachable_states(const Fsa& fsa) {
  std::vector<bool> seen(fsa.num_states(), false);
  std::vector<StateId> order{fsa.initial()};
  seen[fsa.initial()] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& e : fsa.out(order[i])) {
      if (!seen[e.to]) {
        seen[e.to] = true;
        order.push_back(e.to);
      }
    }
  }
  return order;
}

// Transition indices: edge j of state s has global index offsets[s] + j.
std::vector<std::size_t> edge_offsets(const Fsa& fsa) {
  std::vector<std::size_t> offsets(fsa.num_states() + 1, 0);
  for (StateId s = 0; s < fsa.num_states(); ++s) {
    offsets[s + 1] = offsets[s] + fsa.out(s).size();
  }
  return offsets;
}

void check_visit_limit(int visit_limit) {
  if (visit_limit < 1) {
    throw ConfigError("visit limit must be at least 1");
  }
}

}  // namespace

bool accepts(const Fsa& fsa, std::span<const std::string> word) {
  if (fsa.empty()) return false;
  StateSet current{fsa.initial()};
  close_under_empty(fsa, current);
  for (const auto& op : word) {
    if (op.empty()) return false;
    current = move(fsa, current, op);
    if (current.empty()) return false;
  }
  return std::any_of(current.begin(), current.end(),
                     [&](StateId s) { return fsa.is_accepting(s); });
}

Fsa epsilon_union(std::span<const Fsa> models) {
  if (models.empty()) {
    throw ConfigError("no models to combine");
  }
  Fsa out;
  const StateId root = out.add_state("u");
  for (std::size_t m = 0; m < models.size(); ++m) {
    const Fsa& in = models[m];
    for (const auto& sym : in.alphabet()) out.add_symbol(sym);
    if (in.empty()) continue;
    const StateId base = out.num_states();
    for (StateId s = 0; s < in.num_states(); ++s) {
      out.add_state("m" + std::to_string(m) + "." + std::to_string(s));
      out.set_accepting(base + s, in.is_accepting(s));
    }
    for (const auto& t : in.transitions()) out.add_transition(base + t.from, t.label, base + t.to);
    out.add_transition(root, kEmptyLabel, base + in.initial());
  }
  return renumber_bfs(out);
}

Fsa determinize(const Fsa& nfa) {
  Fsa dfa;
  for (const auto& sym : nfa.alphabet()) dfa.add_symbol(sym);
  if (nfa.empty()) {
    dfa.add_state();
    return dfa;
  }
  std::map<StateSet, StateId> ids;
  std::vector<StateSet> subsets;
  auto intern = [&](StateSet set) {
    auto [it, fresh] = ids.emplace(set, subsets.size());
    if (fresh) {
      const StateId id = dfa.add_state();
      dfa.set_accepting(id, std::any_of(set.begin(), set.end(),
                                        [&](StateId s) { return nfa.is_accepting(s); }));
      subsets.push_back(std::move(set));
    }
    return it->second;
  };
  StateSet start{nfa.initial()};
  close_under_empty(nfa, start);
  intern(std::move(start));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (const auto& sym : nfa.alphabet()) {
      StateSet next = move(nfa, subsets[i], sym);
      if (next.empty()) continue;
      const StateId target = intern(std::move(next));
      dfa.add_transition(static_cast<StateId>(i), sym, target);
    }
  }
  return dfa;
}

Fsa minimize(const Fsa& dfa) {
  if (!dfa.deterministic()) {
    throw ConfigError("minimize requires a deterministic automaton; determinize first");
  }
  const std::vector<StateId> reach = reachable_states(dfa);
  const std::vector<std::string> symbols(dfa.alphabet().begin(), dfa.alphabet().end());
  const std::size_t n = reach.size() + 1;  // + dead sink
  const std::size_t sink = reach.size();
  const std::size_t k = symbols.size();

  std::vector<std::size_t> local(dfa.num_states(), sink);
  for (std::size_t i = 0; i < reach.size(); ++i) local[reach[i]] = i;

  std::vector<std::vector<std::size_t>> delta(n, std::vector<std::size_t>(k, sink));
  for (std::size_t i = 0; i < reach.size(); ++i) {
    for (const auto& e : dfa.out(reach[i])) {
      auto pos = std::lower_bound(symbols.begin(), symbols.end(), e.label) - symbols.begin();
      delta[i][pos] = local[e.to];
    }
  }
  std::vector<bool> acc(n, false);
  for (std::size_t i = 0; i < reach.size(); ++i) acc[i] = dfa.is_accepting(reach[i]);

  // inverse[c][t] = sources with delta[s][c] == t
  std::vector<std::vector<std::vector<std::size_t>>> inverse(
      k, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t c = 0; c < k; ++c) inverse[c][delta[s][c]].push_back(s);
  }

  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of(n);
  {
    std::vector<std::size_t> finals, rest;
    for (std::size_t s = 0; s < n; ++s) (acc[s] ? finals : rest).push_back(s);
    for (auto* b : {&finals, &rest}) {
      if (b->empty()) continue;
      for (std::size_t s : *b) block_of[s] = blocks.size();
      blocks.push_back(std::move(*b));
    }
  }

  std::deque<std::pair<std::size_t, std::size_t>> work;
  std::vector<std::vector<bool>> in_work;
  auto push_work = [&](std::size_t b, std::size_t c) {
    if (in_work.size() <= b) in_work.resize(b + 1, std::vector<bool>(k, false));
    if (!in_work[b][c]) {
      in_work[b][c] = true;
      work.emplace_back(b, c);
    }
  };
  in_work.resize(blocks.size(), std::vector<bool>(k, false));
  if (blocks.size() == 2) {
    const std::size_t smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
    for (std::size_t c = 0; c < k; ++c) push_work(smaller, c);
  }

  std::vector<bool> marked(n, false);
  std::vector<std::size_t> marked_count;
  while (!work.empty()) {
    auto [splitter, c] = work.front();
    work.pop_front();
    in_work[splitter][c] = false;

    std::vector<std::size_t> hit;
    for (std::size_t t : blocks[splitter]) {
      for (std::size_t s : inverse[c][t]) {
        if (!marked[s]) {
          marked[s] = true;
          hit.push_back(s);
        }
      }
    }
    marked_count.assign(blocks.size(), 0);
    std::vector<std::size_t> touched;
    for (std::size_t s : hit) {
      if (marked_count[block_of[s]]++ == 0) touched.push_back(block_of[s]);
    }
    for (std::size_t b : touched) {
      if (marked_count[b] == blocks[b].size()) continue;
      std::vector<std::size_t> in, outside;
      for (std::size_t s : blocks[b]) (marked[s] ? in : outside).push_back(s);
      const std::size_t fresh = blocks.size();
      blocks[b] = std::move(outside);
      for (std::size_t s : in) block_of[s] = fresh;
      blocks.push_back(std::move(in));
      in_work.resize(blocks.size(), std::vector<bool>(k, false));
      for (std::size_t cc = 0; cc < k; ++cc) {
        if (in_work[b][cc]) {
          push_work(fresh, cc);
        } else {
          push_work(blocks[b].size() <= blocks[fresh].size() ? b : fresh, cc);
        }
      }
    }
    for (std::size_t s : hit) marked[s] = false;
  }

  // Blocks that cannot reach acceptance are dead; the sink's block is one.
  const std::size_t nb = blocks.size();
  std::vector<bool> live(nb, false);
  {
    std::vector<std::vector<std::size_t>> rev(nb);
    for (std::size_t b = 0; b < nb; ++b) {
      const std::size_t rep = blocks[b].front();
      for (std::size_t c = 0; c < k; ++c) rev[block_of[delta[rep][c]]].push_back(b);
    }
    std::vector<std::size_t> stack;
    for (std::size_t b = 0; b < nb; ++b) {
      if (acc[blocks[b].front()]) {
        live[b] = true;
        stack.push_back(b);
      }
    }
    while (!stack.empty()) {
      const std::size_t b = stack.back();
      stack.pop_back();
      for (std::size_t p : rev[b]) {
        if (!live[p]) {
          live[p] = true;
          stack.push_back(p);
        }
      }
    }
  }

  const std::size_t init_block = block_of[local[dfa.initial()]];
  Fsa quotient;
  for (const auto& sym : symbols) quotient.add_symbol(sym);
  std::vector<StateId> qid(nb, 0);
  std::vector<std::size_t> order{init_block};
  for (std::size_t b = 0; b < nb; ++b) {
    if (b != init_block && live[b]) order.push_back(b);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    qid[order[i]] = quotient.add_state();
    quotient.set_accepting(qid[order[i]], acc[blocks[order[i]].front()]);
  }
  quotient.set_initial(qid[init_block]);
  for (std::size_t b : order) {
    const std::size_t rep = blocks[b].front();
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t tb = block_of[delta[rep][c]];
      if (live[tb]) quotient.add_transition(qid[b], symbols[c], qid[tb]);
    }
  }
  return renumber_bfs(quotient);
}

Fsa renumber_bfs(const Fsa& fsa) {
  Fsa out;
  for (const auto& sym : fsa.alphabet()) out.add_symbol(sym);
  if (fsa.empty()) return out;

  std::vector<std::optional<StateId>> id(fsa.num_states());
  std::vector<StateId> order{fsa.initial()};
  id[fsa.initial()] = 0;
  std::vector<std::vector<Edge>> sorted(fsa.num_states());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const StateId s = order[i];
    auto& edges = sorted[s];
    edges.assign(fsa.out(s).begin(), fsa.out(s).end());
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges) {
      if (!id[e.to]) {
        id[e.to] = order.size();
        order.push_back(e.to);
      }
    }
  }
  for (StateId s : order) {
    const StateId n = out.add_state();
    out.set_accepting(n, fsa.is_accepting(s));
  }
  for (StateId s : order) {
    for (const auto& e : sorted[s]) out.add_transition(*id[s], e.label, *id[e.to]);
  }
  return out;
}

void for_each_bounded_path(const Fsa& fsa, int visit_limit,
                           const std::function<bool(const OpSeq&)>& visit) {
  check_visit_limit(visit_limit);
  if (fsa.empty()) return;
  const auto offsets = edge_offsets(fsa);
  std::vector<int> used(offsets.back(), 0);
  OpSeq word;
  bool stop = false;

  std::function<void(StateId)> walk = [&](StateId s) {
    if (fsa.is_accepting(s) && !visit(word)) {
      stop = true;
      return;
    }
    const auto edges = fsa.out(s);
    for (std::size_t j = 0; j < edges.size() && !stop; ++j) {
      int& u = used[offsets[s] + j];
      if (u >= visit_limit) continue;
      ++u;
      const bool labeled = !is_empty_label(edges[j].label);
      if (labeled) word.push_back(edges[j].label);
      walk(edges[j].to);
      if (labeled) word.pop_back();
      --u;
    }
  };
  walk(fsa.initial());
}

BehaviorSet enumerate_behaviors(const Fsa& fsa, int visit_limit) {
  BehaviorSet result;
  result.visit_limit = visit_limit;
  for_each_bounded_path(fsa, visit_limit, [&](const OpSeq& w) {
    result.traces.insert(w);
    return true;
  });
  return result;
}

bool accepts_within(const Fsa& fsa, std::span<const std::string> word, int visit_limit) {
  check_visit_limit(visit_limit);
  if (fsa.empty()) return false;
  const auto offsets = edge_offsets(fsa);
  std::vector<int> used(offsets.back(), 0);

  std::function<bool(StateId, std::size_t)> walk = [&](StateId s, std::size_t pos) {
    if (pos == word.size() && fsa.is_accepting(s)) return true;
    const auto edges = fsa.out(s);
    for (std::size_t j = 0; j < edges.size(); ++j) {
      const bool empty = is_empty_label(edges[j].label);
      if (!empty && (pos == word.size() || edges[j].label != word[pos])) continue;
      int& u = used[offsets[s] + j];
      if (u >= visit_limit) continue;
      ++u;
      const bool found = walk(edges[j].to, empty ? pos : pos + 1);
      --u;
      if (found) return true;
    }
    return false;
  };
  return walk(fsa.initial(), 0);
}

std::uint64_t count_bounded_behaviors(std::span<const Fsa* const> dfas, int visit_limit) {
  check_visit_limit(visit_limit);
  if (dfas.empty()) {
    throw ConfigError("count_bounded_behaviors needs at least one automaton");
  }
  for (const Fsa* d : dfas) {
    if (!d->deterministic()) {
      throw ConfigError("bounded counting requires deterministic automata");
    }
    if (d->empty()) return 0;
  }
  if (visit_limit > 255) {
    throw ConfigError("visit limit above 255 is not supported for counting");
  }
  const std::size_t m = dfas.size();
  std::vector<std::vector<std::size_t>> offsets(m);
  std::vector<std::string> usage(m);
  std::vector<StateId> states(m);
  for (std::size_t i = 0; i < m; ++i) {
    offsets[i] = edge_offsets(*dfas[i]);
    usage[i].assign(offsets[i].back(), '\0');
    states[i] = dfas[i]->initial();
  }

  std::unordered_map<std::string, std::uint64_t> memo;
  auto key = [&] {
    std::string k;
    for (std::size_t i = 0; i < m; ++i) {
      k.append(reinterpret_cast<const char*>(&states[i]), sizeof(StateId));
      k += usage[i];
    }
    return k;
  };

  std::vector<std::size_t> chosen(m);
  std::function<std::uint64_t()> count = [&]() -> std::uint64_t {
    std::string k = key();
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (!dfas[i]->is_accepting(states[i])) {
        total = 0;
        break;
      }
    }
    const auto lead = dfas[0]->out(states[0]);
    for (std::size_t j = 0; j < lead.size(); ++j) {
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i) {
        const auto edges = dfas[i]->out(states[i]);
        ok = false;
        for (std::size_t x = 0; x < edges.size(); ++x) {
          if (edges[x].label == lead[j].label) {
            chosen[i] = x;
            ok = static_cast<unsigned char>(usage[i][offsets[i][states[i]] + x]) <
                 static_cast<unsigned>(visit_limit);
            break;
          }
        }
      }
      if (!ok) continue;
      std::vector<StateId> saved = states;
      std::vector<std::size_t> picks = chosen;
      for (std::size_t i = 0; i < m; ++i) {
        ++usage[i][offsets[i][states[i]] + picks[i]];
        states[i] = dfas[i]->out(states[i])[picks[i]].to;
      }
      const std::uint64_t sub = count();
      states = saved;
      for (std::size_t i = 0; i < m; ++i) --usage[i][offsets[i][states[i]] + picks[i]];
      if (__builtin_add_overflow(total, sub, &total)) {
        throw Error("bounded behavior count overflows 64 bits");
      }
    }
    memo.emplace(std::move(k), total);
    return total;
  };
  return count();
}

}  // namespace specmine
