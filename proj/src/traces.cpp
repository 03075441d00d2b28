#include "specmine/traces.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "specmine/automata.hpp"
#include "specmine/error.hpp"

namespace specmine {

namespace {

bool is_separator(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c != ',' && is_separator(c); });
}

}  // namespace

Trace::Trace(OpSeq ops) : ops_(std::move(ops)) {
  if (ops_.empty()) {
    throw ConfigError("a trace must contain at least one operation");
  }
  for (const auto& op : ops_) {
    if (op.empty() || std::any_of(op.begin(), op.end(), is_separator)) {
      throw ConfigError("operation names must be non-empty and free of separators");
    }
  }
}

TraceSet::TraceSet(std::initializer_list<Trace> traces) {
  for (const auto& t : traces) insert(t);
}

bool TraceSet::insert(Trace t) {
  for (const auto& op : t.ops()) alphabet_.insert(op);
  if (!traces_.insert(std::move(t)).second) {
    ++duplicates_;
    return false;
  }
  return true;
}

bool TraceSet::contains(std::span<const std::string> ops) const {
  if (ops.empty()) return false;
  // Trace has no heterogeneous lookup; compare against the sorted range.
  auto it = std::lower_bound(traces_.begin(), traces_.end(), ops, [](const Trace& t, auto w) {
    return std::lexicographical_compare(t.ops().begin(), t.ops().end(), w.begin(), w.end());
  });
  return it != traces_.end() && std::equal(it->ops().begin(), it->ops().end(), ops.begin(), ops.end());
}

std::size_t TraceSet::max_length() const noexcept {
  std::size_t n = 0;
  for (const auto& t : traces_) n = std::max(n, t.size());
  return n;
}

TraceSet parse_traces(std::istream& in) {
  TraceSet set;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    const auto first = line.find_first_not_of(" \t\r");
    if (line[first] == '#') continue;
    OpSeq ops;
    std::string cur;
    for (char c : line) {
      if (is_separator(c)) {
        if (!cur.empty()) ops.push_back(std::move(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) ops.push_back(std::move(cur));
    if (ops.empty()) {
      throw ParseError("line holds only separators", lineno);
    }
    set.insert(Trace(std::move(ops)));
  }
  if (set.empty()) {
    throw ParseError("empty corpus: no traces found");
  }
  return set;
}

TraceSet parse_traces(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_traces(in);
}

std::string serialize_traces(const TraceSet& traces) {
  std::string out;
  for (const auto& t : traces) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ',';
      out += t[i];
    }
    out += '\n';
  }
  return out;
}

Fsa build_pta(const TraceSet& traces) {
  if (traces.empty()) {
    throw ConfigError("cannot build a prefix tree from an empty corpus");
  }
  Fsa pta;
  const StateId root = pta.add_state();
  std::map<std::pair<StateId, std::string>, StateId> child;
  for (const auto& t : traces) {
    StateId s = root;
    for (const auto& op : t.ops()) {
      auto [it, fresh] = child.try_emplace({s, op}, 0);
      if (fresh) {
        it->second = pta.add_state();
        pta.add_transition(s, op, it->second);
      }
      s = it->second;
    }
    pta.set_accepting(s);
  }
  return renumber_bfs(pta);
}

}  // namespace specmine
