#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace specmine {

/// Ordered sequence of operation names.
using OpSeq = std::vector<std::string>;

using StateId = std::size_t;

/// The distinguished EMPTY (epsilon) label. Operation names are never empty.
inline const std::string kEmptyLabel;

inline bool is_empty_label(std::string_view label) { return label.empty(); }

struct Edge {
  std::string label;
  StateId to;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Transition {
  StateId from;
  std::string label;
  StateId to;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Finite-state automaton over operation names, possibly non-deterministic and
/// possibly with EMPTY transitions. States are dense indices 0..num_states()-1,
/// each carrying a unique display name. The first state added is the initial
/// state unless set_initial() says otherwise.
class Fsa {
 public:
  Fsa() = default;

  /// Adds a state. An empty name becomes "q<index>". Duplicate names throw.
  StateId add_state(std::string name = {});

  /// Adds (from, label, to). EMPTY is spelled kEmptyLabel. Non-EMPTY labels
  /// join the alphabet. Re-adding an existing transition is a no-op.
  void add_transition(StateId from, std::string label, StateId to);

  void add_symbol(std::string symbol);
  void set_initial(StateId s);
  void set_accepting(StateId s, bool accepting = true);

  std::size_t num_states() const noexcept { return names_.size(); }
  std::size_t num_transitions() const noexcept;
  bool empty() const noexcept { return names_.empty(); }

  StateId initial() const;
  bool is_accepting(StateId s) const { return accepting_.at(s); }
  const std::string& name(StateId s) const { return names_.at(s); }
  std::optional<StateId> find_state(std::string_view name) const;

  const std::set<std::string>& alphabet() const noexcept { return alphabet_; }

  /// Outgoing edges of `s` in insertion order.
  std::span<const Edge> out(StateId s) const { return edges_.at(s); }

  /// All transitions ordered by (from, insertion order).
  std::vector<Transition> transitions() const;

  std::vector<StateId> accepting_states() const;

  bool has_empty_transitions() const noexcept;

  /// No EMPTY labels and at most one edge per (state, label).
  bool deterministic() const noexcept;

  /// Target of the unique `label` edge from `s`, if any (first match for NFAs).
  std::optional<StateId> step(StateId s, std::string_view label) const;

  /// Checks every structural invariant; throws InvariantError on violation.
  void validate() const;

  /// Structural equality (same names, numbering, edges, acceptance, alphabet).
  friend bool operator==(const Fsa&, const Fsa&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<bool> accepting_;
  std::set<std::string> alphabet_;
  std::map<std::string, StateId, std::less<>> by_name_;
  std::optional<StateId> initial_;
};

}  // namespace specmine
