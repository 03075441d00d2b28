#include "specmine/fsa.hpp"

#include <algorithm>

#include "specmine/error.hpp"

namespace specmine {

StateId Fsa::add_state(std::string name) {
  const StateId id = names_.size();
  if (name.empty()) {
    name = "q" + std::to_string(id);
  }
  if (by_name_.contains(name)) {
    throw InvariantError("duplicate state identifier '" + name + "'");
  }
  by_name_.emplace(name, id);
  names_.push_back(std::move(name));
  edges_.emplace_back();
  accepting_.push_back(false);
  if (!initial_) {
    initial_ = id;
  }
  return id;
}

void Fsa::add_transition(StateId from, std::string label, StateId to) {
  if (from >= num_states() || to >= num_states()) {
    throw InvariantError("transition endpoint is not a state");
  }
  auto& out = edges_[from];
  Edge e{std::move(label), to};
  if (std::find(out.begin(), out.end(), e) != out.end()) {
    return;
  }
  if (!is_empty_label(e.label)) {
    alphabet_.insert(e.label);
  }
  out.push_back(std::move(e));
}

void Fsa::add_symbol(std::string symbol) {
  if (symbol.empty()) {
    throw InvariantError("alphabet symbols must be non-empty");
  }
  alphabet_.insert(std::move(symbol));
}

void Fsa::set_initial(StateId s) {
  if (s >= num_states()) {
    throw InvariantError("initial state is not a state");
  }
  initial_ = s;
}

void Fsa::set_accepting(StateId s, bool accepting) { accepting_.at(s) = accepting; }

std::size_t Fsa::num_transitions() const noexcept {
  std::size_t n = 0;
  for (const auto& out : edges_) n += out.size();
  return n;
}

StateId Fsa::initial() const {
  if (!initial_) {
    throw InvariantError("automaton has no states");
  }
  return *initial_;
}

std::optional<StateId> Fsa::find_state(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::vector<Transition> Fsa::transitions() const {
  std::vector<Transition> all;
  all.reserve(num_transitions());
  for (StateId s = 0; s < num_states(); ++s) {
    for (const auto& e : edges_[s]) all.push_back({s, e.label, e.to});
  }
  return all;
}

std::vector<StateId> Fsa::accepting_states() const {
  std::vector<StateId> acc;
  for (StateId s = 0; s < num_states(); ++s) {
    if (accepting_[s]) acc.push_back(s);
  }
  return acc;
}

bool Fsa::has_empty_transitions() const noexcept {
  for (const auto& out : edges_) {
    for (const auto& e : out) {
      if (is_empty_label(e.label)) return true;
    }
  }
  return false;
}

bool Fsa::deterministic() const noexcept {
  for (const auto& out : edges_) {
    std::set<std::string_view> seen;
    for (const auto& e : out) {
      if (is_empty_label(e.label) || !seen.insert(e.label).second) return false;
    }
  }
  return true;
}

std::optional<StateId> Fsa::step(StateId s, std::string_view label) const {
  for (const auto& e : edges_.at(s)) {
    if (e.label == label) return e.to;
  }
  return std::nullopt;
}

void Fsa::validate() const {
  if (names_.empty()) {
    throw InvariantError("automaton has no states");
  }
  if (!initial_ || *initial_ >= num_states()) {
    throw InvariantError("initial state is not a state");
  }
  for (StateId s = 0; s < num_states(); ++s) {
    for (const auto& e : edges_[s]) {
      if (e.to >= num_states()) {
        throw InvariantError("transition target of '" + names_[s] + "' is not a state");
      }
      if (!is_empty_label(e.label) && !alphabet_.contains(e.label)) {
        throw InvariantError("label '" + e.label + "' is not in the alphabet");
      }
    }
  }
}

}  // namespace specmine
