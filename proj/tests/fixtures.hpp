#pragma once
// Shared corpora and small models.

#include "specmine/fsa.hpp"
#include "specmine/traces.hpp"

namespace fixtures {

inline const specmine::Trace kReg{"regLogin", "order", "inv", "pay", "ship"};
inline const specmine::Trace kPrem{"premLogin", "order", "ship", "inv", "pay"};
inline const specmine::Trace kPremCat{"premLogin", "cat", "cat", "order", "ship", "inv", "pay"};

inline specmine::TraceSet two_traces() { return {kReg, kPrem}; }
inline specmine::TraceSet three_traces() { return {kReg, kPrem, kPremCat}; }

// Straight path spelling `w`, final state accepting.
inline specmine::Fsa path(const specmine::OpSeq& w) {
  specmine::Fsa m;
  specmine::StateId s = m.add_state();
  for (const auto& op : w) {
    const auto t = m.add_state();
    m.add_transition(s, op, t);
    s = t;
  }
  m.set_accepting(s);
  return m;
}

inline specmine::OpSeq seq(std::initializer_list<const char*> ops) {
  return specmine::OpSeq(ops.begin(), ops.end());
}

}  // namespace fixtures
