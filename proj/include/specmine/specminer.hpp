#pragma once

#include "specmine/fsa.hpp"
#include "specmine/traces.hpp"

namespace specmine {

/// Generalizes one trace into an automaton (possibly with EMPTY edges) by a
/// left-to-right scan. At each position cycle evidence is tried first, then
/// loop evidence, otherwise one plain transition is added. Every
/// generalization is admitted only when its representative traces occur in
/// `corpus`:
///   - loops need prefix . op^st . suffix for the smallest admissible st;
///   - cycles need prefix . unit[0, d) . suffix (2-cycles fall back to one
///     mandatory traversal), and their unit is generalized recursively with
///     representative traces mapped back into the enclosing trace;
///   - a second loop on a state needs every multi-loop representative trace;
///   - a loop or cycle on a state that lies on a cycle needs a trace with the
///     inner repetition embedded in consecutive expansions of the outer unit.
/// A refused multi-loop or nesting is moved to a fresh state reached by an
/// EMPTY edge, so it follows the enclosing structure instead of interleaving.
/// The result accepts `trace`.
Fsa generalize_trace(const Trace& trace, const TraceSet& corpus, int rc);

/// Generalizes every trace against the whole corpus, joins the results with an
/// EMPTY-edge union, determinizes and minimizes.
Fsa specminer(const TraceSet& traces, int rc);

}  // namespace specmine
