#pragma once

#include "specmine/fsa.hpp"
#include "specmine/traces.hpp"

namespace specmine {

/// kTail state merging. Starting from the prefix tree, states whose k-tails
/// coincide are merged, and tails are recomputed on the merged machine until
/// no further merge happens. The k-tail of a state is the set of label
/// sequences of length exactly k readable from it, plus the shorter sequences
/// that end in an accepting state. The result is determinized and minimized.
Fsa ktail(const TraceSet& traces, int k);

}  // namespace specmine
