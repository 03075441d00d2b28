#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "specmine/fsa.hpp"

namespace specmine {

/// JSON spelling of the EMPTY label.
inline constexpr std::string_view kJsonEmptyLabel = "ε";

/// {"states", "alphabet", "initial", "accepting", "transitions": [{"from","label","to"}]}
std::string to_json(const Fsa& fsa);

/// Throws ParseError on malformed documents or dangling state references.
Fsa from_json(std::string_view text);

/// One digraph; the initial state is entered from a point-shaped pseudo-node
/// and accepting states are double circles.
std::string to_dot(const Fsa& fsa);

}  // namespace specmine
