#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "specmine/fsa.hpp"

namespace specmine {

enum class Provenance { published, reconstructed };

std::string_view to_string(Provenance p);

struct GroundTruthModel {
  std::string name;
  Fsa model;  ///< minimal DFA
  Provenance provenance = Provenance::reconstructed;
};

/// retailer, login, StringTokenizer, ZipOutputStream, Amazon-ec2, CVS, in
/// that order.
const std::vector<GroundTruthModel>& builtin_models();

/// Throws ConfigError for an unknown name.
const GroundTruthModel& builtin_model(std::string_view name);

/// One accepting state with a self-loop per symbol.
Fsa flower_model(const std::set<std::string>& alphabet);

}  // namespace specmine
