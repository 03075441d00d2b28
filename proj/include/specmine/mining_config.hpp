#pragma once

#include "specmine/error.hpp"

namespace specmine {

struct MiningConfig {
  int rc = 2;  ///< repeat count: consecutive repetitions required as evidence
  int k = 2;   ///< kTail depth

  void validate() const {
    if (rc < 2) throw ConfigError("repeat count must be at least 2");
    if (k < 1) throw ConfigError("kTail depth must be at least 1");
  }
};

}  // namespace specmine
