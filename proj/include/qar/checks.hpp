#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qar::checks {

struct CheckResult {
  std::string name;
  bool passed = false;
  int instances = 0;
  double worst = 0.0;  ///< largest violation seen
  double tolerance = 0.0;
};

/// Randomized invariant suite behind `qar check`: quaternion embedding
/// homomorphism, trace-norm limits, prox optimality, Gram properties and
/// solver feasibility. Deterministic for a given seed.
std::vector<CheckResult> run_all(int instances, std::uint64_t seed);

}  // namespace qar::checks
