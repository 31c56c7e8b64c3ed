#pragma once

#include <string>
#include <vector>

namespace mlae {

struct CheckResult {
  std::string name;
  bool passed = false;
  double deviation = 0.0;  // largest observed difference
  double tolerance = 0.0;
};

/// Quick consistency checks of the closed forms against brute-force
/// references: Fisher information by outcome enumeration, the amplified
/// probability against the state vector, the amplification operator against
/// its reflection product, the ML search against an exhaustive grid, and the
/// Riemann sum in extended precision. Runs in well under a second.
std::vector<CheckResult> run_selftest();

}  // namespace mlae
