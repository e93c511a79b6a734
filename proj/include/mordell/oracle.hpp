#pragma once

#include "mordell/points.hpp"

namespace mordell {

struct OracleConfig {
  Int x_max = 10000;
};

struct IntegerSqrtResult {
  Int root;
  bool exact;
};

// floor(sqrt(n)) with an exactness flag; rejects negative input.
IntegerSqrtResult integer_sqrt(const Int& n);

// Scans X from the exact cube-root boundary (smallest X with X^3 + k >= 0)
// up to cfg.x_max and reports every X where X^3 + k is a perfect square.
// Complete for all points with X <= x_max by construction.
SolutionSet brute_force_k(const Int& k, const OracleConfig& cfg);

}  // namespace mordell
