#pragma once

#include <tuple>

#include "mordell/ints.hpp"

namespace mordell {

// A solution of F(x, y) = 1; x and y are necessarily coprime.
struct ThueSolution {
  Int x, y;

  friend bool operator==(const ThueSolution& s, const ThueSolution& t) {
    return s.x == t.x && s.y == t.y;
  }
  friend bool operator!=(const ThueSolution& s, const ThueSolution& t) {
    return !(s == t);
  }
  friend bool operator<(const ThueSolution& s, const ThueSolution& t) {
    return std::tie(s.x, s.y) < std::tie(t.x, t.y);
  }
};

enum class BoundPolicy {
  explicit_bound,
  hall_derived,
};

// Configuration for the bounded Thue search backend.
struct SolverConfig {
  Int y_bound = 10000;
  Rational hall_coeff{50, 1};
  BoundPolicy bound_policy = BoundPolicy::hall_derived;
};

}  // namespace mordell
