#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include "mordell/ints.hpp"

namespace mordell {

// An integral point on Y^2 = X^3 + k.
struct MordellPoint {
  Int X, Y;
  Int k;

  friend bool operator==(const MordellPoint& p, const MordellPoint& q) {
    return p.X == q.X && p.Y == q.Y && p.k == q.k;
  }
  friend bool operator!=(const MordellPoint& p, const MordellPoint& q) {
    return !(p == q);
  }
  friend bool operator<(const MordellPoint& p, const MordellPoint& q) {
    return std::tie(p.X, p.Y) < std::tie(q.X, q.Y);
  }
};

// All known integral points for one k, sorted by (X, Y) without duplicates.
// complete_flag is false whenever any contributing Thue solve was
// bound-limited rather than provably covering the X search ceiling.
struct SolutionSet {
  Int k;
  std::vector<MordellPoint> points;
  bool complete_flag = false;

  std::size_t n_k() const { return points.size(); }
};

}  // namespace mordell
