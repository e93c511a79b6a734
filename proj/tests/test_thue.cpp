#include "doctest.h"

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mordell/forms.hpp"
#include "mordell/thue.hpp"

using namespace mordell;

namespace {

SolverConfig explicit_cfg(long yb) {
  SolverConfig cfg;
  cfg.y_bound = yb;
  cfg.bound_policy = BoundPolicy::explicit_bound;
  return cfg;
}

std::set<std::pair<long, long>> as_set(const std::vector<ThueSolution>& v) {
  std::set<std::pair<long, long>> s;
  for (const auto& t : v) s.emplace(to_i64(t.x), to_i64(t.y));
  return s;
}

}  // namespace

TEST_CASE("solve_thue on the k = 1 class") {
  auto sols = solve_thue(BinaryCubicForm{1, 0, -2, 6}, explicit_cfg(10));
  CHECK(as_set(sols) == std::set<std::pair<long, long>>{{1, 0}, {1, 1}});
  // sorted output
  REQUIRE(sols.size() == 2);
  CHECK(sols[0] == ThueSolution{1, 0});
  CHECK(sols[1] == ThueSolution{1, 1});
}

TEST_CASE("solve_thue rejects reducible and degenerate input") {
  CHECK_THROWS_AS(solve_thue(BinaryCubicForm{1, 0, -3, 10}, explicit_cfg(10)),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_thue(BinaryCubicForm{1, 1, 1, 2}, explicit_cfg(10)),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_thue(BinaryCubicForm{1, 1, 1, 1}, explicit_cfg(10)),
                  std::invalid_argument);
}

TEST_CASE("monic root extraction finds roots at segment boundaries") {
  // F(0,1) = 1 and F(1,0) = 1 both hold for (1,1,-3,1); a regression for
  // the piecewise-monotone bisection (the cubic in u has three real roots).
  auto sols = solve_thue(BinaryCubicForm{1, 1, -3, 1}, explicit_cfg(6));
  CHECK(as_set(sols).count({1, 0}) == 1);
  CHECK(as_set(sols).count({0, 1}) == 1);
}

TEST_CASE("solutions evaluate to 1 and are coprime") {
  std::vector<BinaryCubicForm> forms = {
      {1, 0, -2, 6}, {1, 1, -3, 1}, {1, 0, -1, -1}, {1, 0, 1, 1},
      {2, 1, -1, -1}, {1, 1, 1, 3}, {3, 1, -2, -3},
  };
  for (const auto& F : forms) {
    if (discriminant(F) == 0 || !is_irreducible(F)) continue;
    for (const auto& s : solve_thue(F, explicit_cfg(60))) {
      CHECK(evaluate(F, s.x, s.y) == 1);
      CHECK(gcd(s.x, s.y) == 1);
    }
  }
}

TEST_CASE("raising the bound only adds solutions") {
  BinaryCubicForm F{1, 0, -1, -1};
  auto small = as_set(solve_thue(F, explicit_cfg(5)));
  auto large = as_set(solve_thue(F, explicit_cfg(80)));
  for (const auto& s : small) CHECK(large.count(s) == 1);
  CHECK(small.size() <= large.size());
}

TEST_CASE("default_bound branches") {
  SolverConfig cfg;
  CHECK(default_bound(Int(17), cfg) == 10000);
  CHECK(default_bound(Int(-2), cfg, HessianForm{3, 2, 1}) == 142);
  // Doubling the coefficient never lowers either branch.
  SolverConfig big = cfg;
  big.hall_coeff = Rational{100, 1};
  CHECK(default_bound(Int(17), big) >= default_bound(Int(17), cfg));
  CHECK(default_bound(Int(-2), big, HessianForm{3, 2, 1}) >=
        default_bound(Int(-2), cfg, HessianForm{3, 2, 1}));
}

TEST_CASE("hall-derived x_max") {
  SolverConfig cfg;
  CHECK(hall_x_max(Int(17), cfg) == 722500);
  CHECK(hall_x_max(Int(-2), cfg) == 10000);
  cfg.hall_coeff = Rational{3, 2};
  CHECK(hall_x_max(Int(-2), cfg) == 9);  // ceil((3*2)^2 / 2^2)
}

TEST_CASE("explicit y_bound must be positive") {
  SolverConfig cfg = explicit_cfg(0);
  CHECK_THROWS_AS(solve_thue(BinaryCubicForm{1, 0, -2, 6}, cfg),
                  std::invalid_argument);
}

TEST_CASE("hall-derived policy is self-contained") {
  // Under the default policy the solver derives its own bound from the
  // form discriminant; the k = 1 class still yields both solutions.
  SolverConfig cfg;
  auto sols = solve_thue(BinaryCubicForm{1, 0, -2, 6}, cfg);
  CHECK(as_set(sols).count({1, 0}) == 1);
  CHECK(as_set(sols).count({1, 1}) == 1);
}
