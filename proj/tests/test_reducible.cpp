#include "doctest.h"

#include <set>
#include <stdexcept>
#include <utility>

#include "mordell/forms.hpp"
#include "mordell/reducible.hpp"

using namespace mordell;

namespace {

std::set<std::pair<long, long>> as_set(const std::vector<ReducibleForm>& v) {
  std::set<std::pair<long, long>> s;
  for (const auto& f : v) s.emplace(to_i64(f.B), to_i64(f.C));
  return s;
}

}  // namespace

TEST_CASE("reducible discriminant spot values") {
  CHECK(reducible_discriminant(ReducibleForm{0, -1}) == 108);
  CHECK(reducible_discriminant(ReducibleForm{3, 6}) == 2916);
  CHECK(reducible_discriminant(ReducibleForm{2, 3}) == 0);
  CHECK(reducible_discriminant(ReducibleForm{5, 18}) == 26244);
}

TEST_CASE("reducible discriminant agrees with the form discriminant") {
  for (long B = -6; B <= 6; ++B) {
    for (long C = -6; C <= 6; ++C) {
      ReducibleForm f{B, C};
      CHECK(reducible_discriminant(f) == discriminant(as_cubic_form(f)));
    }
  }
}

TEST_CASE("canonical triple collapse") {
  ReducibleForm c1 = canonical_triple(ReducibleForm{0, -3});
  CHECK(c1 == ReducibleForm{3, 6});
  CHECK(canonical_triple(ReducibleForm{-3, 6}) == ReducibleForm{3, 6});
  CHECK(canonical_triple(ReducibleForm{3, 6}) == ReducibleForm{3, 6});
  // Non-square discriminant: identity.
  CHECK(canonical_triple(ReducibleForm{0, -1}) == ReducibleForm{0, -1});
  CHECK_THROWS_AS(canonical_triple(ReducibleForm{2, 3}),
                  std::invalid_argument);
}

TEST_CASE("square-discriminant mirror classes stay distinct") {
  // D = 26244 = 162^2: the triples of (4,9) and (5,18) are images of each
  // other under B -> -B but share no member, so both are canonical.
  CHECK(canonical_triple(ReducibleForm{4, 9}) == ReducibleForm{4, 9});
  CHECK(canonical_triple(ReducibleForm{5, 18}) == ReducibleForm{5, 18});
  CHECK(canonical_triple(ReducibleForm{-4, 9}) == ReducibleForm{5, 18});
  CHECK(canonical_triple(ReducibleForm{-5, 18}) == ReducibleForm{4, 9});
  auto w = enumerate_reducible(SearchWindow{26243, 26244}, DiscSign::positive);
  CHECK(as_set(w) == std::set<std::pair<long, long>>{{4, 9}, {5, 18}});
}

TEST_CASE("reducible enumeration windows") {
  auto pos = enumerate_reducible(SearchWindow{0, 108}, DiscSign::positive);
  CHECK(as_set(pos) == std::set<std::pair<long, long>>{{0, -1}});

  auto pos2916 = enumerate_reducible(SearchWindow{0, 2916}, DiscSign::positive);
  CHECK(as_set(pos2916).count({3, 6}) == 1);

  auto neg = enumerate_reducible(SearchWindow{0, 27}, DiscSign::negative);
  CHECK(as_set(neg) == std::set<std::pair<long, long>>{{1, 1}});
}

TEST_CASE("reducible enumeration counts at K = 10^5") {
  auto pos = enumerate_reducible(SearchWindow{0, 100000}, DiscSign::positive);
  auto neg = enumerate_reducible(SearchWindow{0, 100000}, DiscSign::negative);
  CHECK(pos.size() == 184);
  CHECK(neg.size() == 39);

  for (const auto& f : pos) {
    Int d = reducible_discriminant(f);
    CHECK(d > 0);
    CHECK(d <= 100000);
    CHECK(canonical_triple(f) == f);  // idempotent on emitted forms
    CHECK(f.B >= 0);
  }
  for (const auto& f : neg) {
    Int d = reducible_discriminant(f);
    CHECK(d < 0);
    CHECK(d >= -100000);
    CHECK(canonical_triple(f) == f);
    CHECK(f.B >= 0);
  }
}

TEST_CASE("parity of BC when 108 divides D") {
  for (DiscSign sign : {DiscSign::positive, DiscSign::negative}) {
    for (const auto& f :
         enumerate_reducible(SearchWindow{0, 100000}, sign)) {
      if (reducible_discriminant(f) % 108 == 0) {
        CHECK(f.B * f.C % 2 == 0);
      }
    }
  }
}

TEST_CASE("closed-form solutions") {
  auto s36 = solve_reducible(ReducibleForm{3, 6});
  CHECK(s36 == std::vector<ThueSolution>{ThueSolution{1, 0}});
  auto s01 = solve_reducible(ReducibleForm{0, -1});
  CHECK(s01 == std::vector<ThueSolution>{ThueSolution{1, 0}});
  auto s21 = solve_reducible(ReducibleForm{2, 1});
  REQUIRE(s21.size() == 2);
  CHECK(s21[0] == ThueSolution{1, 0});
  CHECK(s21[1] == ThueSolution{1, -2});
  // every solution evaluates to 1
  for (const auto& s : s21) {
    CHECK(evaluate(as_cubic_form(ReducibleForm{2, 1}), s.x, s.y) == 1);
  }
}

TEST_CASE("form class adapter") {
  FormClass fc = as_form_class(ReducibleForm{3, 6});
  CHECK(fc.kind == FormKind::reducible);
  CHECK(fc.form == BinaryCubicForm{1, 3, 6, 0});
  CHECK(fc.disc == 2916);
}
