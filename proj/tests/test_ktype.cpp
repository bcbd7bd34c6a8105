#include <doctest.h>

#include "core/cases.hpp"
#include "core/errors.hpp"
#include "core/ktype.hpp"

using namespace rspace;

TEST_CASE("dominance predicate") {
  CHECK(is_dominant({}));
  CHECK(is_dominant({0}));
  CHECK(is_dominant({3, 3, 1}));
  CHECK(!is_dominant({1, 2}));
  CHECK(!is_dominant({1, -1}));
  auto c = make_case(Family::SO_SPLIT, 2);
  CHECK_THROWS_AS(require_dominant(c, {1, 2}), DomainError);
  CHECK_THROWS_AS(require_dominant(c, {1}), DomainError);
  CHECK_NOTHROW(require_dominant(c, {2, 1}));
}

TEST_CASE("box enumeration is the ascending lexicographic listing") {
  auto c = make_case(Family::SO_SPLIT, 2);
  auto box = enumerate_box(c, 2);
  std::vector<Weight> want = {{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}};
  CHECK(box == want);
  // Rank 2, M = 6: triangular count (M+1)(M+2)/2 = 28.
  CHECK(enumerate_box(c, 6).size() == 28);
  // Rank 1 boxes are paths.
  auto c1 = make_case(Family::E6_M26);
  CHECK(enumerate_box(c1, 8).size() == 9);
  // Rank 3: dominant triples with m_1 <= 3 number C(6,3) = 20.
  auto c3 = make_case(Family::SO_SPLIT, 3);
  CHECK(enumerate_box(c3, 3).size() == 20);
}

TEST_CASE("box index lookup") {
  auto c = make_case(Family::SO_SPLIT, 2);
  auto box = enumerate_box(c, 5);
  for (long i = 0; i < static_cast<long>(box.size()); ++i)
    CHECK(box_index(box, box[i]) == i);
  CHECK(box_index(box, {6, 0}) == -1);
  CHECK(box_index(box, {0, 0}) == 0);
}

TEST_CASE("coordinates and Casimir eigenvalues") {
  auto so_c = make_case(Family::SO_C, 2);
  CHECK(rho(so_c, 1) == frac(7, 2));
  CHECK(rho(so_c, 2) == frac(3, 2));
  CHECK(two_m_plus_rho(so_c, {1, 1}, 1) == 9);
  CHECK(two_m_plus_rho(so_c, {1, 1}, 2) == 5);
  CHECK(casimir_eigenvalue(so_c, {1, 1}) == 30);
  CHECK(casimir_eigenvalue(so_c, {0, 0}) == 0);

  auto e6 = make_case(Family::E6_M26);
  CHECK(rho(e6, 1) == frac(11, 2));
  // pi_m = (n/p) m (m + 11) = (4/3) m (m + 11).
  CHECK(casimir_eigenvalue(e6, {3}) == 56);
}

TEST_CASE("shift values drive the Casimir difference") {
  for (const auto& c : representative_cases()) {
    for (const auto& m : enumerate_box(c, 4)) {
      for (int j = 1; j <= c.r; ++j) {
        CHECK(shift_down(c, m, j) == shift_up(c, m, j) - 1);
        Weight up = m;
        up[j - 1] += 1;
        if (!is_dominant(up))
          continue;
        CHECK(casimir_eigenvalue(c, up) - casimir_eigenvalue(c, m) ==
              2 * c.n / c.p * shift_up(c, m, j));
        CHECK(shift_down(c, up, j) == shift_up(c, m, j));
      }
    }
  }
}

TEST_CASE("weight parsing and printing") {
  auto c = make_case(Family::SO_SPLIT, 3);
  CHECK(parse_weight("3,2,0", c.r) == Weight{3, 2, 0});
  CHECK(parse_weight(" 1 , 1 , 1 ", c.r) == Weight{1, 1, 1});
  CHECK(weight_str({3, 2, 0}) == "(3,2,0)");
  CHECK_THROWS_AS(parse_weight("1,2,3", c.r), DomainError); // not dominant
  CHECK_THROWS_AS(parse_weight("1,1", c.r), UsageError);    // wrong arity
  CHECK_THROWS_AS(parse_weight("1,x,0", c.r), UsageError);
  CHECK_THROWS_AS(parse_weight("", c.r), UsageError);
  CHECK_THROWS_AS(parse_weight("-1,-2,-3", c.r), UsageError);
}
