#include <doctest.h>

#include "core/cases.hpp"
#include "core/errors.hpp"
#include "core/gkdim.hpp"

using namespace rspace;

TEST_CASE("rep class parsing") {
  CHECK(parse_rep_class("principal") == RepClass::UnitaryPrincipalSeries);
  CHECK(parse_rep_class("small") == RepClass::SmallConstituent);
  CHECK_THROWS_AS(parse_rep_class("huge"), UsageError);
  CHECK_THROWS_AS(parse_rep_class(""), UsageError);
}

TEST_CASE("root system inventories") {
  // e6(6): k = sp(4), root system C4, 16 positive roots.
  auto data = ktype_root_data(make_case(Family::E6_6));
  CHECK(data.type == "C4");
  CHECK(data.positive_roots.size() == 16);
  CHECK(!data.cartan_form);

  // e6(C): k = e6 itself, 36 positive roots, Cartan-matrix pairing.
  data = ktype_root_data(make_case(Family::E6_C));
  CHECK(data.type == "E6");
  CHECK(data.positive_roots.size() == 36);
  CHECK(data.cartan_form);
  // lambda is the highest root: squared length 2, and <lambda, alpha> >= 0
  // with values in {0, 1, 2} for every positive root.
  CHECK(data.pairing(data.lambda, data.lambda) == 2);
  for (const auto& alpha : data.positive_roots) {
    const Rational v = data.pairing(data.lambda, alpha);
    CHECK(v >= 0);
    CHECK(v <= 2);
  }

  // so(split, r): k = so(r) x so(r+1) ~ B x B, 2r^2 positive roots total
  // in the ambient product coordinates.
  for (int r : {2, 3, 4}) {
    data = ktype_root_data(make_case(Family::SO_SPLIT, r));
    CHECK(data.positive_roots.size() == static_cast<std::size_t>(2 * r * r));
  }

  // so(C, r): k = so(2r+1, C) as a complex group, type D_{2r+1} ambient
  // count (2r+1)(2r) positive roots.
  for (int r : {2, 3, 4}) {
    data = ktype_root_data(make_case(Family::SO_C, r));
    CHECK(data.positive_roots.size() ==
          static_cast<std::size_t>((2 * r + 1) * 2 * r));
  }

  CHECK_THROWS_AS(ktype_root_data(make_case(Family::SL_R, 2, 5)), DomainError);
  CHECK_THROWS_AS(ktype_root_data(make_case(Family::E6_M26)), DomainError);
}

TEST_CASE("growth degree of the small K-type string") {
  CHECK(degree_count(make_case(Family::E6_6)) == 10);
  CHECK(degree_count(make_case(Family::E6_C)) == 21);
  for (int r : {2, 3, 4, 5}) {
    CHECK(degree_count(make_case(Family::SO_SPLIT, r)) == 4 * r - 2);
    CHECK(degree_count(make_case(Family::SO_C, r)) == 8 * r - 3);
  }
}

TEST_CASE("gk dimension values") {
  // Unitary principal series: always the real dimension n of the space.
  for (const auto& c : representative_cases())
    CHECK(gk_dimension(c, RepClass::UnitaryPrincipalSeries) == c.n);

  // Small constituents: degree + 1.
  CHECK(gk_dimension(make_case(Family::E6_6), RepClass::SmallConstituent) ==
        11);
  CHECK(gk_dimension(make_case(Family::E6_C), RepClass::SmallConstituent) ==
        22);
  for (int r : {2, 3, 4}) {
    CHECK(gk_dimension(make_case(Family::SO_SPLIT, r),
                       RepClass::SmallConstituent) == 4 * r - 1);
    CHECK(gk_dimension(make_case(Family::SO_C, r),
                       RepClass::SmallConstituent) == 8 * r - 2);
  }

  // Families without a small constituent reject the request.
  CHECK_THROWS_AS(
      gk_dimension(make_case(Family::SL_R, 2, 5), RepClass::SmallConstituent),
      DomainError);
  CHECK_THROWS_AS(
      gk_dimension(make_case(Family::E6_M26), RepClass::SmallConstituent),
      DomainError);
}

TEST_CASE("minimal orbit dimensions match the gk dimensions in scope") {
  // Case 1 real forms: half the complex minimal-orbit dimension tables.
  CHECK(orbit_case(make_case(Family::E6_6)) == 1);
  CHECK(minimal_orbit_dim(make_case(Family::E6_6)) == 11);
  CHECK(orbit_case(make_case(Family::SO_SPLIT, 3)) == 1);
  CHECK(minimal_orbit_dim(make_case(Family::SO_SPLIT, 3)) == 11);

  // Case 3 complexified algebras double the case 1 value.
  CHECK(orbit_case(make_case(Family::E6_C)) == 3);
  CHECK(minimal_orbit_dim(make_case(Family::E6_C)) == 22);
  CHECK(orbit_case(make_case(Family::SO_C, 3)) == 3);
  CHECK(minimal_orbit_dim(make_case(Family::SO_C, 3)) == 22);
  for (int r : {2, 3, 4}) {
    CHECK(minimal_orbit_dim(make_case(Family::SO_SPLIT, r)) == 4 * r - 1);
    CHECK(minimal_orbit_dim(make_case(Family::SO_C, r)) == 8 * r - 2);
  }

  // Case 2 (O cap p_C^* empty) covers su^* and e6(-26); either way the
  // rank-1 orbit dimension equals n.
  CHECK(orbit_case(make_case(Family::SL_R, 1, 2)) == 1);
  CHECK(orbit_case(make_case(Family::SL_C, 1, 4)) == 3);
  CHECK(orbit_case(make_case(Family::SL_H, 1, 3)) == 2);
  CHECK(orbit_case(make_case(Family::E6_M26)) == 2);
  for (auto c : {make_case(Family::SL_R, 1, 2), make_case(Family::SL_C, 1, 4),
                 make_case(Family::SL_H, 1, 3), make_case(Family::E6_M26)})
    CHECK(minimal_orbit_dim(c) == c.n);

  // small constituent: gk dim == orbit dim on all four families.
  for (auto c : {make_case(Family::E6_6), make_case(Family::E6_C),
                 make_case(Family::SO_SPLIT, 4), make_case(Family::SO_C, 2)})
    CHECK(gk_dimension(c, RepClass::SmallConstituent) == minimal_orbit_dim(c));
}

TEST_CASE("verdicts") {
  const std::string minimal = "minimal nilpotent K_C-orbit closure";
  const std::string undetermined = "undetermined by this artifact";

  // Small constituents are attached to the minimal orbit closure.
  for (auto c : {make_case(Family::E6_6), make_case(Family::E6_C),
                 make_case(Family::SO_SPLIT, 2), make_case(Family::SO_C, 4)}) {
    CHECK(verdict_in_scope(c, RepClass::SmallConstituent));
    CHECK(associated_variety_verdict(c, RepClass::SmallConstituent) == minimal);
  }

  // Rank-1 principal series: GK dim n equals the minimal orbit dimension.
  for (auto c : {make_case(Family::SL_R, 1, 2), make_case(Family::SL_C, 1, 2),
                 make_case(Family::SL_H, 1, 2), make_case(Family::E6_M26)}) {
    CHECK(verdict_in_scope(c, RepClass::UnitaryPrincipalSeries));
    CHECK(associated_variety_verdict(c, RepClass::UnitaryPrincipalSeries) ==
          minimal);
    CHECK(gk_dimension(c, RepClass::UnitaryPrincipalSeries) ==
          minimal_orbit_dim(c));
  }

  // Higher-rank principal series are outside the classification.
  for (auto c : {make_case(Family::SL_R, 2, 5), make_case(Family::SO_SPLIT, 3),
                 make_case(Family::E6_C)}) {
    CHECK(!verdict_in_scope(c, RepClass::UnitaryPrincipalSeries));
    CHECK(associated_variety_verdict(c, RepClass::UnitaryPrincipalSeries) ==
          undetermined);
  }
}
