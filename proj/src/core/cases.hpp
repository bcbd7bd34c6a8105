#pragma once

#include "rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace rspace {

/// The eight non-unital irreducible symmetric R-space families.
enum class Family {
  SL_R,     // sl(r+s, R),  X = real Grassmannian flag component
  SL_C,     // sl(r+s, C)
  SL_H,     // sl(r+s, H)
  E6_M26,   // e6(-26)
  SO_SPLIT, // so(2r+1, 2r+1)
  SO_C,     // so(4r+2, C)
  E6_6,     // e6(6)
  E6_C      // e6(C)
};

/// Structure constants of one case: the dimension n of the nilpotent radical,
/// the genus p, the restricted rank r, and the root multiplicities (d, e, b).
/// They satisfy p = (e+1) + (r-1)d + b/2 and n = r(p + b/2); both identities
/// are asserted at construction time.
struct CaseSpec {
  Family family{};
  int r = 0; ///< restricted rank
  int s = 0; ///< second block parameter (SL families only; 0 otherwise)
  long n = 0;
  Rational p;
  int d = 0;
  int e = 0;
  int b = 0;
};

/// Builds the structure constants for a family at concrete parameters.
/// Throws DomainError naming the violated constraint (SL: s > r >= 1;
/// SO families: r > 1; exceptional families take no parameters).
CaseSpec make_case(Family f, int r = 0, int s = 0);

/// Parses the CLI grammar: "sl(r=2,s=5,R)", "sl(r=1,s=4,H)", "so(r=3,split)",
/// "so(r=2,C)", "e6(6)", "e6(C)", "e6(-26)". Throws UsageError on syntax
/// errors and DomainError on out-of-range parameters.
CaseSpec parse_case(const std::string& text);

/// Canonical printable name in the same grammar parse_case accepts.
std::string case_name(const CaseSpec& c);

std::string family_name(Family f);

/// Half sum shift rho_k = (r-k)d/2 + e/2 + b/4 = (p-1)/2 - (k-1)d/2,
/// 1-based k in [1, r]. Strictly positive; consecutive values differ by d/2.
Rational rho(const CaseSpec& c, int k);

/// {family, params, n, p, r, d, e, b} with p as a "num/den" string.
nlohmann::json case_json(const CaseSpec& c);

/// Rebuilds a CaseSpec from case_json output (used by round-trip checks).
CaseSpec case_from_json(const nlohmann::json& j);

/// One symbolic description row per family (constants as printed formulas),
/// for the parameterless `classify` listing.
struct FamilyRow {
  std::string name, params, n, p, r, d, e, b;
};
std::vector<FamilyRow> family_table();

/// All eight families at small representative parameters (SL at (1,2) and
/// (2,5), SO at r = 2; exceptional as-is) — handy for sweeps in tests.
std::vector<CaseSpec> representative_cases();

} // namespace rspace
