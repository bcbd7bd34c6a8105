#pragma once

#include "cases.hpp"
#include "rational.hpp"

#include <string>
#include <vector>

namespace rspace {

/// Representation classes whose Gelfand-Kirillov dimension the artifact
/// computes.
enum class RepClass {
  UnitaryPrincipalSeries, ///< I(nu), nu in iR: GK dim = n
  SmallConstituent        ///< the classified infinite-dimensional constituent
};

RepClass parse_rep_class(const std::string& text); // "principal" | "small"

/// Positive roots of Delta(k_C, h_C) together with the highest-weight
/// direction lambda of the small constituent's K-types, in a rational
/// coordinate model. For e6(C) the roots live in simple-root coordinates
/// and pair via the E6 Cartan bilinear form; the classical cases use
/// epsilon-coordinates with the Euclidean form.
struct RootSystemData {
  std::string type; ///< "C4", "B2x2" style, "D5", "E6"
  std::vector<std::vector<Rational>> positive_roots;
  std::vector<Rational> lambda; ///< lambda_{(1,0,...,0)} direction
  bool cartan_form = false;
  Rational pairing(const std::vector<Rational>& u,
                   const std::vector<Rational>& v) const;
};

/// Root data for the four families with a small constituent (e6(6), e6(C),
/// so(split), so(C)); throws DomainError for the others.
RootSystemData ktype_root_data(const CaseSpec& c);

/// D = #{alpha in Delta^+ : <lambda, alpha> != 0}; the polynomial degree of
/// dim V^{(m,0,...,0)} in m. Equals 10 (e6(6)), 21 (e6(C)), 4r-2
/// (so(split)), 8r-3 (so(C)).
long degree_count(const CaseSpec& c);

/// Which construction of the minimal nilpotent K_C-orbit applies:
/// 1 = real form with O cap p_C^* = O_min (half-dimension table),
/// 2 = O cap p_C^* empty (su^*, so(k+1,1), sp(p,q), e6(-26), f4(-20) table),
/// 3 = complex algebra viewed as real (doubles the case-1 value).
int orbit_case(const CaseSpec& c);

/// dim O_min^{K_C} from the classification tables.
long minimal_orbit_dim(const CaseSpec& c);

/// GK dimension: n for the unitary principal series of any case; D+1 for
/// the small constituents of the four applicable families (DomainError
/// otherwise).
long gk_dimension(const CaseSpec& c, RepClass rep);

/// "minimal nilpotent K_C-orbit closure" when the configuration is covered
/// by the classification and the dimensions match; "undetermined by this
/// artifact" for configurations outside it.
std::string associated_variety_verdict(const CaseSpec& c, RepClass rep);

/// True when (case, rep) is one of the configurations the classification
/// covers: rank-1 SL / e6(-26) principal series, or a small constituent of
/// e6(6), e6(C), so(split), so(C).
bool verdict_in_scope(const CaseSpec& c, RepClass rep);

} // namespace rspace
