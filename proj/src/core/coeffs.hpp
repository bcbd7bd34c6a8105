#pragma once

#include "cases.hpp"
#include "ktype.hpp"
#include "rational.hpp"

namespace rspace {

/// Three-term expansion coefficients of the H_0-action on spherical K-types:
///   omega . phi_m = sum_k A(m,k) phi_{m+e_k} + C(m) phi_m
///                 + sum_k B(m,k) phi_{m-e_k},
/// with phi_w := 0 for non-dominant w. In the variable x_k = 2(m_k + rho_k)
/// the coefficients are rational functions with parameters (b, e, d).

/// A(m,k) = (p/2n) (x_k + b/2 + 1)(x_k + b/2 + e) / (x_k (x_k + 1))
///          * prod_{j != k} ((x_k + d)^2 - x_j^2) / (x_k^2 - x_j^2).
/// Zero iff m + e_k is not dominant; strictly positive otherwise.
Rational coeff_A(const CaseSpec& c, const Weight& m, int k);

/// B(m,k): the sign-flipped companion of A,
/// (p/2n) (x_k - b/2 - 1)(x_k - b/2 - e) / (x_k (x_k - 1))
///          * prod_{j != k} ((x_k - d)^2 - x_j^2) / (x_k^2 - x_j^2).
/// Zero when m - e_k is not dominant, EXCEPT at the boundary k = r, m_r = 0,
/// rho_r = 1/2 (families with (b,e) = (2,0)), where the factor
/// (x_r - b/2 - e) cancels the denominator factor (x_r - 1) and the value is
/// nonzero. The cancellation is performed algebraically, never by limits.
Rational coeff_B(const CaseSpec& c, const Weight& m, int k);

/// Normalization value C(m) = 1 - sum_{m+e_k dominant} A(m,k)
///                              - sum_{m-e_k dominant} B(m,k).
/// This is the normative definition; coeff_C_closed must agree with it.
Rational coeff_C_direct(const CaseSpec& c, const Weight& m);

/// Product/partial-fraction closed form:
///   d not in {0,2}:  C = rb/2n - [p b (e + b/2 - 1) / (2n d(d-2))]
///                        * (1 - prod_k (x_k^2-(d-1)^2)/(x_k^2-1))
///   d in {0,2}:      C = rb/2n + [p b (e + b/2 - 1) / (2n)]
///                        * sum_k 1/(1 - x_k^2)
/// valid when 2 m_r + 2 rho_r > 1. At the only boundary (m_r = 0 with
/// rho_r = 1/2, i.e. (b,e) = (2,0)) the correction + B(m,r) applies; the
/// singular sum is then skipped since its prefactor e + b/2 - 1 vanishes.
Rational coeff_C_closed(const CaseSpec& c, const Weight& m);

/// Family-wise description of {m : C(m) = 0}: m = 0 for the SL families and
/// e6(-26); m_2 = 0 for e6(6) and e6(C); m_r = 0 for the SO families.
bool c_zero_locus(const CaseSpec& c, const Weight& m);

} // namespace rspace
