#pragma once

#include "cases.hpp"
#include "ktype.hpp"
#include "rational.hpp"

#include <random>
#include <vector>

namespace rspace {

/// Instance of the rational-function identity underlying the closed form of
/// the normalization coefficient: free parameters (alpha, beta, gamma) and
/// variables x_1, ..., x_r. Specializing x_k = 2(m_k + rho_k),
/// alpha = b/2 + 1, beta = b/2 + e, gamma = d recovers the coefficient sum
/// via C(m) = 1 - (p/2n) d(x).
struct IdentityInstance {
  int r = 0;
  std::vector<Rational> x;
  Rational alpha, beta, gamma;
};

/// Instance invariants: x_k nonzero, |x_k| pairwise distinct, x_k != +-1.
/// Throws DomainError when violated.
void check_instance(const IdentityInstance& inst);

/// a(x,k) = (x_k+alpha)(x_k+beta) / (x_k(x_k+1))
///          * prod_{j!=k} ((x_k+gamma)^2 - x_j^2)/(x_k^2 - x_j^2)
Rational term_a(const IdentityInstance& inst, int k);

/// b(x,k): the sign-flipped companion (alpha, beta, gamma, +1 negated).
Rational term_b(const IdentityInstance& inst, int k);

/// d(x) = sum_k (a(x,k) + b(x,k)), evaluated term by term.
Rational d_bruteforce(const IdentityInstance& inst);

/// Closed form:
///   gamma not in {0,2}: 2r + [2(1-alpha)(1-beta)/(gamma(gamma-2))]
///                         * (1 - prod_k ((gamma-1)^2 - x_k^2)/(1 - x_k^2))
///   gamma in {0,2}:     2r - 2(1-alpha)(1-beta) sum_k 1/(1 - x_k^2)
Rational d_closed(const IdentityInstance& inst);

/// sum_k y_k^m / prod_{j!=k} (y_k - y_j); zero for 0 <= m < N-1, one for
/// m = N-1 (the Lagrange interpolation leading coefficient). Requires
/// pairwise distinct y.
Rational lagrange_sum(const std::vector<Rational>& y, long m);

/// Reproducible pseudo-random instance with the invariants enforced by
/// construction: positive x_k with bounded numerators/denominators,
/// parameters alpha, beta in [-40, 40], gamma either generic (not 0 or 2)
/// or sampled from {0, 2} when special_gamma is set.
IdentityInstance random_instance(std::mt19937_64& rng, int r,
                                 bool special_gamma);

/// Cross-module consistency: for a case and dominant m with
/// 2 m_r + 2 rho_r > 1, both d evaluations reproduce the normalization
/// coefficient via C(m) = 1 - (p/2n) d(x). Returns true on exact agreement.
bool coeff_consistency(const CaseSpec& c, const Weight& m);

} // namespace rspace
