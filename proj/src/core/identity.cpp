#include "identity.hpp"

#include "coeffs.hpp"
#include "errors.hpp"

#include <algorithm>

namespace rspace {

void check_instance(const IdentityInstance& inst) {
  if (static_cast<int>(inst.x.size()) != inst.r)
    throw DomainError("instance has " + std::to_string(inst.x.size()) +
                      " variables for r = " + std::to_string(inst.r));
  for (int k = 0; k < inst.r; ++k) {
    if (inst.x[k] == 0)
      throw DomainError("instance invariant violated: x_" +
                        std::to_string(k + 1) + " = 0");
    if (inst.x[k] == 1 || inst.x[k] == -1)
      throw DomainError("instance invariant violated: x_" +
                        std::to_string(k + 1) + " = +-1");
    for (int j = k + 1; j < inst.r; ++j)
      if (inst.x[k] == inst.x[j] || inst.x[k] == -inst.x[j])
        throw DomainError("instance invariant violated: |x_" +
                          std::to_string(k + 1) + "| = |x_" +
                          std::to_string(j + 1) + "|");
  }
}

namespace {

Rational term(const IdentityInstance& inst, int k, int sign) {
  const Rational& xk = inst.x[k - 1];
  const Rational scalar = (xk + sign * inst.alpha) * (xk + sign * inst.beta) /
                          (xk * (xk + sign));
  Rational prod(1);
  const Rational shifted = xk + sign * inst.gamma;
  for (int j = 1; j <= inst.r; ++j) {
    if (j == k)
      continue;
    const Rational& xj = inst.x[j - 1];
    prod *= (shifted * shifted - xj * xj) / (xk * xk - xj * xj);
  }
  return scalar * prod;
}

} // namespace

Rational term_a(const IdentityInstance& inst, int k) {
  return term(inst, k, +1);
}

Rational term_b(const IdentityInstance& inst, int k) {
  return term(inst, k, -1);
}

Rational d_bruteforce(const IdentityInstance& inst) {
  check_instance(inst);
  Rational acc(0);
  for (int k = 1; k <= inst.r; ++k)
    acc += term_a(inst, k) + term_b(inst, k);
  return acc;
}

Rational d_closed(const IdentityInstance& inst) {
  check_instance(inst);
  const Rational scale = 2 * (1 - inst.alpha) * (1 - inst.beta);
  if (inst.gamma != 0 && inst.gamma != 2) {
    Rational prod(1);
    for (const Rational& x : inst.x) {
      const Rational gm1 = inst.gamma - 1;
      prod *= (gm1 * gm1 - x * x) / (1 - x * x);
    }
    return 2 * inst.r +
           scale / (inst.gamma * (inst.gamma - 2)) * (1 - prod);
  }
  Rational sum(0);
  for (const Rational& x : inst.x)
    sum += 1 / (1 - x * x);
  return 2 * inst.r - scale * sum;
}

Rational lagrange_sum(const std::vector<Rational>& y, long m) {
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = i + 1; j < y.size(); ++j)
      if (y[i] == y[j])
        throw DomainError("lagrange_sum requires pairwise distinct nodes");
  if (m < 0)
    throw DomainError("lagrange_sum power must be >= 0");
  Rational acc(0);
  for (std::size_t k = 0; k < y.size(); ++k) {
    Rational num(1);
    for (long t = 0; t < m; ++t)
      num *= y[k];
    Rational den(1);
    for (std::size_t j = 0; j < y.size(); ++j)
      if (j != k)
        den *= y[k] - y[j];
    acc += num / den;
  }
  return acc;
}

namespace {

// Bounded uniform draw; plain modulo keeps the stream portable.
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

Rational draw_rational(std::mt19937_64& rng, long num_lo, long num_hi,
                       long den_hi) {
  return frac(draw(rng, num_lo, num_hi), draw(rng, 1, den_hi));
}

} // namespace

IdentityInstance random_instance(std::mt19937_64& rng, int r,
                                 bool special_gamma) {
  IdentityInstance inst;
  inst.r = r;
  while (static_cast<int>(inst.x.size()) < r) {
    Rational x = draw_rational(rng, 2, 600, 24);
    if (x == 1)
      continue;
    bool clash = false;
    for (const Rational& prev : inst.x)
      if (prev == x || prev == -x)
        clash = true;
    if (!clash)
      inst.x.push_back(x);
  }
  inst.alpha = draw_rational(rng, -40, 40, 4);
  inst.beta = draw_rational(rng, -40, 40, 4);
  if (special_gamma) {
    inst.gamma = Rational(2 * draw(rng, 0, 1)); // 0 or 2
  } else {
    do {
      inst.gamma = draw_rational(rng, -12, 12, 4);
    } while (inst.gamma == 0 || inst.gamma == 2);
  }
  check_instance(inst);
  return inst;
}

bool coeff_consistency(const CaseSpec& c, const Weight& m) {
  require_dominant(c, m);
  if (2 * Rational(m[c.r - 1]) + 2 * rho(c, c.r) <= 1)
    throw DomainError("coeff_consistency requires 2 m_r + 2 rho_r > 1");
  IdentityInstance inst;
  inst.r = c.r;
  for (int k = 1; k <= c.r; ++k)
    inst.x.push_back(two_m_plus_rho(c, m, k));
  inst.alpha = frac(c.b, 2) + 1;
  inst.beta = frac(c.b, 2) + c.e;
  inst.gamma = c.d;
  const Rational via_brute = 1 - c.p / (2 * c.n) * d_bruteforce(inst);
  const Rational via_closed = 1 - c.p / (2 * c.n) * d_closed(inst);
  const Rational direct = coeff_C_direct(c, m);
  return via_brute == direct && via_closed == direct;
}

} // namespace rspace
