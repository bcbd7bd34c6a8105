#include "coeffs.hpp"

#include "errors.hpp"

namespace rspace {

namespace {

// Dominance of m +- e_k without materializing the shifted weight.
bool shift_up_dominant(const Weight& m, int k) {
  return k == 1 || m[k - 2] > m[k - 1];
}

bool shift_down_dominant(const Weight& m, int k) {
  const int r = static_cast<int>(m.size());
  if (k == r)
    return m[r - 1] > 0;
  return m[k - 1] > m[k];
}

// prod_{j != k} ((x_k + shift)^2 - x_j^2) / (x_k^2 - x_j^2)
Rational neighbour_product(const CaseSpec& c, const Weight& m, int k,
                           const Rational& shift) {
  const Rational xk = two_m_plus_rho(c, m, k);
  const Rational xk_shifted_sq = (xk + shift) * (xk + shift);
  const Rational xk_sq = xk * xk;
  Rational acc(1);
  for (int j = 1; j <= c.r; ++j) {
    if (j == k)
      continue;
    const Rational xj = two_m_plus_rho(c, m, j);
    const Rational xj_sq = xj * xj;
    acc *= (xk_shifted_sq - xj_sq) / (xk_sq - xj_sq);
  }
  return acc;
}

Rational prefactor(const CaseSpec& c) { return c.p / (2 * c.n); }

// True on the one boundary where B(m,r) survives a non-dominant shift:
// m_r = 0 with rho_r = 1/2, i.e. (b,e) = (2,0).
bool b_boundary(const CaseSpec& c, const Weight& m, int k) {
  return k == c.r && m[c.r - 1] == 0 && c.b == 2 && c.e == 0;
}

} // namespace

Rational coeff_A(const CaseSpec& c, const Weight& m, int k) {
  require_dominant(c, m);
  if (k < 1 || k > c.r)
    throw DomainError("coefficient index k outside [1, r]");
  if (!shift_up_dominant(m, k))
    return Rational(0);
  const Rational x = two_m_plus_rho(c, m, k);
  const Rational scalar = (x + frac(c.b, 2) + 1) * (x + frac(c.b, 2) + c.e) /
                          (x * (x + 1));
  return prefactor(c) * scalar * neighbour_product(c, m, k, Rational(c.d));
}

Rational coeff_B(const CaseSpec& c, const Weight& m, int k) {
  require_dominant(c, m);
  if (k < 1 || k > c.r)
    throw DomainError("coefficient index k outside [1, r]");
  const Rational x = two_m_plus_rho(c, m, k);
  if (b_boundary(c, m, k)) {
    // With (b,e) = (2,0) and m_r = 0 we have x_r = 1, and the numerator
    // factor (x - b/2 - e) = (x - 1) cancels the denominator factor (x - 1).
    // What remains is the reduced scalar (x - b/2 - 1) / x.
    const Rational scalar = (x - frac(c.b, 2) - 1) / x;
    return prefactor(c) * scalar * neighbour_product(c, m, k, Rational(-c.d));
  }
  if (!shift_down_dominant(m, k))
    return Rational(0);
  const Rational scalar = (x - frac(c.b, 2) - 1) * (x - frac(c.b, 2) - c.e) /
                          (x * (x - 1));
  return prefactor(c) * scalar * neighbour_product(c, m, k, Rational(-c.d));
}

Rational coeff_C_direct(const CaseSpec& c, const Weight& m) {
  require_dominant(c, m);
  Rational value(1);
  for (int k = 1; k <= c.r; ++k) {
    if (shift_up_dominant(m, k))
      value -= coeff_A(c, m, k);
    // The boundary-case nonzero B(m,r) multiplies phi_{m-e_r} = 0 and is
    // deliberately excluded: only dominant targets contribute.
    if (shift_down_dominant(m, k))
      value -= coeff_B(c, m, k);
  }
  return value;
}

Rational coeff_C_closed(const CaseSpec& c, const Weight& m) {
  require_dominant(c, m);
  const Rational lead = Rational(c.r * c.b) / (2 * c.n);
  const Rational corr_scale =
      c.p * c.b * (Rational(c.e) + frac(c.b, 2) - 1) / (2 * c.n);
  Rational value = lead;
  // The correction prefactor e + b/2 - 1 vanishes exactly for the
  // (b,e) = (2,0) families, the only ones where x_r = 1 can occur; skipping
  // the correction there both is the exact value and avoids the singular
  // factors 1/(x_r^2 - 1).
  if (corr_scale != 0) {
    if (c.d != 0 && c.d != 2) {
      Rational prod(1);
      for (int k = 1; k <= c.r; ++k) {
        const Rational x = two_m_plus_rho(c, m, k);
        const Rational x_sq = x * x;
        prod *= (x_sq - (c.d - 1) * (c.d - 1)) / (x_sq - 1);
      }
      value -= corr_scale / Rational(c.d * (c.d - 2)) * (1 - prod);
    } else {
      Rational sum(0);
      for (int k = 1; k <= c.r; ++k) {
        const Rational x = two_m_plus_rho(c, m, k);
        sum += 1 / (1 - x * x);
      }
      value += corr_scale * sum;
    }
  }
  // Boundary 2 m_r + 2 rho_r = 1: the unconstrained partial-fraction identity
  // counts the non-dominant term B(m,r); add it back.
  if (m[c.r - 1] == 0 && rho(c, c.r) == frac(1, 2))
    value += coeff_B(c, m, c.r);
  return value;
}

bool c_zero_locus(const CaseSpec& c, const Weight& m) {
  require_dominant(c, m);
  switch (c.family) {
  case Family::SL_R:
  case Family::SL_C:
  case Family::SL_H:
  case Family::E6_M26: {
    for (long v : m)
      if (v != 0)
        return false;
    return true;
  }
  case Family::E6_6:
  case Family::E6_C:
    return m[1] == 0;
  case Family::SO_SPLIT:
  case Family::SO_C:
    return m[c.r - 1] == 0;
  }
  return false;
}

} // namespace rspace
