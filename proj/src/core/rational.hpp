#pragma once

#include <gmpxx.h>

#include <string>

namespace rspace {

/// Exact arbitrary-precision rational scalar. All structural data —
/// eigenvalues, expansion coefficients, edge weights, thresholds, norms —
/// is computed in this type; nothing is ever rounded to floating point.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonicalized fraction num/den. (The raw two-argument mpq_class
/// constructor leaves the value unreduced, which silently breaks
/// comparisons; always build fractions through here.)
Rational frac(long num, long den);

/// Parses "p/q" or "p" (optional sign, arbitrary precision).
/// Throws UsageError on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical serialization "num/den" with den >= 1 and gcd(num,den) = 1.
std::string rational_str(const Rational& q);

/// Human form: "num" when den == 1, otherwise "num/den".
std::string rational_pretty(const Rational& q);

bool is_integer(const Rational& q);

/// True iff q is an integer >= 0.
bool is_nonneg_integer(const Rational& q);

/// Exact conversion of an integer rational; throws DomainError otherwise.
long to_long(const Rational& q);

/// Rising factorial a(a+1)...(a+n-1); the empty product (n = 0) is 1.
Rational poch(const Rational& a, long n);

} // namespace rspace
