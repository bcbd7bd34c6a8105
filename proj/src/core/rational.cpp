#include "rational.hpp"

#include "errors.hpp"

#include <cctype>

namespace rspace {

Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

// Parses "[+-]?digits" into (sign, digit string); returns false on mismatch.
bool split_signed_digits(const std::string& part, int& sign, std::string& digits) {
  std::size_t i = 0;
  sign = 1;
  if (i < part.size() && (part[i] == '+' || part[i] == '-')) {
    if (part[i] == '-')
      sign = -1;
    ++i;
  }
  if (i >= part.size())
    return false;
  for (std::size_t j = i; j < part.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(part[j])))
      return false;
  digits = part.substr(i);
  return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
  const auto bad = [&]() {
    return UsageError("malformed rational '" + text + "' (expected p or p/q)");
  };
  if (text.empty())
    throw bad();
  const std::size_t slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  int num_sign = 1, den_sign = 1;
  std::string num_digits, den_digits = "1";
  if (!split_signed_digits(num_part, num_sign, num_digits))
    throw bad();
  if (slash != std::string::npos) {
    if (!split_signed_digits(text.substr(slash + 1), den_sign, den_digits))
      throw bad();
  }
  Integer num(num_digits), den(den_digits);
  if (den == 0)
    throw UsageError("zero denominator in rational '" + text + "'");
  num *= num_sign * den_sign;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_pretty(const Rational& q) {
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return rational_str(q);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_nonneg_integer(const Rational& q) {
  return q.get_den() == 1 && q.get_num() >= 0;
}

long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw DomainError("rational " + rational_str(q) + " is not a machine integer");
  return q.get_num().get_si();
}

Rational poch(const Rational& a, long n) {
  Rational acc(1);
  Rational term(a);
  for (long i = 0; i < n; ++i) {
    acc *= term;
    term += 1;
  }
  return acc;
}

} // namespace rspace
