#include "ktype.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cctype>

namespace rspace {

bool is_dominant(const Weight& m) {
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (m[i] < m[i + 1])
      return false;
  return m.empty() || m.back() >= 0;
}

void require_dominant(const CaseSpec& c, const Weight& m) {
  if (static_cast<int>(m.size()) != c.r)
    throw DomainError("weight has " + std::to_string(m.size()) +
                      " entries, case rank is " + std::to_string(c.r));
  if (!is_dominant(m))
    throw DomainError("weight " + weight_str(m) + " is not dominant");
}

Rational two_m_plus_rho(const CaseSpec& c, const Weight& m, int k) {
  return 2 * (Rational(m[k - 1]) + rho(c, k));
}

Rational casimir_eigenvalue(const CaseSpec& c, const Weight& m) {
  require_dominant(c, m);
  Rational sum(0);
  for (int j = 1; j <= c.r; ++j) {
    const Rational mj(m[j - 1]);
    sum += mj * (mj + 2 * rho(c, j));
  }
  return Rational(c.n) / c.p * sum;
}

Rational shift_up(const CaseSpec& c, const Weight& m, int j) {
  if (j < 1 || j > c.r)
    throw DomainError("shift index j=" + std::to_string(j) + " outside [1, r]");
  return Rational(m[j - 1]) + c.p / 2 - frac((j - 1) * c.d, 2);
}

Rational shift_down(const CaseSpec& c, const Weight& m, int j) {
  return shift_up(c, m, j) - 1;
}

namespace {

void enumerate_rec(long bound, int coords_left, Weight& prefix,
                   std::vector<Weight>& out) {
  if (coords_left == 0) {
    out.push_back(prefix);
    return;
  }
  for (long v = 0; v <= bound; ++v) {
    prefix.push_back(v);
    enumerate_rec(v, coords_left - 1, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<Weight> enumerate_box(const CaseSpec& c, long M) {
  if (M < 0)
    throw DomainError("box bound M must be >= 0");
  std::vector<Weight> out;
  Weight prefix;
  // Depth-first with each coordinate bounded by its predecessor yields the
  // dominant weights in ascending lexicographic order.
  enumerate_rec(M, c.r, prefix, out);
  return out;
}

long box_index(const std::vector<Weight>& box, const Weight& m) {
  const auto it = std::lower_bound(box.begin(), box.end(), m);
  if (it == box.end() || *it != m)
    return -1;
  return it - box.begin();
}

std::string weight_str(const Weight& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(m[i]);
  }
  return out + ")";
}

Weight parse_weight(const std::string& csv, int rank) {
  Weight m;
  std::string cur;
  const auto flush = [&]() {
    if (cur.empty())
      throw UsageError("empty weight entry in '" + csv + "'");
    for (char ch : cur)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw UsageError("weight entries must be non-negative integers, got '" +
                         cur + "'");
    m.push_back(std::stol(cur));
    cur.clear();
  };
  for (char ch : csv) {
    if (ch == ',')
      flush();
    else if (!std::isspace(static_cast<unsigned char>(ch)))
      cur += ch;
  }
  flush();
  if (static_cast<int>(m.size()) != rank)
    throw UsageError("weight '" + csv + "' has " + std::to_string(m.size()) +
                     " entries, case rank is " + std::to_string(rank));
  if (!is_dominant(m))
    throw DomainError("weight " + weight_str(m) + " is not dominant");
  return m;
}

} // namespace rspace
