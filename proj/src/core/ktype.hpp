#pragma once

#include "cases.hpp"
#include "rational.hpp"

#include <string>
#include <vector>

namespace rspace {

/// Highest weight of a spherical K-type, stored as the coefficient tuple
/// (m_1, ..., m_r). Dominant means m_1 >= m_2 >= ... >= m_r >= 0.
using Weight = std::vector<long>;

bool is_dominant(const Weight& m);

/// Throws DomainError unless m is dominant with length c.r.
void require_dominant(const CaseSpec& c, const Weight& m);

/// x_k = 2(m_k + rho_k), the variable in which all coefficient formulas
/// become rational functions with integer shift parameters.
Rational two_m_plus_rho(const CaseSpec& c, const Weight& m, int k);

/// Casimir eigenvalue pi_m = (n/p) sum_j m_j(m_j + 2 rho_j)
///                         = (n/p) sum_j (m_j^2 + (p-1-(j-1)d) m_j).
Rational casimir_eigenvalue(const CaseSpec& c, const Weight& m);

/// m^plus(j) = m_j + p/2 - (j-1)d/2. Satisfies
/// pi_{m+e_j} - pi_m = (2n/p) m^plus(j).
Rational shift_up(const CaseSpec& c, const Weight& m, int j);

/// m^minus(j) = (m_j - 1) + p/2 - (j-1)d/2; equals shift_up at m - e_j.
Rational shift_down(const CaseSpec& c, const Weight& m, int j);

/// All dominant weights with m_1 <= M, in ascending lexicographic order
/// (e.g. r=2, M=2: (0,0), (1,0), (1,1), (2,0), (2,1), (2,2)).
std::vector<Weight> enumerate_box(const CaseSpec& c, long M);

/// Index of m in the lex-ordered box listing, or -1 when absent.
long box_index(const std::vector<Weight>& box, const Weight& m);

std::string weight_str(const Weight& m);

/// Parses "m1,m2,..." with exactly `rank` entries; validates dominance.
Weight parse_weight(const std::string& csv, int rank);

} // namespace rspace
