#include "unitarity.hpp"

#include "coeffs.hpp"
#include "errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace rspace {

Rational GammaRatio::evaluate(const Weight& m) const {
  Rational acc(1);
  for (int i = 1; i <= k; ++i) {
    const Rational step((i - 1) * d, 2);
    acc *= poch(num_shift - step, m[i - 1]) / poch(den_shift - step, m[i - 1]);
  }
  return acc;
}

std::string GammaRatio::str() const {
  if (k == 0)
    return "1";
  std::ostringstream os;
  const auto gamma = [&](const Rational& shift) {
    std::ostringstream g;
    if (k == 1)
      g << "Gamma";
    else
      g << "Gamma_{" << k << "," << d << "}";
    g << "(m";
    if (shift != 0)
      g << "+" << rational_pretty(shift);
    g << ")";
    return g.str();
  };
  os << gamma(num_shift) << "/" << gamma(den_shift);
  return os.str();
}

namespace {

// Region {m : m_{j} <= 0}, the K-type support shared by every classified
// constituent (subrepresentation at -|nu|, mirror quotient at +|nu|).
Constituent pinned_region(int j) {
  Constituent region;
  region.upper = Constituent::Upper{j, 0};
  return region;
}

ClassifiedConstituent make_entry(const CaseSpec& c, const Rational& nu,
                                 int critical_index, int display_k,
                                 bool quotient) {
  ClassifiedConstituent entry;
  entry.nu = nu;
  entry.region = pinned_region(critical_index);
  entry.critical_index = critical_index;
  entry.trivial = critical_index == 1;
  entry.quotient = quotient;
  entry.norm.k = display_k;
  entry.norm.d = c.d;
  // Telescoping the edge ratio (m^plus(k) - nu)/(m^plus(k) + nu) yields
  // uniform shifts p/2 -+ nu; a quotient at +|nu| has them swapped relative
  // to the subrep at -|nu| automatically.
  entry.norm.num_shift = c.p / 2 - nu;
  entry.norm.den_shift = c.p / 2 + nu;
  return entry;
}

} // namespace

std::vector<ClassifiedConstituent> unitary_constituent_table(const CaseSpec& c) {
  std::vector<ClassifiedConstituent> table;
  const auto add_pair = [&](const Rational& nu_neg, int critical_index,
                            int display_k) {
    table.push_back(make_entry(c, nu_neg, critical_index, display_k, false));
    table.push_back(make_entry(c, -nu_neg, critical_index, display_k, true));
  };
  switch (c.family) {
  case Family::SL_R:
  case Family::SL_C:
  case Family::SL_H:
  case Family::E6_M26:
    add_pair(-c.p / 2, 1, 1); // trivial rep only
    break;
  case Family::E6_6:
    add_pair(-c.p / 2, 1, 1);       // trivial, nu = -+3
    add_pair(frac(-3, 2), 2, 1); // m_2 = 0 constituent, Gamma(m+9/2)/Gamma(m+3/2)
    break;
  case Family::E6_C:
    add_pair(-c.p / 2, 1, 1); // trivial, nu = -+6
    add_pair(Rational(-3), 2, 1); // m_2 = 0 constituent, Gamma(m+9)/Gamma(m+3)
    break;
  case Family::SO_SPLIT:
    for (int j = 0; j < c.r; ++j)
      add_pair(Rational(-(c.r - j)), j + 1, j + 1);
    break;
  case Family::SO_C:
    for (int j = 0; j < c.r; ++j)
      add_pair(Rational(-2 * (c.r - j)), j + 1, j + 1);
    break;
  }
  std::sort(table.begin(), table.end(),
            [](const ClassifiedConstituent& a, const ClassifiedConstituent& b) {
              if (a.nu != b.nu)
                return a.nu < b.nu;
              return a.critical_index < b.critical_index;
            });
  return table;
}

namespace {

// Weights of the region restricted to the box, in box order.
std::vector<Weight> region_box(const CaseSpec& c, const Constituent& region,
                               long M) {
  std::vector<Weight> out;
  for (const Weight& m : enumerate_box(c, M))
    if (region.contains(m))
      out.push_back(m);
  return out;
}

} // namespace

ObstructionReport unitarity_obstruction(const CaseSpec& c,
                                        const SpectralParam& nu,
                                        const Constituent& region, long M) {
  ObstructionReport rep;
  if (nu.kind == SpectralParam::Kind::PureImaginary) {
    rep.note = "unitary principal series";
    return rep;
  }
  if (nu.kind == SpectralParam::Kind::GenericNonReal) {
    rep.categorical = true;
    rep.note = "nu + conj(nu) != 0 with non-real nu: no invariant form";
    return rep;
  }
  if (nu.value == 0) {
    rep.note = "unitary principal series";
    return rep;
  }
  const std::vector<Weight> members = region_box(c, region, M);
  // Lemma-level test: a real nonzero nu forces C(m) = 0 on every K-type.
  for (const Weight& m : members) {
    if (coeff_C_direct(c, m) != 0) {
      rep.c_nonzero_at = m;
      rep.note = "C(m) != 0 at a constituent K-type while nu is real nonzero";
      return rep;
    }
  }
  // Recurrence ratios must exist and stay positive inside the region.
  Weight up;
  for (const Weight& m : members) {
    for (int k = 1; k <= c.r; ++k) {
      up = m;
      ++up[k - 1];
      if (up[0] > M || !is_dominant(up) || !region.contains(up))
        continue;
      const Rational num = shift_up(c, m, k) - nu.value;
      const Rational den = shift_up(c, m, k) + nu.value;
      if (den == 0) {
        rep.vanished_denominator = {m, k};
        rep.note = "recurrence denominator m^plus(k) + nu vanishes";
        return rep;
      }
      const Rational ratio = num / den;
      if (ratio < 0) {
        rep.negative_ratio = ObstructionReport::BadRatio{m, k, ratio};
        rep.note = "negative norm ratio t(m+e_k)/t(m)";
        return rep;
      }
    }
  }
  return rep;
}

std::variant<Spectrum, ObstructionReport>
spectrum_by_recurrence(const CaseSpec& c, const Rational& nu,
                       const Constituent& region, long M) {
  ObstructionReport obstruction =
      unitarity_obstruction(c, SpectralParam::real(nu), region, M);
  if (!obstruction.empty())
    return obstruction;
  const std::vector<Weight> members = region_box(c, region, M);
  if (members.empty())
    throw DomainError("constituent has no K-types in the box");

  // Propagate from the minimal K-type along in-region edges, then verify
  // every edge ratio once more: agreement on all edges is exactly path
  // independence of the telescoped products.
  std::vector<std::optional<Rational>> t(members.size());
  const auto member_index = [&](const Weight& m) {
    const auto it = std::lower_bound(members.begin(), members.end(), m);
    if (it == members.end() || *it != m)
      return static_cast<long>(-1);
    return static_cast<long>(it - members.begin());
  };
  t[0] = Rational(1);
  // Box order is a linearization compatible with the up-edges inside the
  // region except across different branches; a worklist pass settles all.
  bool changed = true;
  Weight up;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (!t[i])
        continue;
      for (int k = 1; k <= c.r; ++k) {
        up = members[i];
        ++up[k - 1];
        if (up[0] > M || !is_dominant(up) || !region.contains(up))
          continue;
        const long j = member_index(up);
        assert(j >= 0);
        const Rational ratio = (shift_up(c, members[i], k) - nu) /
                               (shift_up(c, members[i], k) + nu);
        const Rational propagated = *t[i] * ratio;
        if (!t[j]) {
          t[j] = propagated;
          changed = true;
        } else if (*t[j] != propagated) {
          throw DomainError("recurrence is path dependent at " +
                            weight_str(up) + " (internal inconsistency)");
        }
      }
    }
  }
  Spectrum spec;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!t[i])
      throw DomainError("constituent K-type " + weight_str(members[i]) +
                        " not reachable along up-edges in the box");
    spec.values.emplace_back(members[i], *t[i]);
  }
  return spec;
}

Spectrum spectrum_closed_form(const CaseSpec& c,
                              const ClassifiedConstituent& entry, long M) {
  Spectrum spec;
  for (const Weight& m : region_box(c, entry.region, M))
    spec.values.emplace_back(m, entry.norm.evaluate(m));
  return spec;
}

UnitarityReport unitary_constituents(const CaseSpec& c,
                                     const SpectralParam& nu, long M) {
  UnitarityReport rep;
  if (nu.kind != SpectralParam::Kind::RealRational) {
    rep.irreducible = true;
    Constituent whole;
    rep.full_space = unitarity_obstruction(c, nu, whole, M);
    rep.note = rep.full_space->note;
    return rep;
  }
  const ReducibilityReport red = reducibility(c, nu);
  if (!red.reducible) {
    rep.irreducible = true;
    Constituent whole;
    rep.full_space = unitarity_obstruction(c, nu, whole, M);
    rep.note = nu.value == 0 ? rep.full_space->note
                             : "irreducible, no invariant form (nu real "
                               "nonzero)";
    return rep;
  }
  const CompositionSeries series = composition_series_closed(c, nu);
  const std::vector<ClassifiedConstituent> table = unitary_constituent_table(c);
  for (const Constituent& layer : constituents(series)) {
    ConstituentVerdict verdict;
    verdict.region = layer;
    for (const ClassifiedConstituent& entry : table) {
      if (entry.nu == nu.value && entry.region == layer) {
        verdict.unitary = true;
        verdict.classification = entry;
        break;
      }
    }
    if (!verdict.unitary)
      verdict.obstruction = unitarity_obstruction(c, nu, layer, M);
    rep.verdicts.push_back(verdict);
  }
  return rep;
}

} // namespace rspace
