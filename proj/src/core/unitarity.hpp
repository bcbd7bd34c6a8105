#pragma once

#include "cases.hpp"
#include "ktype.hpp"
#include "rational.hpp"
#include "series.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rspace {

/// Closed-form invariant norm on a constituent, as a ratio of
/// Siegel-Gindikin Gamma functions
///   Gamma_{k,d}(m + num_shift) / Gamma_{k,d}(m + den_shift),
/// Gamma_{k,d}(s) = prod_{i=1..k} Gamma(s_i - (i-1)d/2), evaluated relative
/// to the normalization t(0) = 1 (so all values are exact rationals).
/// k = 0 encodes the constant 1 (single-K-type constituents).
struct GammaRatio {
  int k = 0;
  int d = 0;
  Rational num_shift;
  Rational den_shift;
  /// prod_{i=1..k} poch(num_shift-(i-1)d/2, m_i) / poch(den_shift-(i-1)d/2, m_i)
  Rational evaluate(const Weight& m) const;
  std::string str() const;
};

/// One entry of the classification of unitarizable constituents.
struct ClassifiedConstituent {
  Rational nu;            ///< real spectral parameter
  Constituent region;     ///< K-type predicate of the constituent
  int critical_index = 0; ///< the coordinate pinned to zero
  bool trivial = false;   ///< single K-type m = 0
  bool quotient = false;  ///< mirror quotient at +|nu| (vs subrep at -|nu|)
  GammaRatio norm;
};

/// All (nu, constituent) pairs carrying an invariant inner product, per
/// family: SL and e6(-26): trivial rep at nu = -p/2 (subrep) and +p/2
/// (quotient); e6(6): additionally the m_2 = 0 constituent at nu = -+3/2;
/// e6(C): at nu = -+3; so(split): m_{j+1} = 0 at nu = -+(r-j), j < r;
/// so(C): m_{j+1} = 0 at nu = -+2(r-j). Sorted by nu, subreps before
/// quotients.
std::vector<ClassifiedConstituent> unitary_constituent_table(const CaseSpec& c);

/// Diagnosis of why a constituent admits no invariant inner product; empty
/// means no obstruction found on the inspected box.
struct ObstructionReport {
  /// K-type in the constituent with C(m) != 0 while nu is real nonzero.
  std::optional<Weight> c_nonzero_at;
  /// Edge (m, k) inside the constituent whose recurrence ratio is negative.
  struct BadRatio {
    Weight m;
    int k;
    Rational ratio;
  };
  std::optional<BadRatio> negative_ratio;
  /// Edge (m, k) whose recurrence denominator m^plus(k) + nu vanishes.
  std::optional<std::pair<Weight, int>> vanished_denominator;
  /// Parameter-level obstruction: generic non-real nu never carries an
  /// invariant form (no K-type witness to point at).
  bool categorical = false;
  std::string note;
  bool empty() const {
    return !categorical && !c_nonzero_at && !negative_ratio &&
           !vanished_denominator;
  }
};

/// Obstruction scan over the constituent's K-types with m_1 <= M.
/// For PureImaginary nu the report is empty with note "unitary principal
/// series"; for GenericNonReal the report carries the categorical
/// obstruction note.
ObstructionReport unitarity_obstruction(const CaseSpec& c,
                                        const SpectralParam& nu,
                                        const Constituent& region, long M);

/// Eigenvalues t(m) of the standard intertwiner I(nu) -> I(-nu) on the
/// constituent's K-types with m_1 <= M, normalized to 1 at the minimal
/// K-type, ordered by the box order.
struct Spectrum {
  std::vector<std::pair<Weight, Rational>> values;
};

/// Propagates t along lattice edges inside the region via
///   t(m + e_k) / t(m) = (m^plus(k) - nu) / (m^plus(k) + nu),
/// verifying path independence on every in-box edge. Returns the
/// obstruction report instead when the constituent is obstructed.
std::variant<Spectrum, ObstructionReport>
spectrum_by_recurrence(const CaseSpec& c, const Rational& nu,
                       const Constituent& region, long M);

/// Closed-form spectrum: the GammaRatio of the classified constituent
/// evaluated on the same K-type set.
Spectrum spectrum_closed_form(const CaseSpec& c,
                              const ClassifiedConstituent& entry, long M);

/// Per-constituent verdicts for a real rational nu.
struct ConstituentVerdict {
  Constituent region;
  bool unitary = false;
  std::optional<ClassifiedConstituent> classification; ///< when unitary
  std::optional<ObstructionReport> obstruction;        ///< when not
};

struct UnitarityReport {
  bool irreducible = false;
  /// For irreducible real nonzero nu: the full-space obstruction.
  std::optional<ObstructionReport> full_space;
  std::vector<ConstituentVerdict> verdicts; ///< bottom-up layers if reducible
  std::string note;
};

/// Unitarity analysis of I(nu) at a spectral parameter: categorical answers
/// for non-real nu; per-layer verdicts (against the classification table,
/// with obstruction scans on the box) for real rational nu.
UnitarityReport unitary_constituents(const CaseSpec& c,
                                     const SpectralParam& nu, long M);

} // namespace rspace
