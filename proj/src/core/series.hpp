#pragma once

#include "cases.hpp"
#include "ktype.hpp"
#include "rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rspace {

/// Spectral parameter nu of the series I(nu). Only the real rational kind
/// carries a value; purely imaginary and generic non-real parameters enter
/// the theory categorically (always irreducible; unitary iff purely
/// imaginary).
struct SpectralParam {
  enum class Kind { RealRational, PureImaginary, GenericNonReal };
  Kind kind = Kind::RealRational;
  Rational value; ///< real part; meaningful only for RealRational

  static SpectralParam real(Rational v);
  static SpectralParam imaginary();
  static SpectralParam generic_nonreal();
  /// "p/q" | "p" | "i" (pure imaginary) | "generic" (non-real, not in iR)
  static SpectralParam parse(const std::string& text);
  std::string str() const;
};

/// One arithmetic-progression membership witnessing reducibility:
/// nu = -offset - p/2 + (j-1)d/2 (side -1) or nu = +offset + p/2 - (j-1)d/2
/// (side +1), offset in N_0. The two progressions never overlap since
/// p/2 - (j-1)d/2 >= b/4 > 0.
struct Witness {
  int j = 0;
  long offset = 0;
};

struct ReducibilityReport {
  bool reducible = false;
  int side = 0; ///< -1 (lower-set chain), +1 (upper-set chain), 0 irreducible
  std::vector<Witness> witnesses; ///< ascending j
};

ReducibilityReport reducibility(const CaseSpec& c, const SpectralParam& nu);

/// One proper term of the composition chain. For side -1 the K-type set is
/// {m : m_j <= bound} with bound = -nu - p/2 + (j-1)d/2; for side +1 it is
/// {m : m_j >= bound} with bound = nu - p/2 + (j-1)d/2 + 1. Bounds are
/// integers by the witness condition.
struct ChainMember {
  int j = 0;
  long bound = 0;
  int side = -1; ///< copied from the series; fixes the bound's direction
  bool contains(const Weight& m) const;
};

/// The (unique) composition series of a reducible I(nu): proper invariant
/// subspaces listed in ascending (submodule) order. Subquotient count is
/// chain.size() + 1.
struct CompositionSeries {
  int side = 0;
  std::vector<ChainMember> chain;
};

/// Throws DomainError when I(nu) is irreducible.
CompositionSeries composition_series_closed(const CaseSpec& c,
                                            const SpectralParam& nu);

/// A composition factor (subquotient layer), cut out of the lattice by at
/// most one lower and one upper one-coordinate constraint.
struct Constituent {
  struct Upper { int j; long bound; }; ///< m_j <= bound
  struct Lower { int j; long bound; }; ///< m_j >= bound
  std::optional<Upper> upper;
  std::optional<Lower> lower;
  bool contains(const Weight& m) const;
  bool operator==(const Constituent& o) const;
  std::string str() const;
};

/// The chain.size()+1 layers of the series in ascending (bottom-up) order:
/// layer 1 is the unique irreducible subrepresentation.
std::vector<Constituent> constituents(const CompositionSeries& s);

/// Human-readable "0 < S_1 < ... < I(nu)" style chain summary, with L_j/R_j
/// labels matching the side.
std::string chain_str(const CompositionSeries& s);

/// H_0-transition graph on the truncated K-type lattice {m : m_1 <= M}.
/// Vertex order is the lex box order. Every structural edge (dominant pair
/// m -> m +- e_k) is stored with its exact weight; a zero weight marks a
/// vanished transition.
struct TransitionGraph {
  CaseSpec cs;
  SpectralParam nu;
  long box = 0;
  std::vector<Weight> nodes;
  struct Edge {
    long from = 0, to = 0;
    int k = 0;       ///< coordinate of the shift
    bool up = false; ///< true: m -> m+e_k, false: m -> m-e_k
    Rational weight; ///< (2n/p) A(m,k)(nu + m^plus(k)) resp.
                     ///< (2n/p) B(m,k)(nu - m^minus(k))
  };
  std::vector<Edge> edges;         ///< grouped by source, ascending
  std::vector<Rational> loops;     ///< (2n/p) C(m) nu per vertex
  long node_index(const Weight& m) const;
};

/// Requires nu.kind = RealRational and M > |nu| + p/2 (the documented
/// sufficiency bound: all vanishing thresholds then lie strictly inside the
/// box); throws DomainError otherwise.
TransitionGraph build_graph(const CaseSpec& c, const SpectralParam& nu,
                            long M);

/// Strongly connected components over the nonzero edges; returns one id per
/// vertex, ids numbered in reverse topological order (0 = a sink component).
std::vector<int> strong_components(const TransitionGraph& g, int& count);

/// Series read off the graph: SCC condensation, verified to be a total
/// order; layers returned bottom-up (sink = irreducible subrepresentation
/// first) as vertex-index sets.
struct GraphSeries {
  long box = 0;
  std::vector<std::vector<long>> layers; ///< bottom-up, each sorted
};

GraphSeries composition_series_graph(const TransitionGraph& g);

/// Deterministic Graphviz rendering; vanished edges are drawn dashed red,
/// vertices are colored by component, loop weights are edge labels.
std::string graph_dot(const TransitionGraph& g);

/// Materializes a closed-form series on the box for comparison with
/// GraphSeries: layer-wise sorted vertex-index sets, bottom-up.
std::vector<std::vector<long>> materialize_layers(const CompositionSeries& s,
                                                  const std::vector<Weight>& nodes);

} // namespace rspace
