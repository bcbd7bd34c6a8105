#include "series.hpp"

#include "coeffs.hpp"
#include "errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <tuple>

namespace rspace {

SpectralParam SpectralParam::real(Rational v) {
  SpectralParam p;
  p.kind = Kind::RealRational;
  p.value = std::move(v);
  return p;
}

SpectralParam SpectralParam::imaginary() {
  SpectralParam p;
  p.kind = Kind::PureImaginary;
  return p;
}

SpectralParam SpectralParam::generic_nonreal() {
  SpectralParam p;
  p.kind = Kind::GenericNonReal;
  return p;
}

SpectralParam SpectralParam::parse(const std::string& text) {
  if (text == "i")
    return imaginary();
  if (text == "generic")
    return generic_nonreal();
  return real(parse_rational(text));
}

std::string SpectralParam::str() const {
  switch (kind) {
  case Kind::RealRational: return rational_pretty(value);
  case Kind::PureImaginary: return "i";
  case Kind::GenericNonReal: return "generic";
  }
  return "?";
}

ReducibilityReport reducibility(const CaseSpec& c, const SpectralParam& nu) {
  ReducibilityReport rep;
  if (nu.kind != SpectralParam::Kind::RealRational)
    return rep; // irreducible for every nu with Im nu != 0
  for (int j = 1; j <= c.r; ++j) {
    // Progression anchor p/2 - (j-1)d/2, strictly positive (>= b/4).
    const Rational anchor = c.p / 2 - frac((j - 1) * c.d, 2);
    assert(anchor > 0);
    const Rational neg_off = -nu.value - anchor; // nu = -neg_off - anchor
    const Rational pos_off = nu.value - anchor;  // nu = +pos_off + anchor
    if (is_nonneg_integer(neg_off)) {
      assert(rep.side <= 0);
      rep.side = -1;
      rep.witnesses.push_back({j, to_long(neg_off)});
    }
    if (is_nonneg_integer(pos_off)) {
      assert(rep.side >= 0);
      rep.side = +1;
      rep.witnesses.push_back({j, to_long(pos_off)});
    }
  }
  rep.reducible = !rep.witnesses.empty();
  return rep;
}

bool ChainMember::contains(const Weight& m) const {
  return side < 0 ? m[j - 1] <= bound : m[j - 1] >= bound;
}

CompositionSeries composition_series_closed(const CaseSpec& c,
                                            const SpectralParam& nu) {
  const ReducibilityReport rep = reducibility(c, nu);
  if (!rep.reducible)
    throw DomainError("I(nu) with nu = " + nu.str() +
                      " is irreducible for " + case_name(c));
  CompositionSeries s;
  s.side = rep.side;
  for (const Witness& w : rep.witnesses) {
    ChainMember member;
    member.j = w.j;
    member.side = rep.side;
    if (rep.side < 0) {
      // {m : m_j <= -nu - p/2 + (j-1)d/2}; the threshold equals the offset.
      member.bound = w.offset;
    } else {
      // {m : m_j >= nu - p/2 + (j-1)d/2 + 1} = {m : m_j >= offset + 1}.
      member.bound = w.offset + 1;
    }
    s.chain.push_back(member);
  }
  if (rep.side < 0) {
    // Lower sets grow with j (thresholds increase, coordinates decrease):
    // ascending j is already ascending submodule order.
    std::sort(s.chain.begin(), s.chain.end(),
              [](const ChainMember& a, const ChainMember& b) { return a.j < b.j; });
  } else {
    // Upper sets shrink with smaller threshold-index gap: descending j is
    // ascending submodule order (R_{j_t} smallest).
    std::sort(s.chain.begin(), s.chain.end(),
              [](const ChainMember& a, const ChainMember& b) { return a.j > b.j; });
  }
  return s;
}

bool Constituent::contains(const Weight& m) const {
  if (upper && m[upper->j - 1] > upper->bound)
    return false;
  if (lower && m[lower->j - 1] < lower->bound)
    return false;
  return true;
}

bool Constituent::operator==(const Constituent& o) const {
  const auto tie = [](const Constituent& c) {
    return std::tuple(c.upper.has_value(), c.upper ? c.upper->j : 0,
                      c.upper ? c.upper->bound : 0, c.lower.has_value(),
                      c.lower ? c.lower->j : 0, c.lower ? c.lower->bound : 0);
  };
  return tie(*this) == tie(o);
}

std::string Constituent::str() const {
  std::ostringstream os;
  if (!upper && !lower)
    return "all m";
  bool first = true;
  if (lower) {
    os << "m_" << lower->j << " >= " << lower->bound;
    first = false;
  }
  if (upper) {
    if (!first)
      os << ", ";
    os << "m_" << upper->j << " <= " << upper->bound;
  }
  return os.str();
}

std::vector<Constituent> constituents(const CompositionSeries& s) {
  std::vector<Constituent> out;
  const std::size_t t = s.chain.size();
  for (std::size_t i = 0; i <= t; ++i) {
    Constituent layer;
    if (s.side < 0) {
      // chain[i] = {m_j <= bound}; layer i = chain[i] \ chain[i-1].
      if (i < t)
        layer.upper = Constituent::Upper{s.chain[i].j, s.chain[i].bound};
      if (i > 0)
        layer.lower =
            Constituent::Lower{s.chain[i - 1].j, s.chain[i - 1].bound + 1};
    } else {
      // chain[i] = {m_j >= bound}; layer i = chain[i] \ chain[i-1].
      if (i < t)
        layer.lower = Constituent::Lower{s.chain[i].j, s.chain[i].bound};
      if (i > 0)
        layer.upper =
            Constituent::Upper{s.chain[i - 1].j, s.chain[i - 1].bound - 1};
    }
    out.push_back(layer);
  }
  return out;
}

namespace {
std::string subscript_digits(int v) {
  static const char* sub[10] = {"₀", "₁", "₂", "₃", "₄",
                                "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (char ch : std::to_string(v))
    out += (ch >= '0' && ch <= '9') ? sub[ch - '0'] : std::string(1, ch);
  return out;
}
} // namespace

std::string chain_str(const CompositionSeries& s) {
  std::ostringstream os;
  os << "0";
  const char* letter = (s.side < 0) ? "L" : "R";
  for (const auto& member : s.chain)
    os << " ⊂ " << letter << subscript_digits(member.j);
  os << " ⊂ I(ν)";
  return os.str();
}

long TransitionGraph::node_index(const Weight& m) const {
  return box_index(nodes, m);
}

TransitionGraph build_graph(const CaseSpec& c, const SpectralParam& nu,
                            long M) {
  if (nu.kind != SpectralParam::Kind::RealRational)
    throw DomainError("transition graph requires a real rational nu");
  if (Rational(M) <= abs(nu.value) + c.p / 2)
    throw DomainError("truncation M = " + std::to_string(M) +
                      " insufficient: the sufficiency bound requires M > "
                      "|nu| + p/2 = " +
                      rational_pretty(abs(nu.value) + c.p / 2));
  TransitionGraph g;
  g.cs = c;
  g.nu = nu;
  g.box = M;
  g.nodes = enumerate_box(c, M);
  const Rational scale = Rational(2 * c.n) / c.p;
  g.loops.reserve(g.nodes.size());
  Weight shifted;
  for (long idx = 0; idx < static_cast<long>(g.nodes.size()); ++idx) {
    const Weight& m = g.nodes[idx];
    g.loops.push_back(scale * coeff_C_direct(c, m) * nu.value);
    for (int k = 1; k <= c.r; ++k) {
      // Up edge m -> m + e_k.
      shifted = m;
      ++shifted[k - 1];
      if (shifted[0] <= M && is_dominant(shifted)) {
        const long to = g.node_index(shifted);
        assert(to >= 0);
        g.edges.push_back({idx, to, k, true,
                           scale * coeff_A(c, m, k) *
                               (nu.value + shift_up(c, m, k))});
      }
      // Down edge m -> m - e_k.
      shifted = m;
      --shifted[k - 1];
      if (shifted[k - 1] >= 0 && is_dominant(shifted)) {
        const long to = g.node_index(shifted);
        assert(to >= 0);
        g.edges.push_back({idx, to, k, false,
                           scale * coeff_B(c, m, k) *
                               (nu.value - shift_down(c, m, k))});
      }
    }
  }
  return g;
}

namespace {

// Iterative Tarjan over the nonzero edges.
struct TarjanState {
  std::vector<std::vector<long>> adj;
  std::vector<int> index, lowlink, comp;
  std::vector<bool> on_stack;
  std::vector<long> stack;
  int next_index = 0, comp_count = 0;
};

void tarjan(TarjanState& st, long root) {
  // Explicit DFS stack of (vertex, next child position).
  std::vector<std::pair<long, std::size_t>> dfs;
  dfs.emplace_back(root, 0);
  st.index[root] = st.lowlink[root] = st.next_index++;
  st.stack.push_back(root);
  st.on_stack[root] = true;
  while (!dfs.empty()) {
    auto& [v, child] = dfs.back();
    if (child < st.adj[v].size()) {
      const long w = st.adj[v][child++];
      if (st.index[w] < 0) {
        st.index[w] = st.lowlink[w] = st.next_index++;
        st.stack.push_back(w);
        st.on_stack[w] = true;
        dfs.emplace_back(w, 0);
      } else if (st.on_stack[w]) {
        st.lowlink[v] = std::min(st.lowlink[v], st.index[w]);
      }
    } else {
      if (st.lowlink[v] == st.index[v]) {
        long w;
        do {
          w = st.stack.back();
          st.stack.pop_back();
          st.on_stack[w] = false;
          st.comp[w] = st.comp_count;
        } while (w != v);
        ++st.comp_count;
      }
      const long finished = v;
      dfs.pop_back();
      if (!dfs.empty()) {
        const long parent = dfs.back().first;
        st.lowlink[parent] = std::min(st.lowlink[parent], st.lowlink[finished]);
      }
    }
  }
}

} // namespace

std::vector<int> strong_components(const TransitionGraph& g, int& count) {
  const long n = static_cast<long>(g.nodes.size());
  TarjanState st;
  st.adj.resize(n);
  for (const auto& e : g.edges)
    if (e.weight != 0)
      st.adj[e.from].push_back(e.to);
  st.index.assign(n, -1);
  st.lowlink.assign(n, -1);
  st.comp.assign(n, -1);
  st.on_stack.assign(n, false);
  for (long v = 0; v < n; ++v)
    if (st.index[v] < 0)
      tarjan(st, v);
  count = st.comp_count;
  // Tarjan numbers components in reverse topological order already
  // (a component is finalized only after everything it reaches).
  return st.comp;
}

GraphSeries composition_series_graph(const TransitionGraph& g) {
  int count = 0;
  const std::vector<int> comp = strong_components(g, count);
  // Verify the condensation is totally ordered: every nonzero edge must go
  // from a higher component id to a lower or equal one (reverse topological
  // numbering), and each consecutive pair must actually be linked.
  std::vector<bool> linked(count, false); // linked[c]: edge from c+1 ... to c?
  for (const auto& e : g.edges) {
    if (e.weight == 0)
      continue;
    const int a = comp[e.from], b = comp[e.to];
    if (a < b)
      throw DomainError("graph condensation is not a chain (unexpected "
                        "component ordering)");
    if (a == b + 1)
      linked[b] = true;
  }
  // Reachability of consecutive components may hop over ids only when the
  // condensation is not a path; demand direct links.
  for (int c2 = 0; c2 + 1 < count; ++c2)
    if (!linked[c2])
      throw DomainError("graph condensation is not a chain (components " +
                        std::to_string(c2 + 1) + " and " + std::to_string(c2) +
                        " not linked)");
  GraphSeries out;
  out.box = g.box;
  out.layers.assign(count, {});
  for (long v = 0; v < static_cast<long>(g.nodes.size()); ++v)
    out.layers[comp[v]].push_back(v);
  for (auto& layer : out.layers)
    std::sort(layer.begin(), layer.end());
  return out;
}

std::string graph_dot(const TransitionGraph& g) {
  int count = 0;
  const std::vector<int> comp = strong_components(g, count);
  static const char* palette[] = {"#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f",
                                  "#cab2d6", "#ffff99", "#1f78b4", "#33a02c"};
  std::ostringstream os;
  os << "digraph transition_graph {\n";
  os << "  label=\"" << case_name(g.cs) << ", nu=" << g.nu.str()
     << ", box=" << g.box << "\";\n";
  os << "  node [style=filled];\n";
  for (long v = 0; v < static_cast<long>(g.nodes.size()); ++v) {
    os << "  n" << v << " [label=\"" << weight_str(g.nodes[v])
       << "\", fillcolor=\"" << palette[comp[v] % 8] << "\"";
    if (g.loops[v] != 0)
      os << ", xlabel=\"loop " << rational_pretty(g.loops[v]) << "\"";
    os << "];\n";
  }
  for (const auto& e : g.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\""
       << rational_pretty(e.weight) << "\"";
    if (e.weight == 0)
      os << ", style=dashed, color=red";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<std::vector<long>>
materialize_layers(const CompositionSeries& s, const std::vector<Weight>& nodes) {
  const std::vector<Constituent> parts = constituents(s);
  std::vector<std::vector<long>> layers(parts.size());
  for (long v = 0; v < static_cast<long>(nodes.size()); ++v) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].contains(nodes[v])) {
        layers[i].push_back(v);
        break; // layers partition the lattice; first match is the layer
      }
    }
  }
  return layers;
}

} // namespace rspace
