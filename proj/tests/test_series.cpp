#include <doctest.h>

#include "core/cases.hpp"
#include "core/coeffs.hpp"
#include "core/errors.hpp"
#include "core/ktype.hpp"
#include "core/series.hpp"

#include <set>

using namespace rspace;

TEST_CASE("spectral parameter parsing") {
  auto nu = SpectralParam::parse("-3/2");
  CHECK(nu.kind == SpectralParam::Kind::RealRational);
  CHECK(nu.value == frac(-3, 2));
  CHECK(SpectralParam::parse("i").kind == SpectralParam::Kind::PureImaginary);
  CHECK(SpectralParam::parse("generic").kind ==
        SpectralParam::Kind::GenericNonReal);
  CHECK_THROWS_AS(SpectralParam::parse("3/2i"), UsageError);
  CHECK_THROWS_AS(SpectralParam::parse(""), UsageError);
}

TEST_CASE("reducibility points form two disjoint progressions") {
  auto c = make_case(Family::E6_6); // anchors 3 and 3/2

  auto rep = reducibility(c, SpectralParam::parse("-3/2"));
  CHECK(rep.reducible);
  CHECK(rep.side == -1);
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].j == 2);
  CHECK(rep.witnesses[0].offset == 0);

  // nu = -3 meets only the j = 1 progression: 3 - 3/2 is not an integer.
  rep = reducibility(c, SpectralParam::parse("-3"));
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].j == 1);

  // nu = -9/2 meets both: offset 3/2 fails for j = 1... 9/2-3 = 3/2 no,
  // 9/2-3/2 = 3 yes -> only j = 2.
  rep = reducibility(c, SpectralParam::parse("-9/2"));
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].j == 2);
  CHECK(rep.witnesses[0].offset == 3);

  CHECK(!reducibility(c, SpectralParam::parse("-1")).reducible);
  CHECK(!reducibility(c, SpectralParam::parse("0")).reducible);
  CHECK(!reducibility(c, SpectralParam::parse("i")).reducible);
  CHECK(!reducibility(c, SpectralParam::parse("generic")).reducible);

  // e6(C): anchors 6 and 3 with step 3; nu = -6 meets both.
  auto cc = make_case(Family::E6_C);
  rep = reducibility(cc, SpectralParam::parse("-6"));
  REQUIRE(rep.witnesses.size() == 2);
  CHECK(rep.witnesses[0].j == 1);
  CHECK(rep.witnesses[0].offset == 0);
  CHECK(rep.witnesses[1].j == 2);
  CHECK(rep.witnesses[1].offset == 3);

  // Positive side mirrors with side +1.
  rep = reducibility(cc, SpectralParam::parse("6"));
  CHECK(rep.side == 1);
  CHECK(rep.witnesses.size() == 2);

  // sl(2,5,R): anchors 7/4 and 5/4; -7/2 lies on neither progression.
  auto sl = make_case(Family::SL_R, 2, 5);
  CHECK(!reducibility(sl, SpectralParam::parse("-7/2")).reducible);
  rep = reducibility(sl, SpectralParam::parse("-7/4"));
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].j == 1);
}

TEST_CASE("closed-form composition chains") {
  auto cc = make_case(Family::E6_C);
  auto s = composition_series_closed(cc, SpectralParam::parse("-6"));
  CHECK(s.side == -1);
  REQUIRE(s.chain.size() == 2);
  CHECK(s.chain[0].j == 1);
  CHECK(s.chain[0].bound == 0); // L_1 = {m_1 <= 0}
  CHECK(s.chain[1].j == 2);
  CHECK(s.chain[1].bound == 3); // L_2 = {m_2 <= 3}
  CHECK(chain_str(s) == "0 ⊂ L₁ ⊂ L₂ ⊂ I(ν)");

  auto so = make_case(Family::SO_SPLIT, 2);
  s = composition_series_closed(so, SpectralParam::parse("2"));
  CHECK(s.side == 1);
  REQUIRE(s.chain.size() == 2);
  // Submodule order: R_2 = {m_2 >= 2} inside R_1 = {m_1 >= 1}.
  CHECK(s.chain[0].j == 2);
  CHECK(s.chain[0].bound == 2);
  CHECK(s.chain[1].j == 1);
  CHECK(s.chain[1].bound == 1);
  CHECK(chain_str(s) == "0 ⊂ R₂ ⊂ R₁ ⊂ I(ν)");
  CHECK(s.chain[0].contains({3, 2}));
  CHECK(!s.chain[0].contains({3, 1}));

  auto e66 = make_case(Family::E6_6);
  s = composition_series_closed(e66, SpectralParam::parse("-3/2"));
  CHECK(chain_str(s) == "0 ⊂ L₂ ⊂ I(ν)");

  CHECK_THROWS_AS(
      composition_series_closed(e66, SpectralParam::parse("-1")),
      DomainError);
  CHECK_THROWS_AS(composition_series_closed(e66, SpectralParam::parse("i")),
                  DomainError);
}

TEST_CASE("constituents partition the lattice") {
  for (const char* nu : {"-6", "-3", "6"}) {
    auto c = make_case(Family::E6_C);
    auto s = composition_series_closed(c, SpectralParam::parse(nu));
    auto layers = constituents(s);
    CHECK(layers.size() == s.chain.size() + 1);
    for (const auto& m : enumerate_box(c, 12)) {
      int hits = 0;
      for (const auto& layer : layers)
        if (layer.contains(m))
          ++hits;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("constituent labels") {
  auto so = make_case(Family::SO_SPLIT, 2);
  auto s = composition_series_closed(so, SpectralParam::parse("2"));
  auto layers = constituents(s);
  REQUIRE(layers.size() == 3);
  CHECK(layers[0].str() == "m_2 >= 2");
  CHECK(layers[1].str() == "m_1 >= 1, m_2 <= 1");
  CHECK(layers[2].str() == "m_1 <= 0");
  CHECK(layers[0] == layers[0]);
  CHECK(!(layers[0] == layers[1]));
}

TEST_CASE("transition graph construction and guards") {
  auto so = make_case(Family::SO_SPLIT, 2);
  auto nu = SpectralParam::parse("2");
  CHECK_THROWS_AS(build_graph(so, nu, 4), DomainError); // M must exceed 4
  CHECK_THROWS_AS(build_graph(so, SpectralParam::parse("i"), 9), DomainError);

  auto g = build_graph(so, nu, 6);
  CHECK(g.nodes.size() == 28);
  // Every edge weight matches its defining product.
  for (const auto& edge : g.edges) {
    const Weight& m = g.nodes[edge.from];
    const Rational scale = 2 * Rational(so.n) / so.p;
    if (edge.up) {
      CHECK(edge.weight ==
            scale * coeff_A(so, m, edge.k) *
                (nu.value + shift_up(so, m, edge.k)));
    } else {
      CHECK(edge.weight ==
            scale * coeff_B(so, m, edge.k) *
                (nu.value - shift_down(so, m, edge.k)));
    }
  }
  // Vanishing is exactly at the threshold: up-edges die iff nu = -m^+(k),
  // down-edges iff nu = m^-(k); here nu = 2 kills down-edges with
  // m^-(k) = 2.
  for (const auto& edge : g.edges) {
    const Weight& m = g.nodes[edge.from];
    const bool vanished = (edge.weight == 0);
    if (edge.up) {
      CHECK(vanished == (nu.value + shift_up(so, m, edge.k) == 0));
    } else {
      CHECK(vanished == (nu.value - shift_down(so, m, edge.k) == 0));
    }
  }
}

TEST_CASE("graph condensation reproduces the closed-form series") {
  auto so = make_case(Family::SO_SPLIT, 2);
  auto nu = SpectralParam::parse("2");
  auto g = build_graph(so, nu, 6);
  auto gs = composition_series_graph(g);
  REQUIRE(gs.layers.size() == 3);
  CHECK(gs.layers[0].size() == 15); // {m_2 >= 2} inside the box
  CHECK(gs.layers[1].size() == 12);
  CHECK(gs.layers[2].size() == 1);

  auto closed = materialize_layers(composition_series_closed(so, nu), g.nodes);
  CHECK(gs.layers == closed);
}

TEST_CASE("irreducible parameters give strongly connected graphs") {
  auto so = make_case(Family::SO_SPLIT, 2);
  for (const char* nu_text : {"1/2", "-5/3", "7/5"}) {
    auto nu = SpectralParam::parse(nu_text);
    REQUIRE(!reducibility(so, nu).reducible);
    auto g = build_graph(so, nu, 7);
    int count = 0;
    strong_components(g, count);
    CHECK(count == 1);
  }
}

TEST_CASE("component ids are reverse-topological") {
  auto e6c = make_case(Family::E6_C);
  auto nu = SpectralParam::parse("-6");
  // The sufficiency bound is strict: M must exceed |nu| + p/2 = 12.
  auto g = build_graph(e6c, nu, 13);
  int count = 0;
  auto comp = strong_components(g, count);
  CHECK(count == 3);
  for (const auto& edge : g.edges) {
    if (edge.weight == 0)
      continue;
    CHECK(comp[edge.from] >= comp[edge.to]);
  }
}

TEST_CASE("DOT export is deterministic and well-formed") {
  auto so = make_case(Family::SO_SPLIT, 2);
  auto nu = SpectralParam::parse("2");
  auto g = build_graph(so, nu, 5);
  const std::string dot = graph_dot(g);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("(0,0)") != std::string::npos);
  CHECK(dot == graph_dot(build_graph(so, nu, 5)));
}

TEST_CASE("materialized closed-form layers partition the box") {
  auto so = make_case(Family::SO_SPLIT, 3);
  auto nu = SpectralParam::parse("-2");
  auto g = build_graph(so, nu, 8);
  auto layers = materialize_layers(composition_series_closed(so, nu), g.nodes);
  std::set<long> seen;
  std::size_t total = 0;
  for (const auto& layer : layers) {
    total += layer.size();
    seen.insert(layer.begin(), layer.end());
  }
  CHECK(total == g.nodes.size());
  CHECK(seen.size() == g.nodes.size());
  CHECK(composition_series_graph(g).layers == layers);
}
