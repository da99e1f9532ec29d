#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dpc/canonical.hpp"
#include "dpc/critical.hpp"
#include "dpc/enumerate.hpp"
#include "dpc/graph_io.hpp"
#include "dpc/ore.hpp"

using namespace dpc;

TEST_CASE("h-minimality examples") {
  MultiGraph k4 = complete_graph(4);
  MinimalityResult r = is_h_minimal(k4, HFunction::constant(4, 3));
  CHECK(r.minimal);
  REQUIRE(r.witness.has_value());
  CHECK_FALSE(find_transversal(k4, *r.witness).has_value());

  MultiGraph c5 = cycle_graph(5);
  CHECK(is_h_minimal(c5, HFunction::constant(5, 2)).minimal);

  // K4 plus a pendant vertex: the pendant edge is deletable.
  MultiGraph k4p(5);
  for (auto [u, v] : complete_graph(4).adjacent_pairs()) k4p.add_edge(u, v);
  k4p.add_edge(3, 4);
  CHECK_FALSE(is_h_minimal(k4p, HFunction::constant(5, 3)).minimal);
}

TEST_CASE("edge-deletion minimality equals the exhaustive subgraph check on n <= 4") {
  // Oracle: check every proper subgraph (edge subsets with multiplicities,
  // vertex subsets) rather than only single-edge deletions.
  auto exhaustive_minimal = [](const MultiGraph& g, const HFunction& h) {
    if (is_dp_colorable(g, h).colorable) return false;
    auto pairs = g.adjacent_pairs();
    int np = static_cast<int>(pairs.size());
    std::vector<int> mults(np);
    for (int i = 0; i < np; i++) mults[i] = g.mult(pairs[i].first, pairs[i].second);
    // Vertex-deleted subgraphs.
    for (int v = 0; v < g.order(); v++) {
      VertexSet rest = VertexSet::full(g.order());
      rest.remove(v);
      if (rest.empty()) continue;
      MultiGraph sub = g.induced(rest);
      std::vector<int> hh;
      for (int w : rest.members()) hh.push_back(h(w));
      if (!is_dp_colorable_demand(sub, hh).colorable) return false;
    }
    // Proper edge sub-multisets on the full vertex set.
    std::function<bool(int, MultiGraph&)> rec = [&](int i, MultiGraph& cur) -> bool {
      if (i == np) {
        if (cur == g) return true;  // not proper
        return is_dp_colorable_demand(cur, h.values).colorable;
      }
      for (int m = 0; m <= mults[i]; m++) {
        cur.set_mult(pairs[i].first, pairs[i].second, m);
        if (!rec(i + 1, cur)) return false;
      }
      cur.set_mult(pairs[i].first, pairs[i].second, mults[i]);
      return true;
    };
    MultiGraph work = g;
    return rec(0, work);
  };
  std::mt19937 rng(5150);
  int tested = 0;
  for (const MultiGraph& g : enumerate_multigraphs(4, 2)) {
    if (g.order() != 4) continue;
    for (int t = 0; t < 2; t++) {
      std::vector<int> hv(4);
      for (int v = 0; v < 4; v++) hv[v] = 1 + static_cast<int>(rng() % 3);
      HFunction h(hv);
      CHECK(is_h_minimal(g, h).minimal == exhaustive_minimal(g, h));
      tested++;
    }
  }
  CHECK(tested > 50);
}

TEST_CASE("DP 4-criticality of the exceptional graphs") {
  CHECK(is_dp_k_critical(complete_graph(4), 4));
  CHECK(is_dp_k_critical(moser_spindle(), 4));
  CHECK(is_dp_k_critical(cycle_graph(5), 3));
  CHECK_FALSE(is_dp_k_critical(complete_graph(5), 4));
  CHECK_FALSE(is_dp_k_critical(cycle_graph(6), 4));
  MultiGraph k4me = complete_graph(4);
  k4me.remove_edge(0, 1);
  CHECK_FALSE(is_dp_k_critical(k4me, 4));
}

TEST_CASE("HL minimality") {
  MultiGraph k4 = complete_graph(4);
  SolveResult r = is_dp_colorable(k4, HFunction::constant(4, 3));
  REQUIRE(r.witness.has_value());
  CHECK(is_HL_minimal(k4, *r.witness));

  // C4 with the twisted 2-cover is minimal; with the identity cover it is
  // colorable, hence not minimal.
  MultiGraph c4 = cycle_graph(4);
  Cover tw = identity_cover(c4, {2, 2, 2, 2});
  int p = tw.pair_index(0, 3);
  tw.matchings[p][0].pairs = {{0, 1}, {1, 0}};
  CHECK(is_HL_minimal(c4, tw));
  CHECK_FALSE(is_HL_minimal(c4, identity_cover(c4, {2, 2, 2, 2})));
}

TEST_CASE("theorem bound outcomes") {
  CHECK(check_theorem_bound(complete_graph(4)) == BoundOutcome::Exceptional);
  CHECK(check_theorem_bound(moser_spindle()) == BoundOutcome::Exceptional);
  // The spindle misses the numeric bound: 5*11 = 55 < 8*7 + 1 = 57.
  MultiGraph sp = moser_spindle();
  CHECK(5 * sp.edge_count() < 8 * sp.order() + 1);
  CHECK_THROWS(check_theorem_bound(cycle_graph(5)));
}

TEST_CASE("scan n = 4 finds exactly K4") {
  ScanReport rep = scan_critical(4);
  CHECK(rep.candidates == 1);
  REQUIRE(rep.hits.size() == 1);
  CHECK(rep.hits[0].graph6 == emit_graph6(canonical_relabel(complete_graph(4)).graph));
  CHECK(rep.min_edges == 6);
  CHECK(rep.hits[0].outcome == BoundOutcome::Exceptional);
  CHECK(rep.dichotomy_failures == 0);
}

TEST_CASE("scan n = 5: no DP 4-critical graph on 5 vertices") {
  // 4-Ore sizes are 4, 7, 10, ...; a hit at n = 5 would need 5m >= 41,
  // i.e. m >= 9 of the 10 possible edges. The scan decides it exhaustively.
  ScanReport rep = scan_critical(5);
  for (const ScanHit& h : rep.hits) CHECK(h.outcome == BoundOutcome::Bound);
  CHECK(rep.dichotomy_failures == 0);
}

TEST_CASE("theorem 5.1 desk check at n = 2 and 3") {
  for (int n = 2; n <= 3; n++) {
    Theorem51Report rep = check_theorem51(n);
    CHECK(rep.violations == 0);
    CHECK(rep.hl_minimal > 0);
  }
}

TEST_CASE("theorem 5.1 arithmetic spot values") {
  MultiGraph c4 = cycle_graph(4);
  CHECK(rho_graph(c4, HFunction::constant(4, 2)) == -4);
  MultiGraph c5 = cycle_graph(5);
  CHECK(rho_graph(c5, HFunction::constant(5, 2)) == -5);
  MultiGraph e(2);
  e.add_edge(0, 1);
  CHECK(rho_graph(e, HFunction::constant(2, 1)) == -3);
}

TEST_CASE("degeneracy") {
  CHECK(degeneracy(complete_graph(4)) == 3);
  CHECK(degeneracy(cycle_graph(5)) == 2);
  CHECK(degeneracy(path_graph(4)) == 1);
  CHECK(degeneracy(moser_spindle()) == 3);
}
