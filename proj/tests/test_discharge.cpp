#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dpc/discharge.hpp"
#include "dpc/multigraph.hpp"
#include "dpc/ore.hpp"
#include "dpc/potential.hpp"

using namespace dpc;

TEST_CASE("pair charges vanish after R2") {
  MultiGraph g(3);
  g.add_edge(0, 1, 2);
  g.add_edge(1, 2);
  DischargeTrace tr = run_discharge_trace(g, HFunction::constant(3, 3));
  for (int u = 0; u < 3; u++)
    for (int v = u + 1; v < 3; v++) CHECK(tr.after_r2.pair2[u][v] == 0);
}

TEST_CASE("K4 final charges: one half each, total rho") {
  MultiGraph k4 = complete_graph(4);
  HFunction h3 = HFunction::constant(4, 3);
  ChargeState cs = run_discharge(k4, h3);
  for (int v = 0; v < 4; v++) CHECK(cs.vertex2[v] == 1);  // charge 1/2
  CHECK(cs.total2(k4) == 2 * rho_graph(k4, h3));          // conservation, rho = 2
}

TEST_CASE("a degree-3 vertex with h = 2 and three low neighbours ends at -2") {
  // K4 with h = (2,3,3,3): vertices 1..3 are low (h = d = 3), vertex 0 is
  // not; S0 = V (bridgeless), so 0 gives 3 * 5/2 and takes 3 * 1/2.
  MultiGraph k4 = complete_graph(4);
  HFunction h({2, 3, 3, 3});
  LowStructure low = identify_S0(k4, h);
  CHECK(low.S0 == VertexSet::full(4));
  CHECK(low.B0.size() == 3);
  CHECK_FALSE(low.B0.contains(0));
  ChargeState cs = run_discharge(k4, h);
  CHECK(cs.vertex2[0] == -4);  // charge -2
}

TEST_CASE("identify_S0 on a bridgeless graph") {
  LowStructure low = identify_S0(cycle_graph(5), HFunction::constant(5, 2));
  CHECK(low.S0 == VertexSet::full(5));
  CHECK(low.low == VertexSet::full(5));
  CHECK(low.x0 == -1);
}

TEST_CASE("identify_S0 picks a pendant triangle") {
  // Two triangles joined by a bridge; with h = 3 both pendant blocks tie at
  // rho = 9, so the canonical-label tie-break picks deterministically.
  MultiGraph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(3, 5);
  g.add_edge(2, 3);
  HFunction h3 = HFunction::constant(6, 3);
  LowStructure low = identify_S0(g, h3);
  CHECK(low.S0.size() == 3);
  CHECK(rho_set(g, h3, low.S0) == 9);
  CHECK(low.x0 >= 0);
  CHECK(low.S0.contains(low.x0));
  CHECK_FALSE(low.S0.contains(low.y0));
  CHECK(g.mult(low.x0, low.y0) == 1);
  CHECK_FALSE(low.pendant_is_bridge);
}

TEST_CASE("identify_S0 prefers the smaller pendant block, then potential") {
  // Triangle - bridge - K4: the triangle is the smaller pendant block.
  MultiGraph g(7);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  for (auto [u, v] : complete_graph(4).adjacent_pairs()) g.add_edge(u + 3, v + 3);
  LowStructure low = identify_S0(g, HFunction::constant(7, 3));
  CHECK(low.S0.size() == 3);
  CHECK(low.S0.contains(0));
}

TEST_CASE("degenerate pendant cut edge is reported") {
  LowStructure low = identify_S0(path_graph(3), HFunction::constant(3, 1));
  CHECK(low.pendant_is_bridge);
  CHECK(low.S0.size() == 2);
}

TEST_CASE("audit on bridgeless and bridged graphs") {
  MultiGraph k4 = complete_graph(4);
  HFunction h3 = HFunction::constant(4, 3);
  ChargeAudit audit = audit_charges(k4, h3, run_discharge(k4, h3));
  CHECK(audit.conservation_ok);
  CHECK(audit.pairs_zero_after_r2);
  CHECK(audit.r3_internal_ok);
  CHECK(audit.ch_S0_identity_ok);
  CHECK(audit.ch_S0_doubled == 2 * rho_graph(k4, h3));

  MultiGraph g(6);  // two triangles + bridge
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(3, 5);
  g.add_edge(2, 3);
  HFunction h6 = HFunction::constant(6, 3);
  ChargeAudit a2 = audit_charges(g, h6, run_discharge(g, h6));
  CHECK(a2.conservation_ok);
  CHECK(a2.ch_S0_identity_ok);  // ch*(S0) = rho(S0) - 5/2
  CHECK(a2.ch_S0_doubled == 2 * 9 - 5);
}

TEST_CASE("randomized conservation and closed forms") {
  std::mt19937 rng(31337);
  int done = 0;
  while (done < 300) {
    int n = 2 + static_cast<int>(rng() % 6);  // up to 7
    MultiGraph g(n);
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++)
        if (rng() % 3 == 0) g.add_edge(u, v, 1 + static_cast<int>(rng() % 2));
    if (!g.connected()) continue;
    std::vector<int> hv(n);
    for (int v = 0; v < n; v++) hv[v] = static_cast<int>(rng() % 4);
    HFunction h(hv);
    DischargeTrace tr = run_discharge_trace(g, h);
    int rho2 = 2 * rho_graph(g, h);
    CHECK(tr.after_r1.total2(g) == rho2);
    CHECK(tr.after_r2.total2(g) == rho2);
    CHECK(tr.after_r3.total2(g) == rho2);
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++) CHECK(tr.after_r2.pair2[u][v] == 0);
    ChargeAudit audit = audit_charges(g, h, tr.after_r3);
    CHECK(audit.conservation_ok);
    CHECK(audit.r3_internal_ok);
    CHECK(audit.ch_S0_identity_ok);
    // Closed form for non-low vertices inside S0: rho(v) minus R2 payments
    // plus half the edges into B0.
    for (int v = 0; v < n; v++) {
      if (!tr.low.S0.contains(v) || tr.low.B0.contains(v)) continue;
      int expect2 = 2 * rho_vertex(h, v);
      for (int u = 0; u < n; u++) {
        int s = g.mult(v, u);
        if (s) expect2 -= 6 * s - 1;
      }
      expect2 += g.edges_between(VertexSet::single(v), tr.low.B0);
      CHECK(tr.after_r3.vertex2[v] == expect2);
    }
    done++;
  }
}
