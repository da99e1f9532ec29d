#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dpc/multigraph.hpp"
#include "dpc/ore.hpp"
#include "dpc/potential.hpp"

using namespace dpc;

TEST_CASE("vertex potential table") {
  CHECK(rho_vertex_value(3) == 8);
  CHECK(rho_vertex_value(2) == 4);
  CHECK(rho_vertex_value(1) == 1);
  CHECK(rho_vertex_value(0) == -1);
}

TEST_CASE("pair potential") {
  MultiGraph g(3);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 2);
  CHECK(rho_pair(g, 0, 1) == -5);
  CHECK(rho_pair(g, 1, 2) == -11);
  CHECK(rho_pair(g, 0, 2) == 0);
  CHECK_THROWS(rho_pair(g, 1, 1));
}

TEST_CASE("set potential on K4 and the Moser spindle") {
  MultiGraph k4 = complete_graph(4);
  HFunction h3 = HFunction::constant(4, 3);
  CHECK(rho_graph(k4, h3) == 2);  // 4*8 - 6*5, and 3 - s with s = 1

  MultiGraph spindle = moser_spindle();
  CHECK(rho_graph(spindle, HFunction::constant(7, 3)) == 1);  // 3 - s with s = 2

  CHECK(rho_set(k4, h3, VertexSet()) == 0);
  VertexSet tri;
  tri.add(0);
  tri.add(1);
  tri.add(2);
  CHECK(rho_set(k4, h3, tri) == 9);
}

TEST_CASE("submodularity holds exactly") {
  MultiGraph k4 = complete_graph(4);
  HFunction h3 = HFunction::constant(4, 3);
  VertexSet u1, u2;
  u1.add(0);
  u1.add(1);
  u1.add(2);
  u2.add(1);
  u2.add(2);
  u2.add(3);
  CHECK(submodularity_residual(k4, h3, u1, u2) == 0);

  // Disjoint sets with no crossing edges: pure additivity.
  MultiGraph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  VertexSet a, b;
  a.add(0);
  a.add(1);
  b.add(2);
  b.add(3);
  CHECK(submodularity_residual(two, HFunction::constant(4, 2), a, b) == 0);
}

TEST_CASE("submodularity residual is zero on random instances") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 500; trial++) {
    int n = 2 + static_cast<int>(rng() % 6);  // up to 7
    MultiGraph g(n);
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++)
        if (rng() % 2) g.add_edge(u, v, 1 + static_cast<int>(rng() % 3));
    std::vector<int> hv(n);
    for (int v = 0; v < n; v++) hv[v] = static_cast<int>(rng() % 4);
    HFunction h(hv);
    VertexSet u1(rng() & VertexSet::full(n).bits), u2(rng() & VertexSet::full(n).bits);
    CHECK(submodularity_residual(g, h, u1, u2) == 0);
    // Corollary: crossing-edge potential is nonpositive.
    int cross = rho_set(g, h, u1 | u2) + rho_set(g, h, u1 & u2) - rho_set(g, h, u1) -
                rho_set(g, h, u2);
    CHECK(cross <= 0);
  }
}

TEST_CASE("submodularity exhaustive on n <= 4") {
  for (int n = 1; n <= 4; n++) {
    MultiGraph g(n);
    // a fixed assortment of multiplicities
    int m = 1;
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++) {
        g.set_mult(u, v, m % 3);
        m++;
      }
    HFunction h = HFunction::constant(n, 3);
    for (uint32_t b1 = 0; b1 < (1u << n); b1++)
      for (uint32_t b2 = 0; b2 < (1u << n); b2++)
        CHECK(submodularity_residual(g, h, VertexSet(b1), VertexSet(b2)) == 0);
  }
}

TEST_CASE("h function validation") {
  CHECK_THROWS(HFunction({0, 4}));
  CHECK_THROWS(HFunction({-1}));
  CHECK(HFunction::constant(3, 2).values == std::vector<int>{2, 2, 2});
}
