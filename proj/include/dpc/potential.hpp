#pragma once

#include <vector>

#include "dpc/multigraph.hpp"

namespace dpc {

// List-size demand h : V -> {0,1,2,3}.
struct HFunction {
  std::vector<int> values;

  HFunction() = default;
  explicit HFunction(std::vector<int> v);
  static HFunction constant(int n, int value);

  int operator()(int v) const { return values[v]; }
  int size() const { return static_cast<int>(values.size()); }
  bool operator==(const HFunction& o) const { return values == o.values; }
};

// Vertex potential: 8, 4, 1, -1 for h(v) = 3, 2, 1, 0.
int rho_vertex(const HFunction& h, int v);
int rho_vertex_value(int hv);

// Pair potential: 0 if nonadjacent, 1 - 6s for multiplicity s >= 1.
int rho_pair(const MultiGraph& g, int x, int y);

// rho_{G,h}(A) = sum of vertex potentials plus pair potentials inside A.
int rho_set(const MultiGraph& g, const HFunction& h, VertexSet a);

// rho_h(G) = rho_set over all of V(G).
int rho_graph(const MultiGraph& g, const HFunction& h);

// rho(U1 u U2) + rho(U1 n U2) - rho(U1) - rho(U2) - rho(E') with
// E' = E(U1\U2, U2\U1); identically zero.
int submodularity_residual(const MultiGraph& g, const HFunction& h, VertexSet u1, VertexSet u2);

}  // namespace dpc
