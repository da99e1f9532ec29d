#include "dpc/potential.hpp"

#include <cassert>
#include <stdexcept>

namespace dpc {

HFunction::HFunction(std::vector<int> v) : values(std::move(v)) {
  for (int x : values)
    if (x < 0 || x > 3) throw std::invalid_argument("h values must lie in {0,1,2,3}");
}

HFunction HFunction::constant(int n, int value) {
  return HFunction(std::vector<int>(n, value));
}

int rho_vertex_value(int hv) {
  switch (hv) {
    case 3: return 8;
    case 2: return 4;
    case 1: return 1;
    case 0: return -1;
  }
  throw std::invalid_argument("h value out of range");
}

int rho_vertex(const HFunction& h, int v) { return rho_vertex_value(h(v)); }

int rho_pair(const MultiGraph& g, int x, int y) {
  if (x == y) throw std::invalid_argument("rho_pair: x and y must differ");
  int s = g.mult(x, y);
  return s == 0 ? 0 : 1 - 6 * s;
}

int rho_set(const MultiGraph& g, const HFunction& h, VertexSet a) {
  int total = 0;
  for (uint32_t b = a.bits; b; b &= b - 1) total += rho_vertex(h, __builtin_ctz(b));
  for (uint32_t b = a.bits; b; b &= b - 1) {
    int u = __builtin_ctz(b);
    for (uint32_t c = b & (b - 1); c; c &= c - 1) {
      int v = __builtin_ctz(c);
      int s = g.mult(u, v);
      if (s > 0) total += 1 - 6 * s;
    }
  }
  return total;
}

int rho_graph(const MultiGraph& g, const HFunction& h) {
  return rho_set(g, h, VertexSet::full(g.order()));
}

int submodularity_residual(const MultiGraph& g, const HFunction& h, VertexSet u1, VertexSet u2) {
  int rho_cross = 0;
  VertexSet a = u1 - u2, b = u2 - u1;
  for (uint32_t x = a.bits; x; x &= x - 1)
    for (uint32_t y = b.bits; y; y &= y - 1) {
      int s = g.mult(__builtin_ctz(x), __builtin_ctz(y));
      if (s > 0) rho_cross += 1 - 6 * s;
    }
  return rho_set(g, h, u1 | u2) + rho_set(g, h, u1 & u2) - rho_set(g, h, u1) -
         rho_set(g, h, u2) - rho_cross;
}

}  // namespace dpc
