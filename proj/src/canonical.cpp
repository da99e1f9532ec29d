#include "dpc/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace dpc {

namespace {

// Ordered partition of vertices as a list of cells; cell order is an
// isomorphism invariant (cells are sorted by their refinement signatures).
using Partition = std::vector<std::vector<int>>;

Partition refine(const MultiGraph& g, Partition part) {
  int n = g.order();
  std::vector<int> color(n, 0);
  while (true) {
    for (size_t c = 0; c < part.size(); c++)
      for (int v : part[c]) color[v] = static_cast<int>(c);
    // Signature: own color plus sorted (neighbour colour, multiplicity) list.
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; v++) {
      sig[v].push_back(color[v]);
      std::vector<std::pair<int, int>> nb;
      for (int u = 0; u < n; u++)
        if (g.mult(v, u) > 0) nb.push_back({color[u], g.mult(v, u)});
      std::sort(nb.begin(), nb.end());
      for (auto [c, m] : nb) {
        sig[v].push_back(c);
        sig[v].push_back(m);
      }
    }
    Partition next;
    for (const auto& cell : part) {
      std::map<std::vector<int>, std::vector<int>> split;
      for (int v : cell) split[sig[v]].push_back(v);
      for (auto& [s, vs] : split) next.push_back(vs);
    }
    if (next.size() == part.size()) return next;
    part = std::move(next);
  }
}

std::string code_for(const MultiGraph& g, const std::vector<int>& order) {
  int n = g.order();
  std::string code;
  code.push_back(static_cast<char>(n));
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      code.push_back(static_cast<char>(g.mult(order[i], order[j])));
  return code;
}

struct CanonSearch {
  const MultiGraph& g;
  int n;
  std::string best;
  std::vector<int> best_order;
  // Discovered automorphisms, used to prune equivalent branches.
  std::vector<std::vector<int>> autos;

  explicit CanonSearch(const MultiGraph& gg) : g(gg), n(gg.order()) {}

  // Orbit of v under the subgroup generated by the automorphisms that fix
  // every vertex in `fixed` pointwise.
  uint32_t orbit_of(int v, const std::vector<int>& fixed) {
    uint32_t orb = 1u << v;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& a : autos) {
        bool ok = true;
        for (int f : fixed)
          if (a[f] != f) {
            ok = false;
            break;
          }
        if (!ok) continue;
        for (uint32_t b = orb; b; b &= b - 1) {
          int x = __builtin_ctz(b);
          if (!(orb & (1u << a[x]))) {
            orb |= 1u << a[x];
            grew = true;
          }
        }
      }
    }
    return orb;
  }

  void descend(Partition part, std::vector<int>& fixed) {
    // Find first non-singleton cell.
    int target = -1;
    for (size_t c = 0; c < part.size(); c++)
      if (part[c].size() > 1) {
        target = static_cast<int>(c);
        break;
      }
    if (target == -1) {
      std::vector<int> order;
      for (const auto& cell : part) order.push_back(cell[0]);
      // order[i] = old vertex at canonical position i.
      std::string code = code_for(g, order);
      if (best.empty() || code < best) {
        best = code;
        best_order = order;
      } else if (code == best) {
        // Two labelings with equal code compose to an automorphism.
        std::vector<int> a(n);
        for (int i = 0; i < n; i++) a[best_order[i]] = order[i];
        autos.push_back(a);
      }
      return;
    }
    uint32_t done = 0;
    for (int v : part[target]) {
      if (done & orbit_of(v, fixed)) continue;
      done |= 1u << v;
      Partition child;
      for (int c = 0; c < static_cast<int>(part.size()); c++) {
        if (c == target) {
          child.push_back({v});
          std::vector<int> rest;
          for (int w : part[c])
            if (w != v) rest.push_back(w);
          child.push_back(rest);
        } else {
          child.push_back(part[c]);
        }
      }
      fixed.push_back(v);
      descend(refine(g, child), fixed);
      fixed.pop_back();
    }
  }
};

}  // namespace

CanonicalResult canonical_relabel(const MultiGraph& g) {
  int n = g.order();
  if (n > kMaxVertices) throw std::invalid_argument("canonical_form: too many vertices");
  CanonicalResult res;
  if (n == 0) {
    res.label = std::string(1, '\0');
    res.graph = g;
    return res;
  }
  CanonSearch search(g);
  std::vector<int> all(n);
  for (int i = 0; i < n; i++) all[i] = i;
  std::vector<int> fixed;
  search.descend(refine(g, {all}), fixed);
  res.label = search.best;
  res.perm.resize(n);
  for (int i = 0; i < n; i++) res.perm[search.best_order[i]] = i;
  MultiGraph cg(n);
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++)
      cg.set_mult(res.perm[u], res.perm[v], g.mult(u, v));
  res.graph = cg;
  return res;
}

std::string canonical_form(const MultiGraph& g) { return canonical_relabel(g).label; }

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace dpc
