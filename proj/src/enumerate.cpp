#include "dpc/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "dpc/canonical.hpp"

namespace dpc {

void enumerate_graphs(int n, int min_degree, int max_edges,
                      const std::function<void(const MultiGraph&)>& fn) {
  int full = n * (n - 1) / 2;
  max_edges = std::min(max_edges, full);
  // Level-by-level augmentation: representatives with m edges feed m+1.
  std::vector<MultiGraph> level;
  level.push_back(MultiGraph(n));
  std::unordered_set<std::string> seen;
  auto consider = [&](const MultiGraph& g) {
    int mind = n;
    for (int v = 0; v < n; v++) mind = std::min(mind, g.degree(v));
    if (mind >= min_degree && g.connected()) fn(g);
  };
  consider(level[0]);
  for (int m = 0; m < max_edges; m++) {
    std::vector<MultiGraph> next;
    seen.clear();
    for (const MultiGraph& g : level) {
      for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) {
          if (g.mult(u, v) > 0) continue;
          MultiGraph h = g;
          h.add_edge(u, v);
          CanonicalResult cr = canonical_relabel(h);
          if (seen.insert(cr.label).second) next.push_back(cr.graph);
        }
    }
    level = std::move(next);
    for (const MultiGraph& g : level) consider(g);
  }
}

std::vector<MultiGraph> enumerate_graphs(int n, int min_degree, int max_edges) {
  std::vector<MultiGraph> out;
  enumerate_graphs(n, min_degree, max_edges, [&](const MultiGraph& g) { out.push_back(g); });
  return out;
}

std::vector<MultiGraph> enumerate_multigraphs(int n, int max_mult) {
  std::vector<MultiGraph> out;
  std::unordered_set<std::string> seen;
  for (const MultiGraph& base : enumerate_graphs(n, 0, n * (n - 1) / 2)) {
    auto pairs = base.adjacent_pairs();
    std::vector<int> mults(pairs.size(), 1);
    while (true) {
      MultiGraph g = base;
      for (size_t i = 0; i < pairs.size(); i++)
        g.set_mult(pairs[i].first, pairs[i].second, mults[i]);
      CanonicalResult cr = canonical_relabel(g);
      if (seen.insert(cr.label).second) out.push_back(cr.graph);
      // Next multiplicity vector.
      size_t k = 0;
      while (k < mults.size() && mults[k] == max_mult) mults[k++] = 1;
      if (k == mults.size()) break;
      mults[k]++;
    }
  }
  return out;
}

}  // namespace dpc
