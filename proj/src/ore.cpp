#include "dpc/ore.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "dpc/canonical.hpp"
#include "dpc/dp_solver.hpp"
#include "dpc/potential.hpp"

namespace dpc {

std::string OreCertificate::to_sexpr() const {
  std::function<std::string(int)> rec = [&](int i) -> std::string {
    const Node& nd = nodes[i];
    if (nd.leaf) return "K4";
    std::ostringstream os;
    os << "(compose " << rec(nd.left) << " edge=" << nd.edge_u << "-" << nd.edge_v << " "
       << rec(nd.right) << " split=" << nd.split_z << " part=";
    for (size_t k = 0; k < nd.part1_slots.size(); k++) {
      if (k) os << ",";
      os << nd.part1_slots[k];
    }
    os << ")";
    return os.str();
  };
  return root < 0 ? "" : rec(root);
}

MultiGraph dhgo_compose(const MultiGraph& g1, int x, int y, const MultiGraph& g2, int z,
                        const std::vector<int>& part1_slots) {
  if (g1.mult(x, y) == 0) throw std::invalid_argument("dhgo_compose: xy must be an edge of g1");
  int d = g2.degree(z);
  std::vector<bool> in1(d, false);
  for (int s : part1_slots) {
    if (s < 0 || s >= d) throw std::invalid_argument("dhgo_compose: slot out of range");
    in1[s] = true;
  }
  int c1 = static_cast<int>(part1_slots.size());
  if (c1 == 0 || c1 == d) throw std::invalid_argument("dhgo_compose: degenerate bipartition");

  int n1 = g1.order(), n2 = g2.order();
  MultiGraph out(n1 + n2 - 1);
  for (int a = 0; a < n1; a++)
    for (int b = a + 1; b < n1; b++) out.set_mult(a, b, g1.mult(a, b));
  out.remove_edge(x, y, 1);
  // g2's vertices other than z mapped to n1.. in ascending order.
  auto remap = [&](int w) { return n1 + w - (w > z ? 1 : 0); };
  for (int a = 0; a < n2; a++) {
    if (a == z) continue;
    for (int b = a + 1; b < n2; b++) {
      if (b == z) continue;
      out.set_mult(remap(a), remap(b), g2.mult(a, b));
    }
  }
  int slot = 0;
  for (int w = 0; w < n2; w++) {
    for (int c = 0; c < g2.mult(z, w); c++, slot++) {
      out.add_edge(in1[slot] ? x : y, remap(w));
    }
  }
  return out;
}

MultiGraph moser_spindle() {
  // Hub 0; rhombus 0-1-2-3 (triangles 012, 123); rhombus 0-4-5-6 (triangles
  // 045, 456); tip edge 3-6.
  MultiGraph g(7);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(0, 4);
  g.add_edge(0, 5);
  g.add_edge(4, 5);
  g.add_edge(4, 6);
  g.add_edge(5, 6);
  g.add_edge(3, 6);
  return g;
}

std::vector<const OreEntry*> OreAtlas::with_order(int n) const {
  std::vector<const OreEntry*> out;
  for (const OreEntry& e : entries)
    if (e.graph.order() == n) out.push_back(&e);
  return out;
}

OreAtlas generate_4ore(int max_n) {
  if (max_n > 13) throw std::invalid_argument("generate_4ore: ceiling is 13 vertices");
  OreAtlas atlas;
  std::map<int, std::vector<OreEntry>> by_n;
  if (max_n >= 4) {
    OreEntry k4;
    CanonicalResult cr = canonical_relabel(complete_graph(4));
    k4.graph = cr.graph;
    k4.label = cr.label;
    k4.cert.nodes.push_back({});
    k4.cert.root = 0;
    by_n[4].push_back(k4);
  }
  // Merge two certificates into one tree.
  auto merge_certs = [](const OreCertificate& l, const OreCertificate& r, int eu, int ev, int z,
                        const std::vector<int>& part) {
    OreCertificate c = l;
    int off = static_cast<int>(c.nodes.size());
    for (OreCertificate::Node nd : r.nodes) {
      if (!nd.leaf) {
        nd.left += off;
        nd.right += off;
      }
      c.nodes.push_back(nd);
    }
    OreCertificate::Node top;
    top.leaf = false;
    top.left = l.root;
    top.right = r.root + off;
    top.edge_u = eu;
    top.edge_v = ev;
    top.split_z = z;
    top.part1_slots = part;
    c.nodes.push_back(top);
    c.root = static_cast<int>(c.nodes.size()) - 1;
    return c;
  };
  for (int n = 7; n <= max_n; n += 3) {
    std::unordered_set<std::string> seen;
    std::vector<OreEntry> fresh;
    for (int p = 4; p <= n - 3; p += 3) {
      int q = n + 1 - p;
      if (by_n.find(p) == by_n.end() || by_n.find(q) == by_n.end()) continue;
      for (const OreEntry& A : by_n[p]) {
        for (auto [eu, ev] : A.graph.adjacent_pairs()) {
          for (const OreEntry& B : by_n[q]) {
            for (int z = 0; z < B.graph.order(); z++) {
              int d = B.graph.degree(z);
              for (uint32_t sub = 1; sub + 1 < (1u << d); sub++) {
                std::vector<int> part;
                for (int s = 0; s < d; s++)
                  if ((sub >> s) & 1) part.push_back(s);
                MultiGraph comp = dhgo_compose(A.graph, eu, ev, B.graph, z, part);
                CanonicalResult cr = canonical_relabel(comp);
                if (!seen.insert(cr.label).second) continue;
                OreEntry e;
                e.graph = cr.graph;
                e.label = cr.label;
                e.cert = merge_certs(A.cert, B.cert, eu, ev, z, part);
                fresh.push_back(std::move(e));
              }
            }
          }
        }
      }
    }
    std::sort(fresh.begin(), fresh.end(),
              [](const OreEntry& a, const OreEntry& b) { return a.label < b.label; });
    by_n[n] = std::move(fresh);
  }
  for (auto& [n, v] : by_n)
    for (OreEntry& e : v) atlas.entries.push_back(std::move(e));
  return atlas;
}

const OreAtlas& ore_atlas(int max_n) {
  static std::mutex mu;
  static std::map<int, OreAtlas> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(max_n);
  if (it == cache.end()) it = cache.emplace(max_n, generate_4ore(max_n)).first;
  return it->second;
}

bool is_4ore(const MultiGraph& g, int max_n) {
  if (g.order() > max_n) throw std::invalid_argument("is_4ore: graph above ceiling");
  std::string label = canonical_form(g);
  for (const OreEntry& e : ore_atlas(max_n).entries)
    if (e.label == label) return true;
  return false;
}

MultiGraph replay_certificate(const OreCertificate& cert) {
  // Compositions during generation act on canonical representatives, so the
  // stored edge/vertex/slot indices refer to those; replay canonicalizes at
  // every node to reproduce them exactly.
  std::function<MultiGraph(int)> rec = [&](int i) -> MultiGraph {
    const OreCertificate::Node& nd = cert.nodes[i];
    if (nd.leaf) return canonical_relabel(complete_graph(4)).graph;
    MultiGraph l = rec(nd.left);
    MultiGraph r = rec(nd.right);
    return canonical_relabel(dhgo_compose(l, nd.edge_u, nd.edge_v, r, nd.split_z, nd.part1_slots))
        .graph;
  };
  return rec(cert.root);
}

SubsetReport check_subset_inequalities(const MultiGraph& f) {
  SubsetReport rep;
  int n = f.order();
  rep.n = n;
  int s = (n - 1) / 3;
  HFunction h3 = HFunction::constant(n, 3);
  rep.rho_total_ok = (rho_graph(f, h3) == 3 - s);
  // Precompute adjacency masks (4-Ore graphs are simple).
  std::vector<uint32_t> adj(n);
  for (int v = 0; v < n; v++) adj[v] = f.adj_mask(v);
  uint32_t fullbits = VertexSet::full(n).bits;
  for (uint32_t bits = 1; bits < fullbits; bits++) {
    int size = __builtin_popcount(bits);
    int inner = 0;
    for (uint32_t b = bits; b; b &= b - 1) inner += __builtin_popcount(adj[__builtin_ctz(b)] & bits);
    inner /= 2;
    rep.subsets_checked++;
    if (5 * size - 3 * inner < 5) rep.ky_violations++;
    if (8 * size - 5 * inner < (3 - s) + 6) rep.rho_violations++;
  }
  return rep;
}

MoserExtensionReport check_moser_extension() {
  MoserExtensionReport rep;
  MultiGraph f = moser_spindle();
  int n = f.order();
  int deg4 = -1;
  for (int v = 0; v < n; v++)
    if (f.degree(v) == 4) deg4 = v;
  auto in_triangle = [&](int x, int y) {
    return (f.adj_mask(x) & f.adj_mask(y)) != 0;
  };
  rep.all_pass = true;
  for (auto [x, y] : f.adjacent_pairs()) {
    uint32_t nxy = f.adj_mask(x) | f.adj_mask(y);
    for (int z = 0; z < n; z++) {
      if ((nxy >> z) & 1) continue;
      if (z == x || z == y) continue;
      MoserExtensionCase cs;
      cs.x = x;
      cs.y = y;
      cs.z = z;
      // F' = F - xy + triangle {7,8,9} + matching x-7, y-8, z-9.
      MultiGraph fp(10);
      for (auto [a, b] : f.adjacent_pairs())
        if (!(a == x && b == y)) fp.add_edge(a, b);
      fp.add_edge(7, 8);
      fp.add_edge(7, 9);
      fp.add_edge(8, 9);
      fp.add_edge(x, 7);
      fp.add_edge(y, 8);
      fp.add_edge(z, 9);
      cs.is_ore = is_4ore(fp, 10);
      if (!cs.is_ore)
        cs.is_colorable =
            is_dp_colorable(fp, HFunction::constant(10, 3)).colorable;
      cs.pass = cs.is_ore || cs.is_colorable;
      // Proof branches.
      uint32_t common = f.adj_mask(x) & f.adj_mask(y);
      bool case1 = false;
      for (uint32_t b = common; b; b &= b - 1) {
        int w = __builtin_ctz(b);
        if (f.degree(x) == 3 && f.degree(y) == 3 && f.degree(w) == 3) case1 = true;
      }
      if (case1)
        cs.branch = 1;
      else if (x == deg4 || y == deg4)
        cs.branch = 2;
      else if (!in_triangle(x, y))
        cs.branch = 3;
      rep.branch_hits[cs.branch > 0 ? cs.branch : 0]++;
      if (!cs.pass) rep.all_pass = false;
      rep.cases.push_back(cs);
    }
  }
  return rep;
}

}  // namespace dpc
