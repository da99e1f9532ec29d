#include "dpc/multigraph.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace dpc {

MultiGraph::MultiGraph(int n) : n_(n), mult_(n * n, 0), adj_(n, 0) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
}

void MultiGraph::set_mult(int u, int v, int m) {
  assert(u >= 0 && u < n_ && v >= 0 && v < n_);
  if (u == v) {
    if (m != 0) throw std::invalid_argument("loops are not allowed");
    return;
  }
  assert(m >= 0 && m <= kMaxMultiplicity);
  mult_[u * n_ + v] = static_cast<uint8_t>(m);
  mult_[v * n_ + u] = static_cast<uint8_t>(m);
  if (m > 0) {
    adj_[u] |= (1u << v);
    adj_[v] |= (1u << u);
  } else {
    adj_[u] &= ~(1u << v);
    adj_[v] &= ~(1u << u);
  }
}

void MultiGraph::add_edge(int u, int v, int copies) { set_mult(u, v, mult(u, v) + copies); }

void MultiGraph::remove_edge(int u, int v, int copies) {
  int m = mult(u, v) - copies;
  assert(m >= 0);
  set_mult(u, v, m);
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; u++) d += mult_[v * n_ + u];
  return d;
}

int MultiGraph::edge_count() const {
  int s = 0;
  for (int v = 0; v < n_; v++) s += degree(v);
  return s / 2;
}

int MultiGraph::simple_edge_count() const {
  int s = 0;
  for (int u = 0; u < n_; u++)
    for (int v = u + 1; v < n_; v++)
      if (mult(u, v) > 0) s++;
  return s;
}

int MultiGraph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; v++) d = std::max(d, degree(v));
  return d;
}

bool MultiGraph::is_simple() const {
  for (int u = 0; u < n_; u++)
    for (int v = u + 1; v < n_; v++)
      if (mult(u, v) > 1) return false;
  return true;
}

bool MultiGraph::connected() const { return connected_within(VertexSet::full(n_)); }

bool MultiGraph::connected_within(VertexSet s) const {
  if (s.empty()) return true;
  uint32_t seen = 1u << __builtin_ctz(s.bits);
  uint32_t frontier = seen;
  while (frontier) {
    uint32_t next = 0;
    for (uint32_t b = frontier; b; b &= b - 1) next |= adj_[__builtin_ctz(b)];
    next &= s.bits & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s.bits;
}

MultiGraph MultiGraph::induced(VertexSet s) const {
  std::vector<int> verts = s.members();
  MultiGraph out(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); i++)
    for (size_t j = i + 1; j < verts.size(); j++)
      out.set_mult(static_cast<int>(i), static_cast<int>(j), mult(verts[i], verts[j]));
  return out;
}

std::vector<std::pair<int, int>> MultiGraph::adjacent_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; u++)
    for (int v = u + 1; v < n_; v++)
      if (mult(u, v) > 0) out.emplace_back(u, v);
  return out;
}

int MultiGraph::edges_within(VertexSet a) const {
  int s = 0;
  for (int u = 0; u < n_; u++) {
    if (!a.contains(u)) continue;
    for (int v = u + 1; v < n_; v++)
      if (a.contains(v)) s += mult(u, v);
  }
  return s;
}

int MultiGraph::edges_between(VertexSet a, VertexSet b) const {
  int s = 0;
  for (int u = 0; u < n_; u++) {
    if (!a.contains(u)) continue;
    for (int v = 0; v < n_; v++)
      if (b.contains(v)) s += mult(u, v);
  }
  return s;
}

std::string MultiGraph::to_string() const {
  std::ostringstream os;
  os << "n=" << n_ << " edges:";
  for (auto [u, v] : adjacent_pairs()) {
    os << " " << u << "-" << v;
    if (mult(u, v) > 1) os << "x" << mult(u, v);
  }
  return os.str();
}

MultiGraph complete_graph(int n) {
  MultiGraph g(n);
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) g.add_edge(u, v);
  return g;
}

MultiGraph cycle_graph(int n) {
  MultiGraph g(n);
  for (int v = 0; v < n; v++) g.add_edge(v, (v + 1) % n);
  return g;
}

MultiGraph path_graph(int n) {
  MultiGraph g(n);
  for (int v = 0; v + 1 < n; v++) g.add_edge(v, v + 1);
  return g;
}

namespace {

// Hopcroft-Tarjan blocks on the underlying simple graph. Parallel edges do
// not affect vertex cuts, so a multiple edge lives in the same block as its
// underlying simple edge.
struct BlockDfs {
  const MultiGraph& g;
  std::vector<int> disc, low;
  std::vector<std::pair<int, int>> estack;
  BlockDecomposition out;
  int timer = 0;

  explicit BlockDfs(const MultiGraph& gg) : g(gg), disc(gg.order(), -1), low(gg.order(), 0) {}

  void pop_block(std::pair<int, int> top_edge) {
    VertexSet b;
    while (true) {
      auto e = estack.back();
      estack.pop_back();
      b.add(e.first);
      b.add(e.second);
      if (e == top_edge) break;
    }
    out.blocks.push_back(b);
  }

  void dfs(int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    bool parent_skipped = false;
    for (uint32_t b = g.adj_mask(v); b; b &= b - 1) {
      int w = __builtin_ctz(b);
      if (w == parent && !parent_skipped) {
        parent_skipped = true;
        // A parallel pair to the parent is a cycle of length 2: not a tree
        // edge a second time, but it keeps low[v] at the parent.
        if (g.mult(v, w) > 1) low[v] = std::min(low[v], disc[w]);
        continue;
      }
      if (disc[w] == -1) {
        children++;
        estack.push_back({v, w});
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if ((parent == -1 && children > 1) || (parent != -1 && low[w] >= disc[v])) {
          out.cut_vertices.add(v);
          pop_block({v, w});
        } else if (parent == -1 && low[w] >= disc[v]) {
          pop_block({v, w});
        }
      } else if (disc[w] < disc[v]) {
        estack.push_back({v, w});
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }
};

}  // namespace

BlockDecomposition blocks(const MultiGraph& g) {
  if (!g.connected()) throw std::invalid_argument("blocks: graph must be connected");
  int n = g.order();
  if (n == 1) {
    BlockDecomposition out;
    out.blocks.push_back(VertexSet::single(0));
    return out;
  }
  BlockDfs dfs(g);
  dfs.dfs(0, -1);
  if (!dfs.estack.empty()) dfs.pop_block(dfs.estack.front());
  std::sort(dfs.out.blocks.begin(), dfs.out.blocks.end(),
            [](VertexSet a, VertexSet b) { return a.bits < b.bits; });
  return dfs.out;
}

namespace {

struct BridgeDfs {
  const MultiGraph& g;
  std::vector<int> disc, low;
  std::vector<std::pair<int, int>> bridges;
  int timer = 0;

  explicit BridgeDfs(const MultiGraph& gg) : g(gg), disc(gg.order(), -1), low(gg.order(), 0) {}

  void dfs(int v, int parent) {
    disc[v] = low[v] = timer++;
    bool parent_skipped = false;
    for (uint32_t b = g.adj_mask(v); b; b &= b - 1) {
      int w = __builtin_ctz(b);
      if (w == parent && !parent_skipped) {
        parent_skipped = true;
        if (g.mult(v, w) > 1) low[v] = std::min(low[v], disc[w]);
        continue;
      }
      if (disc[w] == -1) {
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v] && g.mult(v, w) == 1)
          bridges.push_back({std::min(v, w), std::max(v, w)});
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }
};

}  // namespace

EdgeBlockDecomposition edge_blocks(const MultiGraph& g) {
  if (!g.connected()) throw std::invalid_argument("edge_blocks: graph must be connected");
  int n = g.order();
  EdgeBlockDecomposition out;
  if (n == 1) return out;
  BridgeDfs dfs(g);
  dfs.dfs(0, -1);
  out.bridges = dfs.bridges;
  std::sort(out.bridges.begin(), out.bridges.end());

  // 2-edge-connected components: components after removing the bridges.
  std::vector<uint32_t> adj(n, 0);
  for (int v = 0; v < n; v++) adj[v] = g.adj_mask(v);
  for (auto [u, v] : out.bridges) {
    adj[u] &= ~(1u << v);
    adj[v] &= ~(1u << u);
  }
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; s++) {
    if (seen[s]) continue;
    uint32_t comp = 1u << s;
    uint32_t frontier = comp;
    while (frontier) {
      uint32_t next = 0;
      for (uint32_t b = frontier; b; b &= b - 1) next |= adj[__builtin_ctz(b)];
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    for (uint32_t b = comp; b; b &= b - 1) seen[__builtin_ctz(b)] = true;
    VertexSet cs(comp);
    if (g.edges_within(cs) > 0) out.edge_blocks.push_back(cs);
  }
  for (auto [u, v] : out.bridges) {
    VertexSet b;
    b.add(u);
    b.add(v);
    out.edge_blocks.push_back(b);
  }
  std::sort(out.edge_blocks.begin(), out.edge_blocks.end(),
            [](VertexSet a, VertexSet b) { return a.bits < b.bits; });
  return out;
}

namespace {

// Is the sub-multigraph induced on block vertices a K_s^t or C_s^t?
bool block_is_gdp(const MultiGraph& g, VertexSet block) {
  std::vector<int> vs = block.members();
  int s = static_cast<int>(vs.size());
  if (s <= 2) return true;  // K_1, or K_2^t for any multiplicity
  // Uniform multiple of a complete graph.
  int t = g.mult(vs[0], vs[1]);
  bool complete = t >= 1;
  for (int i = 0; i < s && complete; i++)
    for (int j = i + 1; j < s; j++)
      if (g.mult(vs[i], vs[j]) != t) {
        complete = false;
        break;
      }
  if (complete) return true;
  // Uniform multiple of a spanning cycle: every vertex has exactly two
  // distinct neighbours inside the block, all present multiplicities equal,
  // and the block is connected (it is, being a block).
  int ct = -1;
  for (int i = 0; i < s; i++) {
    int nbrs = 0;
    for (int j = 0; j < s; j++) {
      if (i == j) continue;
      int m = g.mult(vs[i], vs[j]);
      if (m > 0) {
        nbrs++;
        if (ct == -1) ct = m;
        if (m != ct) return false;
      }
    }
    if (nbrs != 2) return false;
  }
  return true;
}

}  // namespace

bool is_gdp_tree(const MultiGraph& g) {
  if (!g.connected()) throw std::invalid_argument("is_gdp_tree: graph must be connected");
  for (const VertexSet& b : blocks(g).blocks)
    if (!block_is_gdp(g, b)) return false;
  return true;
}

int slot_count(const MultiGraph& g, int u) { return g.degree(u); }

MultiGraph split_vertex(const MultiGraph& g, int u, const std::vector<int>& part1_slots) {
  int n = g.order();
  int d = g.degree(u);
  std::vector<bool> in1(d, false);
  for (int s : part1_slots) {
    assert(s >= 0 && s < d);
    in1[s] = true;
  }
  int c1 = static_cast<int>(part1_slots.size());
  if (c1 == 0 || c1 == d) throw std::invalid_argument("split_vertex: both parts must be nonempty");

  // Old vertex w (w != u) maps to w - (w > u); new vertices are n-1 and n.
  auto remap = [&](int w) { return w - (w > u ? 1 : 0); };
  MultiGraph out(n + 1);
  for (int a = 0; a < n; a++) {
    if (a == u) continue;
    for (int b = a + 1; b < n; b++) {
      if (b == u) continue;
      out.set_mult(remap(a), remap(b), g.mult(a, b));
    }
  }
  int slot = 0;
  for (int w = 0; w < n; w++) {
    for (int c = 0; c < g.mult(u, w); c++, slot++) {
      out.add_edge(in1[slot] ? n - 1 : n, remap(w));
    }
  }
  return out;
}

}  // namespace dpc
