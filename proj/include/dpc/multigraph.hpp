#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dpc {

// Hard ceilings for the whole library. Vertices are dense indices 0..n-1.
constexpr int kMaxVertices = 16;
// Edge multiplicities are capped at 3: a pair with multiplicity >= 3 already
// has pair potential <= -17 and never survives any potential constraint we
// check, so nothing in scope needs more. Asserted at parse time.
constexpr int kMaxMultiplicity = 3;

// Dense small vertex set over indices 0..n-1, backed by a bitmask.
struct VertexSet {
  uint32_t bits = 0;

  VertexSet() = default;
  explicit VertexSet(uint32_t b) : bits(b) {}

  static VertexSet full(int n) { return VertexSet((n >= 32) ? ~0u : ((1u << n) - 1)); }
  static VertexSet single(int v) { return VertexSet(1u << v); }

  bool contains(int v) const { return (bits >> v) & 1u; }
  void add(int v) { bits |= (1u << v); }
  void remove(int v) { bits &= ~(1u << v); }
  int size() const { return __builtin_popcount(bits); }
  bool empty() const { return bits == 0; }

  VertexSet complement(int n) const { return VertexSet(full(n).bits & ~bits); }
  bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

  VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
  VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
  VertexSet operator-(VertexSet o) const { return VertexSet(bits & ~o.bits); }
  bool operator==(VertexSet o) const { return bits == o.bits; }
  bool operator!=(VertexSet o) const { return bits != o.bits; }
  bool operator<(VertexSet o) const { return bits < o.bits; }

  // Members in ascending order.
  std::vector<int> members() const {
    std::vector<int> out;
    for (uint32_t b = bits; b; b &= b - 1) out.push_back(__builtin_ctz(b));
    return out;
  }
};

// Loopless multigraph as a symmetric multiplicity table.
class MultiGraph {
 public:
  MultiGraph() : n_(0) {}
  explicit MultiGraph(int n);

  int order() const { return n_; }
  int mult(int u, int v) const { return mult_[u * n_ + v]; }
  void set_mult(int u, int v, int m);
  void add_edge(int u, int v, int copies = 1);
  void remove_edge(int u, int v, int copies = 1);

  int degree(int v) const;
  int edge_count() const;        // sum of multiplicities over unordered pairs
  int simple_edge_count() const; // number of adjacent pairs
  int max_degree() const;
  bool is_simple() const;

  // Bitmask of neighbours of v.
  uint32_t adj_mask(int v) const { return adj_[v]; }

  bool connected() const;
  bool connected_within(VertexSet s) const;
  // Induced sub-multigraph on s; vertices reindexed in ascending order.
  MultiGraph induced(VertexSet s) const;

  // Unordered adjacent pairs (u < v) in lexicographic order.
  std::vector<std::pair<int, int>> adjacent_pairs() const;

  // Edges of g[a] counted with multiplicity (the paper's ||A||).
  int edges_within(VertexSet a) const;
  // Edges between disjoint sets, with multiplicity.
  int edges_between(VertexSet a, VertexSet b) const;

  bool operator==(const MultiGraph& o) const { return n_ == o.n_ && mult_ == o.mult_; }

  std::string to_string() const;

 private:
  int n_;
  std::vector<uint8_t> mult_;
  std::vector<uint32_t> adj_;
};

// Convenience constructors.
MultiGraph complete_graph(int n);
MultiGraph cycle_graph(int n);
MultiGraph path_graph(int n);

struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // vertex sets; every edge lies in exactly one
  VertexSet cut_vertices;
};

struct EdgeBlockDecomposition {
  std::vector<VertexSet> edge_blocks;        // bridges appear as their 2-vertex sets
  std::vector<std::pair<int, int>> bridges;  // cut edges (u < v)
};

// Standard block / cut-vertex decomposition. Requires g connected.
BlockDecomposition blocks(const MultiGraph& g);

// Edge-blocks: maximal connected subgraphs that are a single cut edge or
// bridgeless. Requires g connected.
EdgeBlockDecomposition edge_blocks(const MultiGraph& g);

// True iff every block of g is a uniform multiple of a complete graph or of a
// cycle (K_s^t or C_s^t). Requires g connected.
bool is_gdp_tree(const MultiGraph& g);

// Splits vertex u into two new vertices. part1 selects a subset of u's edge
// slots (slot order: neighbours ascending, copies of a pair consecutive); the
// complement goes to the second vertex. Both sides must be nonempty. Vertices
// above u shift down by one; the new vertices take indices n-1 and n.
MultiGraph split_vertex(const MultiGraph& g, int u, const std::vector<int>& part1_slots);

// Number of edge slots at u (= degree).
int slot_count(const MultiGraph& g, int u);

}  // namespace dpc
