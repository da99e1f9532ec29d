#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dpc/multigraph.hpp"
#include "dpc/potential.hpp"

namespace dpc {

// A matching between the color indices of two lists; injective in both
// coordinates, pairs sorted by first coordinate.
struct Matching {
  std::vector<std::pair<uint8_t, uint8_t>> pairs;

  bool operator==(const Matching& o) const { return pairs == o.pairs; }
  bool operator<(const Matching& o) const { return pairs < o.pairs; }
  static Matching identity(int k);
};

// DP-cover (H, L) of a multigraph: per-vertex list sizes plus, for each
// adjacent pair, one matching per edge copy. Colors are indices 0..size-1.
struct Cover {
  int n = 0;
  std::vector<int> list_size;
  std::vector<std::pair<int, int>> pairs;        // adjacent pairs, u < v, lex order
  std::vector<std::vector<Matching>> matchings;  // aligned with pairs; |inner| = multiplicity

  int pair_index(int u, int v) const;
};

// A choice of one color index per vertex; -1 marks unset.
struct Transversal {
  std::vector<int> choice;

  bool total() const;
};

// Abstract-color lists for the list-coloring reduction.
struct ListAssignment {
  std::vector<std::vector<int>> lists;
};

// All Cover invariants against g: pair alignment, matching counts equal to
// multiplicities, in-range indices, injectivity, simple unions.
bool validate(const MultiGraph& g, const Cover& c);

// True iff f is total and conflicts with no matching edge.
bool transversal_valid(const MultiGraph& g, const Cover& c, const Transversal& f);
// Partial variant: only conflicts among assigned vertices are checked.
bool transversal_valid_partial(const MultiGraph& g, const Cover& c, const Transversal& f);

// The list-coloring problem as a DP-cover: colors indexed per vertex in
// sorted order, pair (u,v) matched where the lists share a color. Requires g
// simple.
Cover cover_from_lists(const MultiGraph& g, const ListAssignment& la);

// Identity cover with the given list sizes: every adjacent pair carries
// cyclic-shift matchings 0..s-1 (shift 0 = identity). The s = 1 case is the
// classic "same lists" proper-coloring cover.
Cover identity_cover(const MultiGraph& g, const std::vector<int>& demand);

// Restriction after a partial coloring (f defined and valid on the
// complement of x): returns g[x] with lists pruned of colors matched to
// f-colors across E(x, complement), reindexed.
std::pair<MultiGraph, Cover> restrict_cover(const MultiGraph& g, const Cover& c,
                                            const Transversal& f, VertexSet x);

// Line-oriented witness serialization; parse is the exact inverse.
std::string serialize_cover(const Cover& c);
Cover parse_cover(const std::string& text);

// ---------------------------------------------------------------------------
// Gauge-fixed cover enumeration.
//
// Covers sufficient to decide DP colorability for the demand vector: list
// sizes equal the demands, every matching is maximum (size min of the two
// list sizes), parallel classes are sets of pairwise-disjoint maximum
// matchings, and on a BFS spanning tree from vertex 0 the first matching of
// each pair is gauge-fixed to the identity. The fallback Exhaustive mode
// drops gauge fixing and enumerates every edge-maximal union of s matchings
// instead; it is slower but free of the maximum-matching normalization.

// Conflict masks for one choice of a pair's matchings.
struct SlotValue {
  std::vector<Matching> matchings;
  std::array<uint16_t, 10> fwd{};  // fwd[i] = conflicting v-colors for u-color i
  std::array<uint16_t, 10> rev{};
};

struct Slot {
  int u, v, mult;
  bool tree;
  int child = -1;  // BFS child endpoint on tree pairs
  std::vector<SlotValue> values;
};

enum class CoverMode { GaugeFixed, ExhaustiveMaximal };

class CoverEnumerator {
 public:
  CoverEnumerator(const MultiGraph& g, const std::vector<int>& demand,
                  CoverMode mode = CoverMode::GaugeFixed);

  const std::vector<Slot>& slots() const { return slots_; }
  const std::vector<int>& demand() const { return demand_; }
  const MultiGraph& graph() const { return g_; }

  // Number of covers in the stream, saturating at UINT64_MAX on overflow.
  uint64_t total() const;

  // Cover at a given odometer position (slot indices little-endian).
  std::vector<int> indices_at(uint64_t pos) const;
  Cover materialize(const std::vector<int>& indices) const;

  // Compact identity of a cover for reporting: slot choices in order.
  static std::string indices_to_string(const std::vector<int>& indices);

 private:
  MultiGraph g_;
  std::vector<int> demand_;
  std::vector<Slot> slots_;
};

// Spec-facing stream: calls fn for every gauge-fixed cover, in canonical
// order. Demands must be >= 1.
void enumerate_covers(const MultiGraph& g, const HFunction& h,
                      const std::function<bool(const Cover&)>& fn);

// All maximum matchings between lists of the given sizes, lexicographic.
std::vector<Matching> maximum_matchings(int a, int b);

// Which adjacent pairs lie on the BFS spanning tree from vertex 0.
std::vector<bool> bfs_tree_pair_flags(const MultiGraph& g,
                                      const std::vector<std::pair<int, int>>& pairs);

// BFS parent per vertex (-1 at the root / unreachable vertices).
std::vector<int> bfs_parents(const MultiGraph& g);

// Decomposes a simple union of index pairs with both-side degrees <= s into
// exactly s matchings (some possibly empty).
std::vector<Matching> decompose_union(const std::vector<std::pair<uint8_t, uint8_t>>& union_pairs,
                                      int s, int a, int b);

}  // namespace dpc
