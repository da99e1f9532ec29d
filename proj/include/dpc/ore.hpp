#pragma once

#include <string>
#include <vector>

#include "dpc/multigraph.hpp"

namespace dpc {

// Composition tree for a 4-Ore graph: leaves are K4, internal nodes record
// the DHGO step. Replaying the tree bottom-up reproduces the stored graph up
// to canonical relabeling.
struct OreCertificate {
  struct Node {
    bool leaf = true;
    int left = -1, right = -1;    // node indices
    int edge_u = -1, edge_v = -1; // edge deleted from the left graph
    int split_z = -1;             // vertex split in the right graph
    std::vector<int> part1_slots; // z's edge slots identified with edge_u
  };
  std::vector<Node> nodes;
  int root = -1;

  std::string to_sexpr() const;
};

// Delete edge xy from g1, split z in g2 into z1/z2 by the given slot
// bipartition, identify x with z1 and y with z2. Result keeps g1's indices;
// g2's other vertices follow in ascending order.
MultiGraph dhgo_compose(const MultiGraph& g1, int x, int y, const MultiGraph& g2, int z,
                        const std::vector<int>& part1_slots);

MultiGraph moser_spindle();

struct OreEntry {
  MultiGraph graph;  // canonical representative
  std::string label;
  OreCertificate cert;
};

struct OreAtlas {
  std::vector<OreEntry> entries;  // ascending (vertex count, label)

  std::vector<const OreEntry*> with_order(int n) const;
};

// One representative per isomorphism class of 4-Ore graphs on <= max_n
// vertices (max_n <= 13), each with a replayable certificate. Deterministic.
OreAtlas generate_4ore(int max_n);

// Cached atlas lookup.
const OreAtlas& ore_atlas(int max_n);

bool is_4ore(const MultiGraph& g, int max_n);

MultiGraph replay_certificate(const OreCertificate& cert);

// Subset sweep: 5|A| - 3||A|| >= 5 and rho_3(A) >= rho_3(F) + 6 for every
// nonempty proper subset, plus rho_3(F) = 3 - s.
struct SubsetReport {
  int n = 0;
  long subsets_checked = 0;
  long ky_violations = 0;      // 5|A| - 3||A|| >= 5 failures
  long rho_violations = 0;     // rho(A) >= rho(F) + 6 failures
  bool rho_total_ok = false;   // rho_3(F) == 3 - s
  bool ok() const { return ky_violations == 0 && rho_violations == 0 && rho_total_ok; }
};
SubsetReport check_subset_inequalities(const MultiGraph& f);

// Every Moser-spindle extension F' (delete xy, add triangle x'y'z' and the
// matching xx', yy', zz' with z outside N(x) u N(y)) is 4-Ore or DP
// 3-colorable; classifies each instance against the three proof branches.
struct MoserExtensionCase {
  int x = 0, y = 0, z = 0;
  int branch = 0;       // 1..3 per the proof cases, 0 = unclassified
  bool is_ore = false;
  bool is_colorable = false;
  bool pass = false;
};
struct MoserExtensionReport {
  std::vector<MoserExtensionCase> cases;
  bool all_pass = false;
  int branch_hits[4] = {0, 0, 0, 0};
};
MoserExtensionReport check_moser_extension();

}  // namespace dpc
