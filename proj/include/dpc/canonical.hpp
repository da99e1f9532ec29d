#pragma once

#include <string>
#include <vector>

#include "dpc/multigraph.hpp"

namespace dpc {

// Canonical label: two multigraphs get equal byte strings iff they are
// isomorphic (multiplicity-preserving vertex bijection). Deterministic.
// Iterated multiplicity refinement plus individualization with discovered
// automorphism pruning; exact for n <= 16.
std::string canonical_form(const MultiGraph& g);

// The canonically relabeled graph itself together with the permutation
// applied (new_index = perm[old_index]).
struct CanonicalResult {
  std::string label;
  std::vector<int> perm;
  MultiGraph graph;
};
CanonicalResult canonical_relabel(const MultiGraph& g);

bool isomorphic(const MultiGraph& a, const MultiGraph& b);

}  // namespace dpc
