#pragma once

#include <functional>
#include <vector>

#include "dpc/multigraph.hpp"

namespace dpc {

// One representative per isomorphism class of connected simple graphs on n
// vertices with minimum degree >= min_degree and at most max_edges edges.
// Augmentation by edge addition with canonical dedup; practical up to n = 8
// for full scans, n = 10 with a tight edge budget.
std::vector<MultiGraph> enumerate_graphs(int n, int min_degree, int max_edges);

// Streaming variant: calls fn for each representative.
void enumerate_graphs(int n, int min_degree, int max_edges,
                      const std::function<void(const MultiGraph&)>& fn);

// One representative per isomorphism class of connected loopless multigraphs
// on n vertices with multiplicities in 1..max_mult.
std::vector<MultiGraph> enumerate_multigraphs(int n, int max_mult);

}  // namespace dpc
