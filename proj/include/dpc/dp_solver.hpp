#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpc/cover.hpp"
#include "dpc/multigraph.hpp"
#include "dpc/potential.hpp"

namespace dpc {

// Lexicographically least valid total transversal by vertex order, or
// nothing. Cover must validate against g.
std::optional<Transversal> find_transversal(const MultiGraph& g, const Cover& c);

struct SolveOptions {
  int jobs = 1;
  // Streams up to this many covers are scanned exhaustively; larger spaces
  // go to the blocker search, which decides the same question without
  // enumerating.
  uint64_t stream_limit = 4000000;
  bool force_stream = false;      // always enumerate (tests)
  bool force_exhaustive = false;  // fallback family: maximal unions, no gauge (tests)
  bool allow_reductions = true;   // peel / block composition / saturated pair
  bool early_cover_rejection = false;  // leaf-gauge dedup, off by default
};

struct SolveResult {
  bool colorable = false;
  std::optional<Cover> witness;  // a failing cover when not colorable
  uint64_t covers_checked = 0;
  std::string engine;
};

// DP h-colorability: true iff every h-cover admits a transversal.
SolveResult is_dp_colorable(const MultiGraph& g, const HFunction& h, const SolveOptions& opts = {});

// Internal entry point with demands beyond the {0..3} range of HFunction
// (degree covers, chi scans).
SolveResult is_dp_colorable_demand(const MultiGraph& g, const std::vector<int>& demand,
                                   const SolveOptions& opts = {});

// Least k such that g is DP k-colorable; linear scan, ceiling Delta+1.
int chi_dp(const MultiGraph& g, const SolveOptions& opts = {});

// DP colorability with h = d_G. Equals NOT is_gdp_tree on every connected
// multigraph (the solver decides it independently of that predicate).
SolveResult is_degree_colorable(const MultiGraph& g, const SolveOptions& opts = {});

bool list_colorable(const MultiGraph& g, const ListAssignment& la);

// Re-verifies a stored witness: parses, validates against g, and confirms it
// admits no transversal.
bool replay_witness(const MultiGraph& g, const std::string& serialized);

// Structure of non-colorable gauge-reduced 2-covers of the cycle C_ell: the
// cover graph H must be two disjoint ell-cycles (ell odd) or one 2*ell-cycle
// (ell even).
struct CycleCoverReport {
  int ell = 0;
  uint64_t covers = 0;
  uint64_t non_colorable = 0;
  bool structure_ok = false;
};
CycleCoverReport check_cycle_covers(int ell);

}  // namespace dpc
