#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpc/cover.hpp"
#include "dpc/dp_solver.hpp"
#include "dpc/multigraph.hpp"
#include "dpc/potential.hpp"

namespace dpc {

// h-minimality: g is not DP h-colorable but every single-edge-deleted
// subgraph is (sufficient for all proper subgraphs by monotonicity).
struct MinimalityResult {
  bool minimal = false;
  std::optional<Cover> witness;  // failing cover of g when minimal
};
MinimalityResult is_h_minimal(const MultiGraph& g, const HFunction& h,
                              const SolveOptions& opts = {});

// chi_DP(g) = k and chi_DP(g - e) <= k-1 for every edge.
bool is_dp_k_critical(const MultiGraph& g, int k, const SolveOptions& opts = {});

// No (H,L)-coloring, but dropping any single matching admits one.
bool is_HL_minimal(const MultiGraph& g, const Cover& c);

enum class BoundOutcome { Exceptional, Bound, Neither };

// Which disjunct of the edge-bound dichotomy holds for a DP 4-critical
// graph: 4-Ore on <= 10 vertices, or 5|E| >= 8|V| + 1. `verified` asserts
// the caller has already established criticality; otherwise it is rechecked.
BoundOutcome check_theorem_bound(const MultiGraph& g, bool verified = false,
                                 const SolveOptions& opts = {});

struct ScanHit {
  std::string graph6;
  int edges = 0;
  BoundOutcome outcome = BoundOutcome::Neither;
};

struct ScanReport {
  int n = 0;
  long candidates = 0;
  std::vector<ScanHit> hits;
  int min_edges = -1;              // over hits
  long dichotomy_failures = 0;
  double seconds = 0.0;
};

struct ScanOptions {
  int max_edges = 1 << 20;
  int jobs = 1;
};

// Enumerates connected simple graphs with min degree >= 3 (necessary for
// 4-criticality), tests DP 4-criticality, and audits the dichotomy on every
// hit.
ScanReport scan_critical(int n, const ScanOptions& sopts = {});

// Desk check of the minimal-(H,L) potential bound: over (g, h, cover)
// triples, whenever is_HL_minimal holds and g has no exceptional subgraph,
// rho_h(g) <= -1.
struct Theorem51Report {
  long triples = 0;
  long hl_minimal = 0;
  long skipped_exceptional = 0;
  long violations = 0;
  std::vector<std::string> violation_examples;
};

struct Theorem51Options {
  uint64_t cover_cap = 0;   // 0 = every cover; else prefix + sampled positions
  int h_samples = 0;        // 0 = every h in {1..3}^V; else this many seeded draws
  uint32_t seed = 20260810;
  bool simple_only = false;
};

Theorem51Report check_theorem51(int n, const Theorem51Options& topts = {});

// Degeneracy (max over subgraphs of min degree), by min-degree peeling.
int degeneracy(const MultiGraph& g);

}  // namespace dpc
