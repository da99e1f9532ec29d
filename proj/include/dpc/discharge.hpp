#pragma once

#include <string>
#include <vector>

#include "dpc/multigraph.hpp"
#include "dpc/potential.hpp"

namespace dpc {

// Charges in doubled representation: stored value = 2 * charge, so the
// half-integer moves of the rules stay exact integers.
struct ChargeState {
  std::vector<int> vertex2;                 // 2 * charge per vertex
  std::vector<std::vector<int>> pair2;      // 2 * charge per unordered pair (full matrix)

  int total2(const MultiGraph& g) const;    // 2 * total charge
};

// The low structure around the chosen pendant edge-block: B = low vertices,
// S0 = the selected edge-block (all of V when bridgeless), B0 = B within S0,
// and the unique connecting edge x0-y0 when S0 != V.
struct LowStructure {
  VertexSet low;          // h(v) = d(v)
  VertexSet S0;
  VertexSet B0;           // low vertices inside S0
  int x0 = -1, y0 = -1;   // endpoints of the connecting cut edge, if any
  bool pendant_is_bridge = false;  // degenerate: the chosen block is a cut edge
  // Bridged graphs may have no edge-block attached by a single edge (a star
  // already shows this); S0 then falls back to V(G), flagged here.
  bool no_pendant_fallback = false;
};

// S0 selection: V(G) if bridgeless, else the pendant edge-block minimizing
// (size, potential, canonical label).
LowStructure identify_S0(const MultiGraph& g, const HFunction& h);

struct DischargeTrace {
  ChargeState after_r1, after_r2, after_r3;
  LowStructure low;
};

// R1: initial charges rho(v) and 1-6s per adjacent pair. R2: each adjacent
// pair receives (6s-1)/2 from both endpoints. R3: each vertex of S0 \ B0
// takes 1/2 along each edge joining it to B0.
DischargeTrace run_discharge_trace(const MultiGraph& g, const HFunction& h);
ChargeState run_discharge(const MultiGraph& g, const HFunction& h);

struct ChargeAudit {
  bool conservation_ok = false;      // total == rho_h(G) after each rule
  bool pairs_zero_after_r2 = false;
  bool r3_internal_ok = false;       // only S0 vertices change in R3
  int ch_S0_doubled = 0;             // 2 * ch*(S0)
  bool ch_S0_identity_ok = false;    // matches rho_h(G) or rho(S0) - 5/2
  // Per low-tree component of B0: doubled charge sums and whether the
  // counterexample bound (-1, or -1/2 with x0) would hold; informational.
  std::vector<int> tree_sums_doubled;
  std::vector<bool> tree_bound_holds;
  bool degenerate_pendant = false;
};

ChargeAudit audit_charges(const MultiGraph& g, const HFunction& h, const ChargeState& final_state);

}  // namespace dpc
