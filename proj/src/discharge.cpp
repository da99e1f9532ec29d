#include "dpc/discharge.hpp"

#include <algorithm>
#include <stdexcept>

#include "dpc/canonical.hpp"

namespace dpc {

int ChargeState::total2(const MultiGraph& g) const {
  int t = 0;
  for (int x : vertex2) t += x;
  int n = g.order();
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) t += pair2[u][v];
  return t;
}

LowStructure identify_S0(const MultiGraph& g, const HFunction& h) {
  if (!g.connected()) throw std::invalid_argument("identify_S0: graph must be connected");
  int n = g.order();
  LowStructure out;
  for (int v = 0; v < n; v++)
    if (h(v) == g.degree(v)) out.low.add(v);

  EdgeBlockDecomposition ebd = edge_blocks(g);
  if (ebd.bridges.empty()) {
    out.S0 = VertexSet::full(n);
    out.B0 = out.low;
    return out;
  }
  // Pendant edge-blocks: joined to the rest by exactly one edge.
  VertexSet best;
  int best_size = 0, best_rho = 0;
  std::string best_label;
  bool found = false;
  for (const VertexSet& eb : ebd.edge_blocks) {
    if (g.edges_between(eb, eb.complement(n)) != 1) continue;
    int size = eb.size();
    int rho = rho_set(g, h, eb);
    std::string label = canonical_form(g.induced(eb));
    bool better = !found;
    if (found) {
      if (size != best_size)
        better = size < best_size;
      else if (rho != best_rho)
        better = rho < best_rho;
      else
        better = label < best_label;
    }
    if (better) {
      best = eb;
      best_size = size;
      best_rho = rho;
      best_label = label;
      found = true;
    }
  }
  if (!found) {
    out.S0 = VertexSet::full(n);
    out.B0 = out.low;
    out.no_pendant_fallback = true;
    return out;
  }
  out.S0 = best;
  out.B0 = out.low & out.S0;
  // The unique connecting edge.
  for (int u = 0; u < n; u++) {
    if (!best.contains(u)) continue;
    for (int v = 0; v < n; v++) {
      if (best.contains(v) || g.mult(u, v) == 0) continue;
      out.x0 = u;
      out.y0 = v;
    }
  }
  // Degenerate when the chosen pendant block is itself a cut edge.
  if (best.size() == 2) {
    auto vs = best.members();
    for (auto [bu, bv] : ebd.bridges)
      if (bu == vs[0] && bv == vs[1]) out.pendant_is_bridge = true;
  }
  return out;
}

DischargeTrace run_discharge_trace(const MultiGraph& g, const HFunction& h) {
  int n = g.order();
  DischargeTrace tr;
  tr.low = identify_S0(g, h);
  ChargeState cs;
  cs.vertex2.assign(n, 0);
  cs.pair2.assign(n, std::vector<int>(n, 0));
  // R1.
  for (int v = 0; v < n; v++) cs.vertex2[v] = 2 * rho_vertex(h, v);
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) {
      int s = g.mult(u, v);
      if (s > 0) {
        cs.pair2[u][v] = 2 * (1 - 6 * s);
        cs.pair2[v][u] = cs.pair2[u][v];
      }
    }
  tr.after_r1 = cs;
  // R2: pair takes (6s-1)/2 from each endpoint; doubled, 6s-1 from each.
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) {
      int s = g.mult(u, v);
      if (s == 0) continue;
      cs.vertex2[u] -= 6 * s - 1;
      cs.vertex2[v] -= 6 * s - 1;
      cs.pair2[u][v] += 2 * (6 * s - 1);
      cs.pair2[v][u] = cs.pair2[u][v];
    }
  tr.after_r2 = cs;
  // R3: u in S0 \ B0 takes 1/2 along each edge to B0.
  for (int u = 0; u < n; u++) {
    if (!tr.low.S0.contains(u) || tr.low.B0.contains(u)) continue;
    for (int v = 0; v < n; v++) {
      if (!tr.low.B0.contains(v)) continue;
      int s = g.mult(u, v);
      if (s == 0) continue;
      cs.vertex2[u] += s;
      cs.vertex2[v] -= s;
    }
  }
  tr.after_r3 = cs;
  return tr;
}

ChargeState run_discharge(const MultiGraph& g, const HFunction& h) {
  return run_discharge_trace(g, h).after_r3;
}

ChargeAudit audit_charges(const MultiGraph& g, const HFunction& h, const ChargeState& final_state) {
  int n = g.order();
  DischargeTrace tr = run_discharge_trace(g, h);
  ChargeAudit audit;
  int rho2 = 2 * rho_graph(g, h);
  audit.conservation_ok = tr.after_r1.total2(g) == rho2 && tr.after_r2.total2(g) == rho2 &&
                          tr.after_r3.total2(g) == rho2 && final_state.total2(g) == rho2;
  audit.pairs_zero_after_r2 = true;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++)
      if (tr.after_r2.pair2[u][v] != 0) audit.pairs_zero_after_r2 = false;
  audit.r3_internal_ok = true;
  for (int v = 0; v < n; v++)
    if (!tr.low.S0.contains(v) &&
        tr.after_r3.vertex2[v] != tr.after_r2.vertex2[v])
      audit.r3_internal_ok = false;
  int chS0 = 0;
  for (uint32_t b = tr.low.S0.bits; b; b &= b - 1) chS0 += final_state.vertex2[__builtin_ctz(b)];
  audit.ch_S0_doubled = chS0;
  if (tr.low.S0 == VertexSet::full(n))
    audit.ch_S0_identity_ok = (chS0 == rho2);
  else
    audit.ch_S0_identity_ok = (chS0 == 2 * rho_set(g, h, tr.low.S0) - 5);
  audit.degenerate_pendant = tr.low.pendant_is_bridge;
  // Components of B0 and the counterexample's low-tree bounds (reported,
  // never asserted: real inputs need not satisfy them).
  VertexSet rest = tr.low.B0;
  while (!rest.empty()) {
    int s = __builtin_ctz(rest.bits);
    uint32_t comp = 1u << s;
    uint32_t frontier = comp;
    while (frontier) {
      uint32_t nxt = 0;
      for (uint32_t b = frontier; b; b &= b - 1) nxt |= g.adj_mask(__builtin_ctz(b));
      nxt &= rest.bits & ~comp;
      comp |= nxt;
      frontier = nxt;
    }
    rest.bits &= ~comp;
    int sum = 0;
    for (uint32_t b = comp; b; b &= b - 1) sum += final_state.vertex2[__builtin_ctz(b)];
    audit.tree_sums_doubled.push_back(sum);
    bool has_x0 = tr.low.x0 >= 0 && (comp >> tr.low.x0) & 1;
    audit.tree_bound_holds.push_back(sum <= (has_x0 ? -1 : -2));
  }
  return audit;
}

}  // namespace dpc
