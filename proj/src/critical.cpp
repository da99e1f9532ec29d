#include "dpc/critical.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "dpc/enumerate.hpp"
#include "dpc/graph_io.hpp"
#include "dpc/ore.hpp"

namespace dpc {

int degeneracy(const MultiGraph& g) {
  int n = g.order();
  std::vector<bool> removed(n, false);
  int best = 0;
  for (int round = 0; round < n; round++) {
    int pick = -1, mindeg = INT32_MAX;
    for (int v = 0; v < n; v++) {
      if (removed[v]) continue;
      int d = 0;
      for (int u = 0; u < n; u++)
        if (!removed[u]) d += g.mult(v, u);
      if (d < mindeg) {
        mindeg = d;
        pick = v;
      }
    }
    best = std::max(best, mindeg);
    removed[pick] = true;
  }
  return best;
}

MinimalityResult is_h_minimal(const MultiGraph& g, const HFunction& h, const SolveOptions& opts) {
  MinimalityResult res;
  SolveResult whole = is_dp_colorable(g, h, opts);
  if (whole.colorable) return res;
  for (auto [u, v] : g.adjacent_pairs()) {
    MultiGraph sub = g;
    sub.remove_edge(u, v, 1);
    if (!is_dp_colorable_demand(sub, h.values, opts).colorable) return res;
  }
  res.minimal = true;
  res.witness = whole.witness;
  return res;
}

bool is_dp_k_critical(const MultiGraph& g, int k, const SolveOptions& opts) {
  int n = g.order();
  for (int v = 0; v < n; v++)
    if (g.degree(v) < k - 1) return false;  // cannot satisfy both criticality conditions
  std::vector<int> km1(n, k - 1);
  for (auto [u, v] : g.adjacent_pairs()) {
    MultiGraph sub = g;
    sub.remove_edge(u, v, 1);
    if (!is_dp_colorable_demand(sub, km1, opts).colorable) return false;
  }
  if (is_dp_colorable_demand(g, km1, opts).colorable) return false;
  if (degeneracy(g) <= k - 1) return true;  // greedy gives chi_DP <= k
  std::vector<int> kk(n, k);
  return is_dp_colorable_demand(g, kk, opts).colorable;
}

bool is_HL_minimal(const MultiGraph& g, const Cover& c) {
  if (!validate(g, c)) throw std::invalid_argument("is_HL_minimal: invalid cover");
  if (find_transversal(g, c).has_value()) return false;
  for (size_t p = 0; p < c.pairs.size(); p++) {
    auto [u, v] = c.pairs[p];
    for (size_t m = 0; m < c.matchings[p].size(); m++) {
      MultiGraph sub = g;
      sub.remove_edge(u, v, 1);
      Cover cc;
      cc.n = c.n;
      cc.list_size = c.list_size;
      for (size_t q = 0; q < c.pairs.size(); q++) {
        std::vector<Matching> ms = c.matchings[q];
        if (q == p) ms.erase(ms.begin() + m);
        if (q == p && ms.empty() && sub.mult(u, v) == 0) continue;  // pair vanished
        cc.pairs.push_back(c.pairs[q]);
        cc.matchings.push_back(ms);
      }
      if (!find_transversal(sub, cc).has_value()) return false;
    }
  }
  return true;
}

BoundOutcome check_theorem_bound(const MultiGraph& g, bool verified, const SolveOptions& opts) {
  if (!verified && !is_dp_k_critical(g, 4, opts))
    throw std::invalid_argument("check_theorem_bound: graph is not DP 4-critical");
  int n = g.order(), m = g.edge_count();
  if (n <= 10 && (n - 1) % 3 == 0 && is_4ore(g, std::min(10, std::max(4, n))))
    return BoundOutcome::Exceptional;
  if (5 * m >= 8 * n + 1) return BoundOutcome::Bound;
  return BoundOutcome::Neither;
}

ScanReport scan_critical(int n, const ScanOptions& sopts) {
  auto t0 = std::chrono::steady_clock::now();
  ScanReport rep;
  rep.n = n;
  std::vector<MultiGraph> candidates = enumerate_graphs(n, 3, sopts.max_edges);
  rep.candidates = static_cast<long>(candidates.size());
  SolveOptions opts;
  opts.jobs = 1;  // parallelism is across graphs
  std::vector<char> is_hit(candidates.size(), 0);
  std::atomic<size_t> next{0};
  int jobs = std::max(1, sopts.jobs);
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= candidates.size()) break;
      if (is_dp_k_critical(candidates[i], 4, opts)) is_hit[i] = 1;
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; t++) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  for (size_t i = 0; i < candidates.size(); i++) {
    if (!is_hit[i]) continue;
    ScanHit hit;
    hit.graph6 = emit_graph6(candidates[i]);
    hit.edges = candidates[i].edge_count();
    hit.outcome = check_theorem_bound(candidates[i], true, opts);
    if (hit.outcome == BoundOutcome::Neither) rep.dichotomy_failures++;
    if (rep.min_edges < 0 || hit.edges < rep.min_edges) rep.min_edges = hit.edges;
    rep.hits.push_back(hit);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace {

// Exceptional subgraph test, exact for n <= 6: the smallest 4-Ore graph
// beyond K4 has 7 vertices, so at this scale an exceptional subgraph is a
// K4 sub-multigraph with h = 3 on all four vertices.
bool has_exceptional_subgraph(const MultiGraph& g, const HFunction& h) {
  int n = g.order();
  if (n > 6) throw std::invalid_argument("exceptional-subgraph test limited to n <= 6");
  for (int a = 0; a < n; a++)
    for (int b = a + 1; b < n; b++)
      for (int c = b + 1; c < n; c++)
        for (int d = c + 1; d < n; d++) {
          if (h(a) != 3 || h(b) != 3 || h(c) != 3 || h(d) != 3) continue;
          if (g.mult(a, b) && g.mult(a, c) && g.mult(a, d) && g.mult(b, c) && g.mult(b, d) &&
              g.mult(c, d))
            return true;
        }
  return false;
}

}  // namespace

Theorem51Report check_theorem51(int n, const Theorem51Options& topts) {
  Theorem51Report rep;
  std::mt19937 rng(topts.seed);
  std::vector<MultiGraph> graphs =
      topts.simple_only ? enumerate_graphs(n, 0, n * (n - 1) / 2) : enumerate_multigraphs(n, 3);
  for (const MultiGraph& g : graphs) {
    if (g.order() != n || !g.connected()) continue;
    // All h in {1..3}^V, or a seeded sample.
    std::vector<std::vector<int>> hs;
    if (topts.h_samples == 0) {
      std::vector<int> h(n, 1);
      while (true) {
        hs.push_back(h);
        int k = 0;
        while (k < n && h[k] == 3) h[k++] = 1;
        if (k == n) break;
        h[k]++;
      }
    } else {
      for (int s = 0; s < topts.h_samples; s++) {
        std::vector<int> h(n);
        for (int v = 0; v < n; v++) h[v] = 1 + static_cast<int>(rng() % 3);
        hs.push_back(h);
      }
    }
    for (const auto& hv : hs) {
      HFunction h(hv);
      CoverEnumerator en(g, hv);
      uint64_t total = en.total();
      std::vector<uint64_t> positions;
      if (topts.cover_cap == 0 || total <= topts.cover_cap) {
        for (uint64_t p = 0; p < total; p++) positions.push_back(p);
      } else {
        for (uint64_t p = 0; p < topts.cover_cap / 2; p++) positions.push_back(p);
        for (uint64_t s = 0; s < topts.cover_cap / 2; s++)
          positions.push_back(rng() % total);
        std::sort(positions.begin(), positions.end());
        positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
      }
      bool exceptional_checked = false, exceptional = false;
      for (uint64_t pos : positions) {
        Cover cov = en.materialize(en.indices_at(pos));
        rep.triples++;
        if (find_transversal(g, cov).has_value()) continue;
        if (!is_HL_minimal(g, cov)) continue;
        rep.hl_minimal++;
        if (!exceptional_checked) {
          exceptional = has_exceptional_subgraph(g, h);
          exceptional_checked = true;
        }
        if (exceptional) {
          rep.skipped_exceptional++;
          continue;
        }
        if (rho_graph(g, h) > -1) {
          rep.violations++;
          if (rep.violation_examples.size() < 8)
            rep.violation_examples.push_back(g.to_string() + " | " + serialize_cover(cov));
        }
      }
    }
  }
  return rep;
}

}  // namespace dpc
