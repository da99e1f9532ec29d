#include "dpc/cover.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace dpc {

Matching Matching::identity(int k) {
  Matching m;
  for (int i = 0; i < k; i++) m.pairs.push_back({static_cast<uint8_t>(i), static_cast<uint8_t>(i)});
  return m;
}

int Cover::pair_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (size_t i = 0; i < pairs.size(); i++)
    if (pairs[i].first == u && pairs[i].second == v) return static_cast<int>(i);
  return -1;
}

bool Transversal::total() const {
  for (int c : choice)
    if (c < 0) return false;
  return true;
}

bool validate(const MultiGraph& g, const Cover& c) {
  if (c.n != g.order()) return false;
  if (static_cast<int>(c.list_size.size()) != c.n) return false;
  for (int s : c.list_size)
    if (s < 0) return false;
  if (c.pairs != g.adjacent_pairs()) return false;
  if (c.matchings.size() != c.pairs.size()) return false;
  for (size_t p = 0; p < c.pairs.size(); p++) {
    auto [u, v] = c.pairs[p];
    if (static_cast<int>(c.matchings[p].size()) != g.mult(u, v)) return false;
    std::vector<std::pair<uint8_t, uint8_t>> all;
    for (const Matching& m : c.matchings[p]) {
      uint16_t seen_i = 0, seen_j = 0;
      for (auto [i, j] : m.pairs) {
        if (i >= c.list_size[u] || j >= c.list_size[v]) return false;
        if ((seen_i >> i) & 1) return false;  // not injective
        if ((seen_j >> j) & 1) return false;
        seen_i |= 1u << i;
        seen_j |= 1u << j;
        all.push_back({i, j});
      }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;  // union not simple
  }
  return true;
}

bool transversal_valid_partial(const MultiGraph& g, const Cover& c, const Transversal& f) {
  if (static_cast<int>(f.choice.size()) != c.n) return false;
  for (int v = 0; v < c.n; v++)
    if (f.choice[v] >= c.list_size[v]) return false;
  for (size_t p = 0; p < c.pairs.size(); p++) {
    auto [u, v] = c.pairs[p];
    int cu = f.choice[u], cv = f.choice[v];
    if (cu < 0 || cv < 0) continue;
    for (const Matching& m : c.matchings[p])
      for (auto [i, j] : m.pairs)
        if (i == cu && j == cv) return false;
  }
  return true;
}

bool transversal_valid(const MultiGraph& g, const Cover& c, const Transversal& f) {
  return f.total() && transversal_valid_partial(g, c, f);
}

Cover cover_from_lists(const MultiGraph& g, const ListAssignment& la) {
  if (!g.is_simple())
    throw std::invalid_argument("cover_from_lists: graph must be simple");
  int n = g.order();
  if (static_cast<int>(la.lists.size()) != n)
    throw std::invalid_argument("cover_from_lists: list count mismatch");
  std::vector<std::vector<int>> sorted(n);
  for (int v = 0; v < n; v++) {
    sorted[v] = la.lists[v];
    std::sort(sorted[v].begin(), sorted[v].end());
    sorted[v].erase(std::unique(sorted[v].begin(), sorted[v].end()), sorted[v].end());
  }
  Cover c;
  c.n = n;
  for (int v = 0; v < n; v++) c.list_size.push_back(static_cast<int>(sorted[v].size()));
  c.pairs = g.adjacent_pairs();
  for (auto [u, v] : c.pairs) {
    Matching m;
    for (size_t i = 0; i < sorted[u].size(); i++) {
      auto it = std::lower_bound(sorted[v].begin(), sorted[v].end(), sorted[u][i]);
      if (it != sorted[v].end() && *it == sorted[u][i])
        m.pairs.push_back({static_cast<uint8_t>(i),
                           static_cast<uint8_t>(it - sorted[v].begin())});
    }
    c.matchings.push_back({m});
  }
  return c;
}

Cover identity_cover(const MultiGraph& g, const std::vector<int>& demand) {
  Cover c;
  c.n = g.order();
  c.list_size = demand;
  c.pairs = g.adjacent_pairs();
  for (auto [u, v] : c.pairs) {
    int s = g.mult(u, v);
    int a = demand[u], b = demand[v];
    std::vector<Matching> ms;
    for (int k = 0; k < s; k++) {
      Matching m;
      if (a <= b) {
        if (k < b)
          for (int i = 0; i < a; i++)
            m.pairs.push_back({static_cast<uint8_t>(i), static_cast<uint8_t>((i + k) % b)});
      } else {
        if (k < a)
          for (int j = 0; j < b; j++)
            m.pairs.push_back({static_cast<uint8_t>((j + k) % a), static_cast<uint8_t>(j)});
      }
      std::sort(m.pairs.begin(), m.pairs.end());
      ms.push_back(m);
    }
    c.matchings.push_back(ms);
  }
  return c;
}

std::pair<MultiGraph, Cover> restrict_cover(const MultiGraph& g, const Cover& c,
                                            const Transversal& f, VertexSet x) {
  int n = g.order();
  VertexSet xbar = x.complement(n);
  for (uint32_t b = xbar.bits; b; b &= b - 1)
    if (f.choice[__builtin_ctz(b)] < 0)
      throw std::invalid_argument("restrict_cover: f must be total outside x");
  Transversal fo;
  fo.choice.assign(n, -1);
  for (uint32_t b = xbar.bits; b; b &= b - 1) {
    int v = __builtin_ctz(b);
    fo.choice[v] = f.choice[v];
  }
  if (!transversal_valid_partial(g, c, fo))
    throw std::invalid_argument("restrict_cover: f invalid outside x");

  // Surviving colors per vertex of x.
  std::vector<std::vector<int>> keep(n);
  for (uint32_t b = x.bits; b; b &= b - 1) {
    int v = __builtin_ctz(b);
    std::vector<bool> dead(c.list_size[v], false);
    for (size_t p = 0; p < c.pairs.size(); p++) {
      auto [a1, a2] = c.pairs[p];
      int w = -1;
      bool v_first = false;
      if (a1 == v && xbar.contains(a2)) {
        w = a2;
        v_first = true;
      } else if (a2 == v && xbar.contains(a1)) {
        w = a1;
      }
      if (w < 0) continue;
      for (const Matching& m : c.matchings[p])
        for (auto [i, j] : m.pairs) {
          if (v_first && j == fo.choice[w]) dead[i] = true;
          if (!v_first && i == fo.choice[w]) dead[j] = true;
        }
    }
    for (int i = 0; i < c.list_size[v]; i++)
      if (!dead[i]) keep[v].push_back(i);
  }

  MultiGraph sub = g.induced(x);
  std::vector<int> verts = x.members();
  std::vector<int> newidx(n, -1);
  for (size_t i = 0; i < verts.size(); i++) newidx[verts[i]] = static_cast<int>(i);

  Cover out;
  out.n = sub.order();
  out.list_size.resize(out.n);
  for (int v : verts) out.list_size[newidx[v]] = static_cast<int>(keep[v].size());
  out.pairs = sub.adjacent_pairs();
  std::vector<std::vector<int>> rank(n);
  for (int v : verts) {
    rank[v].assign(c.list_size[v], -1);
    for (size_t r = 0; r < keep[v].size(); r++) rank[v][keep[v][r]] = static_cast<int>(r);
  }
  for (auto [su, sv] : out.pairs) {
    int u = verts[su], v = verts[sv];
    int p = c.pair_index(u, v);
    std::vector<Matching> ms;
    for (const Matching& m : c.matchings[p]) {
      Matching rm;
      for (auto [i, j] : m.pairs) {
        int ri = rank[u][i], rj = rank[v][j];
        if (ri >= 0 && rj >= 0)
          rm.pairs.push_back({static_cast<uint8_t>(ri), static_cast<uint8_t>(rj)});
      }
      std::sort(rm.pairs.begin(), rm.pairs.end());
      ms.push_back(rm);
    }
    out.matchings.push_back(ms);
  }
  return {sub, out};
}

std::string serialize_cover(const Cover& c) {
  std::ostringstream os;
  os << "dpcover 1\n";
  os << "n " << c.n << "\n";
  os << "lists";
  for (int s : c.list_size) os << " " << s;
  os << "\n";
  for (size_t p = 0; p < c.pairs.size(); p++) {
    os << "pair " << c.pairs[p].first << " " << c.pairs[p].second << " mult "
       << c.matchings[p].size() << "\n";
    for (const Matching& m : c.matchings[p]) {
      os << "  matching";
      for (auto [i, j] : m.pairs) os << " " << int(i) << ">" << int(j);
      os << "\n";
    }
  }
  os << "end\n";
  return os.str();
}

Cover parse_cover(const std::string& text) {
  std::istringstream is(text);
  std::string line, tok;
  Cover c;
  if (!std::getline(is, line) || line.rfind("dpcover", 0) != 0)
    throw std::invalid_argument("parse_cover: bad header");
  int cur_pair = -1;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    if (!(ls >> tok)) continue;
    if (tok == "n") {
      ls >> c.n;
    } else if (tok == "lists") {
      int s;
      while (ls >> s) c.list_size.push_back(s);
    } else if (tok == "pair") {
      int u, v, mult;
      std::string kw;
      ls >> u >> v >> kw >> mult;
      c.pairs.push_back({u, v});
      c.matchings.emplace_back();
      cur_pair = static_cast<int>(c.pairs.size()) - 1;
      (void)mult;
    } else if (tok == "matching") {
      if (cur_pair < 0) throw std::invalid_argument("parse_cover: matching before pair");
      Matching m;
      std::string item;
      while (ls >> item) {
        size_t gt = item.find('>');
        if (gt == std::string::npos) throw std::invalid_argument("parse_cover: bad pair");
        int i = std::stoi(item.substr(0, gt));
        int j = std::stoi(item.substr(gt + 1));
        m.pairs.push_back({static_cast<uint8_t>(i), static_cast<uint8_t>(j)});
      }
      c.matchings[cur_pair].push_back(m);
    } else if (tok == "end") {
      break;
    } else {
      throw std::invalid_argument("parse_cover: unknown line " + tok);
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Enumeration machinery.

std::vector<Matching> maximum_matchings(int a, int b) {
  std::vector<Matching> out;
  int small = std::min(a, b), big = std::max(a, b);
  std::vector<int> img(small);
  std::vector<bool> used(big, false);
  // All injections [small] -> [big], lexicographic.
  std::function<void(int)> rec = [&](int i) {
    if (i == small) {
      Matching m;
      for (int k = 0; k < small; k++) {
        if (a <= b)
          m.pairs.push_back({static_cast<uint8_t>(k), static_cast<uint8_t>(img[k])});
        else
          m.pairs.push_back({static_cast<uint8_t>(img[k]), static_cast<uint8_t>(k)});
      }
      if (a > b) std::sort(m.pairs.begin(), m.pairs.end());
      out.push_back(m);
      return;
    }
    for (int t = 0; t < big; t++) {
      if (used[t]) continue;
      used[t] = true;
      img[i] = t;
      rec(i + 1);
      used[t] = false;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Matching> decompose_union(const std::vector<std::pair<uint8_t, uint8_t>>& union_pairs,
                                      int s, int a, int b) {
  // Repeatedly extract a matching covering all current-maximum-degree
  // vertices; bipartite graphs with max degree d decompose into d matchings.
  std::vector<std::vector<int>> adj(a);
  for (auto [i, j] : union_pairs) adj[i].push_back(j);
  std::vector<Matching> out;
  std::vector<int> degu(a, 0), degv(b, 0);
  for (auto [i, j] : union_pairs) {
    degu[i]++;
    degv[j]++;
  }
  auto maxdeg = [&]() {
    int d = 0;
    for (int x : degu) d = std::max(d, x);
    for (int x : degv) d = std::max(d, x);
    return d;
  };
  while (maxdeg() > 0) {
    int d = maxdeg();
    // Backtracking search for a matching covering every degree-d vertex.
    std::vector<int> match_u(a, -1);
    std::vector<bool> used_v(b, false);
    std::function<bool(int)> place = [&](int u) -> bool {
      if (u == a) {
        for (int j = 0; j < b; j++)
          if (degv[j] == d && !used_v[j]) return false;
        return true;
      }
      if (degu[u] == d) {
        for (int j : adj[u]) {
          if (used_v[j]) continue;
          used_v[j] = true;
          match_u[u] = j;
          if (place(u + 1)) return true;
          used_v[j] = false;
          match_u[u] = -1;
        }
        return false;
      }
      // Optional vertex: try skipping first, then each neighbour.
      if (place(u + 1)) return true;
      for (int j : adj[u]) {
        if (used_v[j]) continue;
        used_v[j] = true;
        match_u[u] = j;
        if (place(u + 1)) return true;
        used_v[j] = false;
        match_u[u] = -1;
      }
      return false;
    };
    bool ok = place(0);
    assert(ok && "bipartite decomposition failed");
    (void)ok;
    Matching m;
    for (int u = 0; u < a; u++) {
      if (match_u[u] < 0) continue;
      m.pairs.push_back({static_cast<uint8_t>(u), static_cast<uint8_t>(match_u[u])});
      degu[u]--;
      degv[match_u[u]]--;
      adj[u].erase(std::find(adj[u].begin(), adj[u].end(), match_u[u]));
    }
    out.push_back(m);
  }
  if (static_cast<int>(out.size()) > s)
    throw std::logic_error("decompose_union: degree exceeds matching count");
  while (static_cast<int>(out.size()) < s) out.push_back(Matching{});
  return out;
}

namespace {

using PairMask = unsigned __int128;

PairMask matching_mask(const Matching& m, int b) {
  PairMask x = 0;
  for (auto [i, j] : m.pairs) x |= (PairMask)1 << (i * b + j);
  return x;
}

void compile_value(SlotValue& val, int /*a*/, int /*b*/) {
  val.fwd.fill(0);
  val.rev.fill(0);
  for (const Matching& m : val.matchings)
    for (auto [i, j] : m.pairs) {
      val.fwd[i] |= static_cast<uint16_t>(1u << j);
      val.rev[j] |= static_cast<uint16_t>(1u << i);
    }
}

// Streams above this many values per pair are not materialized; the caller
// falls back to the blocker search.
constexpr size_t kValueCap = 200000;

// Gauge-normal first matchings of a tree pair. Only the BFS child's list
// permutation is free when the pair is processed, so the child side can be
// sorted but the set of matched parent colors cannot be chosen: with child
// list at least as large as the parent's the identity is forced; otherwise
// every ascending injection of the child list into the parent list remains.
std::vector<Matching> tree_first_matchings(int a, int b, bool child_is_u) {
  int child = child_is_u ? a : b;
  int parent = child_is_u ? b : a;
  std::vector<Matching> out;
  if (child >= parent) {
    out.push_back(Matching::identity(std::min(a, b)));
    return out;
  }
  // Choose which parent colors are hit, ascending; child side is 0..child-1.
  std::vector<int> subset;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(subset.size()) == child) {
      Matching m;
      for (int i = 0; i < child; i++) {
        uint8_t ci = static_cast<uint8_t>(i), pi = static_cast<uint8_t>(subset[i]);
        if (child_is_u)
          m.pairs.push_back({ci, pi});
        else
          m.pairs.push_back({pi, ci});
      }
      std::sort(m.pairs.begin(), m.pairs.end());
      out.push_back(m);
      return;
    }
    for (int q = from; q < parent; q++) {
      subset.push_back(q);
      rec(q + 1);
      subset.pop_back();
    }
  };
  rec(0);
  return out;
}

// Values for one pair in gauge-fixed mode: sets of `s` pairwise-disjoint
// maximum matchings, the first constrained to gauge-normal form on tree
// pairs; when s reaches max(a,b) the union is forced complete and there is
// one value.
std::vector<SlotValue> gauge_values(int a, int b, int s, bool tree, bool child_is_u) {
  std::vector<SlotValue> out;
  {
    uint64_t ff = 1;  // falling factorial: number of maximum matchings
    for (int k = 0; k < std::min(a, b); k++) ff *= static_cast<uint64_t>(std::max(a, b) - k);
    if (ff > kValueCap) throw std::length_error("cover value table too large");
  }
  if (s >= std::max(a, b)) {
    SlotValue val;
    Cover tmp;  // reuse the shift construction from identity_cover
    MultiGraph pairg(2);
    pairg.add_edge(0, 1, s);
    tmp = identity_cover(pairg, {a, b});
    val.matchings = tmp.matchings[0];
    compile_value(val, a, b);
    out.push_back(val);
    return out;
  }
  std::vector<Matching> mm = maximum_matchings(a, b);
  std::vector<PairMask> masks;
  masks.reserve(mm.size());
  for (const Matching& m : mm) masks.push_back(matching_mask(m, b));

  std::vector<int> chosen;
  auto emit = [&]() {
    SlotValue val;
    for (int idx : chosen) val.matchings.push_back(mm[idx]);
    compile_value(val, a, b);
    if (out.size() >= kValueCap) throw std::length_error("cover value table too large");
    out.push_back(val);
  };
  // Remaining s-1 matchings on top of a fixed first one, ascending and
  // pairwise disjoint.
  std::function<void(int, PairMask, int)> rest = [&](int start, PairMask used, int skip) {
    if (static_cast<int>(chosen.size()) == s) {
      emit();
      return;
    }
    for (int i = start; i < static_cast<int>(mm.size()); i++) {
      if (i == skip) continue;
      if (masks[i] & used) continue;
      chosen.push_back(i);
      rest(i + 1, used | masks[i], skip);
      chosen.pop_back();
    }
  };
  if (tree) {
    for (const Matching& first : tree_first_matchings(a, b, child_is_u)) {
      int idx = static_cast<int>(std::find(mm.begin(), mm.end(), first) - mm.begin());
      chosen.push_back(idx);
      rest(0, matching_mask(first, b), idx);
      chosen.pop_back();
    }
  } else {
    rest(0, 0, -1);
  }
  return out;
}

// Exhaustive mode: every edge-maximal union with both-side degrees <= s.
std::vector<SlotValue> exhaustive_values(int a, int b, int s) {
  if (a * b > 20) throw std::length_error("exhaustive cover mode limited to small lists");
  std::vector<std::pair<uint8_t, uint8_t>> all;
  for (int i = 0; i < a; i++)
    for (int j = 0; j < b; j++) all.push_back({static_cast<uint8_t>(i), static_cast<uint8_t>(j)});
  int total = a * b;
  std::vector<SlotValue> out;
  for (uint32_t sub = 0; sub < (1u << total); sub++) {
    std::vector<int> degu(a, 0), degv(b, 0);
    bool ok = true;
    for (int t = 0; t < total && ok; t++)
      if ((sub >> t) & 1) {
        if (++degu[all[t].first] > s || ++degv[all[t].second] > s) ok = false;
      }
    if (!ok) continue;
    bool maximal = true;
    for (int t = 0; t < total && maximal; t++)
      if (!((sub >> t) & 1) && degu[all[t].first] < s && degv[all[t].second] < s) maximal = false;
    if (!maximal) continue;
    std::vector<std::pair<uint8_t, uint8_t>> up;
    for (int t = 0; t < total; t++)
      if ((sub >> t) & 1) up.push_back(all[t]);
    SlotValue val;
    val.matchings = decompose_union(up, s, a, b);
    compile_value(val, a, b);
    out.push_back(val);
  }
  return out;
}

}  // namespace

std::vector<bool> bfs_tree_pair_flags(const MultiGraph& g,
                                      const std::vector<std::pair<int, int>>& pairs) {
  std::vector<bool> tree(pairs.size(), false);
  std::vector<int> parent = bfs_parents(g);
  for (size_t p = 0; p < pairs.size(); p++) {
    auto [u, v] = pairs[p];
    if (parent[u] == v || parent[v] == u) tree[p] = true;
  }
  return tree;
}

std::vector<int> bfs_parents(const MultiGraph& g) {
  int n = g.order();
  std::vector<int> parent(n, -2);
  std::queue<int> q;
  if (n > 0) {
    parent[0] = -1;
    q.push(0);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (uint32_t bm = g.adj_mask(v); bm; bm &= bm - 1) {
      int w = __builtin_ctz(bm);
      if (parent[w] != -2) continue;
      parent[w] = v;
      q.push(w);
    }
  }
  for (int& p : parent)
    if (p == -2) p = -1;
  return parent;
}

CoverEnumerator::CoverEnumerator(const MultiGraph& g, const std::vector<int>& demand,
                                 CoverMode mode)
    : g_(g), demand_(demand) {
  auto pairs = g.adjacent_pairs();
  std::vector<bool> tree = bfs_tree_pair_flags(g, pairs);
  std::vector<int> parent = bfs_parents(g);
  for (size_t p = 0; p < pairs.size(); p++) {
    auto [u, v] = pairs[p];
    Slot slot;
    slot.u = u;
    slot.v = v;
    slot.mult = g.mult(u, v);
    slot.tree = (mode == CoverMode::GaugeFixed) && tree[p];
    if (slot.tree) slot.child = (parent[u] == v) ? u : v;
    slot.values = (mode == CoverMode::GaugeFixed)
                      ? gauge_values(demand[u], demand[v], slot.mult, slot.tree,
                                     slot.child == u)
                      : exhaustive_values(demand[u], demand[v], slot.mult);
    slots_.push_back(std::move(slot));
  }
}

uint64_t CoverEnumerator::total() const {
  uint64_t t = 1;
  for (const Slot& s : slots_) {
    uint64_t k = s.values.size();
    if (k == 0) return 0;
    if (t > UINT64_MAX / k) return UINT64_MAX;
    t *= k;
  }
  return t;
}

std::vector<int> CoverEnumerator::indices_at(uint64_t pos) const {
  std::vector<int> idx(slots_.size(), 0);
  for (size_t i = 0; i < slots_.size(); i++) {
    uint64_t k = slots_[i].values.size();
    idx[i] = static_cast<int>(pos % k);
    pos /= k;
  }
  return idx;
}

Cover CoverEnumerator::materialize(const std::vector<int>& indices) const {
  Cover c;
  c.n = g_.order();
  c.list_size = demand_;
  for (size_t i = 0; i < slots_.size(); i++) {
    c.pairs.push_back({slots_[i].u, slots_[i].v});
    c.matchings.push_back(slots_[i].values[indices[i]].matchings);
  }
  return c;
}

std::string CoverEnumerator::indices_to_string(const std::vector<int>& indices) {
  std::ostringstream os;
  for (size_t i = 0; i < indices.size(); i++) {
    if (i) os << ",";
    os << indices[i];
  }
  return os.str();
}

void enumerate_covers(const MultiGraph& g, const HFunction& h,
                      const std::function<bool(const Cover&)>& fn) {
  for (int v = 0; v < g.order(); v++)
    if (h(v) < 1) throw std::invalid_argument("enumerate_covers: demands must be >= 1");
  CoverEnumerator en(g, h.values);
  uint64_t t = en.total();
  for (uint64_t pos = 0; pos < t; pos++)
    if (!fn(en.materialize(en.indices_at(pos)))) return;
}

}  // namespace dpc
