#pragma once
// Test-side oracles, deliberately independent of the library's construction
// and validation paths: everything here recomputes from the color matrix.
#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pcspan/graph_core.hpp"
#include "pcspan/rng.hpp"
#include "pcspan/tree.hpp"

namespace testutil {

using pcspan::ColorId;
using pcspan::EdgeColoredGraph;

struct Tri {
  int u, v;
  long long c;
};

inline EdgeColoredGraph make_graph(int n, const std::vector<Tri>& triples) {
  std::vector<std::vector<long long>> m(static_cast<size_t>(n),
                                        std::vector<long long>(static_cast<size_t>(n), -1));
  for (auto& t : triples) {
    m[static_cast<size_t>(t.u)][static_cast<size_t>(t.v)] = t.c;
    m[static_cast<size_t>(t.v)][static_cast<size_t>(t.u)] = t.c;
  }
  return EdgeColoredGraph::from_matrix(m);
}

inline EdgeColoredGraph rainbow_complete(int n) {
  std::vector<long long> raw;
  for (int i = 0; i < n * (n - 1) / 2; ++i) raw.push_back(i);
  return EdgeColoredGraph::from_triangular(n, raw);
}

// Naive properly-colored-forest check over an explicit edge list.
inline bool naive_pc_forest(const EdgeColoredGraph& g,
                            const std::vector<std::pair<int, int>>& edges) {
  std::map<int, std::vector<ColorId>> at;
  for (auto [a, b] : edges) {
    at[a].push_back(g.color(a, b));
    at[b].push_back(g.color(a, b));
  }
  for (auto& [v, cols] : at) {
    std::set<ColorId> s(cols.begin(), cols.end());
    if (s.size() != cols.size()) return false;
  }
  return true;
}

// Naive check that a parent map is a spanning spider with the given sorted
// leg multiset, properly colored, entirely from scratch.
inline std::optional<std::string> naive_spider_check(const EdgeColoredGraph& g,
                                                     const pcspan::PcTree& t,
                                                     std::vector<int> legs_sorted) {
  int n = g.size();
  if (t.n != n) return "size mismatch";
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  int edges = 0;
  for (int v = 0; v < n; ++v) {
    int p = t.parent[static_cast<size_t>(v)];
    if (p == -2) return "not spanning";
    if (p == -1) continue;
    adj[static_cast<size_t>(v)].push_back(p);
    adj[static_cast<size_t>(p)].push_back(v);
    ++edges;
  }
  if (edges != n - 1) return "edge count";
  if (!naive_pc_forest(g, t.edge_list())) return "not properly colored";
  int center = t.root;
  std::vector<int> lens;
  for (int s : adj[static_cast<size_t>(center)]) {
    int len = 1, prev = center, cur = s;
    while (true) {
      if (cur != center && static_cast<int>(adj[static_cast<size_t>(cur)].size()) > 2)
        return "branch off the center";
      int nxt = -1;
      for (int w : adj[static_cast<size_t>(cur)])
        if (w != prev) nxt = w;
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<>());
  std::sort(legs_sorted.begin(), legs_sorted.end(), std::greater<>());
  if (lens != legs_sorted) return "leg multiset";
  return std::nullopt;
}

// Exhaustive general nice-bowtie existence over 5/6-subsets (the test oracle
// for the detector's "absent" answers).
inline bool exists_nice_bowtie_bruteforce(const EdgeColoredGraph& g) {
  int n = g.size();
  auto center_edge = [&](int apex, int a, int b) {
    ColorId c = g.color(a, b);
    return c != g.color(apex, a) && c != g.color(apex, b);
  };
  // short: center + two disjoint pairs
  std::vector<int> idx(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (v != c) rest.push_back(v);
    int m = static_cast<int>(rest.size());
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int d = 0; d < m; ++d)
          for (int e = d + 1; e < m; ++e) {
            if (a == d || a == e || b == d || b == e) continue;
            int u1 = rest[static_cast<size_t>(a)], u2 = rest[static_cast<size_t>(b)];
            int u3 = rest[static_cast<size_t>(d)], u4 = rest[static_cast<size_t>(e)];
            if (!center_edge(c, u1, u2) || !center_edge(c, u3, u4)) continue;
            std::set<ColorId> s1{g.color(c, u1), g.color(c, u2)};
            if (s1.count(g.color(c, u3)) || s1.count(g.color(c, u4))) continue;
            return true;
          }
  }
  // long: ordered bridge (x,y) + split of 4 more vertices
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      std::vector<int> rest;
      for (int v = 0; v < n; ++v)
        if (v != x && v != y) rest.push_back(v);
      int m = static_cast<int>(rest.size());
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
          for (int d = 0; d < m; ++d)
            for (int e = d + 1; e < m; ++e) {
              if (a == d || a == e || b == d || b == e) continue;
              int v1 = rest[static_cast<size_t>(a)], v2 = rest[static_cast<size_t>(b)];
              int v5 = rest[static_cast<size_t>(d)], v6 = rest[static_cast<size_t>(e)];
              if (!center_edge(x, v1, v2) || !center_edge(y, v5, v6)) continue;
              ColorId br = g.color(x, y);
              if (br == g.color(x, v1) || br == g.color(x, v2)) continue;
              if (br == g.color(y, v5) || br == g.color(y, v6)) continue;
              return true;
            }
    }
  return false;
}

// Seeded mono-C3-free coloring sampler for the mid-size suites: a random
// color count, a uniform edge->color map, rejection on monochromatic
// triangles (colorings are taken as set partitions, so the labels are
// immediately re-canonicalized by the graph constructor).
inline std::optional<EdgeColoredGraph> sample_coloring(int n, pcspan::SplitMix64& rng) {
  int m = n * (n - 1) / 2;
  int c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(m, 8))));
  if (rng.below(4) == 0) c = std::max(1, m - static_cast<int>(rng.below(4)));
  std::vector<long long> raw(static_cast<size_t>(m));
  for (auto& x : raw) x = static_cast<long long>(rng.below(static_cast<std::uint64_t>(c)));
  EdgeColoredGraph g = EdgeColoredGraph::from_triangular(n, raw);
  if (pcspan::find_monochromatic_triangle_serial(g)) return std::nullopt;
  return g;
}

// All descending k-part compositions of `total` with parts >= 1.
inline std::vector<std::vector<int>> leg_partitions(int total, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int parts, int cap) -> void {
    if (parts == 1) {
      if (rem >= 1 && rem <= cap) {
        cur.push_back(rem);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int v = std::min(cap, rem - (parts - 1)); v >= 1; --v) {
      cur.push_back(v);
      self(self, rem - v, parts - 1, v);
      cur.pop_back();
    }
  };
  rec(rec, total, k, total);
  return out;
}

}  // namespace testutil
