#include "pcspan/ramsey.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pcspan {

std::optional<RainbowStar> find_rainbow_star(const EdgeColoredGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("star size must be >= 1");
  for (int v = 0; v < g.size(); ++v) {
    RainbowStar star;
    star.center = v;
    std::vector<char> used(static_cast<size_t>(g.palette_size()), 0);
    for (int u = 0; u < g.size() && static_cast<int>(star.leaves.size()) < k; ++u) {
      if (u == v) continue;
      ColorId c = g.color(u, v);
      if (!used[static_cast<size_t>(c)]) {
        used[static_cast<size_t>(c)] = 1;
        star.leaves.push_back(u);
      }
    }
    if (static_cast<int>(star.leaves.size()) == k) return star;
  }
  return std::nullopt;
}

namespace {

// Edge order that completes triangles as early as possible:
// (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
std::vector<std::pair<int, int>> edge_order(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) e.emplace_back(u, v);
  return e;
}

size_t tri_index(int n, int u, int v) {  // u < v
  return static_cast<size_t>(u) * n - static_cast<size_t>(u) * (u + 1) / 2 + (v - u - 1);
}

struct SearchState {
  int n, k;  // k <= 0 disables the rainbow-star constraint
  std::vector<std::pair<int, int>> edges;
  std::vector<ColorId> assign;          // per edge index
  std::vector<ColorId> at;              // at[u*n+v] color of assigned pair, -1 otherwise
  std::vector<int> mult;                // mult[v*maxc+c] color multiplicity at v
  std::vector<int> color_degree;        // distinct colors at v
  std::vector<int> color_total;         // global multiplicity per color
  int used_colors = 0;
  int max_colors;

  explicit SearchState(int n_, int k_) : n(n_), k(k_), edges(edge_order(n_)) {
    assign.assign(edges.size(), -1);
    at.assign(static_cast<size_t>(n) * n, -1);
    max_colors = static_cast<int>(edges.size());
    mult.assign(static_cast<size_t>(n) * max_colors, 0);
    color_degree.assign(static_cast<size_t>(n), 0);
    color_total.assign(static_cast<size_t>(max_colors), 0);
  }

  ColorId pair_color(int u, int v) const { return at[static_cast<size_t>(u) * n + v]; }

  bool admissible(int idx, ColorId c) const {
    auto [u, v] = edges[static_cast<size_t>(idx)];
    if (k > 0) {
      if (mult[static_cast<size_t>(u) * max_colors + c] == 0 &&
          color_degree[static_cast<size_t>(u)] >= k - 1)
        return false;
      if (mult[static_cast<size_t>(v) * max_colors + c] == 0 &&
          color_degree[static_cast<size_t>(v)] >= k - 1)
        return false;
    }
    for (int w = 0; w < u; ++w)
      if (pair_color(w, u) == c && pair_color(w, v) == c) return false;
    return true;
  }

  void set(int idx, ColorId c) {
    auto [u, v] = edges[static_cast<size_t>(idx)];
    assign[static_cast<size_t>(idx)] = c;
    at[static_cast<size_t>(u) * n + v] = at[static_cast<size_t>(v) * n + u] = c;
    if (mult[static_cast<size_t>(u) * max_colors + c]++ == 0) ++color_degree[static_cast<size_t>(u)];
    if (mult[static_cast<size_t>(v) * max_colors + c]++ == 0) ++color_degree[static_cast<size_t>(v)];
    ++color_total[static_cast<size_t>(c)];
    if (c == used_colors) ++used_colors;
  }

  void unset(int idx) {
    auto [u, v] = edges[static_cast<size_t>(idx)];
    ColorId c = assign[static_cast<size_t>(idx)];
    assign[static_cast<size_t>(idx)] = -1;
    at[static_cast<size_t>(u) * n + v] = at[static_cast<size_t>(v) * n + u] = -1;
    if (--mult[static_cast<size_t>(u) * max_colors + c] == 0) --color_degree[static_cast<size_t>(u)];
    if (--mult[static_cast<size_t>(v) * max_colors + c] == 0) --color_degree[static_cast<size_t>(v)];
    --color_total[static_cast<size_t>(c)];
    while (used_colors > 0 && color_total[static_cast<size_t>(used_colors) - 1] == 0) --used_colors;
  }

  EdgeColoredGraph snapshot() const {
    std::vector<long long> raw(edges.size());
    for (size_t i = 0; i < edges.size(); ++i)
      raw[tri_index(n, edges[i].first, edges[i].second)] = assign[i];
    return EdgeColoredGraph::from_triangular(n, raw);
  }
};

enum class Outcome { Feasible, Refuted, Aborted };

// DFS from edge `idx` to the end, colors ascending with one fresh color.
Outcome dfs(SearchState& st, int idx, std::uint64_t& nodes, std::uint64_t budget,
            std::vector<ColorId>* witness) {
  if (idx == static_cast<int>(st.edges.size())) {
    if (witness) *witness = st.assign;
    return Outcome::Feasible;
  }
  if (++nodes > budget) return Outcome::Aborted;
  bool aborted = false;
  int limit = std::min(st.used_colors, st.max_colors - 1);
  for (ColorId c = 0; c <= limit; ++c) {
    if (!st.admissible(idx, c)) continue;
    st.set(idx, c);
    Outcome sub = dfs(st, idx + 1, nodes, budget, witness);
    st.unset(idx);
    if (sub == Outcome::Feasible) return sub;
    if (sub == Outcome::Aborted) aborted = true;
  }
  return aborted ? Outcome::Aborted : Outcome::Refuted;
}

struct FeasibilityReport {
  Outcome outcome;
  std::vector<ColorId> witness;
  std::uint64_t nodes = 0;
};

// Enumerate all admissible prefixes of `depth` edges (lexicographic order).
void prefixes_rec(SearchState& st, int idx, int depth, std::vector<std::vector<ColorId>>& out) {
  if (idx == depth) {
    out.emplace_back(st.assign.begin(), st.assign.begin() + depth);
    return;
  }
  int limit = std::min(st.used_colors, st.max_colors - 1);
  for (ColorId c = 0; c <= limit; ++c) {
    if (!st.admissible(idx, c)) continue;
    st.set(idx, c);
    prefixes_rec(st, idx + 1, depth, out);
    st.unset(idx);
  }
}

FeasibilityReport feasible_coloring(int n, int k, std::uint64_t node_budget) {
  FeasibilityReport rep{Outcome::Refuted, {}, 0};
  if (n <= 1) {
    rep.outcome = Outcome::Feasible;
    return rep;
  }
  SearchState st(n, k);
  int m = static_cast<int>(st.edges.size());
  int depth = std::min(m, 6);
  std::vector<std::vector<ColorId>> prefixes;
  prefixes_rec(st, 0, depth, prefixes);
  if (prefixes.empty()) return rep;
  std::uint64_t per_branch = std::max<std::uint64_t>(node_budget / prefixes.size(), 10'000);

  int P = static_cast<int>(prefixes.size());
  std::vector<int> outcome(static_cast<size_t>(P), -1);  // -1 skipped
  std::vector<std::vector<ColorId>> wits(static_cast<size_t>(P));
  std::vector<std::uint64_t> pnodes(static_cast<size_t>(P), 0);

  auto run_prefix = [&](int i) {
    SearchState local(n, k);
    for (int e = 0; e < depth; ++e) local.set(e, prefixes[static_cast<size_t>(i)][static_cast<size_t>(e)]);
    std::vector<ColorId> w;
    Outcome o = dfs(local, depth, pnodes[static_cast<size_t>(i)], per_branch, &w);
    outcome[static_cast<size_t>(i)] = static_cast<int>(o);
    if (o == Outcome::Feasible) {
      w.resize(static_cast<size_t>(m));
      wits[static_cast<size_t>(i)] = w;
    }
  };

#ifdef _OPENMP
  if (threads() > 1) {
    std::atomic<int> best{P};
#pragma omp parallel for schedule(dynamic) num_threads(threads())
    for (int i = 0; i < P; ++i) {
      if (i > best.load(std::memory_order_relaxed)) continue;
      run_prefix(i);
      if (outcome[static_cast<size_t>(i)] == static_cast<int>(Outcome::Feasible)) {
        int cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  } else
#endif
  {
    for (int i = 0; i < P; ++i) {
      run_prefix(i);
      if (outcome[static_cast<size_t>(i)] == static_cast<int>(Outcome::Feasible)) break;
    }
  }

  for (std::uint64_t c : pnodes) rep.nodes += c;
  bool any_abort = false;
  for (int i = 0; i < P; ++i) {
    if (outcome[static_cast<size_t>(i)] == static_cast<int>(Outcome::Feasible)) {
      rep.outcome = Outcome::Feasible;
      rep.witness = wits[static_cast<size_t>(i)];
      return rep;
    }
    if (outcome[static_cast<size_t>(i)] == static_cast<int>(Outcome::Aborted) ||
        outcome[static_cast<size_t>(i)] == -1)
      any_abort = true;
  }
  rep.outcome = any_abort ? Outcome::Aborted : Outcome::Refuted;
  return rep;
}

int factorial_capped(int x) {
  long long f = 1;
  for (int i = 2; i <= x; ++i) {
    f *= i;
    if (f > 1'000'000'000LL) return 1'000'000'000;
  }
  return static_cast<int>(f);
}

EdgeColoredGraph graph_from_assignment(int n, const std::vector<ColorId>& assign) {
  auto edges = edge_order(n);
  std::vector<long long> raw(edges.size());
  for (size_t i = 0; i < edges.size(); ++i)
    raw[tri_index(n, edges[i].first, edges[i].second)] = assign[i];
  return EdgeColoredGraph::from_triangular(n, raw);
}

}  // namespace

RamseyResult compute_constraint_ramsey(int k, int n_cap, std::uint64_t node_budget) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  auto t0 = std::chrono::steady_clock::now();
  RamseyResult res;
  res.k = k;
  res.upper_bound = factorial_capped(k + 1) - 1;
  res.value = 1;
  res.witness = EdgeColoredGraph::from_triangular(1, {});
  res.exact = false;
  res.exhausted_next = false;
  for (int N = 2; N <= n_cap; ++N) {
    FeasibilityReport rep = feasible_coloring(N, k, node_budget);
    res.nodes += rep.nodes;
    if (rep.outcome == Outcome::Feasible) {
      res.value = N;
      res.witness = graph_from_assignment(N, rep.witness);
      continue;
    }
    if (rep.outcome == Outcome::Refuted) {
      res.exact = true;
      res.exhausted_next = true;
      res.upper_bound = res.value;
    }
    break;
  }
  res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

bool check_bound(int k, const RamseyResult& r) {
  if (!r.exact) throw std::invalid_argument("check_bound needs an exact result");
  return r.value < factorial_capped(k + 1);
}

std::uint64_t for_each_canonical_coloring(int n, bool prune_mono_triangles,
                                          const std::function<bool(const EdgeColoredGraph&)>& visit) {
  std::uint64_t count = 0;
  if (n <= 1) {
    ++count;
    visit(EdgeColoredGraph::from_triangular(std::max(n, 1), {}));
    return count;
  }
  SearchState st(n, 0);
  int m = static_cast<int>(st.edges.size());
  bool stop = false;
  auto rec = [&](auto&& self, int idx) -> void {
    if (stop) return;
    if (idx == m) {
      ++count;
      if (!visit(st.snapshot())) stop = true;
      return;
    }
    int limit = std::min(st.used_colors, st.max_colors - 1);
    for (ColorId c = 0; c <= limit && !stop; ++c) {
      if (prune_mono_triangles && !st.admissible(idx, c)) continue;
      st.set(idx, c);
      self(self, idx + 1);
      st.unset(idx);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace pcspan
