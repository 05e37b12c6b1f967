#include "pcspan/graph_core.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pcspan {

namespace {
int g_threads = 1;
}

void set_threads(int t) { g_threads = t < 1 ? 1 : t; }
int threads() { return g_threads; }

void EdgeColoredGraph::copy_from(const EdgeColoredGraph& o) {
  n_ = o.n_;
  palette_ = o.palette_;
  colors_ = o.colors_;
  original_ = o.original_;
  mono_state_.store(o.mono_state_.load(std::memory_order_acquire), std::memory_order_release);
  mono_witness_ = o.mono_witness_;
}

EdgeColoredGraph EdgeColoredGraph::from_triangular(int n, const std::vector<long long>& raw) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  size_t m = static_cast<size_t>(n) * (n - 1) / 2;
  if (raw.size() != m) throw std::invalid_argument("triangular color list has wrong length");
  EdgeColoredGraph g;
  g.n_ = n;
  g.colors_.resize(m);
  std::map<long long, ColorId> relabel;  // ordered: first occurrence in edge order wins
  for (size_t i = 0; i < m; ++i) {
    auto it = relabel.find(raw[i]);
    if (it == relabel.end()) {
      ColorId id = static_cast<ColorId>(g.original_.size());
      relabel.emplace(raw[i], id);
      g.original_.push_back(raw[i]);
      g.colors_[i] = id;
    } else {
      g.colors_[i] = it->second;
    }
  }
  g.palette_ = static_cast<int>(g.original_.size());
  return g;
}

EdgeColoredGraph EdgeColoredGraph::from_matrix(const std::vector<std::vector<long long>>& m) {
  int n = static_cast<int>(m.size());
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::vector<long long> raw;
  raw.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(m[u].size()) != n) throw std::invalid_argument("color matrix is not square");
    for (int v = u + 1; v < n; ++v) {
      if (m[u][v] != m[v][u])
        throw std::invalid_argument("color matrix is not symmetric at (" + std::to_string(u) +
                                    "," + std::to_string(v) + ")");
      raw.push_back(m[u][v]);
    }
  }
  return from_triangular(n, raw);
}

EdgeColoredGraph build_graph(int n, const std::vector<long long>& triangular_labels) {
  return EdgeColoredGraph::from_triangular(n, triangular_labels);
}

namespace {

// Scan triples u<v<w in lexicographic order; both inner-row walks are
// contiguous slices of the triangular array.
std::optional<std::array<int, 3>> mono_scan_rows(const EdgeColoredGraph& g, int u_lo, int u_hi) {
  int n = g.size();
  const ColorId* flat = g.triangular().data();
  for (int u = u_lo; u < u_hi; ++u) {
    const ColorId* row_u = flat + g.pair_index(u, u + 1);
    for (int v = u + 1; v < n - 1; ++v) {
      ColorId c = row_u[v - u - 1];
      const ColorId* ru = row_u + (v - u);
      const ColorId* rv = flat + g.pair_index(v, v + 1);
      int len = n - 1 - v;
      for (int i = 0; i < len; ++i) {
        if (ru[i] == c && rv[i] == c) return std::array<int, 3>{u, v, v + 1 + i};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::array<int, 3>> find_monochromatic_triangle_serial(const EdgeColoredGraph& g) {
  return mono_scan_rows(g, 0, g.size());
}

std::optional<std::array<int, 3>> find_monochromatic_triangle(const EdgeColoredGraph& g) {
  int n = g.size();
#ifdef _OPENMP
  if (threads() > 1 && n >= 64) {
    std::array<int, 3> best{n, n, n};
    bool found = false;
#pragma omp parallel num_threads(threads())
    {
      std::array<int, 3> local{n, n, n};
      bool local_found = false;
#pragma omp for schedule(dynamic, 8) nowait
      for (int u = 0; u < n; ++u) {
        if (local_found && u > local[0]) continue;
        auto hit = mono_scan_rows(g, u, u + 1);
        if (hit && (!local_found || *hit < local)) {
          local = *hit;
          local_found = true;
        }
      }
#pragma omp critical
      {
        if (local_found && (!found || local < best)) {
          best = local;
          found = true;
        }
      }
    }
    if (found) return best;
    return std::nullopt;
  }
#endif
  return find_monochromatic_triangle_serial(g);
}

std::optional<std::array<int, 3>> EdgeColoredGraph::mono_triangle() const {
  int s = mono_state_.load(std::memory_order_acquire);
  if (s < 0) {
    auto hit = find_monochromatic_triangle(*this);
    if (hit) {
      mono_witness_ = *hit;
      mono_state_.store(0, std::memory_order_release);
      return hit;
    }
    mono_state_.store(1, std::memory_order_release);
    return std::nullopt;
  }
  if (s == 0) return mono_witness_;
  return std::nullopt;
}

bool mono_c3_free(const EdgeColoredGraph& g) { return !g.mono_triangle().has_value(); }

TriangleClass classify_triangle(const EdgeColoredGraph& g, int u, int v, int w) {
  if (u == v || u == w || v == w) throw std::invalid_argument("triangle needs three distinct vertices");
  ColorId cuv = g.color(u, v), cuw = g.color(u, w), cvw = g.color(v, w);
  TriangleClass out;
  int distinct = 1 + (cuw != cuv) + (cvw != cuv && cvw != cuw);
  out.kind = distinct == 1   ? TriangleKind::Monochromatic
             : distinct == 2 ? TriangleKind::TwoColored
                             : TriangleKind::Rainbow;
  auto add_if_center = [&](int a, int b, ColorId c, ColorId o1, ColorId o2) {
    if (c != o1 && c != o2) out.center_edges.emplace_back(std::min(a, b), std::max(a, b));
  };
  add_if_center(u, v, cuv, cuw, cvw);
  add_if_center(u, w, cuw, cuv, cvw);
  add_if_center(v, w, cvw, cuv, cuw);
  std::sort(out.center_edges.begin(), out.center_edges.end());
  return out;
}

namespace {

void profile_into(const EdgeColoredGraph& g, int v, std::vector<int>& mult,
                  VertexColorProfile& p) {
  p.vertex = v;
  p.color_degree = 0;
  p.max_mono_degree = 0;
  p.repeated.clear();
  std::fill(mult.begin(), mult.end(), 0);
  for (int u = 0; u < g.size(); ++u) {
    if (u == v) continue;
    int m = ++mult[static_cast<size_t>(g.color(u, v))];
    if (m == 1) ++p.color_degree;
    if (m > p.max_mono_degree) p.max_mono_degree = m;
  }
  if (p.max_mono_degree >= 2) {
    for (ColorId c = 0; c < g.palette_size(); ++c)
      if (mult[static_cast<size_t>(c)] >= 2) p.repeated.push_back({c, {}});
    for (auto& r : p.repeated) r.witnesses.reserve(static_cast<size_t>(mult[static_cast<size_t>(r.color)]));
    for (int u = 0; u < g.size(); ++u) {
      if (u == v) continue;
      ColorId c = g.color(u, v);
      if (mult[static_cast<size_t>(c)] < 2) continue;
      auto it = std::lower_bound(p.repeated.begin(), p.repeated.end(), c,
                                 [](const RepeatedColor& r, ColorId col) { return r.color < col; });
      it->witnesses.push_back(u);
    }
  }
}

}  // namespace

VertexColorProfile vertex_profile(const EdgeColoredGraph& g, int v) {
  if (v < 0 || v >= g.size()) throw std::invalid_argument("vertex out of range");
  VertexColorProfile p;
  std::vector<int> mult(static_cast<size_t>(g.palette_size()), 0);
  profile_into(g, v, mult, p);
  return p;
}

std::vector<VertexColorProfile> all_vertex_profiles(const EdgeColoredGraph& g) {
  std::vector<VertexColorProfile> out(static_cast<size_t>(g.size()));
  std::vector<int> mult(static_cast<size_t>(g.palette_size()), 0);
  for (int v = 0; v < g.size(); ++v) profile_into(g, v, mult, out[static_cast<size_t>(v)]);
  return out;
}

InducedView::InducedView(const EdgeColoredGraph& host, std::vector<int> verts)
    : host_(&host), verts_(std::move(verts)) {
  std::vector<char> seen(static_cast<size_t>(host.size()), 0);
  for (int v : verts_) {
    if (v < 0 || v >= host.size()) throw std::invalid_argument("induced: vertex out of range");
    if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("induced: duplicate vertex");
    seen[static_cast<size_t>(v)] = 1;
  }
}

EdgeColoredGraph InducedView::materialize() const {
  int k = size();
  std::vector<long long> raw;
  raw.reserve(static_cast<size_t>(k) * (k - 1) / 2);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) raw.push_back(color(i, j));
  return EdgeColoredGraph::from_triangular(k, raw);
}

InducedView induced(const EdgeColoredGraph& g, std::span<const int> subset) {
  return InducedView(g, std::vector<int>(subset.begin(), subset.end()));
}

int min_color_degree(const EdgeColoredGraph& g) {
  int best = g.size();
  for (int v = 0; v < g.size(); ++v) best = std::min(best, vertex_profile(g, v).color_degree);
  return best;
}

}  // namespace pcspan
