#pragma once
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcspan/errors.hpp"

namespace pcspan {

using ColorId = int;

enum class TriangleKind { Monochromatic, TwoColored, Rainbow };

struct TriangleClass {
  TriangleKind kind;
  // Unordered pairs (min,max), sorted. A center edge of a colored triangle is
  // an edge whose color does not appear on the other two edges: a rainbow
  // triangle has 3, a 2-colored one exactly 1, a monochromatic one none.
  std::vector<std::pair<int, int>> center_edges;
};

struct RepeatedColor {
  ColorId color;
  std::vector<int> witnesses;  // neighbors joined by this color, ascending
};

struct VertexColorProfile {
  int vertex = -1;
  int color_degree = 0;    // number of distinct incident colors
  int max_mono_degree = 0; // largest multiplicity of one color at the vertex
  std::vector<RepeatedColor> repeated;  // colors with multiplicity >= 2, by color id
};

// Edge-colored complete graph on n >= 1 vertices. Colors are relabeled to a
// dense range [0, palette_size) on construction, preserving equality classes;
// the original labels survive in a side table for I/O. Storage is a flat
// triangular array, O(1) lookup. Immutable after construction and safe to
// share across threads; the only mutable member is a lazily computed
// monochromatic-triangle cache.
class EdgeColoredGraph {
 public:
  EdgeColoredGraph() = default;

  // `raw` holds original labels for pairs (u,v), u<v, in row-major triangular
  // order: (0,1),(0,2),...,(0,n-1),(1,2),...
  static EdgeColoredGraph from_triangular(int n, const std::vector<long long>& raw);

  // Full n x n matrix; entries (u,v) and (v,u) must agree (diagonal ignored).
  static EdgeColoredGraph from_matrix(const std::vector<std::vector<long long>>& m);

  int size() const { return n_; }
  int palette_size() const { return palette_; }

  ColorId color(int u, int v) const { return colors_[pair_index(u, v)]; }

  long long original_label(ColorId c) const { return original_[static_cast<size_t>(c)]; }
  const std::vector<long long>& original_labels() const { return original_; }
  const std::vector<ColorId>& triangular() const { return colors_; }

  // Lexicographically smallest monochromatic triple, or absent. Cached after
  // the first call. Honors set_threads(): with >1 threads the scan is an
  // OpenMP kernel with a lex-min reduction, result identical to serial.
  std::optional<std::array<int, 3>> mono_triangle() const;

  EdgeColoredGraph(const EdgeColoredGraph& o) { copy_from(o); }
  EdgeColoredGraph& operator=(const EdgeColoredGraph& o) {
    if (this != &o) copy_from(o);
    return *this;
  }
  EdgeColoredGraph(EdgeColoredGraph&& o) noexcept { copy_from(o); }
  EdgeColoredGraph& operator=(EdgeColoredGraph&& o) noexcept {
    if (this != &o) copy_from(o);
    return *this;
  }

  size_t pair_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    return static_cast<size_t>(u) * n_ - static_cast<size_t>(u) * (u + 1) / 2 + (v - u - 1);
  }

 private:
  void copy_from(const EdgeColoredGraph& o);

  int n_ = 0;
  int palette_ = 0;
  std::vector<ColorId> colors_;
  std::vector<long long> original_;

  // -1 unknown, 0 has a mono triangle (witness_ set), 1 none.
  mutable std::atomic<int> mono_state_{-1};
  mutable std::array<int, 3> mono_witness_{{-1, -1, -1}};
};

// Read-only induced view: local indices 0..subset.size()-1 map onto host
// vertices; color queries delegate to the host.
class InducedView {
 public:
  InducedView(const EdgeColoredGraph& host, std::vector<int> verts);

  int size() const { return static_cast<int>(verts_.size()); }
  ColorId color(int lu, int lv) const { return host_->color(verts_[lu], verts_[lv]); }
  int host_vertex(int local) const { return verts_[static_cast<size_t>(local)]; }
  const std::vector<int>& vertices() const { return verts_; }

  // Concrete copy with its own dense palette (color equalities preserved).
  EdgeColoredGraph materialize() const;

 private:
  const EdgeColoredGraph* host_;
  std::vector<int> verts_;
};

// Spec'd operations ------------------------------------------------------

// Normalized graph from a total symmetric assignment (errors on n=0,
// missing pairs in `raw` are impossible by construction of the callers).
EdgeColoredGraph build_graph(int n, const std::vector<long long>& triangular_labels);

TriangleClass classify_triangle(const EdgeColoredGraph& g, int u, int v, int w);

std::optional<std::array<int, 3>> find_monochromatic_triangle(const EdgeColoredGraph& g);
// Serial reference implementation, kept alongside the OpenMP kernel for
// differential tests and the benchmark target.
std::optional<std::array<int, 3>> find_monochromatic_triangle_serial(const EdgeColoredGraph& g);

bool mono_c3_free(const EdgeColoredGraph& g);

VertexColorProfile vertex_profile(const EdgeColoredGraph& g, int v);
std::vector<VertexColorProfile> all_vertex_profiles(const EdgeColoredGraph& g);

InducedView induced(const EdgeColoredGraph& g, std::span<const int> subset);

int min_color_degree(const EdgeColoredGraph& g);

// Global thread knob (used by the scan kernel and the Ramsey search; 1 by
// default so every run is serial unless asked otherwise).
void set_threads(int t);
int threads();

}  // namespace pcspan
