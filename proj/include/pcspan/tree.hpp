#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcspan/graph_core.hpp"

namespace pcspan {

// The fixed tree being subdivided, on abstract nodes 0..nodes-1.
struct TreePattern {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  static TreePattern single_edge() { return {2, {{0, 1}}}; }
  static TreePattern star(int k);
  // Throws std::invalid_argument unless connected and acyclic.
  void validate() const;
  std::vector<std::vector<int>> adjacency() const;
};

// Prescribed spider: leg lengths sorted descending, each >= 1.
struct SpiderSpec {
  std::vector<int> legs;

  explicit SpiderSpec(std::vector<int> lengths);
  SpiderSpec() = default;
  int k() const { return static_cast<int>(legs.size()); }
  int total() const;
};

enum class TreeKind { Spider, Subdivision };

// A (possibly spanning) tree certificate inside a host graph: parent map,
// designated root, and per-edge shape metadata. `piece[v]` tags the edge
// (v, parent[v]): the leg index for spiders, the pattern edge index for
// subdivisions. parent[v] == -2 marks vertices outside the tree.
struct PcTree {
  TreeKind kind = TreeKind::Spider;
  int n = 0;
  int root = -1;
  std::vector<int> parent;
  std::vector<int> piece;

  int vertex_count() const;
  bool spanning() const { return vertex_count() == n; }
  std::vector<std::pair<int, int>> edge_list() const;  // (child, parent)
  // Leg lengths recovered from metadata, sorted descending.
  std::vector<int> leg_lengths() const;
};

struct PcViolation {
  std::string message;
  int vertex = -1;
  std::pair<int, int> edge_a{-1, -1}, edge_b{-1, -1};
};

// True iff at every vertex the incident tree edges carry pairwise distinct
// colors. Throws std::invalid_argument if `edges` is not a forest (cycle or
// repeated edge). On failure names the vertex and the clashing edges.
std::optional<PcViolation> validate_pc_tree(const EdgeColoredGraph& g,
                                            const std::vector<std::pair<int, int>>& edges);

// Structural check of a built tree against its target shape. Spider mode
// compares the sorted leg-length multiset; subdivision mode suppresses
// degree-2 vertices on both sides and compares canonical forms.
std::optional<std::string> verify_shape(const PcTree& tree, const SpiderSpec& spec);
std::optional<std::string> verify_shape(const PcTree& tree, const TreePattern& pattern);

// Full certificate validation: forest + connectivity + proper coloring +
// shape + metadata consistency (+ spanning when `require_spanning`).
std::optional<std::string> verify_certificate(const EdgeColoredGraph& g, const PcTree& tree,
                                              const SpiderSpec& spec, bool require_spanning = true);
std::optional<std::string> verify_certificate(const EdgeColoredGraph& g, const PcTree& tree,
                                              const TreePattern& pattern,
                                              bool require_spanning = true);

// AHU-style canonical form of a free tree given as an adjacency structure;
// equal strings <=> isomorphic trees.
std::string tree_canonical_form(const std::vector<std::vector<int>>& adj);

}  // namespace pcspan
