#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pcspan/graph_core.hpp"

namespace pcspan {

struct RainbowStar {
  int center = -1;
  std::vector<int> leaves;  // k neighbors joined by k pairwise distinct colors
};

// First vertex (ascending) with k incident edges of k distinct colors;
// absent iff every vertex has color degree <= k-1.
std::optional<RainbowStar> find_rainbow_star(const EdgeColoredGraph& g, int k);

struct RamseyResult {
  int k = 0;
  int value = 0;       // largest N with a verified coloring (witness below)
  bool exact = false;  // true iff value+1 was exhaustively refuted
  int upper_bound = 0; // always valid: (k+1)! - 1
  bool exhausted_next = false;
  EdgeColoredGraph witness;
  std::uint64_t nodes = 0;
  double millis = 0.0;
};

// Largest N <= n_cap admitting a coloring of K_N with no rainbow k-star and
// no monochromatic triangle. Backtracking over edge colorings in a fixed
// edge order with colors introduced in first-use order (so each coloring is
// enumerated once per set partition of the edge set); constraint propagation
// rejects any assignment completing a monochromatic triangle or raising a
// color degree to k. The search tree splits at a fixed depth with a static
// per-branch node budget, so threaded and serial runs return identical
// results; on budget exhaustion the result is a bracket, never a guess.
RamseyResult compute_constraint_ramsey(int k, int n_cap = 12,
                                       std::uint64_t node_budget = 200'000'000ULL);

// value < (k+1)!; only meaningful for exact results.
bool check_bound(int k, const RamseyResult& r);

// Enumerates every coloring of K_n's edge set as a set partition in
// first-use canonical form, optionally pruning branches that already closed
// a monochromatic triangle. `visit` returns false to stop early. Returns the
// number of colorings visited.
std::uint64_t for_each_canonical_coloring(int n, bool prune_mono_triangles,
                                          const std::function<bool(const EdgeColoredGraph&)>& visit);

}  // namespace pcspan
