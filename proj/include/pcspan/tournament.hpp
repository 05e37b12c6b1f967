#pragma once
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcspan/errors.hpp"

namespace pcspan {

// Multipartite tournament whose partite sets have at most 2 vertices and in
// which no two vertices of a part share an out-neighbor. This is exactly the
// orientation structure induced by degenerate colorings of complete graphs
// with no monochromatic triangle, which is why the Hamilton machinery below
// never gets stuck on valid instances.
struct MonoC3FreeTournament {
  int n = 0;
  std::vector<std::uint8_t> adj;        // n*n, adj[u*n+v] != 0 iff arc u->v
  std::vector<std::vector<int>> out;    // sorted out-neighbor lists
  std::vector<std::vector<int>> parts;  // partition into sets of size 1 or 2
  std::vector<int> part_of;

  static MonoC3FreeTournament build(int n, const std::vector<std::pair<int, int>>& arcs,
                                    const std::vector<std::vector<int>>& parts);

  bool arc(int u, int v) const { return adj[static_cast<size_t>(u) * n + v] != 0; }
  int out_degree(int v) const { return static_cast<int>(out[static_cast<size_t>(v)].size()); }
  int min_out_degree() const;
  bool tournament() const;  // all parts singletons

  // Sub-digraph induced on `verts` (ascending): local indices, parts
  // restricted (a part keeps size 2 only if both vertices survive).
  MonoC3FreeTournament restrict_to(std::span<const int> verts) const;
};

struct McfViolation {
  std::string message;
};

// Checks both defining clauses; the violation names a common out-neighbor or
// the offending (missing/extra/intra-part) arc.
std::optional<McfViolation> validate_tournament(const MonoC3FreeTournament& d);

// Strongly connected components listed so that every arc between two
// components leaves the one with the larger index: components[0] is the
// sink. domination_flags[j][i] (i<j) records whether any arcs exist (and
// then all of them point j -> i).
struct SccOrder {
  std::vector<std::vector<int>> components;
  std::vector<std::vector<std::uint8_t>> domination_flags;
};

SccOrder scc_order(const MonoC3FreeTournament& d);
bool strongly_connected(const MonoC3FreeTournament& d);

// Spanning directed cycle of a strongly connected instance (>= 3 vertices).
// Cycle extension from a shortest cycle: an outside vertex with arcs both
// ways relative to the cycle always has an insertion slot (the partner's
// successor on the cycle necessarily dominates it, so some domination switch
// survives); when every outside vertex is one-sided, a dominated->dominating
// arc splices two vertices at once. Falls back to exhaustive search for
// |V| <= 12 and reports a diagnostic beyond that if extension stalls.
std::vector<int> hamilton_cycle_strong(const MonoC3FreeTournament& d);

// Spanning directed path: Hamilton cycles inside components, concatenated
// down the domination order. Precondition: min out-degree >= 1, or a plain
// tournament (then unconditional).
std::vector<int> hamilton_path(const MonoC3FreeTournament& d);

// Internal form used mid-pipeline: skips the precondition and relies on the
// component structure alone; throws ConstructiveFailure if stitching fails.
std::vector<int> hamilton_path_components(const MonoC3FreeTournament& d);

// Directed path on V(p) + v with the same final vertex; v is prepended when
// it dominates the head, else spliced at the first position it dominates
// (its predecessor there is forced to dominate v).
std::vector<int> extend_directed_path(const MonoC3FreeTournament& d, const std::vector<int>& p,
                                      int v);

// Oriented spider: k-1 directed legs of prescribed lengths ending at the
// root, plus two root out-arcs.
struct DirectedSpider {
  int root = -1;
  int x = -1, y = -1;                  // root out-neighbors
  std::vector<std::vector<int>> legs;  // each ends with `root`

  std::vector<int> leg_lengths() const;
};

std::optional<std::string> validate_directed_spider(const MonoC3FreeTournament& d,
                                                    const DirectedSpider& s);

// Embeds the oriented spider with legs `lengths` (descending, each >= 1)
// into d. Preconditions: every out-degree >= 2 and
// n >= sum(lengths) + 2k^2 + 2k + 6 where k-1 = lengths.size().
DirectedSpider embed_directed_spider(const MonoC3FreeTournament& d,
                                     const std::vector<int>& lengths);

}  // namespace pcspan
