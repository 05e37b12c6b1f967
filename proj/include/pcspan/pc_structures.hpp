#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pcspan/graph_core.hpp"
#include "pcspan/tree.hpp"

namespace pcspan {

// A properly colored path: consecutive edges carry pairwise distinct colors
// (vacuous for fewer than three vertices).
using PcPath = std::vector<int>;

bool is_pc_path(const EdgeColoredGraph& g, const PcPath& p);

// Triangle with a designated center edge (c1,c2) and the remaining vertex
// `apex`; col(c1,c2) appears on neither apex edge.
struct CenteredTriangle {
  int apex = -1, c1 = -1, c2 = -1;
  std::array<int, 3> vertices() const { return {apex, c1, c2}; }
};

std::optional<std::string> validate_centered_triangle(const EdgeColoredGraph& g,
                                                      const CenteredTriangle& t);

// A shovel: triangle glued to the first vertex of a path. It is "nice" when
// the path is properly colored, the triangle edge opposite the glue vertex is
// a center edge, and (for paths of >= 2 vertices) the first path edge avoids
// both triangle colors at the glue vertex. Nice shovels are the extension
// glue for building legs: traversed from the far path end through the center
// edge they yield a properly colored path.
struct Shovel {
  CenteredTriangle tri;   // tri.apex == path.front()
  std::vector<int> path;  // path[0] is the glue vertex

  int t() const { return static_cast<int>(path.size()); }
  std::vector<int> vertices() const;
};

std::optional<std::string> validate_shovel(const EdgeColoredGraph& g, const Shovel& s);

// Two triangles sharing a vertex (Short) or joined by a bridge edge (Long),
// with center-edge and color-disjointness conditions making both sides
// extensible.
struct Bowtie {
  enum class Kind { Short, Long } kind = Kind::Short;
  // Short: tri1 = {u0,u1,u2}, tri2 = {u0,u3,u4} share apex u0 (the center).
  // Long:  tri1 = {v3,v1,v2}, tri2 = {v4,v5,v6}, bridge (v3,v4), centers v3,v4.
  std::array<int, 3> tri1{{-1, -1, -1}}, tri2{{-1, -1, -1}};

  std::vector<int> vertices() const;
  std::vector<int> centers() const;
};

std::optional<std::string> validate_bowtie(const EdgeColoredGraph& g, const Bowtie& b);

// A spider on k-1 properly colored legs whose center also carries a triangle
// forming a nice shovel with every leg; the staging structure from which a
// spanning spider is finished by growing one more leg through the triangle.
struct Octopus {
  int center = -1;
  int a = -1, b = -1;                  // triangle (center, a, b); (a,b) is a center edge
  std::vector<std::vector<int>> legs;  // each starts at `center`

  std::vector<int> vertices() const;
};

std::optional<std::string> validate_octopus(const EdgeColoredGraph& g, const Octopus& o);

// Operations ---------------------------------------------------------------

// Insert v into the properly colored path `path` (>= 2 vertices) given
// col(v, path[i]) == col(path[i], path[i+1]). Returns a properly colored
// path on V(path) + v with the same endpoints; v lands after the largest
// j >= i whose edge color matches col(v, path[j]). Throws MonoTriangleError
// if the host turns out to contain a monochromatic triangle.
PcPath insert_vertex(const EdgeColoredGraph& g, const PcPath& path, int v, int i);

// Spanning properly colored path whose last vertex is `v`. Works on any
// complete host with no monochromatic triangle; grows one vertex at a time,
// prepending when the new first edge differs from the old one and inserting
// via insert_vertex otherwise.
PcPath pc_hamilton_path_from(const EdgeColoredGraph& g, int v);

// Spanning nice shovel of a host with >= 3 vertices: seeded with any centered
// triangle and grown by one vertex per round. When the outside vertex v
// clashes with both triangle colors at the glue vertex, the triangle itself
// is exchanged (v replaces one corner, or the whole triangle rotates onto
// {v, c1, c2}) so that growth never stalls.
Shovel spanning_nice_shovel(const EdgeColoredGraph& g);

// Properly colored path starting at tri.apex whose second edge color is one
// of the two apex colors of `tri`, covering V(tri) plus the other structure.
// The second argument is either a nice shovel or a set of at most 2 vertices,
// disjoint from the triangle.
PcPath merge_triangle_shovel(const EdgeColoredGraph& g, const CenteredTriangle& tri,
                             const Shovel& y);
PcPath merge_triangle_shovel(const EdgeColoredGraph& g, const CenteredTriangle& tri,
                             const std::vector<int>& small_y);

// Nice-bowtie detector over vertex color profiles, O(n^2 * Delta): a vertex
// with two repeated colors gives a short bowtie; two vertices whose unique
// repeated colors miss their joining edge give a long bowtie; a vertex with
// two disjoint rainbow witness pairs gives a short bowtie. Absence implies
// every vertex repeats at most one color and every edge between two
// repeating vertices carries one of their repeated colors.
std::optional<Bowtie> find_nice_bowtie(const EdgeColoredGraph& g);

// Same detector over an induced subset (host vertex ids, ascending); the
// returned bowtie is in host ids. This is the packing loop's workhorse, so
// it avoids materializing the subgraph.
std::optional<Bowtie> find_nice_bowtie_in(const EdgeColoredGraph& g,
                                          std::span<const int> verts);

// Direct recheck of the structural consequences of bowtie-freeness used by
// the spider pipeline (test oracle for the detector's "absent" answer).
bool recheck_bowtie_free_consequences(const EdgeColoredGraph& g);

// Finish a spanning spider from a nice octopus: the remainder (all host
// vertices outside the octopus) becomes a spanning nice shovel (or is taken
// verbatim when it has at most 2 vertices) and is merged through the octopus
// triangle into the first leg.
PcTree octopus_to_spider(const EdgeColoredGraph& g, const Octopus& o,
                         const std::vector<int>& remainder);

}  // namespace pcspan
