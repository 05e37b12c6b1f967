#pragma once
#include <optional>
#include <vector>

#include "pcspan/graph_core.hpp"
#include "pcspan/pc_structures.hpp"
#include "pcspan/tree.hpp"

namespace pcspan {

// Partial map vertex -> the unique color repeated at that vertex (defined
// exactly where one color has multiplicity >= 2 and every other color is
// unrepeated). The orientation col(uv) == f(u) induces the auxiliary
// tournament behind the last spider case.
struct DegenerateLabel {
  std::vector<ColorId> f;      // -1 where undefined
  std::vector<char> defined;
};

DegenerateLabel degenerate_label(const EdgeColoredGraph& g);
std::optional<std::string> validate_degenerate_label(const EdgeColoredGraph& g,
                                                     const DegenerateLabel& l);

// Non-spanning properly colored copy of the pattern, built by peeling leaves
// off the pattern while shrinking the host to its high-color-degree core,
// then re-attaching each leaf by color-degree pigeonhole. Fails with a named
// step when the host runs out of room (callers may fall back to brute force).
PcTree embed_small_pc_tree(const EdgeColoredGraph& g, const TreePattern& pattern);

// Spanning properly colored subdivision of the pattern (no control over how
// the subdividing vertices distribute). Grows a maximal copy: an outside
// vertex either extends past some leaf, or every leaf blocks it, in which
// case the compatible triple (u,x,y) with the smallest component on the far
// side of xy exchanges xy for the path x-u-y; minimality makes the exchange
// proper, and the tree gains one vertex per round.
PcTree embed_pc_subdivision(const EdgeColoredGraph& g, const TreePattern& pattern);

// Spanning properly colored spider with the exact leg lengths of `spec`.
// k <= 2 rides on the Hamilton-path machinery. For k >= 3: pack disjoint
// nice bowties; with more than spider_bowtie_threshold(k) of them a rainbow
// star over their centers seeds k independently extensible legs; otherwise
// the bowtie-free rest is handled through a nice octopus found via a rainbow
// triangle, a bounded monochromatic neighborhood, or the degenerate-label
// tournament. Below the size guarantee the pipeline either succeeds or
// throws ConstructiveFailure naming the step; it never returns a bad tree.
PcTree embed_pc_spider(const EdgeColoredGraph& g, const SpiderSpec& spec);

// Exhaustive oracle (default cap n <= 9): lexicographically smallest
// spanning spider with the prescribed legs, or nullopt with an exhaustion
// guarantee. Shares no construction code with embed_pc_spider.
std::optional<PcTree> brute_force_pc_spider(const EdgeColoredGraph& g, const SpiderSpec& spec,
                                            int limit = 9);

// min(exact constraint-Ramsey value for small k, (k+1)! - 1): the packing
// count above which a rainbow star over bowtie centers is guaranteed.
int spider_bowtie_threshold(int k);

}  // namespace pcspan
