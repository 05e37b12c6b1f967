#pragma once
#include <cstdint>
#include <functional>
#include <string>

#include "pcspan/graph_core.hpp"
#include "pcspan/tournament.hpp"

namespace pcspan {

enum class GeneratorKind { Transitive, Degenerate, RandomRejection, RandomMcfTournament };

// Everything a generator needs; fixed seed => byte-identical output.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Transitive;
  int n = 1;
  std::uint64_t seed = 0;
  int palette = 2;
  double pair_density = 0.5;  // tournament kind only
  int min_outdeg = 0;         // tournament kind only
};

// col(u,v) = min(u,v): the coloring induced by orienting the complete graph
// transitively and coloring every arc by its tail. Never contains a
// monochromatic triangle, and contains no nice bowtie either, which makes it
// the canonical stress instance for the tournament-flavored spider path.
EdgeColoredGraph transitive_coloring(int n);

// col(u,v) = f(tail(u,v)) for a total orientation; rejects colorings that
// close a monochromatic triangle (MonoTriangleError carries the witness).
EdgeColoredGraph degenerate_coloring(int n, const std::vector<ColorId>& f,
                                     const std::function<int(int, int)>& tail_of);

// Seeded sampler of colorings with no monochromatic triangle. Colors edges
// sequentially in a shuffled pair order, drawing uniformly from the palette
// colors that do not complete a monochromatic triangle, with a bounded
// recolor-and-retry repair on dead ends. When the palette is too small for
// that process to converge (it provably cannot at, say, palette 8 and
// n = 200), falls back to a seeded product construction: blocks of at most
// five parts per level, cross edges colored by a 2-colored triangle-free
// quotient, two fresh colors per level.
EdgeColoredGraph random_mono_c3_free(int n, int palette, std::uint64_t seed);

// Seeded multipartite tournament with partite sets of size <= 2 and
// disjoint out-neighborhoods inside each pair; arcs between two parts are
// sampled jointly from the configurations the definition allows, so no
// repair pass is needed. Resamples (bounded) until min out-degree is met.
MonoC3FreeTournament random_mcf_tournament(int n, double pair_density, int min_outdeg,
                                           std::uint64_t seed);

EdgeColoredGraph generate(const GeneratorSpec& spec);  // colored-graph kinds only

}  // namespace pcspan
