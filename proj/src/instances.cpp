#include "pcspan/instances.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pcspan/rng.hpp"

namespace pcspan {

EdgeColoredGraph transitive_coloring(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  std::vector<long long> raw;
  raw.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) raw.push_back(u);
  return EdgeColoredGraph::from_triangular(n, raw);
}

EdgeColoredGraph degenerate_coloring(int n, const std::vector<ColorId>& f,
                                     const std::function<int(int, int)>& tail_of) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (static_cast<int>(f.size()) != n) throw std::invalid_argument("label map must cover all vertices");
  std::vector<long long> raw;
  raw.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int t = tail_of(u, v);
      if (t != u && t != v) throw std::invalid_argument("orientation must pick an endpoint");
      raw.push_back(f[static_cast<size_t>(t)]);
    }
  EdgeColoredGraph g = EdgeColoredGraph::from_triangular(n, raw);
  if (auto tri = g.mono_triangle()) throw MonoTriangleError(*tri);
  return g;
}

namespace {

struct PartialColoring {
  int n, palette;
  std::vector<int> at;        // n*n, -1 unassigned
  std::vector<char> scratch;  // reused forbidden-color mask

  PartialColoring(int n_, int palette_) : n(n_), palette(palette_) {
    at.assign(static_cast<size_t>(n) * n, -1);
    scratch.assign(static_cast<size_t>(palette), 0);
  }
  int get(int u, int v) const { return at[static_cast<size_t>(u) * n + v]; }
  void set(int u, int v, int c) {
    at[static_cast<size_t>(u) * n + v] = at[static_cast<size_t>(v) * n + u] = c;
  }

  // Colors that would close a monochromatic triangle on (u,v); the returned
  // reference aliases the scratch mask.
  std::vector<char>& forbidden(int u, int v) {
    std::fill(scratch.begin(), scratch.end(), 0);
    const int* row_u = at.data() + static_cast<size_t>(u) * n;
    const int* row_v = at.data() + static_cast<size_t>(v) * n;
    for (int w = 0; w < n; ++w) {
      int cu = row_u[w];
      if (cu >= 0 && cu == row_v[w]) scratch[static_cast<size_t>(cu)] = 1;
    }
    return scratch;
  }

  int pick(const std::vector<char>& bad, SplitMix64& rng) const {
    int avail = 0;
    for (char b : bad) avail += b ? 0 : 1;
    if (avail == 0) return -1;
    int skip = static_cast<int>(rng.below(static_cast<std::uint64_t>(avail)));
    for (int c = 0; c < palette; ++c) {
      if (bad[static_cast<size_t>(c)]) continue;
      if (skip-- == 0) return c;
    }
    return -1;
  }
};

bool direct_attempt(PartialColoring& pc, SplitMix64& rng) {
  int n = pc.n;
  std::vector<std::pair<int, int>> order;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) order.emplace_back(u, v);
  rng.shuffle(order);
  for (auto [u, v] : order) {
    auto& bad = pc.forbidden(u, v);
    int c = pc.pick(bad, rng);
    if (c >= 0) {
      pc.set(u, v, c);
      continue;
    }
    // Repair: free the least-blocked color by recoloring its witnesses.
    bool repaired = false;
    for (int cand = 0; cand < pc.palette && !repaired; ++cand) {
      std::vector<int> wits;
      for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if (pc.get(u, w) == cand && pc.get(v, w) == cand) wits.push_back(w);
      }
      bool cleared = true;
      std::vector<std::pair<std::pair<int, int>, int>> undo;
      for (int w : wits) {
        bool moved = false;
        for (int side = 0; side < 2 && !moved; ++side) {
          int a = side == 0 ? u : v;
          std::vector<char> bad2 = pc.forbidden(a, w);  // copy: scratch gets reused
          bad2[static_cast<size_t>(cand)] = 1;
          int alt = pc.pick(bad2, rng);
          if (alt >= 0) {
            undo.push_back({{a, w}, pc.get(a, w)});
            pc.set(a, w, alt);
            moved = true;
          }
        }
        if (!moved) {
          cleared = false;
          break;
        }
      }
      if (cleared) {
        pc.set(u, v, cand);
        repaired = true;
      } else {
        for (auto it = undo.rbegin(); it != undo.rend(); ++it) pc.set(it->first.first, it->first.second, it->second);
      }
    }
    if (!repaired) return false;
  }
  return true;
}

// Valid 2-coloring of K_m (m <= 5) without a monochromatic triangle, colors
// in {0,1}; sampled by rejection over the 2^C(m,2) assignments.
std::vector<int> quotient_two_coloring(int m, SplitMix64& rng) {
  int e = m * (m - 1) / 2;
  for (;;) {
    std::vector<int> cols(static_cast<size_t>(e));
    for (int& c : cols) c = static_cast<int>(rng.below(2));
    auto idx = [m](int i, int j) {  // i < j
      return i * m - i * (i + 1) / 2 + (j - i - 1);
    };
    bool ok = true;
    for (int a = 0; a < m && ok; ++a)
      for (int b = a + 1; b < m && ok; ++b)
        for (int c = b + 1; c < m && ok; ++c)
          if (cols[static_cast<size_t>(idx(a, b))] == cols[static_cast<size_t>(idx(a, c))] &&
              cols[static_cast<size_t>(idx(a, b))] == cols[static_cast<size_t>(idx(b, c))])
            ok = false;
    if (ok) return cols;
  }
}

// Recursive product construction: valid whenever every cross level keeps its
// own color pair and inner blocks use deeper levels only. An odd palette
// leaves one spare color, enough for every leaf block of two vertices.
void product_fill(PartialColoring& pc, std::vector<int> verts, int level, int max_levels,
                  SplitMix64& rng) {
  int s = static_cast<int>(verts.size());
  if (s <= 1) return;
  if (level >= max_levels) {
    if (s == 2 && pc.palette > 2 * max_levels) {
      pc.set(verts[0], verts[1], 2 * max_levels);
      return;
    }
    throw ConstructiveFailure("generator/palette-too-small",
                              "product construction ran out of color pairs");
  }
  int m = std::min(5, s);
  rng.shuffle(verts);
  std::vector<std::vector<int>> blocks(static_cast<size_t>(m));
  for (int i = 0; i < s; ++i) blocks[static_cast<size_t>(i % m)].push_back(verts[static_cast<size_t>(i)]);
  auto q = quotient_two_coloring(m, rng);
  auto idx = [m](int i, int j) { return i * m - i * (i + 1) / 2 + (j - i - 1); };
  int base = 2 * level;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int c = base + q[static_cast<size_t>(idx(i, j))];
      for (int u : blocks[static_cast<size_t>(i)])
        for (int v : blocks[static_cast<size_t>(j)]) pc.set(u, v, c);
    }
  for (auto& b : blocks) product_fill(pc, b, level + 1, max_levels, rng);
}

}  // namespace

EdgeColoredGraph random_mono_c3_free(int n, int palette, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (palette < 1 || (n >= 3 && palette < 2))
    throw std::invalid_argument("palette too small for this order");
  SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + 0xd1b54a32d192ed03ULL);
  if (n == 1) return EdgeColoredGraph::from_triangular(1, {});
  if (n == 2)
    return EdgeColoredGraph::from_triangular(2, {static_cast<long long>(rng.below(static_cast<std::uint64_t>(palette)))});

  // Direct sampling converges fast when the palette is comfortably larger
  // than the collision scale ~sqrt(n); on small hosts the repair loop still
  // carries it, so retry harder there before switching to the product
  // construction.
  long long p2 = static_cast<long long>(palette) * palette;
  int attempts = p2 >= 4LL * n ? 32 : (n <= 100 ? 64 : 1);
  for (int a = 0; a < attempts; ++a) {
    PartialColoring pc(n, palette);
    if (!direct_attempt(pc, rng)) continue;
    std::vector<long long> raw;
    raw.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) raw.push_back(pc.get(u, v));
    EdgeColoredGraph g = EdgeColoredGraph::from_triangular(n, raw);
    if (g.mono_triangle()) throw InternalError("sampler produced a monochromatic triangle");
    return g;
  }

  PartialColoring pc(n, palette);
  std::vector<int> verts(static_cast<size_t>(n));
  std::iota(verts.begin(), verts.end(), 0);
  product_fill(pc, verts, 0, palette / 2, rng);
  std::vector<long long> raw;
  raw.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) raw.push_back(pc.get(u, v));
  EdgeColoredGraph g = EdgeColoredGraph::from_triangular(n, raw);
  if (g.mono_triangle()) throw InternalError("product construction produced a monochromatic triangle");
  return g;
}

MonoC3FreeTournament random_mcf_tournament(int n, double pair_density, int min_outdeg,
                                           std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (pair_density < 0.0 || pair_density > 1.0) throw std::invalid_argument("density in [0,1]");
  if (min_outdeg > n - 2)
    throw std::invalid_argument("min out-degree " + std::to_string(min_outdeg) +
                                " unsatisfiable at n = " + std::to_string(n));
  SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    std::vector<int> verts(static_cast<size_t>(n));
    std::iota(verts.begin(), verts.end(), 0);
    rng.shuffle(verts);
    std::vector<std::vector<int>> parts;
    for (size_t i = 0; i < verts.size();) {
      if (i + 1 < verts.size() && rng.chance(pair_density)) {
        parts.push_back({verts[i], verts[i + 1]});
        i += 2;
      } else {
        parts.push_back({verts[i]});
        i += 1;
      }
    }
    std::vector<std::pair<int, int>> arcs;
    auto orient = [&](int a, int b) {  // uniform single arc
      if (rng.below(2) == 0)
        arcs.emplace_back(a, b);
      else
        arcs.emplace_back(b, a);
    };
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t j = i + 1; j < parts.size(); ++j) {
        const auto& P = parts[i];
        const auto& Q = parts[j];
        if (P.size() == 1 && Q.size() == 1) {
          orient(P[0], Q[0]);
        } else if (P.size() == 1 || Q.size() == 1) {
          int z = P.size() == 1 ? P[0] : Q[0];
          int x = P.size() == 1 ? Q[0] : P[0];
          int y = P.size() == 1 ? Q[1] : P[1];
          // avoid z in N+(x) and N+(y) simultaneously
          switch (rng.below(3)) {
            case 0:
              arcs.emplace_back(x, z);
              arcs.emplace_back(z, y);
              break;
            case 1:
              arcs.emplace_back(z, x);
              arcs.emplace_back(y, z);
              break;
            default:
              arcs.emplace_back(z, x);
              arcs.emplace_back(z, y);
          }
        } else {
          // pair vs pair: enumerate the joint orientations both constraints
          // allow and sample one
          int x = P[0], y = P[1], z = Q[0], w = Q[1];
          std::vector<std::array<int, 4>> valid;  // bit per arc: 1 means first->second
          for (int mask = 0; mask < 16; ++mask) {
            bool xz = mask & 1, xw = mask & 2, yz = mask & 4, yw = mask & 8;
            if (xz && yz) continue;        // z common out-neighbor of {x,y}
            if (xw && yw) continue;        // w common out-neighbor of {x,y}
            if (!xz && !xw) continue;      // x common out-neighbor of {z,w}
            if (!yz && !yw) continue;      // y common out-neighbor of {z,w}
            valid.push_back({xz ? 1 : 0, xw ? 1 : 0, yz ? 1 : 0, yw ? 1 : 0});
          }
          auto cfg = valid[rng.below(valid.size())];
          arcs.emplace_back(cfg[0] ? x : z, cfg[0] ? z : x);
          arcs.emplace_back(cfg[1] ? x : w, cfg[1] ? w : x);
          arcs.emplace_back(cfg[2] ? y : z, cfg[2] ? z : y);
          arcs.emplace_back(cfg[3] ? y : w, cfg[3] ? w : y);
        }
      }
    auto d = MonoC3FreeTournament::build(n, arcs, parts);
    if (d.min_out_degree() < min_outdeg) continue;
    if (validate_tournament(d)) throw InternalError("tournament sampler violated its own constraints");
    return d;
  }
  throw ConstructiveFailure("generator/restart-budget",
                            "10000 resamples without meeting the out-degree constraint");
}

EdgeColoredGraph generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::Transitive:
      return transitive_coloring(spec.n);
    case GeneratorKind::Degenerate: {
      // identity labels over a seeded acyclic orientation
      std::vector<int> order(static_cast<size_t>(spec.n));
      std::iota(order.begin(), order.end(), 0);
      SplitMix64 rng(spec.seed * 0x9e3779b97f4a7c15ULL + 7);
      rng.shuffle(order);
      std::vector<int> rank(static_cast<size_t>(spec.n));
      for (int i = 0; i < spec.n; ++i) rank[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
      std::vector<ColorId> f(static_cast<size_t>(spec.n));
      std::iota(f.begin(), f.end(), 0);
      return degenerate_coloring(spec.n, f, [&rank](int u, int v) {
        return rank[static_cast<size_t>(u)] < rank[static_cast<size_t>(v)] ? u : v;
      });
    }
    case GeneratorKind::RandomRejection:
      return random_mono_c3_free(spec.n, spec.palette, spec.seed);
    default:
      throw std::invalid_argument("generate() handles colored-graph kinds only");
  }
}

}  // namespace pcspan
