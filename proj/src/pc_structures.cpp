#include "pcspan/pc_structures.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace pcspan {

bool is_pc_path(const EdgeColoredGraph& g, const PcPath& p) {
  std::set<int> seen(p.begin(), p.end());
  if (seen.size() != p.size()) return false;
  for (size_t i = 0; i + 2 < p.size(); ++i)
    if (g.color(p[i], p[i + 1]) == g.color(p[i + 1], p[i + 2])) return false;
  return true;
}

std::optional<std::string> validate_centered_triangle(const EdgeColoredGraph& g,
                                                      const CenteredTriangle& t) {
  if (t.apex == t.c1 || t.apex == t.c2 || t.c1 == t.c2) return "triangle vertices not distinct";
  ColorId c = g.color(t.c1, t.c2);
  if (c == g.color(t.apex, t.c1) || c == g.color(t.apex, t.c2))
    return "designated edge is not a center edge";
  return std::nullopt;
}

std::vector<int> Shovel::vertices() const {
  std::vector<int> out = path;
  out.push_back(tri.c1);
  out.push_back(tri.c2);
  return out;
}

std::optional<std::string> validate_shovel(const EdgeColoredGraph& g, const Shovel& s) {
  if (s.path.empty()) return "empty shovel path";
  if (s.path.front() != s.tri.apex) return "path does not start at the glue vertex";
  std::set<int> seen(s.path.begin(), s.path.end());
  if (seen.size() != s.path.size()) return "repeated path vertex";
  if (seen.count(s.tri.c1) || seen.count(s.tri.c2)) return "triangle overlaps the path";
  if (auto bad = validate_centered_triangle(g, s.tri)) return bad;
  if (!is_pc_path(g, s.path)) return "shovel path is not properly colored";
  if (s.path.size() >= 2) {
    ColorId first = g.color(s.path[0], s.path[1]);
    if (first == g.color(s.tri.apex, s.tri.c1) || first == g.color(s.tri.apex, s.tri.c2))
      return "first path edge repeats a triangle color at the glue vertex";
  }
  return std::nullopt;
}

std::vector<int> Bowtie::vertices() const {
  std::vector<int> out(tri1.begin(), tri1.end());
  for (int v : tri2)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

std::vector<int> Bowtie::centers() const {
  if (kind == Kind::Short) return {tri1[0]};
  return {tri1[0], tri2[0]};
}

std::optional<std::string> validate_bowtie(const EdgeColoredGraph& g, const Bowtie& b) {
  auto distinct = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (b.kind == Bowtie::Kind::Short) {
    if (b.tri1[0] != b.tri2[0]) return "short bowtie triangles do not share the center";
    int u0 = b.tri1[0], u1 = b.tri1[1], u2 = b.tri1[2], u3 = b.tri2[1], u4 = b.tri2[2];
    if (!distinct({u0, u1, u2, u3, u4})) return "short bowtie vertices not distinct";
    if (validate_centered_triangle(g, {u0, u1, u2})) return "first triangle lacks its center edge";
    if (validate_centered_triangle(g, {u0, u3, u4})) return "second triangle lacks its center edge";
    std::set<ColorId> s1{g.color(u0, u1), g.color(u0, u2)};
    if (s1.count(g.color(u0, u3)) || s1.count(g.color(u0, u4)))
      return "center color sets intersect";
    return std::nullopt;
  }
  int v3 = b.tri1[0], v1 = b.tri1[1], v2 = b.tri1[2];
  int v4 = b.tri2[0], v5 = b.tri2[1], v6 = b.tri2[2];
  if (!distinct({v1, v2, v3, v4, v5, v6})) return "long bowtie vertices not distinct";
  if (validate_centered_triangle(g, {v3, v1, v2})) return "first triangle lacks its center edge";
  if (validate_centered_triangle(g, {v4, v5, v6})) return "second triangle lacks its center edge";
  ColorId bridge = g.color(v3, v4);
  if (bridge == g.color(v3, v1) || bridge == g.color(v3, v2))
    return "bridge repeats a triangle color at its first center";
  if (bridge == g.color(v4, v5) || bridge == g.color(v4, v6))
    return "bridge repeats a triangle color at its second center";
  return std::nullopt;
}

std::vector<int> Octopus::vertices() const {
  std::vector<int> out{center, a, b};
  for (auto& leg : legs)
    for (size_t i = 1; i < leg.size(); ++i) out.push_back(leg[i]);
  return out;
}

std::optional<std::string> validate_octopus(const EdgeColoredGraph& g, const Octopus& o) {
  if (o.legs.empty()) return "octopus needs at least one leg";
  if (auto bad = validate_centered_triangle(g, {o.center, o.a, o.b})) return bad;
  std::set<int> used{o.center, o.a, o.b};
  if (used.size() != 3) return "triangle vertices not distinct";
  std::set<ColorId> tri_colors{g.color(o.center, o.a), g.color(o.center, o.b)};
  std::set<ColorId> first_colors;
  for (auto& leg : o.legs) {
    if (leg.size() < 2 || leg.front() != o.center) return "leg must start at the center";
    if (!is_pc_path(g, leg)) return "leg is not a properly colored path";
    ColorId first = g.color(leg[0], leg[1]);
    if (tri_colors.count(first)) return "leg first edge repeats a triangle color";
    if (!first_colors.insert(first).second) return "two legs start with the same color";
    for (size_t i = 1; i < leg.size(); ++i)
      if (!used.insert(leg[i]).second) return "legs overlap";
  }
  return std::nullopt;
}

// --------------------------------------------------------------------------

PcPath insert_vertex(const EdgeColoredGraph& g, const PcPath& path, int v, int i) {
  int t = static_cast<int>(path.size());
  if (t < 2) throw std::invalid_argument("insert_vertex needs a path of >= 2 vertices");
  if (i < 0 || i >= t - 1) throw std::invalid_argument("insert position out of range");
  for (int u : path)
    if (u == v) throw std::invalid_argument("vertex already on the path");
  if (g.color(v, path[static_cast<size_t>(i)]) !=
      g.color(path[static_cast<size_t>(i)], path[static_cast<size_t>(i) + 1]))
    throw std::invalid_argument("color precondition fails at position i");
  int j = -1;
  for (int cand = t - 2; cand >= i; --cand) {
    if (g.color(v, path[static_cast<size_t>(cand)]) ==
        g.color(path[static_cast<size_t>(cand)], path[static_cast<size_t>(cand) + 1])) {
      j = cand;
      break;
    }
  }
  // j >= i exists by the precondition. The successor edge check is implied by
  // the maximality of j; the only way the new path can fail is a
  // monochromatic triangle on (v, path[j], path[j+1]).
  if (g.color(v, path[static_cast<size_t>(j)]) == g.color(v, path[static_cast<size_t>(j) + 1]))
    throw MonoTriangleError({v, path[static_cast<size_t>(j)], path[static_cast<size_t>(j) + 1]});
  PcPath out;
  out.reserve(path.size() + 1);
  out.insert(out.end(), path.begin(), path.begin() + j + 1);
  out.push_back(v);
  out.insert(out.end(), path.begin() + j + 1, path.end());
  return out;
}

PcPath pc_hamilton_path_from(const EdgeColoredGraph& g, int v) {
  int n = g.size();
  if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
  PcPath path{v};
  std::vector<char> on(static_cast<size_t>(n), 0);
  on[static_cast<size_t>(v)] = 1;
  for (int added = 1; added < n; ++added) {
    int u = 0;
    while (on[static_cast<size_t>(u)]) ++u;
    on[static_cast<size_t>(u)] = 1;
    if (path.size() == 1) {
      path.insert(path.begin(), u);
    } else if (g.color(u, path[0]) != g.color(path[0], path[1])) {
      path.insert(path.begin(), u);
    } else {
      path = insert_vertex(g, path, u, 0);
    }
  }
  return path;
}

namespace {

// One growth round of the spanning-shovel builder, shared by both color
// cases: try to place `x` after positions t-1 .. 1 of `path`, walking the
// forced-color chain downward. Returns the insert position, or -1 when every
// position fails (the caller then knows col(x, path[1]) == col(path[1],
// path[0]) and resolves position 0 itself).
int chain_scan(const EdgeColoredGraph& g, const PcPath& path, int x) {
  int t = static_cast<int>(path.size());
  if (t < 2) return -1;
  if (g.color(path[static_cast<size_t>(t) - 2], path[static_cast<size_t>(t) - 1]) !=
      g.color(path[static_cast<size_t>(t) - 1], x))
    return t - 1;  // append
  for (int j = t - 2; j >= 1; --j) {
    // invariant: col(x, path[j+1]) == col(path[j+1], path[j])
    if (g.color(x, path[static_cast<size_t>(j)]) == g.color(x, path[static_cast<size_t>(j) + 1]))
      throw MonoTriangleError({x, path[static_cast<size_t>(j)], path[static_cast<size_t>(j) + 1]});
    if (g.color(x, path[static_cast<size_t>(j)]) !=
        g.color(path[static_cast<size_t>(j)], path[static_cast<size_t>(j) - 1]))
      return j;
  }
  if (g.color(x, path[0]) == g.color(x, path[1]))
    throw MonoTriangleError({x, path[0], path[1]});
  return -1;
}

PcPath inserted(const PcPath& path, int x, int pos) {  // x goes after `pos`
  PcPath out;
  out.reserve(path.size() + 1);
  out.insert(out.end(), path.begin(), path.begin() + pos + 1);
  out.push_back(x);
  out.insert(out.end(), path.begin() + pos + 1, path.end());
  return out;
}

}  // namespace

Shovel spanning_nice_shovel(const EdgeColoredGraph& g) {
  int n = g.size();
  if (n < 3) throw std::invalid_argument("spanning shovel needs >= 3 vertices");
  auto cls = classify_triangle(g, 0, 1, 2);
  if (cls.kind == TriangleKind::Monochromatic) throw MonoTriangleError({0, 1, 2});
  auto [a, b] = cls.center_edges.front();
  int apex = 0 + 1 + 2 - a - b;
  Shovel sh{{apex, a, b}, {apex}};
  std::vector<char> on(static_cast<size_t>(n), 0);
  on[0] = on[1] = on[2] = 1;
  for (int covered = 3; covered < n; ++covered) {
    int v = 0;
    while (on[static_cast<size_t>(v)]) ++v;
    on[static_cast<size_t>(v)] = 1;
    int u1 = sh.tri.apex, u2 = sh.tri.c1, u3 = sh.tri.c2;
    ColorId cv = g.color(v, u1);
    if (cv != g.color(u1, u2) && cv != g.color(u1, u3)) {
      // The new vertex joins the path; the triangle stays put. If no inner
      // position accepts it, the forced chain makes position 0 work and the
      // new first edge color cv avoids both triangle colors.
      if (sh.path.size() == 1) {
        sh.path.push_back(v);
        continue;
      }
      int pos = chain_scan(g, sh.path, v);
      sh.path = inserted(sh.path, v, pos >= 0 ? pos : 0);
      continue;
    }
    // v clashes with a triangle color at the glue vertex. Normalize so that
    // col(u1,u2) == col(u1,v) == alpha and try to push u3 onto the path,
    // re-forming the triangle as (u1, u2, v).
    if (cv != g.color(u1, u2)) std::swap(u2, u3);
    ColorId alpha = cv;
    if (g.color(u2, v) == alpha) throw MonoTriangleError({u1, u2, v});
    int pos = sh.path.size() >= 2 ? chain_scan(g, sh.path, u3) : -1;
    if (pos >= 1) {
      sh.path = inserted(sh.path, u3, pos);
      sh.tri = {u1, u2, v};
      continue;
    }
    if (g.color(u3, sh.path[0]) != alpha) {
      sh.path = inserted(sh.path, u3, 0);
      sh.tri = {u1, u2, v};
      continue;
    }
    // col(u3,u1) == alpha as well: every edge from u1 into {v,u2,u3} carries
    // alpha, so that triangle is alpha-free and some center edge of it lets
    // the whole path hang off the remaining corner.
    if (g.color(u3, v) == alpha) throw MonoTriangleError({u1, u3, v});
    auto cls2 = classify_triangle(g, v, u2, u3);
    if (cls2.kind == TriangleKind::Monochromatic) throw MonoTriangleError({v, u2, u3});
    auto [p, q] = cls2.center_edges.front();
    int z = v + u2 + u3 - p - q;
    sh.path.insert(sh.path.begin(), z);
    sh.tri = {z, p, q};
  }
  if (auto bad = validate_shovel(g, sh))
    throw InternalError("spanning_nice_shovel produced an invalid shovel: " + *bad);
  return sh;
}

namespace {

PcPath checked_merge_result(const EdgeColoredGraph& g, const CenteredTriangle& tri, PcPath p,
                            size_t expected_size) {
  if (p.size() != expected_size || !is_pc_path(g, p) || p.front() != tri.apex)
    throw InternalError("merge produced an invalid path");
  ColorId first = g.color(p[0], p[1]);
  if (first != g.color(tri.apex, tri.c1) && first != g.color(tri.apex, tri.c2))
    throw InternalError("merge path first color escapes the apex colors");
  return p;
}

}  // namespace

PcPath merge_triangle_shovel(const EdgeColoredGraph& g, const CenteredTriangle& tri,
                             const std::vector<int>& small_y) {
  if (auto bad = validate_centered_triangle(g, tri)) throw std::invalid_argument(*bad);
  if (small_y.size() > 2) throw std::invalid_argument("vertex-set form takes at most 2 vertices");
  std::set<int> ys(small_y.begin(), small_y.end());
  if (ys.size() != small_y.size()) throw std::invalid_argument("repeated vertex in Y");
  for (int v : {tri.apex, tri.c1, tri.c2})
    if (ys.count(v)) throw std::invalid_argument("Y overlaps the triangle");
  std::vector<int> rest{tri.c1, tri.c2};
  rest.insert(rest.end(), small_y.begin(), small_y.end());
  std::sort(rest.begin(), rest.end());
  ColorId a1 = g.color(tri.apex, tri.c1), a2 = g.color(tri.apex, tri.c2);
  do {
    PcPath cand;
    cand.push_back(tri.apex);
    cand.insert(cand.end(), rest.begin(), rest.end());
    ColorId first = g.color(cand[0], cand[1]);
    if (first != a1 && first != a2) continue;
    if (is_pc_path(g, cand))
      return checked_merge_result(g, tri, cand, 3 + small_y.size());
  } while (std::next_permutation(rest.begin(), rest.end()));
  throw ConstructiveFailure("merge/small-remainder-exhausted",
                            "no ordering works; host likely has a monochromatic triangle");
}

PcPath merge_triangle_shovel(const EdgeColoredGraph& g, const CenteredTriangle& tri,
                             const Shovel& y) {
  if (auto bad = validate_centered_triangle(g, tri)) throw std::invalid_argument(*bad);
  if (auto bad = validate_shovel(g, y)) throw std::invalid_argument("shovel invalid: " + *bad);
  auto yv = y.vertices();
  std::set<int> ys(yv.begin(), yv.end());
  for (int v : {tri.apex, tri.c1, tri.c2})
    if (ys.count(v)) throw std::invalid_argument("Y overlaps the triangle");

  const int u1 = tri.apex;
  const size_t expected = 3 + yv.size();
  ColorId c1 = g.color(tri.c1, tri.c2);
  ColorId c2 = g.color(y.tri.c1, y.tri.c2);
  const std::vector<int>& w = y.path;  // w[0] is the glue vertex of y

  // A cross edge avoiding both center colors threads everything directly.
  for (int ua : {tri.c1, tri.c2})
    for (int vb : {y.tri.c1, y.tri.c2}) {
      ColorId d = g.color(ua, vb);
      if (d == c1 || d == c2) continue;
      int ub = tri.c1 + tri.c2 - ua, vb2 = y.tri.c1 + y.tri.c2 - vb;
      PcPath p{u1, ub, ua, vb, vb2};
      p.insert(p.end(), w.begin(), w.end());
      return checked_merge_result(g, tri, p, expected);
    }

  // All four cross edges use {c1, c2}; equal centers would force a
  // monochromatic triangle on y's center edge.
  if (c1 == c2) throw MonoTriangleError({tri.c1, y.tri.c1, y.tri.c2});
  int U2 = -1, U3 = -1, V2 = -1, V3 = -1;
  for (int ua : {tri.c1, tri.c2})
    for (int vb : {y.tri.c1, y.tri.c2})
      if (U2 < 0 && g.color(ua, vb) == c1) {
        U2 = ua;
        U3 = tri.c1 + tri.c2 - ua;
        V2 = vb;
        V3 = y.tri.c1 + y.tri.c2 - vb;
      }
  if (U2 < 0) throw MonoTriangleError({tri.c1, y.tri.c1, y.tri.c2});  // all four are c2
  if (g.color(U3, V2) == c1) throw MonoTriangleError({U2, U3, V2});
  if (g.color(U3, V3) == c2) throw MonoTriangleError({U3, V2, V3});
  if (g.color(U2, V3) == c1) throw MonoTriangleError({U2, U3, V3});
  // Forced pattern: col(U2,V2)=col(U3,V3)=c1, col(U3,V2)=col(U2,V3)=c2.

  if (g.color(u1, U2) != c2) {
    PcPath p{u1, U2, V3, U3, V2};
    p.insert(p.end(), w.begin(), w.end());
    return checked_merge_result(g, tri, p, expected);
  }
  if (g.color(w[0], V3) != c1) {
    PcPath p{u1, U2, V2, U3, V3};
    p.insert(p.end(), w.begin(), w.end());
    return checked_merge_result(g, tri, p, expected);
  }
  // col(u1,U2) == c2 and col(v1,V3) == c1: route through y's path after
  // absorbing U3 next to V3.
  PcPath tail{V3};
  tail.insert(tail.end(), w.begin(), w.end());
  tail = insert_vertex(g, tail, U3, 0);
  PcPath p{u1, U2, V2};
  p.insert(p.end(), tail.begin(), tail.end());
  return checked_merge_result(g, tri, p, expected);
}

// --------------------------------------------------------------------------

namespace {

std::optional<Bowtie> short_from_repeats(const EdgeColoredGraph& g,
                                         const VertexColorProfile& prof) {
  if (prof.repeated.size() < 2) return std::nullopt;
  int v = prof.vertex;
  const auto& r1 = prof.repeated[0];
  const auto& r2 = prof.repeated[1];
  Bowtie b;
  b.kind = Bowtie::Kind::Short;
  b.tri1 = {v, r1.witnesses[0], r1.witnesses[1]};
  b.tri2 = {v, r2.witnesses[0], r2.witnesses[1]};
  if (validate_bowtie(g, b)) return std::nullopt;
  return b;
}

std::optional<Bowtie> short_from_rainbow(const EdgeColoredGraph& g, int v,
                                         const VertexColorProfile& prof) {
  // Up to 8 neighbors with pairwise distinct colors at v, in index order.
  std::vector<int> wits;
  std::set<ColorId> used;
  for (int u = 0; u < g.size() && wits.size() < 8; ++u) {
    if (u == v) continue;
    if (used.insert(g.color(u, v)).second) wits.push_back(u);
  }
  (void)prof;
  std::vector<std::pair<int, int>> good;
  for (size_t i = 0; i < wits.size(); ++i)
    for (size_t j = i + 1; j < wits.size(); ++j) {
      ColorId c = g.color(wits[i], wits[j]);
      if (c != g.color(v, wits[i]) && c != g.color(v, wits[j])) good.emplace_back(wits[i], wits[j]);
    }
  for (size_t i = 0; i < good.size(); ++i)
    for (size_t j = i + 1; j < good.size(); ++j) {
      auto [p1, q1] = good[i];
      auto [p2, q2] = good[j];
      if (p1 == p2 || p1 == q2 || q1 == p2 || q1 == q2) continue;
      std::set<ColorId> s1{g.color(v, p1), g.color(v, q1)};
      if (s1.count(g.color(v, p2)) || s1.count(g.color(v, q2))) continue;
      Bowtie b;
      b.kind = Bowtie::Kind::Short;
      b.tri1 = {v, p1, q1};
      b.tri2 = {v, p2, q2};
      if (!validate_bowtie(g, b)) return b;
    }
  return std::nullopt;
}

}  // namespace

std::optional<Bowtie> find_nice_bowtie(const EdgeColoredGraph& g) {
  auto profiles = all_vertex_profiles(g);
  for (auto& prof : profiles)
    if (auto b = short_from_repeats(g, prof)) return b;

  // Long route: unique repeated colors f(u), f(v) with col(uv) outside both.
  for (int u = 0; u < g.size(); ++u) {
    if (profiles[static_cast<size_t>(u)].repeated.size() != 1) continue;
    const auto& ru = profiles[static_cast<size_t>(u)].repeated[0];
    for (int v = u + 1; v < g.size(); ++v) {
      if (profiles[static_cast<size_t>(v)].repeated.size() != 1) continue;
      const auto& rv = profiles[static_cast<size_t>(v)].repeated[0];
      ColorId cuv = g.color(u, v);
      if (cuv == ru.color || cuv == rv.color) continue;
      // Greedy witness pick in index order, skipping used vertices; a pair
      // with only colliding witnesses is skipped (absence stays sound).
      int a1 = ru.witnesses[0], a2 = ru.witnesses[1];
      std::vector<int> bs;
      for (int wv : rv.witnesses) {
        if (wv == a1 || wv == a2 || wv == u) continue;
        bs.push_back(wv);
        if (bs.size() == 2) break;
      }
      if (bs.size() < 2) continue;
      Bowtie b;
      b.kind = Bowtie::Kind::Long;
      b.tri1 = {u, a1, a2};
      b.tri2 = {v, bs[0], bs[1]};
      if (!validate_bowtie(g, b)) return b;
    }
  }

  for (int v = 0; v < g.size(); ++v)
    if (auto b = short_from_rainbow(g, v, profiles[static_cast<size_t>(v)])) return b;
  return std::nullopt;
}

bool recheck_bowtie_free_consequences(const EdgeColoredGraph& g) {
  auto profiles = all_vertex_profiles(g);
  for (auto& p : profiles)
    if (p.repeated.size() >= 2) return false;
  for (int u = 0; u < g.size(); ++u) {
    if (profiles[static_cast<size_t>(u)].repeated.size() != 1) continue;
    const auto& ru = profiles[static_cast<size_t>(u)].repeated[0];
    for (int v = u + 1; v < g.size(); ++v) {
      if (profiles[static_cast<size_t>(v)].repeated.size() != 1) continue;
      const auto& rv = profiles[static_cast<size_t>(v)].repeated[0];
      ColorId cuv = g.color(u, v);
      if (cuv == ru.color || cuv == rv.color) continue;
      // Mirrors the detector's greedy witness pick: the recheck asks whether
      // a violating pair with pickable disjoint witnesses exists.
      int a1 = ru.witnesses[0], a2 = ru.witnesses[1];
      int found = 0;
      for (int wv : rv.witnesses) {
        if (wv == a1 || wv == a2 || wv == u) continue;
        if (++found == 2) break;
      }
      if (found >= 2) return false;
    }
  }
  return true;
}

PcTree octopus_to_spider(const EdgeColoredGraph& g, const Octopus& o,
                         const std::vector<int>& remainder) {
  if (auto bad = validate_octopus(g, o)) throw std::invalid_argument("octopus invalid: " + *bad);
  auto ov = o.vertices();
  std::set<int> seen(ov.begin(), ov.end());
  for (int v : remainder)
    if (!seen.insert(v).second) throw std::invalid_argument("remainder overlaps the octopus");
  if (static_cast<int>(seen.size()) != g.size())
    throw std::invalid_argument("octopus + remainder must cover the host");

  CenteredTriangle tri{o.center, o.a, o.b};
  PcPath first_leg;
  if (remainder.size() >= 3) {
    std::vector<int> rem = remainder;
    std::sort(rem.begin(), rem.end());
    InducedView view = induced(g, rem);
    EdgeColoredGraph sub = view.materialize();
    Shovel local = spanning_nice_shovel(sub);
    Shovel host_shovel;
    host_shovel.tri = {view.host_vertex(local.tri.apex), view.host_vertex(local.tri.c1),
                       view.host_vertex(local.tri.c2)};
    for (int lv : local.path) host_shovel.path.push_back(view.host_vertex(lv));
    first_leg = merge_triangle_shovel(g, tri, host_shovel);
  } else {
    first_leg = merge_triangle_shovel(g, tri, remainder);
  }

  PcTree t;
  t.kind = TreeKind::Spider;
  t.n = g.size();
  t.root = o.center;
  t.parent.assign(static_cast<size_t>(g.size()), -2);
  t.piece.assign(static_cast<size_t>(g.size()), -1);
  t.parent[static_cast<size_t>(o.center)] = -1;
  auto lay = [&](const std::vector<int>& leg, int id) {
    for (size_t i = 1; i < leg.size(); ++i) {
      t.parent[static_cast<size_t>(leg[i])] = leg[i - 1];
      t.piece[static_cast<size_t>(leg[i])] = id;
    }
  };
  lay(first_leg, 0);
  for (size_t i = 0; i < o.legs.size(); ++i) lay(o.legs[i], static_cast<int>(i) + 1);
  if (auto bad = validate_pc_tree(g, t.edge_list()))
    throw InternalError("octopus_to_spider produced a non-PC tree: " + bad->message);
  if (!t.spanning()) throw InternalError("octopus_to_spider did not span the host");
  return t;
}

}  // namespace pcspan
