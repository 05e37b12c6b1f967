#include "pcspan/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pcspan/ramsey.hpp"
#include "pcspan/tournament.hpp"

namespace pcspan {

DegenerateLabel degenerate_label(const EdgeColoredGraph& g) {
  DegenerateLabel l;
  l.f.assign(static_cast<size_t>(g.size()), -1);
  l.defined.assign(static_cast<size_t>(g.size()), 0);
  for (int v = 0; v < g.size(); ++v) {
    auto p = vertex_profile(g, v);
    if (p.repeated.size() == 1) {
      l.f[static_cast<size_t>(v)] = p.repeated[0].color;
      l.defined[static_cast<size_t>(v)] = 1;
    }
  }
  return l;
}

std::optional<std::string> validate_degenerate_label(const EdgeColoredGraph& g,
                                                     const DegenerateLabel& l) {
  for (int v = 0; v < g.size(); ++v) {
    if (!l.defined[static_cast<size_t>(v)]) continue;
    auto p = vertex_profile(g, v);
    if (p.repeated.size() != 1 || p.repeated[0].color != l.f[static_cast<size_t>(v)])
      return "label at vertex " + std::to_string(v) + " is not the unique repeated color";
  }
  return std::nullopt;
}

namespace {

PcTree tree_from_parent_map(const EdgeColoredGraph& g, int root, const std::vector<int>& parent,
                            const std::vector<int>& piece, TreeKind kind) {
  PcTree t;
  t.kind = kind;
  t.n = g.size();
  t.root = root;
  t.parent = parent;
  t.piece = piece;
  return t;
}

// Pattern leaf-elimination order: (leaf, neighbor, pattern-edge index) from
// the full pattern down to a single edge.
struct Peel {
  int leaf, neighbor, edge_id;
};

std::vector<Peel> peel_order(const TreePattern& pattern, std::pair<int, std::array<int, 2>>& base) {
  int k = pattern.edge_count();
  std::vector<std::set<int>> adj(static_cast<size_t>(pattern.nodes));
  std::map<std::pair<int, int>, int> edge_id;
  for (int e = 0; e < k; ++e) {
    auto [a, b] = pattern.edges[static_cast<size_t>(e)];
    adj[static_cast<size_t>(a)].insert(b);
    adj[static_cast<size_t>(b)].insert(a);
    edge_id[{std::min(a, b), std::max(a, b)}] = e;
  }
  std::set<int> alive;
  for (int v = 0; v < pattern.nodes; ++v) alive.insert(v);
  std::vector<Peel> peels;
  while (static_cast<int>(alive.size()) > 2) {
    for (int v : alive) {
      if (adj[static_cast<size_t>(v)].size() == 1) {
        int nb = *adj[static_cast<size_t>(v)].begin();
        peels.push_back({v, nb, edge_id[{std::min(v, nb), std::max(v, nb)}]});
        adj[static_cast<size_t>(nb)].erase(v);
        adj[static_cast<size_t>(v)].clear();
        alive.erase(v);
        break;
      }
    }
  }
  auto it = alive.begin();
  int a = *it++;
  int b = *it;
  base = {edge_id[{std::min(a, b), std::max(a, b)}], {a, b}};
  std::reverse(peels.begin(), peels.end());  // re-attachment order
  return peels;
}

}  // namespace

PcTree embed_small_pc_tree(const EdgeColoredGraph& g, const TreePattern& pattern) {
  pattern.validate();
  int k = pattern.edge_count();
  std::vector<int> parent(static_cast<size_t>(g.size()), -2);
  std::vector<int> piece(static_cast<size_t>(g.size()), -1);
  if (k == 0) {
    parent[0] = -1;
    return tree_from_parent_map(g, 0, parent, piece, TreeKind::Subdivision);
  }

  // Host chain: verts[j] hosts the pattern stage with j edges; each step
  // keeps only vertices of color degree >= j within the current host.
  std::vector<std::vector<int>> verts(static_cast<size_t>(k) + 1);
  verts[static_cast<size_t>(k)].resize(static_cast<size_t>(g.size()));
  std::iota(verts[static_cast<size_t>(k)].begin(), verts[static_cast<size_t>(k)].end(), 0);
  for (int j = k; j >= 2; --j) {
    const auto& cur = verts[static_cast<size_t>(j)];
    auto sub = induced(g, cur).materialize();
    std::vector<int>& next = verts[static_cast<size_t>(j) - 1];
    for (int lv = 0; lv < sub.size(); ++lv)
      if (vertex_profile(sub, lv).color_degree >= j) next.push_back(cur[static_cast<size_t>(lv)]);
  }

  std::pair<int, std::array<int, 2>> base;
  auto peels = peel_order(pattern, base);
  if (verts[1].size() < 2)
    throw ConstructiveFailure("small-tree/host-exhausted",
                              "high-color-degree core has fewer than 2 vertices");
  std::vector<int> node_to_host(static_cast<size_t>(pattern.nodes), -1);
  node_to_host[static_cast<size_t>(base.second[0])] = verts[1][0];
  node_to_host[static_cast<size_t>(base.second[1])] = verts[1][1];
  std::vector<int> used{verts[1][0], verts[1][1]};

  int level = 2;
  for (const Peel& p : peels) {
    int yh = node_to_host[static_cast<size_t>(p.neighbor)];
    std::set<ColorId> blocked;
    for (int u : used)
      if (u != yh) blocked.insert(g.color(yh, u));
    int pick = -1;
    for (int cand : verts[static_cast<size_t>(level)]) {
      if (std::find(used.begin(), used.end(), cand) != used.end()) continue;
      if (!blocked.count(g.color(yh, cand))) {
        pick = cand;
        break;
      }
    }
    if (pick < 0)
      throw ConstructiveFailure("small-tree/no-attach-color",
                                "every fresh color at the attachment vertex is exhausted");
    node_to_host[static_cast<size_t>(p.leaf)] = pick;
    used.push_back(pick);
    ++level;
  }

  // Orient the mapped pattern from node 0's host.
  int root = node_to_host[0];
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(g.size()));
  for (int e = 0; e < k; ++e) {
    auto [a, b] = pattern.edges[static_cast<size_t>(e)];
    int ha = node_to_host[static_cast<size_t>(a)], hb = node_to_host[static_cast<size_t>(b)];
    adj[static_cast<size_t>(ha)].emplace_back(hb, e);
    adj[static_cast<size_t>(hb)].emplace_back(ha, e);
  }
  parent[static_cast<size_t>(root)] = -1;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [u, e] : adj[static_cast<size_t>(v)]) {
      if (parent[static_cast<size_t>(u)] != -2) continue;
      parent[static_cast<size_t>(u)] = v;
      piece[static_cast<size_t>(u)] = e;
      stack.push_back(u);
    }
  }
  return tree_from_parent_map(g, root, parent, piece, TreeKind::Subdivision);
}

namespace {

// Small fallback for hosts below the pigeonhole guarantee: depth-first
// injective embedding of the pattern with proper-coloring pruning.
std::optional<PcTree> brute_force_pc_copy(const EdgeColoredGraph& g, const TreePattern& pattern) {
  int k = pattern.edge_count();
  if (g.size() < pattern.nodes) return std::nullopt;
  // BFS order of pattern nodes so each new node attaches to a mapped one.
  std::vector<int> order{0};
  std::vector<int> attach_edge(static_cast<size_t>(pattern.nodes), -1);
  std::vector<char> seen(static_cast<size_t>(pattern.nodes), 0);
  seen[0] = 1;
  for (size_t i = 0; i < order.size(); ++i) {
    for (int e = 0; e < k; ++e) {
      auto [a, b] = pattern.edges[static_cast<size_t>(e)];
      int other = -1;
      if (a == order[i] && !seen[static_cast<size_t>(b)]) other = b;
      if (b == order[i] && !seen[static_cast<size_t>(a)]) other = a;
      if (other >= 0) {
        seen[static_cast<size_t>(other)] = 1;
        attach_edge[static_cast<size_t>(other)] = e;
        order.push_back(other);
      }
    }
  }
  std::vector<int> host(static_cast<size_t>(pattern.nodes), -1);
  std::vector<char> used(static_cast<size_t>(g.size()), 0);
  std::vector<std::vector<std::pair<int, int>>> padj(static_cast<size_t>(pattern.nodes));
  for (int e = 0; e < k; ++e) {
    auto [a, b] = pattern.edges[static_cast<size_t>(e)];
    padj[static_cast<size_t>(a)].emplace_back(b, e);
    padj[static_cast<size_t>(b)].emplace_back(a, e);
  }
  auto pc_ok = [&](int node, int cand) {
    // colors of mapped pattern edges at `node` and at each mapped neighbor
    for (auto [nb, e] : padj[static_cast<size_t>(node)]) {
      if (host[static_cast<size_t>(nb)] < 0) continue;
      ColorId c = g.color(cand, host[static_cast<size_t>(nb)]);
      for (auto [nb2, e2] : padj[static_cast<size_t>(nb)]) {
        if (e2 == e || host[static_cast<size_t>(nb2)] < 0) continue;
        if (g.color(host[static_cast<size_t>(nb)], host[static_cast<size_t>(nb2)]) == c) return false;
      }
      for (auto [nb3, e3] : padj[static_cast<size_t>(node)]) {
        if (e3 == e || host[static_cast<size_t>(nb3)] < 0) continue;
        if (g.color(cand, host[static_cast<size_t>(nb3)]) == c) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, size_t at) -> bool {
    if (at == order.size()) return true;
    int node = order[at];
    for (int cand = 0; cand < g.size(); ++cand) {
      if (used[static_cast<size_t>(cand)]) continue;
      if (!pc_ok(node, cand)) continue;
      host[static_cast<size_t>(node)] = cand;
      used[static_cast<size_t>(cand)] = 1;
      if (self(self, at + 1)) return true;
      host[static_cast<size_t>(node)] = -1;
      used[static_cast<size_t>(cand)] = 0;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  std::vector<int> parent(static_cast<size_t>(g.size()), -2);
  std::vector<int> piece(static_cast<size_t>(g.size()), -1);
  parent[static_cast<size_t>(host[0])] = -1;
  for (size_t i = 1; i < order.size(); ++i) {
    int node = order[i];
    int e = attach_edge[static_cast<size_t>(node)];
    auto [a, b] = pattern.edges[static_cast<size_t>(e)];
    int pn = a == node ? b : a;
    parent[static_cast<size_t>(host[static_cast<size_t>(node)])] = host[static_cast<size_t>(pn)];
    piece[static_cast<size_t>(host[static_cast<size_t>(node)])] = e;
  }
  return tree_from_parent_map(g, host[0], parent, piece, TreeKind::Subdivision);
}

}  // namespace

PcTree embed_pc_subdivision(const EdgeColoredGraph& g, const TreePattern& pattern) {
  pattern.validate();
  int k = pattern.edge_count();
  int n = g.size();
  if (k == 0) throw std::invalid_argument("pattern needs at least one edge to span a host");
  if (n < pattern.nodes) throw std::invalid_argument("host smaller than the pattern");
  if (auto tri = g.mono_triangle()) throw MonoTriangleError(*tri);

  PcTree t;
  try {
    t = embed_small_pc_tree(g, pattern);
  } catch (const ConstructiveFailure&) {
    auto bf = brute_force_pc_copy(g, pattern);
    if (!bf)
      throw ConstructiveFailure("subdivision/no-initial-copy",
                                "host admits no properly colored copy of the pattern");
    t = *bf;
  }

  std::vector<int>& parent = t.parent;
  std::vector<int>& piece = t.piece;
  std::vector<char> in_tree(static_cast<size_t>(n), 0);
  int tree_size = 0;
  for (int v = 0; v < n; ++v)
    if (parent[static_cast<size_t>(v)] != -2) {
      in_tree[static_cast<size_t>(v)] = 1;
      ++tree_size;
    }

  std::vector<int> subtree(static_cast<size_t>(n), 0), order;
  std::vector<std::vector<int>> children(static_cast<size_t>(n));
  auto recompute = [&]() {
    for (auto& c : children) c.clear();
    order.clear();
    for (int v = 0; v < n; ++v)
      if (parent[static_cast<size_t>(v)] >= 0) children[static_cast<size_t>(parent[static_cast<size_t>(v)])].push_back(v);
    std::vector<int> stack{t.root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int c : children[static_cast<size_t>(v)]) stack.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      subtree[static_cast<size_t>(*it)] = 1;
      for (int c : children[static_cast<size_t>(*it)]) subtree[static_cast<size_t>(*it)] += subtree[static_cast<size_t>(c)];
    }
  };

  while (tree_size < n) {
    recompute();
    int u = 0;
    while (in_tree[static_cast<size_t>(u)]) ++u;

    // Extend past a leaf whose pendant color differs.
    int attach = -1;
    for (int v = 0; v < n && attach < 0; ++v) {
      if (!in_tree[static_cast<size_t>(v)] || v == t.root) continue;
      if (!children[static_cast<size_t>(v)].empty()) continue;
      if (g.color(u, v) != g.color(v, parent[static_cast<size_t>(v)])) attach = v;
    }
    if (attach >= 0) {
      parent[static_cast<size_t>(u)] = attach;
      piece[static_cast<size_t>(u)] = piece[static_cast<size_t>(attach)];
      in_tree[static_cast<size_t>(u)] = 1;
      ++tree_size;
      continue;
    }

    // Every leaf blocks u, so compatible triples exist; take the one whose
    // far-side component is smallest and subdivide that edge with u.
    int best_size = n + 1, bx = -1, by = -1;
    for (int c = 0; c < n; ++c) {
      if (parent[static_cast<size_t>(c)] < 0 || !in_tree[static_cast<size_t>(c)]) continue;
      int p = parent[static_cast<size_t>(c)];
      // oriented (x,y) = (c,p): far side is p's side
      if (g.color(u, c) == g.color(c, p)) {
        int comp = tree_size - subtree[static_cast<size_t>(c)];
        if (comp < best_size) {
          best_size = comp;
          bx = c;
          by = p;
        }
      }
      // oriented (x,y) = (p,c): far side is c's subtree
      if (g.color(u, p) == g.color(p, c)) {
        int comp = subtree[static_cast<size_t>(c)];
        if (comp < best_size) {
          best_size = comp;
          bx = p;
          by = c;
        }
      }
    }
    if (bx < 0) throw InternalError("blocked vertex without a compatible triple");
    // Check the minimal triple exchanges cleanly (guaranteed by minimality).
    ColorId cu = g.color(u, by);
    for (int w = 0; w < n; ++w) {
      if (!in_tree[static_cast<size_t>(w)] || w == bx) continue;
      bool adj_y = parent[static_cast<size_t>(w)] == by || parent[static_cast<size_t>(by)] == w;
      if (adj_y && g.color(w, by) == cu)
        throw InternalError("minimal compatible triple failed to exchange");
    }
    if (parent[static_cast<size_t>(by)] == bx) {
      parent[static_cast<size_t>(by)] = u;
      parent[static_cast<size_t>(u)] = bx;
      piece[static_cast<size_t>(u)] = piece[static_cast<size_t>(by)];
    } else {
      parent[static_cast<size_t>(bx)] = u;
      parent[static_cast<size_t>(u)] = by;
      piece[static_cast<size_t>(u)] = piece[static_cast<size_t>(bx)];
    }
    in_tree[static_cast<size_t>(u)] = 1;
    ++tree_size;
  }

  if (auto bad = validate_pc_tree(g, t.edge_list()))
    throw InternalError("subdivision lost proper coloring: " + bad->message);
  return t;
}

// --------------------------------------------------------------------------

int spider_bowtie_threshold(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  static const std::array<int, 4> small = [] {
    std::array<int, 4> vals{};
    for (int kk = 1; kk <= 3; ++kk) {
      auto r = compute_constraint_ramsey(kk);
      vals[static_cast<size_t>(kk)] = r.exact ? r.value : 1 << 30;
    }
    return vals;
  }();
  long long fact = 1;
  for (int i = 2; i <= k + 1; ++i) {
    fact *= i;
    if (fact > 1'000'000'000LL) {
      fact = 1'000'000'001LL;
      break;
    }
  }
  int bound = static_cast<int>(fact) - 1;
  if (k <= 3) return std::min(small[static_cast<size_t>(k)], bound);
  return bound;
}

namespace {

// Leg from the star center through the shovel path, then through the merge
// of the shovel's triangle with its allotted extension set.
std::vector<int> assemble_leg(const Shovel& sh, const PcPath& merge) {
  std::vector<int> leg(sh.path.rbegin(), sh.path.rend());  // v0 ... glue
  leg.pop_back();                                          // glue is merge.front()
  leg.insert(leg.end(), merge.begin(), merge.end());
  return leg;
}

Shovel shovel_from_bowtie(const EdgeColoredGraph& g, const Bowtie& b, int center, int v0) {
  if (b.kind == Bowtie::Kind::Short) {
    ColorId c = g.color(center, v0);
    for (auto& tri : {b.tri1, b.tri2}) {
      if (c == g.color(center, tri[1]) || c == g.color(center, tri[2])) continue;
      return Shovel{{center, tri[1], tri[2]}, {center, v0}};
    }
    throw InternalError("star edge clashes with both triangles of a short bowtie");
  }
  const auto& near = b.tri1[0] == center ? b.tri1 : b.tri2;
  const auto& far = b.tri1[0] == center ? b.tri2 : b.tri1;
  ColorId c = g.color(center, v0);
  if (c != g.color(center, near[1]) && c != g.color(center, near[2]))
    return Shovel{{center, near[1], near[2]}, {center, v0}};
  if (c != g.color(far[0], center))
    return Shovel{{far[0], far[1], far[2]}, {far[0], center, v0}};
  throw InternalError("star edge blocks both shovel forms of a long bowtie");
}

std::vector<std::vector<int>> anchored_legs(const EdgeColoredGraph& g, int anchor,
                                            const std::vector<int>& pool,
                                            const std::vector<int>& lengths) {
  // pool: host vertices available for legs, ascending; consecutive slices.
  std::vector<std::vector<int>> legs;
  size_t at = 0;
  for (int len : lengths) {
    std::vector<int> verts{anchor};
    verts.insert(verts.end(), pool.begin() + at, pool.begin() + at + len);
    at += static_cast<size_t>(len);
    std::sort(verts.begin(), verts.end());
    auto view = induced(g, verts);
    auto sub = view.materialize();
    int local_anchor = static_cast<int>(std::find(verts.begin(), verts.end(), anchor) - verts.begin());
    PcPath p = pc_hamilton_path_from(sub, local_anchor);
    std::reverse(p.begin(), p.end());  // start at the anchor
    std::vector<int> leg;
    for (int lv : p) leg.push_back(view.host_vertex(lv));
    legs.push_back(leg);
  }
  return legs;
}

}  // namespace

PcTree embed_pc_spider(const EdgeColoredGraph& g, const SpiderSpec& spec) {
  int n = g.size();
  int k = spec.k();
  if (spec.total() != n - 1)
    throw std::invalid_argument("leg lengths must sum to n-1 for a spanning spider");
  if (auto tri = g.mono_triangle()) throw MonoTriangleError(*tri);

  std::vector<int> parent(static_cast<size_t>(n), -2), piece(static_cast<size_t>(n), -1);
  if (k <= 2) {
    // A spanning properly colored path is the whole spider; the center is
    // the split vertex for k == 2 and an endpoint for k == 1.
    PcPath p = pc_hamilton_path_from(g, 0);
    int split = k == 1 ? 0 : spec.legs[0];
    int root = p[static_cast<size_t>(split)];
    parent[static_cast<size_t>(root)] = -1;
    for (int i = split - 1; i >= 0; --i) {
      parent[static_cast<size_t>(p[static_cast<size_t>(i)])] = p[static_cast<size_t>(i) + 1];
      piece[static_cast<size_t>(p[static_cast<size_t>(i)])] = 0;
    }
    for (int i = split + 1; i < n; ++i) {
      parent[static_cast<size_t>(p[static_cast<size_t>(i)])] = p[static_cast<size_t>(i) - 1];
      piece[static_cast<size_t>(p[static_cast<size_t>(i)])] = k == 1 ? 0 : 1;
    }
    PcTree t = tree_from_parent_map(g, root, parent, piece, TreeKind::Spider);
    if (auto bad = verify_certificate(g, t, spec)) throw InternalError("path spider failed: " + *bad);
    return t;
  }

  if (spec.legs[0] == 1) {
    // Every leg has length 1: the spider is a spanning rainbow star.
    auto star = find_rainbow_star(g, k);
    if (!star)
      throw ConstructiveFailure("spider/star-not-found",
                                "no vertex sees k distinct colors");
    parent[static_cast<size_t>(star->center)] = -1;
    for (int i = 0; i < k; ++i) {
      parent[static_cast<size_t>(star->leaves[static_cast<size_t>(i)])] = star->center;
      piece[static_cast<size_t>(star->leaves[static_cast<size_t>(i)])] = i;
    }
    PcTree t = tree_from_parent_map(g, star->center, parent, piece, TreeKind::Spider);
    if (auto bad = verify_certificate(g, t, spec)) throw InternalError("star spider failed: " + *bad);
    return t;
  }

  int threshold = spider_bowtie_threshold(k);

  // Greedy vertex-disjoint packing; stop as soon as Case 1 is certain.
  std::vector<int> alive(static_cast<size_t>(n));
  std::iota(alive.begin(), alive.end(), 0);
  std::vector<Bowtie> packed;
  while (static_cast<int>(packed.size()) <= threshold) {
    if (static_cast<int>(alive.size()) < 5) break;
    auto view = induced(g, alive);
    auto sub = view.materialize();
    auto b = find_nice_bowtie(sub);
    if (!b) break;
    Bowtie hb = *b;
    for (int& v : hb.tri1) v = view.host_vertex(v);
    for (int& v : hb.tri2) v = view.host_vertex(v);
    packed.push_back(hb);
    auto hbv = hb.vertices();
    std::set<int> drop(hbv.begin(), hbv.end());
    std::vector<int> next;
    for (int v : alive)
      if (!drop.count(v)) next.push_back(v);
    alive = next;
  }

  if (static_cast<int>(packed.size()) > threshold) {
    // Case 1: rainbow star over bowtie centers seeds the k legs.
    std::vector<int> centers;
    for (auto& b : packed) {
      auto cs = b.centers();
      centers.push_back(*std::min_element(cs.begin(), cs.end()));
    }
    std::sort(centers.begin(), centers.end());
    auto view = induced(g, centers);
    auto sub = view.materialize();
    auto star = find_rainbow_star(sub, k);
    if (!star)
      throw ConstructiveFailure("spider/case1/no-rainbow-star",
                                "packed centers admit no rainbow star of size k");
    int v0 = view.host_vertex(star->center);
    std::vector<int> leaves;
    for (int lv : star->leaves) leaves.push_back(view.host_vertex(lv));

    auto bowtie_of_center = [&](int c) -> const Bowtie& {
      for (auto& b : packed)
        for (int cc : b.centers())
          if (cc == c) return b;
      throw InternalError("star leaf is not a packed center");
    };

    std::vector<Shovel> shovels;
    std::set<int> used{v0};
    for (int i = 0; i < k; ++i) {
      Shovel sh = shovel_from_bowtie(g, bowtie_of_center(leaves[static_cast<size_t>(i)]),
                                     leaves[static_cast<size_t>(i)], v0);
      if (auto bad = validate_shovel(g, sh)) throw InternalError("case1 shovel invalid: " + *bad);
      shovels.push_back(sh);
      for (int v : sh.vertices())
        if (v != v0) used.insert(v);
    }

    // Trim long shovels to their targets; everything else (unused bowtie
    // vertices included) joins the extension pool.
    std::vector<std::vector<int>> legs(static_cast<size_t>(k));
    std::vector<int> pool;
    std::vector<int> extend_idx;
    std::set<int> consumed{v0};
    for (int i = 0; i < k; ++i) {
      int target = spec.legs[static_cast<size_t>(i)];
      const Shovel& sh = shovels[static_cast<size_t>(i)];
      int full = static_cast<int>(sh.vertices().size()) - 1;  // leg length if taken whole
      if (target <= full) {
        std::vector<int> whole = assemble_leg(sh, {sh.path.front(), sh.tri.c1, sh.tri.c2});
        std::vector<int> leg(whole.begin(), whole.begin() + target + 1);
        legs[static_cast<size_t>(i)] = leg;
        for (size_t j = 1; j < leg.size(); ++j) consumed.insert(leg[j]);
      } else {
        extend_idx.push_back(i);
        for (int v : sh.vertices())
          if (v != v0) consumed.insert(v);
      }
    }
    for (int v = 0; v < n; ++v)
      if (!consumed.count(v)) pool.push_back(v);

    size_t at = 0;
    for (int i : extend_idx) {
      const Shovel& sh = shovels[static_cast<size_t>(i)];
      int need = spec.legs[static_cast<size_t>(i)] - (static_cast<int>(sh.vertices().size()) - 1);
      std::vector<int> portion(pool.begin() + at, pool.begin() + at + need);
      at += static_cast<size_t>(need);
      PcPath merge;
      if (portion.size() >= 3) {
        std::sort(portion.begin(), portion.end());
        auto pv = induced(g, portion);
        auto psub = pv.materialize();
        Shovel local = spanning_nice_shovel(psub);
        Shovel hostsh;
        hostsh.tri = {pv.host_vertex(local.tri.apex), pv.host_vertex(local.tri.c1),
                      pv.host_vertex(local.tri.c2)};
        for (int lv : local.path) hostsh.path.push_back(pv.host_vertex(lv));
        merge = merge_triangle_shovel(g, sh.tri, hostsh);
      } else {
        merge = merge_triangle_shovel(g, sh.tri, portion);
      }
      legs[static_cast<size_t>(i)] = assemble_leg(sh, merge);
    }
    if (at != pool.size()) throw InternalError("case1 pool not fully consumed");

    parent[static_cast<size_t>(v0)] = -1;
    for (int i = 0; i < k; ++i) {
      const auto& leg = legs[static_cast<size_t>(i)];
      for (size_t j = 1; j < leg.size(); ++j) {
        parent[static_cast<size_t>(leg[j])] = leg[j - 1];
        piece[static_cast<size_t>(leg[j])] = i;
      }
    }
    PcTree t = tree_from_parent_map(g, v0, parent, piece, TreeKind::Spider);
    if (auto bad = verify_certificate(g, t, spec))
      throw InternalError("case1 spider failed verification: " + *bad);
    return t;
  }

  // Case 2: `alive` (the bowtie-free rest) hosts a nice octopus carrying
  // legs 2..k; the first leg grows out of the octopus triangle afterwards.
  const std::vector<int>& H = alive;
  if (spec.legs[0] < 2)
    throw ConstructiveFailure("spider/case2/first-leg-too-short",
                              "octopus route needs a first leg of length >= 2");
  std::vector<int> tail_lengths(spec.legs.begin() + 1, spec.legs.end());
  int tail_total = spec.total() - spec.legs[0];
  if (static_cast<int>(H.size()) < tail_total + 3)
    throw ConstructiveFailure("spider/case2/h-too-small",
                              "bowtie-free remainder cannot carry the short legs");
  auto hview = induced(g, H);
  auto hsub = hview.materialize();
  auto profiles = all_vertex_profiles(hsub);

  std::vector<int> v1_local, window_local;
  int window_top = 2 * k * k + 2 * k + 7;
  for (int lv = 0; lv < hsub.size(); ++lv) {
    if (profiles[static_cast<size_t>(lv)].max_mono_degree <= 1) v1_local.push_back(lv);
    else if (profiles[static_cast<size_t>(lv)].max_mono_degree <= window_top) window_local.push_back(lv);
  }

  Octopus oct;
  if (v1_local.size() >= 3) {
    int a = v1_local[0], b = v1_local[1], c = v1_local[2];
    std::vector<int> rest;
    for (int lv = 0; lv < hsub.size(); ++lv)
      if (lv != a && lv != b && lv != c) rest.push_back(hview.host_vertex(lv));
    if (static_cast<int>(rest.size()) < tail_total)
      throw ConstructiveFailure("spider/case2/rainbow-triangle/legs-dont-fit", "");
    oct.center = hview.host_vertex(a);
    oct.a = hview.host_vertex(b);
    oct.b = hview.host_vertex(c);
    oct.legs = anchored_legs(g, oct.center, rest, tail_lengths);
  } else if (!window_local.empty()) {
    int x = window_local[0];
    const auto& prof = profiles[static_cast<size_t>(x)];
    const RepeatedColor* pickc = nullptr;
    for (const auto& rc : prof.repeated)
      if (static_cast<int>(rc.witnesses.size()) == prof.max_mono_degree) {
        pickc = &rc;
        break;
      }
    if (!pickc) throw InternalError("window vertex lost its repeated color");
    std::set<int> drop(pickc->witnesses.begin(), pickc->witnesses.end());
    std::vector<int> rest;
    for (int lv = 0; lv < hsub.size(); ++lv)
      if (lv != x && !drop.count(lv)) rest.push_back(hview.host_vertex(lv));
    if (static_cast<int>(rest.size()) < tail_total)
      throw ConstructiveFailure("spider/case2/window/legs-dont-fit", "");
    oct.center = hview.host_vertex(x);
    oct.a = hview.host_vertex(pickc->witnesses[0]);
    oct.b = hview.host_vertex(pickc->witnesses[1]);
    oct.legs = anchored_legs(g, oct.center, rest, tail_lengths);
  } else {
    // Degenerate-label tournament over H minus the (at most 2) vertices with
    // no repeated color.
    std::vector<int> h1_local;
    for (int lv = 0; lv < hsub.size(); ++lv)
      if (profiles[static_cast<size_t>(lv)].max_mono_degree >= 2) h1_local.push_back(lv);
    std::vector<int> h1_host;
    for (int lv : h1_local) h1_host.push_back(hview.host_vertex(lv));
    auto h1view = induced(g, h1_host);
    auto h1 = h1view.materialize();
    auto label = degenerate_label(h1);
    int m = h1.size();
    for (int v = 0; v < m; ++v)
      if (!label.defined[static_cast<size_t>(v)])
        throw ConstructiveFailure("spider/case2/degenerate/claim-b",
                                  "a vertex repeats zero or two colors inside the core");
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> partner(static_cast<size_t>(m), -1);
    for (int u = 0; u < m; ++u)
      for (int v = u + 1; v < m; ++v) {
        ColorId c = h1.color(u, v);
        bool fu = c == label.f[static_cast<size_t>(u)], fv = c == label.f[static_cast<size_t>(v)];
        if (fu && !fv) arcs.emplace_back(u, v);
        else if (fv && !fu) arcs.emplace_back(v, u);
        else if (fu && fv) {
          if (partner[static_cast<size_t>(u)] != -1 || partner[static_cast<size_t>(v)] != -1)
            throw ConstructiveFailure("spider/case2/degenerate/part-size",
                                      "three mutually nonadjacent vertices in the tournament");
          partner[static_cast<size_t>(u)] = v;
          partner[static_cast<size_t>(v)] = u;
        } else {
          throw ConstructiveFailure("spider/case2/degenerate/claim-c",
                                    "an edge avoids both endpoint labels");
        }
      }
    std::vector<std::vector<int>> parts;
    for (int v = 0; v < m; ++v) {
      if (partner[static_cast<size_t>(v)] < 0) parts.push_back({v});
      else if (partner[static_cast<size_t>(v)] > v) parts.push_back({v, partner[static_cast<size_t>(v)]});
    }
    auto d = MonoC3FreeTournament::build(m, arcs, parts);
    if (auto bad = validate_tournament(d))
      throw InternalError("auxiliary digraph is not a valid tournament: " + bad->message);
    // Above the size guarantee every vertex keeps out-degree >= 2k^2+2k+5
    // (its repeated-color multiplicity in the core minus one possible
    // nonadjacent partner); below it this is a legitimate failure.
    int floor_deg = 2 * k * k + 2 * k + 5;
    for (int v = 0; v < m; ++v)
      if (d.out_degree(v) < floor_deg)
        throw ConstructiveFailure("spider/case2/degenerate/outdeg",
                                  "vertex " + std::to_string(v) + " has out-degree " +
                                      std::to_string(d.out_degree(v)) + " < " +
                                      std::to_string(floor_deg));
    DirectedSpider ds;
    try {
      ds = embed_directed_spider(d, tail_lengths);
    } catch (const std::invalid_argument& e) {
      throw ConstructiveFailure("spider/case2/degenerate/tstar-precondition", e.what());
    }
    oct.center = h1view.host_vertex(ds.root);
    oct.a = h1view.host_vertex(ds.x);
    oct.b = h1view.host_vertex(ds.y);
    for (auto& leg : ds.legs) {
      std::vector<int> host_leg;
      for (auto it = leg.rbegin(); it != leg.rend(); ++it) host_leg.push_back(h1view.host_vertex(*it));
      oct.legs.push_back(host_leg);
    }
  }

  if (auto bad = validate_octopus(g, oct))
    throw InternalError("case2 produced an invalid octopus: " + *bad);
  std::set<int> oset;
  for (int v : oct.vertices()) oset.insert(v);
  std::vector<int> remainder;
  for (int v = 0; v < n; ++v)
    if (!oset.count(v)) remainder.push_back(v);
  if (static_cast<int>(remainder.size()) != spec.legs[0] - 2)
    throw InternalError("octopus remainder does not match the first leg");
  PcTree t = octopus_to_spider(g, oct, remainder);
  if (auto bad = verify_certificate(g, t, spec))
    throw InternalError("case2 spider failed verification: " + *bad);
  return t;
}

// --------------------------------------------------------------------------

std::optional<PcTree> brute_force_pc_spider(const EdgeColoredGraph& g, const SpiderSpec& spec,
                                            int limit) {
  int n = g.size();
  if (n > limit) throw std::invalid_argument("oracle capped at n <= " + std::to_string(limit));
  if (spec.total() != n - 1) throw std::invalid_argument("leg lengths must sum to n-1");
  int k = spec.k();
  std::vector<std::vector<int>> legs(static_cast<size_t>(k));
  std::vector<char> used(static_cast<size_t>(n), 0);

  auto build_tree = [&](int center) {
    std::vector<int> parent(static_cast<size_t>(n), -2), piece(static_cast<size_t>(n), -1);
    parent[static_cast<size_t>(center)] = -1;
    for (int i = 0; i < k; ++i) {
      int prev = center;
      for (int v : legs[static_cast<size_t>(i)]) {
        parent[static_cast<size_t>(v)] = prev;
        piece[static_cast<size_t>(v)] = i;
        prev = v;
      }
    }
    return tree_from_parent_map(g, center, parent, piece, TreeKind::Spider);
  };

  for (int center = 0; center < n; ++center) {
    used.assign(static_cast<size_t>(n), 0);
    used[static_cast<size_t>(center)] = 1;
    for (auto& l : legs) l.clear();
    auto rec = [&](auto&& self, int leg, int pos) -> bool {
      if (leg == k) return true;
      if (pos == spec.legs[static_cast<size_t>(leg)]) return self(self, leg + 1, 0);
      int prev = pos == 0 ? center : legs[static_cast<size_t>(leg)].back();
      for (int v = 0; v < n; ++v) {
        if (used[static_cast<size_t>(v)]) continue;
        ColorId c = g.color(prev, v);
        if (pos == 0) {
          // distinct from the other legs' first colors
          bool clash = false;
          for (int j = 0; j < leg; ++j)
            if (g.color(center, legs[static_cast<size_t>(j)][0]) == c) clash = true;
          if (clash) continue;
          // canonical order between equal-length legs
          if (leg > 0 && spec.legs[static_cast<size_t>(leg)] == spec.legs[static_cast<size_t>(leg) - 1] &&
              v < legs[static_cast<size_t>(leg) - 1][0])
            continue;
        } else {
          int back2 = pos == 1 ? center : legs[static_cast<size_t>(leg)][static_cast<size_t>(pos) - 2];
          if (g.color(back2, prev) == c) continue;
        }
        legs[static_cast<size_t>(leg)].push_back(v);
        used[static_cast<size_t>(v)] = 1;
        if (self(self, leg, pos + 1)) return true;
        legs[static_cast<size_t>(leg)].pop_back();
        used[static_cast<size_t>(v)] = 0;
      }
      return false;
    };
    if (rec(rec, 0, 0)) {
      PcTree t = build_tree(center);
      if (auto bad = verify_certificate(g, t, spec))
        throw InternalError("oracle built an invalid spider: " + *bad);
      return t;
    }
  }
  return std::nullopt;
}

}  // namespace pcspan
