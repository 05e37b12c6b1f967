#include "pcspan/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pcspan {

TreePattern TreePattern::star(int k) {
  if (k < 1) throw std::invalid_argument("star needs at least one edge");
  TreePattern p;
  p.nodes = k + 1;
  for (int i = 1; i <= k; ++i) p.edges.emplace_back(0, i);
  return p;
}

void TreePattern::validate() const {
  if (nodes < 1) throw std::invalid_argument("pattern needs at least one node");
  if (static_cast<int>(edges.size()) != nodes - 1)
    throw std::invalid_argument("pattern is not a tree (edge count)");
  std::vector<int> uf(static_cast<size_t>(nodes));
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[static_cast<size_t>(x)] != x) x = uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
    return x;
  };
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b)
      throw std::invalid_argument("pattern edge out of range");
    int ra = find(a), rb = find(b);
    if (ra == rb) throw std::invalid_argument("pattern contains a cycle");
    uf[static_cast<size_t>(ra)] = rb;
  }
}

std::vector<std::vector<int>> TreePattern::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<size_t>(nodes));
  for (auto [a, b] : edges) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  return adj;
}

SpiderSpec::SpiderSpec(std::vector<int> lengths) : legs(std::move(lengths)) {
  if (legs.empty()) throw std::invalid_argument("spider spec needs at least one leg");
  for (int l : legs)
    if (l < 1) throw std::invalid_argument("leg lengths must be positive");
  std::sort(legs.begin(), legs.end(), std::greater<>());
}

int SpiderSpec::total() const {
  int s = 0;
  for (int l : legs) s += l;
  return s;
}

int PcTree::vertex_count() const {
  int c = 0;
  for (int p : parent)
    if (p != -2) ++c;
  return c;
}

std::vector<std::pair<int, int>> PcTree::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < n; ++v)
    if (parent[static_cast<size_t>(v)] >= 0) out.emplace_back(v, parent[static_cast<size_t>(v)]);
  return out;
}

std::vector<int> PcTree::leg_lengths() const {
  std::map<int, int> count;
  for (int v = 0; v < n; ++v)
    if (parent[static_cast<size_t>(v)] >= 0) ++count[piece[static_cast<size_t>(v)]];
  std::vector<int> out;
  for (auto [leg, len] : count) out.push_back(len);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::optional<PcViolation> validate_pc_tree(const EdgeColoredGraph& g,
                                            const std::vector<std::pair<int, int>>& edges) {
  int n = g.size();
  std::vector<int> uf(static_cast<size_t>(n));
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[static_cast<size_t>(x)] != x) x = uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
    return x;
  };
  std::vector<std::vector<std::pair<int, int>>> incident(static_cast<size_t>(n));
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw std::invalid_argument("edge out of range");
    int ra = find(a), rb = find(b);
    if (ra == rb) throw std::invalid_argument("edge list contains a cycle or repeated edge");
    uf[static_cast<size_t>(ra)] = rb;
    incident[static_cast<size_t>(a)].emplace_back(a, b);
    incident[static_cast<size_t>(b)].emplace_back(a, b);
  }
  for (int v = 0; v < n; ++v) {
    auto& inc = incident[static_cast<size_t>(v)];
    for (size_t i = 0; i < inc.size(); ++i)
      for (size_t j = i + 1; j < inc.size(); ++j) {
        if (g.color(inc[i].first, inc[i].second) == g.color(inc[j].first, inc[j].second)) {
          PcViolation bad;
          bad.vertex = v;
          bad.edge_a = inc[i];
          bad.edge_b = inc[j];
          bad.message = "equal colors on two tree edges at vertex " + std::to_string(v);
          return bad;
        }
      }
  }
  return std::nullopt;
}

namespace {

std::string ahu(const std::vector<std::vector<int>>& adj, int v, int from) {
  std::vector<std::string> kids;
  for (int u : adj[static_cast<size_t>(v)])
    if (u != from) kids.push_back(ahu(adj, u, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  s += ")";
  return s;
}

// Centroid(s) of a free tree; canonical form rooted there is iso-invariant.
std::vector<int> tree_centroids(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  if (n == 1) return {0};
  std::vector<int> deg(static_cast<size_t>(n)), order;
  for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = static_cast<int>(adj[static_cast<size_t>(v)].size());
  std::vector<int> layer;
  std::vector<char> removed(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<size_t>(v)] <= 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[static_cast<size_t>(v)] = 1;
      --remaining;
      for (int u : adj[static_cast<size_t>(v)])
        if (!removed[static_cast<size_t>(u)] && --deg[static_cast<size_t>(u)] == 1) next.push_back(u);
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[static_cast<size_t>(v)]) centers.push_back(v);
  return centers;
}

// Suppress every vertex of degree exactly 2 (a path collapses to one edge).
std::vector<std::vector<int>> suppress_degree_two(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (adj[static_cast<size_t>(v)].size() != 2) keep.push_back(v);
  if (keep.empty()) return adj;  // cycle cannot happen in a tree; n<=2 path handled below
  std::vector<int> local(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < keep.size(); ++i) local[static_cast<size_t>(keep[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> out(keep.size());
  for (int v : keep) {
    for (int u : adj[static_cast<size_t>(v)]) {
      int prev = v, cur = u;
      while (adj[static_cast<size_t>(cur)].size() == 2) {
        int nxt = adj[static_cast<size_t>(cur)][0] == prev ? adj[static_cast<size_t>(cur)][1]
                                                           : adj[static_cast<size_t>(cur)][0];
        prev = cur;
        cur = nxt;
      }
      out[static_cast<size_t>(local[static_cast<size_t>(v)])].push_back(local[static_cast<size_t>(cur)]);
    }
  }
  return out;
}

}  // namespace

std::string tree_canonical_form(const std::vector<std::vector<int>>& adj) {
  auto centers = tree_centroids(adj);
  std::string best;
  for (int c : centers) {
    std::string s = ahu(adj, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

namespace {

std::optional<std::string> tree_backbone_check(const PcTree& tree, std::vector<std::vector<int>>& adj) {
  if (tree.root < 0 || tree.root >= tree.n || tree.parent[static_cast<size_t>(tree.root)] != -1)
    return "root is not marked in the parent map";
  adj.assign(static_cast<size_t>(tree.n), {});
  int verts = 0, edges = 0;
  for (int v = 0; v < tree.n; ++v) {
    int p = tree.parent[static_cast<size_t>(v)];
    if (p == -2) continue;
    ++verts;
    if (p == -1) continue;
    if (p < 0 || p >= tree.n || tree.parent[static_cast<size_t>(p)] == -2) return "parent outside tree";
    adj[static_cast<size_t>(v)].push_back(p);
    adj[static_cast<size_t>(p)].push_back(v);
    ++edges;
  }
  if (edges != verts - 1) return "parent map is not a tree";
  // connectivity: walk up from every vertex must reach the root
  for (int v = 0; v < tree.n; ++v) {
    if (tree.parent[static_cast<size_t>(v)] == -2) continue;
    int cur = v, steps = 0;
    while (cur != tree.root) {
      cur = tree.parent[static_cast<size_t>(cur)];
      if (cur < 0 || ++steps > tree.n) return "parent chain does not reach the root";
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> verify_shape(const PcTree& tree, const SpiderSpec& spec) {
  std::vector<std::vector<int>> adj;
  if (auto bad = tree_backbone_check(tree, adj)) return bad;
  // Every vertex except the root must have degree <= 2; the root's degree is k.
  int k = spec.k();
  if (static_cast<int>(adj[static_cast<size_t>(tree.root)].size()) != k)
    return "center degree " + std::to_string(adj[static_cast<size_t>(tree.root)].size()) +
           " does not match leg count " + std::to_string(k);
  for (int v = 0; v < tree.n; ++v) {
    if (v == tree.root || tree.parent[static_cast<size_t>(v)] == -2) continue;
    if (adj[static_cast<size_t>(v)].size() > 2) return "branch vertex away from the center";
  }
  // Walk each leg from the center and collect lengths.
  std::vector<int> lengths;
  for (int first : adj[static_cast<size_t>(tree.root)]) {
    int len = 1, prev = tree.root, cur = first;
    while (true) {
      auto& nb = adj[static_cast<size_t>(cur)];
      int nxt = -1;
      for (int u : nb)
        if (u != prev) nxt = u;
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  if (lengths != spec.legs) {
    std::string got;
    for (int l : lengths) got += std::to_string(l) + " ";
    return "leg lengths [ " + got + "] do not match the spec";
  }
  return std::nullopt;
}

std::optional<std::string> verify_shape(const PcTree& tree, const TreePattern& pattern) {
  std::vector<std::vector<int>> adj;
  if (auto bad = tree_backbone_check(tree, adj)) return bad;
  pattern.validate();
  if (tree.vertex_count() < pattern.nodes) return "tree has fewer vertices than the pattern";
  // Keep only tree vertices for the contraction.
  std::vector<int> keep;
  for (int v = 0; v < tree.n; ++v)
    if (tree.parent[static_cast<size_t>(v)] != -2) keep.push_back(v);
  std::vector<int> local(static_cast<size_t>(tree.n), -1);
  for (size_t i = 0; i < keep.size(); ++i) local[static_cast<size_t>(keep[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> sub(keep.size());
  for (int v : keep)
    for (int u : adj[static_cast<size_t>(v)])
      sub[static_cast<size_t>(local[static_cast<size_t>(v)])].push_back(local[static_cast<size_t>(u)]);
  auto host_core = suppress_degree_two(sub);
  auto pat_core = suppress_degree_two(pattern.adjacency());
  if (tree_canonical_form(host_core) != tree_canonical_form(pat_core))
    return "tree does not contract to the pattern";
  return std::nullopt;
}

namespace {

std::optional<std::string> common_certificate_checks(const EdgeColoredGraph& g, const PcTree& tree,
                                                     bool require_spanning) {
  if (tree.n != g.size()) return "certificate host size mismatch";
  if (require_spanning && !tree.spanning()) return "tree is not spanning";
  std::optional<PcViolation> bad;
  try {
    bad = validate_pc_tree(g, tree.edge_list());
  } catch (const std::invalid_argument& e) {
    return std::string("not a forest: ") + e.what();
  }
  if (bad) return bad->message;
  return std::nullopt;
}

// Each piece's edge set must form a path starting at the root side.
std::optional<std::string> piece_paths_check(const PcTree& tree) {
  std::map<int, int> sizes;
  for (int v = 0; v < tree.n; ++v)
    if (tree.parent[static_cast<size_t>(v)] >= 0) {
      if (tree.piece[static_cast<size_t>(v)] < 0) return "edge without piece metadata";
      ++sizes[tree.piece[static_cast<size_t>(v)]];
    }
  for (auto [id, cnt] : sizes) {
    // Count vertices of each in-piece degree; a path has exactly 2 endpoints.
    std::map<int, int> deg;
    for (int v = 0; v < tree.n; ++v) {
      int p = tree.parent[static_cast<size_t>(v)];
      if (p >= 0 && tree.piece[static_cast<size_t>(v)] == id) {
        ++deg[v];
        ++deg[p];
      }
    }
    int ends = 0;
    for (auto [v, d] : deg) {
      if (d > 2) return "piece " + std::to_string(id) + " branches";
      if (d == 1) ++ends;
    }
    if (ends != 2 && cnt >= 1) return "piece " + std::to_string(id) + " is not a path";
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> verify_certificate(const EdgeColoredGraph& g, const PcTree& tree,
                                              const SpiderSpec& spec, bool require_spanning) {
  if (auto bad = common_certificate_checks(g, tree, require_spanning)) return bad;
  if (auto bad = verify_shape(tree, spec)) return bad;
  if (auto bad = piece_paths_check(tree)) return bad;
  return std::nullopt;
}

std::optional<std::string> verify_certificate(const EdgeColoredGraph& g, const PcTree& tree,
                                              const TreePattern& pattern, bool require_spanning) {
  if (auto bad = common_certificate_checks(g, tree, require_spanning)) return bad;
  if (auto bad = verify_shape(tree, pattern)) return bad;
  if (auto bad = piece_paths_check(tree)) return bad;
  return std::nullopt;
}

}  // namespace pcspan
