#include "pcspan/tournament.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace pcspan {

MonoC3FreeTournament MonoC3FreeTournament::build(int n,
                                                 const std::vector<std::pair<int, int>>& arcs,
                                                 const std::vector<std::vector<int>>& parts) {
  if (n < 1) throw std::invalid_argument("tournament needs at least one vertex");
  MonoC3FreeTournament d;
  d.n = n;
  d.adj.assign(static_cast<size_t>(n) * n, 0);
  d.out.assign(static_cast<size_t>(n), {});
  d.part_of.assign(static_cast<size_t>(n), -1);
  for (auto [u, v] : arcs) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw std::invalid_argument("arc out of range");
    d.adj[static_cast<size_t>(u) * n + v] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (d.adj[static_cast<size_t>(u) * n + v]) d.out[static_cast<size_t>(u)].push_back(v);
  d.parts = parts;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty() || parts[i].size() > 2)
      throw std::invalid_argument("partite sets must have 1 or 2 vertices");
    for (int v : parts[i]) {
      if (v < 0 || v >= n || d.part_of[static_cast<size_t>(v)] != -1)
        throw std::invalid_argument("parts must partition the vertex set");
      d.part_of[static_cast<size_t>(v)] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v)
    if (d.part_of[static_cast<size_t>(v)] == -1)
      throw std::invalid_argument("parts must partition the vertex set");
  return d;
}

int MonoC3FreeTournament::min_out_degree() const {
  int best = n;
  for (int v = 0; v < n; ++v) best = std::min(best, out_degree(v));
  return best;
}

bool MonoC3FreeTournament::tournament() const {
  for (auto& p : parts)
    if (p.size() > 1) return false;
  return true;
}

MonoC3FreeTournament MonoC3FreeTournament::restrict_to(std::span<const int> verts) const {
  std::vector<int> vs(verts.begin(), verts.end());
  std::vector<int> local(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < vs.size(); ++i) local[static_cast<size_t>(vs[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> arcs;
  for (int u : vs)
    for (int v : out[static_cast<size_t>(u)])
      if (local[static_cast<size_t>(v)] >= 0)
        arcs.emplace_back(local[static_cast<size_t>(u)], local[static_cast<size_t>(v)]);
  std::map<int, std::vector<int>> grouped;
  for (int v : vs) grouped[part_of[static_cast<size_t>(v)]].push_back(local[static_cast<size_t>(v)]);
  std::vector<std::vector<int>> sub_parts;
  for (auto& [id, members] : grouped) sub_parts.push_back(members);
  return build(static_cast<int>(vs.size()), arcs, sub_parts);
}

std::optional<McfViolation> validate_tournament(const MonoC3FreeTournament& d) {
  for (int u = 0; u < d.n; ++u)
    for (int v = u + 1; v < d.n; ++v) {
      bool same = d.part_of[static_cast<size_t>(u)] == d.part_of[static_cast<size_t>(v)];
      int cnt = (d.arc(u, v) ? 1 : 0) + (d.arc(v, u) ? 1 : 0);
      if (same && cnt != 0)
        return McfViolation{"arc inside partite set {" + std::to_string(u) + "," + std::to_string(v) + "}"};
      if (!same && cnt != 1)
        return McfViolation{(cnt == 0 ? "missing arc between " : "two arcs between ") +
                            std::to_string(u) + " and " + std::to_string(v)};
    }
  for (auto& p : d.parts) {
    if (p.size() != 2) continue;
    for (int z = 0; z < d.n; ++z)
      if (d.arc(p[0], z) && d.arc(p[1], z))
        return McfViolation{"common out-neighbor " + std::to_string(z) + " of part {" +
                            std::to_string(p[0]) + "," + std::to_string(p[1]) + "}"};
  }
  return std::nullopt;
}

namespace {

// Iterative Tarjan.
std::vector<std::vector<int>> tarjan_sccs(const MonoC3FreeTournament& d) {
  int n = d.n;
  std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<char> on_stack(static_cast<size_t>(n), 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int next_index = 0;
  struct Frame {
    int v;
    size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<size_t>(root)] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    index[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = next_index++;
    stack.push_back(root);
    on_stack[static_cast<size_t>(root)] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& os = d.out[static_cast<size_t>(f.v)];
      if (f.child < os.size()) {
        int w = os[f.child++];
        if (index[static_cast<size_t>(w)] == -1) {
          index[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = next_index++;
          stack.push_back(w);
          on_stack[static_cast<size_t>(w)] = 1;
          call.push_back({w, 0});
        } else if (on_stack[static_cast<size_t>(w)]) {
          low[static_cast<size_t>(f.v)] = std::min(low[static_cast<size_t>(f.v)], index[static_cast<size_t>(w)]);
        }
      } else {
        if (low[static_cast<size_t>(f.v)] == index[static_cast<size_t>(f.v)]) {
          std::vector<int> comp;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[static_cast<size_t>(w)] = 0;
            comp.push_back(w);
            if (w == f.v) break;
          }
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty())
          low[static_cast<size_t>(call.back().v)] =
              std::min(low[static_cast<size_t>(call.back().v)], low[static_cast<size_t>(v)]);
      }
    }
  }
  return comps;
}

}  // namespace

SccOrder scc_order(const MonoC3FreeTournament& d) {
  auto comps = tarjan_sccs(d);
  int m = static_cast<int>(comps.size());
  std::vector<int> comp_of(static_cast<size_t>(d.n), -1);
  for (int c = 0; c < m; ++c)
    for (int v : comps[static_cast<size_t>(c)]) comp_of[static_cast<size_t>(v)] = c;
  // Condensation out-degrees; sinks get the smallest order indices so that
  // every inter-component arc points from a higher index to a lower one.
  std::vector<std::set<int>> cond_out(static_cast<size_t>(m));
  for (int u = 0; u < d.n; ++u)
    for (int v : d.out[static_cast<size_t>(u)]) {
      int cu = comp_of[static_cast<size_t>(u)], cv = comp_of[static_cast<size_t>(v)];
      if (cu != cv) cond_out[static_cast<size_t>(cu)].insert(cv);
    }
  std::vector<int> remaining_out(static_cast<size_t>(m));
  std::vector<std::vector<int>> cond_in(static_cast<size_t>(m));
  for (int c = 0; c < m; ++c) {
    remaining_out[static_cast<size_t>(c)] = static_cast<int>(cond_out[static_cast<size_t>(c)].size());
    for (int w : cond_out[static_cast<size_t>(c)]) cond_in[static_cast<size_t>(w)].push_back(c);
  }
  auto min_vertex = [&](int c) { return comps[static_cast<size_t>(c)].front(); };
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> ready;
  for (int c = 0; c < m; ++c)
    if (remaining_out[static_cast<size_t>(c)] == 0) ready.emplace(min_vertex(c), c);
  SccOrder order;
  std::vector<int> placed(static_cast<size_t>(m), -1);
  while (!ready.empty()) {
    auto [mv, c] = ready.top();
    ready.pop();
    placed[static_cast<size_t>(c)] = static_cast<int>(order.components.size());
    order.components.push_back(comps[static_cast<size_t>(c)]);
    for (int w : cond_in[static_cast<size_t>(c)])
      if (--remaining_out[static_cast<size_t>(w)] == 0) ready.emplace(min_vertex(w), w);
  }
  if (order.components.size() != comps.size())
    throw InternalError("condensation is cyclic");
  int p = static_cast<int>(order.components.size());
  order.domination_flags.assign(static_cast<size_t>(p), std::vector<std::uint8_t>(static_cast<size_t>(p), 0));
  for (int u = 0; u < d.n; ++u)
    for (int v : d.out[static_cast<size_t>(u)]) {
      int cu = placed[static_cast<size_t>(comp_of[static_cast<size_t>(u)])];
      int cv = placed[static_cast<size_t>(comp_of[static_cast<size_t>(v)])];
      if (cu == cv) continue;
      if (cu < cv) throw InternalError("inter-component arc against the order");
      order.domination_flags[static_cast<size_t>(cu)][static_cast<size_t>(cv)] = 1;
    }
  return order;
}

bool strongly_connected(const MonoC3FreeTournament& d) {
  return tarjan_sccs(d).size() == 1;
}

namespace {

// Lexicographically smallest Hamilton cycle through vertex 0, by subset DP.
std::optional<std::vector<int>> exhaustive_hamilton_cycle(const MonoC3FreeTournament& d) {
  int n = d.n;
  std::vector<std::vector<char>> can(static_cast<size_t>(1) << n,
                                     std::vector<char>(static_cast<size_t>(n), -1));
  // can[mask][v]: starting at v with `mask` visited, the rest can be toured
  // ending with an arc into 0.
  auto rec = [&](auto&& self, unsigned mask, int v) -> bool {
    char& memo = can[mask][static_cast<size_t>(v)];
    if (memo != -1) return memo != 0;
    bool ok;
    if (mask == (1u << n) - 1) {
      ok = d.arc(v, 0);
    } else {
      ok = false;
      for (int u = 0; u < n && !ok; ++u)
        if (!(mask & (1u << u)) && d.arc(v, u)) ok = self(self, mask | (1u << u), u);
    }
    memo = ok ? 1 : 0;
    return ok;
  };
  if (!rec(rec, 1u, 0)) return std::nullopt;
  std::vector<int> cyc{0};
  unsigned mask = 1u;
  int v = 0;
  while (mask != (1u << n) - 1) {
    for (int u = 0; u < n; ++u) {
      if ((mask & (1u << u)) || !d.arc(v, u)) continue;
      if (rec(rec, mask | (1u << u), u)) {
        cyc.push_back(u);
        mask |= 1u << u;
        v = u;
        break;
      }
    }
  }
  return cyc;
}

std::vector<int> shortest_cycle(const MonoC3FreeTournament& d) {
  int n = d.n;
  std::vector<int> best;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<size_t>(n), -1), par(static_cast<size_t>(n), -1);
    std::queue<int> q;
    dist[static_cast<size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (!best.empty() && dist[static_cast<size_t>(u)] + 1 >= static_cast<int>(best.size())) continue;
      for (int w : d.out[static_cast<size_t>(u)]) {
        if (w == s) {
          int len = dist[static_cast<size_t>(u)] + 1;
          if (best.empty() || len < static_cast<int>(best.size())) {
            std::vector<int> cyc;
            for (int x = u; x != -1; x = par[static_cast<size_t>(x)]) cyc.push_back(x);
            std::reverse(cyc.begin(), cyc.end());
            best = cyc;
          }
        } else if (dist[static_cast<size_t>(w)] == -1) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
          par[static_cast<size_t>(w)] = u;
          q.push(w);
        }
      }
    }
    if (static_cast<int>(best.size()) == 3) break;  // girth of a digraph without 2-cycles
  }
  return best;
}

}  // namespace

std::vector<int> hamilton_cycle_strong(const MonoC3FreeTournament& d) {
  int n = d.n;
  if (n < 3) throw std::invalid_argument("hamilton cycle needs >= 3 vertices");
  if (!strongly_connected(d)) throw std::invalid_argument("digraph is not strongly connected");
  std::vector<int> cyc = shortest_cycle(d);
  if (cyc.empty()) throw InternalError("strongly connected digraph without a cycle");
  std::vector<char> on(static_cast<size_t>(n), 0);
  for (int v : cyc) on[static_cast<size_t>(v)] = 1;
  while (static_cast<int>(cyc.size()) < n) {
    bool progress = false;
    int len = static_cast<int>(cyc.size());
    for (int v = 0; v < n && !progress; ++v) {
      if (on[static_cast<size_t>(v)]) continue;
      for (int i = 0; i < len; ++i) {
        int a = cyc[static_cast<size_t>(i)], b = cyc[static_cast<size_t>((i + 1) % len)];
        if (d.arc(a, v) && d.arc(v, b)) {
          cyc.insert(cyc.begin() + i + 1, v);
          on[static_cast<size_t>(v)] = 1;
          progress = true;
          break;
        }
      }
    }
    if (progress) continue;
    // Every outside vertex is one-sided w.r.t. the cycle. Strong connectivity
    // forces an arc from the all-dominated side to the all-dominating side;
    // splice that pair in one move.
    std::vector<int> doms, domd;  // dominate the whole cycle / dominated by it
    for (int v = 0; v < n; ++v) {
      if (on[static_cast<size_t>(v)]) continue;
      bool has_in = false, has_out = false;
      for (int c : cyc) {
        if (d.arc(c, v)) has_in = true;
        if (d.arc(v, c)) has_out = true;
      }
      if (has_out && !has_in) doms.push_back(v);
      if (has_in && !has_out) domd.push_back(v);
    }
    for (int b : domd) {
      for (int a : doms) {
        if (!d.arc(b, a)) continue;
        for (int i = 0; i < len; ++i) {
          int c0 = cyc[static_cast<size_t>(i)], c1 = cyc[static_cast<size_t>((i + 1) % len)];
          if (d.arc(c0, b) && d.arc(a, c1)) {
            cyc.insert(cyc.begin() + i + 1, a);
            cyc.insert(cyc.begin() + i + 1, b);
            on[static_cast<size_t>(a)] = on[static_cast<size_t>(b)] = 1;
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
    if (!progress) {
      if (n <= 12) {
        if (auto full = exhaustive_hamilton_cycle(d)) return *full;
        throw ConstructiveFailure("hamilton-cycle/none-exists",
                                  "exhaustive search found no spanning cycle");
      }
      throw ConstructiveFailure("hamilton-cycle/extension-stalled",
                                "cycle extension made no progress at size " +
                                    std::to_string(cyc.size()));
    }
  }
  return cyc;
}

std::vector<int> hamilton_path_components(const MonoC3FreeTournament& d) {
  if (d.n == 0) return {};
  SccOrder ord = scc_order(d);
  std::vector<int> path;
  for (int c = static_cast<int>(ord.components.size()) - 1; c >= 0; --c) {
    const auto& comp = ord.components[static_cast<size_t>(c)];
    std::vector<int> piece;
    if (comp.size() == 1) {
      piece = comp;
    } else if (comp.size() == 2) {
      throw ConstructiveFailure("hamilton-path/two-vertex-scc",
                                "a 2-vertex strong component cannot occur without 2-cycles");
    } else {
      auto sub = d.restrict_to(comp);
      auto cyc = hamilton_cycle_strong(sub);
      for (int& v : cyc) v = comp[static_cast<size_t>(v)];
      piece = cyc;  // rotated below
    }
    if (path.empty()) {
      if (piece.size() > 1) {
        // cut the cycle so the path starts at its smallest vertex
        auto it = std::min_element(piece.begin(), piece.end());
        std::rotate(piece.begin(), it, piece.end());
      }
      path = piece;
      continue;
    }
    int e = path.back();
    if (piece.size() == 1) {
      if (!d.arc(e, piece[0]))
        throw ConstructiveFailure("hamilton-path/stitch",
                                  "no arc from " + std::to_string(e) + " into the next component");
      path.push_back(piece[0]);
      continue;
    }
    int start = -1;
    for (int v : comp)
      if (d.arc(e, v)) {
        start = v;
        break;
      }
    if (start < 0)
      throw ConstructiveFailure("hamilton-path/stitch",
                                "no arc from " + std::to_string(e) + " into the next component");
    auto it = std::find(piece.begin(), piece.end(), start);
    std::rotate(piece.begin(), it, piece.end());
    path.insert(path.end(), piece.begin(), piece.end());
  }
  return path;
}

std::vector<int> hamilton_path(const MonoC3FreeTournament& d) {
  if (!d.tournament()) {
    for (int v = 0; v < d.n; ++v)
      if (d.out_degree(v) == 0)
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " has out-degree 0 in a non-tournament host");
  }
  return hamilton_path_components(d);
}

std::vector<int> extend_directed_path(const MonoC3FreeTournament& d, const std::vector<int>& p,
                                      int v) {
  for (int u : p)
    if (u == v) throw std::invalid_argument("vertex already on the path");
  int t = static_cast<int>(p.size());
  int j = -1;
  for (int i = 0; i < t; ++i)
    if (d.arc(v, p[static_cast<size_t>(i)])) {
      j = i;
      break;
    }
  if (j < 0) throw std::invalid_argument("no arc from the new vertex into the path");
  std::vector<int> out;
  out.reserve(p.size() + 1);
  if (j == 0) {
    out.push_back(v);
    out.insert(out.end(), p.begin(), p.end());
    return out;
  }
  // p[j] is a common out-neighbor of v and p[j-1]; they sit in different
  // parts, and minimality of j rules out v -> p[j-1], so p[j-1] -> v.
  if (!d.arc(p[static_cast<size_t>(j) - 1], v))
    throw ConstructiveFailure("extend-path/forced-arc-missing",
                              "host violates the disjoint out-neighborhood rule");
  out.insert(out.end(), p.begin(), p.begin() + j);
  out.push_back(v);
  out.insert(out.end(), p.begin() + j, p.end());
  return out;
}

std::vector<int> DirectedSpider::leg_lengths() const {
  std::vector<int> out;
  for (auto& l : legs) out.push_back(static_cast<int>(l.size()) - 1);
  return out;
}

std::optional<std::string> validate_directed_spider(const MonoC3FreeTournament& d,
                                                    const DirectedSpider& s) {
  if (s.root < 0 || s.x < 0 || s.y < 0 || s.x == s.y || s.x == s.root || s.y == s.root)
    return "root/out-neighbors not distinct";
  if (!d.arc(s.root, s.x) || !d.arc(s.root, s.y)) return "missing root out-arc";
  std::set<int> used{s.root, s.x, s.y};
  for (auto& leg : s.legs) {
    if (leg.size() < 2 || leg.back() != s.root) return "leg must end at the root";
    for (size_t i = 0; i + 1 < leg.size(); ++i) {
      if (!d.arc(leg[i], leg[i + 1])) return "missing leg arc";
      if (!used.insert(leg[i]).second) return "legs overlap";
    }
  }
  return std::nullopt;
}

namespace {

std::vector<int> map_verts(const std::vector<int>& local, const std::vector<int>& table) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(table[static_cast<size_t>(v)]);
  return out;
}

// Matching + extension step shared by both structured cases inside the sink
// component: chunks become legs a_i -> b_i -> v, get lengthened from the B
// then W pools to max(target,2), and are trimmed to their exact target.
std::vector<std::vector<int>> merge_legs(const MonoC3FreeTournament& d0, int v,
                                         const std::vector<std::vector<int>>& chunks,
                                         const std::vector<int>& targets,
                                         const std::vector<int>& pool_b,
                                         const std::vector<int>& pool_w) {
  size_t legs = chunks.size();
  std::vector<char> taken(static_cast<size_t>(d0.n), 0);
  std::vector<std::vector<int>> L(legs);
  for (size_t i = 0; i < legs; ++i) {
    int end = chunks[i].back();
    int b = -1;
    for (int cand : pool_b)
      if (!taken[static_cast<size_t>(cand)] && d0.arc(end, cand)) {
        b = cand;
        break;
      }
    if (b < 0)
      throw ConstructiveFailure("directed-spider/merge/matching",
                                "chunk end has no free arc into the in-neighborhood");
    taken[static_cast<size_t>(b)] = 1;
    L[i] = chunks[i];
    L[i].push_back(b);
    L[i].push_back(v);
    for (int u : chunks[i]) taken[static_cast<size_t>(u)] = 1;
  }
  std::vector<int> pool;
  for (int x : pool_b)
    if (!taken[static_cast<size_t>(x)]) pool.push_back(x);
  for (int x : pool_w)
    if (!taken[static_cast<size_t>(x)]) pool.push_back(x);
  size_t next = 0;
  for (size_t i = 0; i < legs; ++i) {
    int q = std::max(targets[i], 2);
    while (static_cast<int>(L[i].size()) - 1 < q) {
      if (next >= pool.size())
        throw ConstructiveFailure("directed-spider/merge/pool-exhausted",
                                  "not enough vertices to reach the leg targets");
      int x = pool[next++];
      L[i] = extend_directed_path(d0, L[i], x);
      taken[static_cast<size_t>(x)] = 1;
    }
  }
  // Suffix of exactly target+1 vertices still ends at v.
  for (size_t i = 0; i < legs; ++i)
    L[i] = std::vector<int>(L[i].end() - (targets[i] + 1), L[i].end());
  return L;
}

// Chunk sizes: each in [1, cap_i], total = budget (budget >= #legs assumed).
std::vector<int> chunk_sizes(const std::vector<int>& caps, int budget) {
  std::vector<int> s(caps.size(), 1);
  budget -= static_cast<int>(caps.size());
  for (size_t i = 0; i < caps.size() && budget > 0; ++i) {
    int add = std::min(caps[i] - 1, budget);
    s[i] += add;
    budget -= add;
  }
  return s;
}

// Spider with the positive targets embedded entirely inside a strongly
// connected component; legs with target 0 come back as {root}.
DirectedSpider embed_in_sink(const MonoC3FreeTournament& d0, const std::vector<int>& reduced) {
  int k1 = static_cast<int>(reduced.size());
  int k = k1 + 1;
  std::vector<size_t> pos;  // legs with positive reduced length
  int total = 0;
  for (size_t i = 0; i < reduced.size(); ++i) {
    total += reduced[i];
    if (reduced[i] > 0) pos.push_back(i);
  }
  int v = 0;
  for (int u = 1; u < d0.n; ++u)
    if (d0.out_degree(u) < d0.out_degree(v)) v = u;
  std::vector<int> A = d0.out[static_cast<size_t>(v)];
  std::vector<int> B;
  for (int u = 0; u < d0.n; ++u)
    if (u != v && d0.arc(u, v)) B.push_back(u);

  DirectedSpider spider;
  spider.root = v;
  spider.legs.assign(reduced.size(), {v});

  std::vector<std::vector<int>> built;
  std::vector<int> targets;
  if (static_cast<int>(B.size()) >= total) {
    // Hamilton path of B + v ending at v, cut into exact-length chunks.
    std::vector<int> path{v};
    for (int b : B) path = extend_directed_path(d0, path, b);
    size_t at = 0;
    for (size_t i : pos) {
      std::vector<int> chunk(path.begin() + at, path.begin() + at + reduced[i]);
      at += static_cast<size_t>(reduced[i]);
      if (!d0.arc(chunk.back(), v))
        throw InternalError("in-neighborhood chunk lost its arc to the root");
      chunk.push_back(v);
      spider.legs[i] = chunk;
    }
    std::vector<char> used(static_cast<size_t>(d0.n), 0);
    for (auto& l : spider.legs)
      for (int u : l) used[static_cast<size_t>(u)] = 1;
    for (int a : A)
      if (!used[static_cast<size_t>(a)]) {
        if (spider.x < 0)
          spider.x = a;
        else if (spider.y < 0) {
          spider.y = a;
          break;
        }
      }
    if (spider.y < 0)
      throw ConstructiveFailure("directed-spider/sink/no-root-outs",
                                "fewer than two unused out-neighbors of the root");
    return spider;
  }

  // Analyse the out-neighborhood. Drop one vertex if exactly one partite
  // pair sits fully inside it, so the component order below is clean.
  std::vector<char> inA(static_cast<size_t>(d0.n), 0);
  for (int a : A) inA[static_cast<size_t>(a)] = 1;
  std::vector<std::pair<int, int>> inner_pairs;
  for (auto& p : d0.parts)
    if (p.size() == 2 && inA[static_cast<size_t>(p[0])] && inA[static_cast<size_t>(p[1])])
      inner_pairs.emplace_back(std::min(p[0], p[1]), std::max(p[0], p[1]));
  std::vector<int> Ap = A;
  if (inner_pairs.size() == 1)
    Ap.erase(std::find(Ap.begin(), Ap.end(), inner_pairs[0].first));

  auto da = d0.restrict_to(Ap);
  SccOrder qs = scc_order(da);
  int t = static_cast<int>(qs.components.size());
  int j = 0, prefix = 0;
  for (; j < t; ++j) {
    prefix += static_cast<int>(qs.components[static_cast<size_t>(j)].size());
    if (prefix >= k - 1) break;
  }
  int suffix = static_cast<int>(Ap.size()) - prefix;

  std::vector<int> caps, tg;
  for (size_t i : pos) {
    caps.push_back(std::max(reduced[i] - 1, 1));
    tg.push_back(reduced[i]);
  }
  int caps_total = 0;
  for (int c : caps) caps_total += c;

  if (suffix >= k - 1) {
    // Low components carry a spanning path; high components dominate it and
    // serve as the W pool.
    std::vector<int> low;
    for (int c = 0; c <= j; ++c)
      for (int lv : qs.components[static_cast<size_t>(c)]) low.push_back(Ap[static_cast<size_t>(lv)]);
    std::sort(low.begin(), low.end());
    std::vector<int> W;
    for (int c = j + 1; c < t; ++c)
      for (int lv : qs.components[static_cast<size_t>(c)]) W.push_back(Ap[static_cast<size_t>(lv)]);
    std::sort(W.begin(), W.end());
    auto sub = d0.restrict_to(low);
    auto P = map_verts(hamilton_path_components(sub), low);
    auto sizes = static_cast<int>(P.size()) >= caps_total
                     ? caps
                     : chunk_sizes(caps, static_cast<int>(P.size()));
    std::vector<std::vector<int>> chunks;
    size_t at = 0;
    for (int s : sizes) {
      chunks.emplace_back(P.begin() + at, P.begin() + at + s);
      at += static_cast<size_t>(s);
    }
    built = merge_legs(d0, v, chunks, tg, B, W);
  } else {
    // One giant component: walk its Hamilton cycle and slide the block model
    // around it until every block end has enough arcs into B.
    std::vector<int> Qj;
    for (int lv : qs.components[static_cast<size_t>(j)]) Qj.push_back(Ap[static_cast<size_t>(lv)]);
    std::sort(Qj.begin(), Qj.end());
    auto sub = d0.restrict_to(Qj);
    auto C = map_verts(hamilton_cycle_strong(sub), Qj);
    int h = static_cast<int>(C.size());
    auto hs = caps_total <= h ? caps : chunk_sizes(caps, h);
    std::vector<char> inB(static_cast<size_t>(d0.n), 0);
    for (int b : B) inB[static_cast<size_t>(b)] = 1;
    std::vector<int> db(static_cast<size_t>(h), 0);
    for (int i = 0; i < h; ++i)
      for (int w : d0.out[static_cast<size_t>(C[static_cast<size_t>(i)])])
        if (inB[static_cast<size_t>(w)]) ++db[static_cast<size_t>(i)];
    std::vector<int> ends;
    int acc = 0;
    for (int s : hs) {
      acc += s;
      ends.push_back(acc - 1);
    }
    int rot = -1;
    for (int r = 0; r < h && rot < 0; ++r) {
      bool ok = true;
      for (int e : ends)
        if (db[static_cast<size_t>((e + r) % h)] < k - 1) {
          ok = false;
          break;
        }
      if (ok) rot = r;
    }
    if (rot < 0)
      throw ConstructiveFailure("directed-spider/sink/no-admissible-model",
                                "every block rotation has an end starved of in-neighborhood arcs");
    std::vector<std::vector<int>> chunks;
    int start = 0;
    for (int s : hs) {
      std::vector<int> chunk;
      for (int idx = start; idx < start + s; ++idx)
        chunk.push_back(C[static_cast<size_t>((idx + rot) % h)]);
      start += s;
      chunks.push_back(chunk);
    }
    built = merge_legs(d0, v, chunks, tg, B, {});
  }

  for (size_t bi = 0; bi < pos.size(); ++bi) spider.legs[pos[bi]] = built[bi];
  std::vector<char> used(static_cast<size_t>(d0.n), 0);
  used[static_cast<size_t>(v)] = 1;
  for (auto& l : spider.legs)
    for (int u : l) used[static_cast<size_t>(u)] = 1;
  for (int a : A)
    if (!used[static_cast<size_t>(a)]) {
      if (spider.x < 0)
        spider.x = a;
      else if (spider.y < 0) {
        spider.y = a;
        break;
      }
    }
  if (spider.y < 0)
    throw ConstructiveFailure("directed-spider/sink/no-root-outs",
                              "fewer than two unused out-neighbors of the root");
  return spider;
}

}  // namespace

DirectedSpider embed_directed_spider(const MonoC3FreeTournament& d,
                                     const std::vector<int>& lengths) {
  int k1 = static_cast<int>(lengths.size());
  if (k1 < 1) throw std::invalid_argument("need at least one leg");
  int total = 0;
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 1) throw std::invalid_argument("leg lengths must be >= 1");
    if (i > 0 && lengths[i] > lengths[i - 1])
      throw std::invalid_argument("leg lengths must be non-increasing");
    total += lengths[i];
  }
  int k = k1 + 1;
  for (int v = 0; v < d.n; ++v)
    if (d.out_degree(v) < 2)
      throw std::invalid_argument("out-degree < 2 at vertex " + std::to_string(v));
  if (d.n < total + 2 * k * k + 2 * k + 6)
    throw std::invalid_argument("host has fewer than sum(lengths) + 2k^2 + 2k + 6 vertices");

  SccOrder ord = scc_order(d);
  const std::vector<int>& D0 = ord.components[0];
  std::vector<char> in_d0(static_cast<size_t>(d.n), 0);
  for (int v : D0) in_d0[static_cast<size_t>(v)] = 1;
  std::vector<int> U;
  for (int v = 0; v < d.n; ++v)
    if (!in_d0[static_cast<size_t>(v)]) U.push_back(v);

  if (static_cast<int>(U.size()) >= total) {
    auto du = d.restrict_to(U);
    if (!du.tournament())
      throw ConstructiveFailure("directed-spider/outside-not-tournament",
                                "a partite pair escapes the sink component");
    auto P = map_verts(hamilton_path_components(du), U);
    DirectedSpider spider;
    spider.root = D0.front();
    size_t at = 0;
    for (int l : lengths) {
      std::vector<int> leg(P.begin() + at, P.begin() + at + l);
      at += static_cast<size_t>(l);
      if (!d.arc(leg.back(), spider.root))
        throw ConstructiveFailure("directed-spider/outside-root-arc",
                                  "chunk end does not dominate the root");
      leg.push_back(spider.root);
      spider.legs.push_back(leg);
    }
    for (int w : d.out[static_cast<size_t>(spider.root)]) {
      if (spider.x < 0)
        spider.x = w;
      else if (spider.y < 0) {
        spider.y = w;
        break;
      }
    }
    if (spider.y < 0) throw InternalError("root lost its two out-neighbors");
    if (auto bad = validate_directed_spider(d, spider))
      throw InternalError("directed spider failed validation: " + *bad);
    return spider;
  }

  // Shrink the longest legs first until the outside exactly covers the
  // difference, embed the reduced spider in the sink component, then grow
  // each leg back with outside vertices (every one of which dominates the
  // whole sink component).
  std::vector<int> reduced = lengths;
  int need = total - static_cast<int>(U.size());
  int give = total - need;
  while (give > 0) {
    size_t best = 0;
    for (size_t i = 1; i < reduced.size(); ++i)
      if (reduced[i] > reduced[best]) best = i;
    --reduced[best];
    --give;
  }
  auto d0 = d.restrict_to(D0);
  DirectedSpider inner = embed_in_sink(d0, reduced);
  DirectedSpider spider;
  spider.root = D0[static_cast<size_t>(inner.root)];
  spider.x = D0[static_cast<size_t>(inner.x)];
  spider.y = D0[static_cast<size_t>(inner.y)];
  for (auto& leg : inner.legs) spider.legs.push_back(map_verts(leg, D0));

  size_t at = 0;
  for (size_t i = 0; i < lengths.size(); ++i) {
    int r = lengths[i] - reduced[static_cast<size_t>(i)];
    if (r == 0) continue;
    std::vector<int> part(U.begin() + at, U.begin() + at + r);
    at += static_cast<size_t>(r);
    auto sub = d.restrict_to(part);
    auto h = map_verts(hamilton_path_components(sub), part);
    if (!d.arc(h.back(), spider.legs[i].front()))
      throw ConstructiveFailure("directed-spider/extend-root-arc",
                                "outside path does not dominate the leg tip");
    h.insert(h.end(), spider.legs[i].begin(), spider.legs[i].end());
    spider.legs[i] = h;
  }
  if (auto bad = validate_directed_spider(d, spider))
    throw InternalError("directed spider failed validation: " + *bad);
  return spider;
}

}  // namespace pcspan
