#include "pcspan/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pcspan {

namespace {

std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    out << line << '\n';
  }
  return out.str();
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{';
  }
  return false;
}

}  // namespace

EdgeColoredGraph parse_graph(const std::string& text) {
  if (looks_like_json(text)) {
    auto j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<long long> raw;
    for (auto& row : j.at("colors"))
      for (auto& c : row) raw.push_back(c.get<long long>());
    return EdgeColoredGraph::from_triangular(n, raw);
  }
  std::istringstream in(strip_comments(text));
  std::string tag;
  int n = 0;
  if (!(in >> tag >> n) || tag != "n" || n < 1)
    throw std::invalid_argument("graph file must start with 'n <count>'");
  std::vector<long long> raw;
  raw.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n; ++j) {
      long long c;
      if (!(in >> c)) throw std::invalid_argument("graph file truncated in row " + std::to_string(i));
      raw.push_back(c);
    }
  long long extra;
  if (in >> extra) throw std::invalid_argument("trailing data after the color rows");
  return EdgeColoredGraph::from_triangular(n, raw);
}

std::string serialize_graph(const EdgeColoredGraph& g, bool json) {
  int n = g.size();
  if (json) {
    nlohmann::json j;
    j["n"] = n;
    auto rows = nlohmann::json::array();
    for (int i = 0; i < n - 1; ++i) {
      auto row = nlohmann::json::array();
      for (int k = i + 1; k < n; ++k) row.push_back(g.color(i, k));
      rows.push_back(row);
    }
    j["colors"] = rows;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "n " << n << '\n';
  for (int i = 0; i < n - 1; ++i) {
    for (int k = i + 1; k < n; ++k) out << g.color(i, k) << (k + 1 < n ? ' ' : '\n');
  }
  return out.str();
}

namespace {

Certificate certificate_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Certificate c;
  c.is_spider = j.at("kind").get<std::string>() == "spider";
  c.tree.kind = c.is_spider ? TreeKind::Spider : TreeKind::Subdivision;
  c.tree.n = j.at("n").get<int>();
  c.tree.root = j.at("root").get<int>();
  c.tree.parent.assign(static_cast<size_t>(c.tree.n), -2);
  c.tree.piece.assign(static_cast<size_t>(c.tree.n), -1);
  c.tree.parent[static_cast<size_t>(c.tree.root)] = -1;
  for (auto& e : j.at("edges")) {
    int child = e.at(0).get<int>(), par = e.at(1).get<int>(), pc = e.at(3).get<int>();
    c.tree.parent[static_cast<size_t>(child)] = par;
    c.tree.piece[static_cast<size_t>(child)] = pc;
  }
  if (c.is_spider) {
    c.spec = SpiderSpec(j.at("lengths").get<std::vector<int>>());
  } else {
    c.pattern.nodes = j.at("pattern_nodes").get<int>();
    for (auto& e : j.at("pattern_edges")) c.pattern.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  c.verdict = j.value("verdict", "");
  return c;
}

}  // namespace

Certificate parse_certificate(const std::string& text) {
  if (looks_like_json(text)) return certificate_from_json(text);
  std::istringstream in(strip_comments(text));
  Certificate c;
  std::string tag;
  int n = -1;
  std::vector<std::array<int, 4>> edges;
  std::vector<int> lengths;
  int pat_nodes = 0;
  std::vector<std::pair<int, int>> pat_edges;
  std::string kind;
  int root = -1;
  while (in >> tag) {
    if (tag == "kind") {
      in >> kind;
    } else if (tag == "n") {
      in >> n;
    } else if (tag == "root") {
      in >> root;
    } else if (tag == "lengths") {
      int k;
      in >> k;
      lengths.resize(static_cast<size_t>(k));
      for (int& l : lengths) in >> l;
    } else if (tag == "pattern") {
      int e;
      in >> pat_nodes >> e;
    } else if (tag == "p") {
      int a, b;
      in >> a >> b;
      pat_edges.emplace_back(a, b);
    } else if (tag == "edge") {
      std::array<int, 4> e{};
      in >> e[0] >> e[1] >> e[2] >> e[3];
      edges.push_back(e);
    } else if (tag == "verdict") {
      in >> c.verdict;
    } else {
      throw std::invalid_argument("unknown certificate tag '" + tag + "'");
    }
  }
  if (!in.eof() && in.fail()) throw std::invalid_argument("certificate file truncated");
  if (n < 1 || root < 0 || kind.empty()) throw std::invalid_argument("certificate misses header fields");
  c.is_spider = kind == "spider";
  c.tree.kind = c.is_spider ? TreeKind::Spider : TreeKind::Subdivision;
  c.tree.n = n;
  c.tree.root = root;
  c.tree.parent.assign(static_cast<size_t>(n), -2);
  c.tree.piece.assign(static_cast<size_t>(n), -1);
  c.tree.parent[static_cast<size_t>(root)] = -1;
  for (auto& e : edges) {
    if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n)
      throw std::invalid_argument("certificate edge out of range");
    c.tree.parent[static_cast<size_t>(e[0])] = e[1];
    c.tree.piece[static_cast<size_t>(e[0])] = e[3];
  }
  if (c.is_spider) {
    if (lengths.empty()) throw std::invalid_argument("spider certificate misses lengths");
    c.spec = SpiderSpec(lengths);
  } else {
    if (pat_nodes < 1) throw std::invalid_argument("subdivision certificate misses its pattern");
    c.pattern.nodes = pat_nodes;
    c.pattern.edges = pat_edges;
  }
  return c;
}

std::string serialize_certificate(const EdgeColoredGraph& g, const Certificate& c, bool json) {
  const PcTree& t = c.tree;
  if (json) {
    nlohmann::json j;
    j["kind"] = c.is_spider ? "spider" : "subdivision";
    j["n"] = t.n;
    j["root"] = t.root;
    if (c.is_spider) {
      j["lengths"] = c.spec.legs;
    } else {
      j["pattern_nodes"] = c.pattern.nodes;
      auto pe = nlohmann::json::array();
      for (auto [a, b] : c.pattern.edges) pe.push_back({a, b});
      j["pattern_edges"] = pe;
    }
    auto edges = nlohmann::json::array();
    for (int v = 0; v < t.n; ++v)
      if (t.parent[static_cast<size_t>(v)] >= 0)
        edges.push_back({v, t.parent[static_cast<size_t>(v)], g.color(v, t.parent[static_cast<size_t>(v)]),
                         t.piece[static_cast<size_t>(v)]});
    j["edges"] = edges;
    j["verdict"] = c.verdict;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "# pcspan certificate\n";
  out << "kind " << (c.is_spider ? "spider" : "subdivision") << '\n';
  out << "n " << t.n << '\n';
  out << "root " << t.root << '\n';
  if (c.is_spider) {
    out << "lengths " << c.spec.k();
    for (int l : c.spec.legs) out << ' ' << l;
    out << '\n';
  } else {
    out << "pattern " << c.pattern.nodes << ' ' << c.pattern.edge_count() << '\n';
    for (auto [a, b] : c.pattern.edges) out << "p " << a << ' ' << b << '\n';
  }
  for (int v = 0; v < t.n; ++v)
    if (t.parent[static_cast<size_t>(v)] >= 0)
      out << "edge " << v << ' ' << t.parent[static_cast<size_t>(v)] << ' '
          << g.color(v, t.parent[static_cast<size_t>(v)]) << ' ' << t.piece[static_cast<size_t>(v)]
          << '\n';
  out << "verdict " << c.verdict << '\n';
  return out.str();
}

std::optional<std::string> verify_certificate_text(const EdgeColoredGraph& g,
                                                   const Certificate& c) {
  if (c.tree.n != g.size()) return "certificate and graph disagree on n";
  if (c.is_spider) return verify_certificate(g, c.tree, c.spec, true);
  return verify_certificate(g, c.tree, c.pattern, true);
}

std::string export_dot(const EdgeColoredGraph& g, const Certificate* cert) {
  std::ostringstream out;
  out << "graph pcspan {\n  node [shape=circle];\n";
  std::vector<char> in_tree;
  if (cert) {
    in_tree.assign(static_cast<size_t>(g.size()) * g.size(), 0);
    for (int v = 0; v < cert->tree.n; ++v) {
      int p = cert->tree.parent[static_cast<size_t>(v)];
      if (p >= 0) {
        in_tree[static_cast<size_t>(std::min(v, p)) * g.size() + std::max(v, p)] = 1;
      }
    }
    out << "  " << cert->tree.root << " [shape=doublecircle];\n";
  }
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v) {
      out << "  " << u << " -- " << v << " [label=\"" << g.color(u, v) << "\"";
      if (cert && in_tree[static_cast<size_t>(u) * g.size() + v])
        out << ", color=red, penwidth=2.0";
      out << "];\n";
    }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

}  // namespace pcspan
