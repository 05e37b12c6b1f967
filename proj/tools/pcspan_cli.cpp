#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pcspan/embedding.hpp"
#include "pcspan/graph_core.hpp"
#include "pcspan/instances.hpp"
#include "pcspan/io.hpp"
#include "pcspan/pc_structures.hpp"
#include "pcspan/ramsey.hpp"
#include "pcspan/tree.hpp"

using namespace pcspan;

namespace {

// Exit contract: 0 success, 1 legitimate not-found/violation, 2 usage or
// parse error, 3 internal invariant breach.
constexpr int kOk = 0, kNotFound = 1, kUsage = 2, kInternal = 3;

std::vector<int> parse_legs(const std::string& s) {
  std::vector<int> legs;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) legs.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return legs;
}

TreePattern parse_pattern(const std::string& s) {
  if (s == "edge") return TreePattern::single_edge();
  if (s.rfind("star:", 0) == 0) return TreePattern::star(std::stoi(s.substr(5)));
  if (!s.empty() && s[0] == '@') {
    std::istringstream in(read_file(s.substr(1)));
    TreePattern p;
    int a, b, hi = -1;
    while (in >> a >> b) {
      p.edges.emplace_back(a, b);
      hi = std::max({hi, a, b});
    }
    p.nodes = hi + 1;
    p.validate();
    return p;
  }
  throw std::invalid_argument("pattern must be 'edge', 'star:K' or '@edge-list-file'");
}

int cmd_gen(const std::string& kind, int n, std::uint64_t seed, int palette,
            const std::string& out, bool json) {
  GeneratorSpec spec;
  spec.n = n;
  spec.seed = seed;
  spec.palette = palette;
  if (kind == "transitive") spec.kind = GeneratorKind::Transitive;
  else if (kind == "random") spec.kind = GeneratorKind::RandomRejection;
  else if (kind == "degenerate") spec.kind = GeneratorKind::Degenerate;
  else throw std::invalid_argument("unknown generator kind '" + kind + "'");
  EdgeColoredGraph g = generate(spec);
  write_file(out, serialize_graph(g, json));
  std::cout << "wrote " << out << ": n=" << g.size() << " palette=" << g.palette_size()
            << " mono-c3-free=" << (mono_c3_free(g) ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_check(const std::string& file) {
  EdgeColoredGraph g = parse_graph(read_file(file));
  std::cout << "n " << g.size() << "\n";
  std::cout << "palette " << g.palette_size() << "\n";
  int min_dc = g.size() ? g.size() : 0, max_mono = 0;
  for (int v = 0; v < g.size(); ++v) {
    auto p = vertex_profile(g, v);
    min_dc = std::min(min_dc, p.color_degree);
    max_mono = std::max(max_mono, p.max_mono_degree);
  }
  std::cout << "min-color-degree " << min_dc << "\n";
  std::cout << "max-mono-degree " << max_mono << "\n";
  auto tri = g.mono_triangle();
  if (tri) {
    std::cout << "mono-triangle " << (*tri)[0] << " " << (*tri)[1] << " " << (*tri)[2] << "\n";
  } else {
    std::cout << "mono-C3-free\n";
  }
  auto b = find_nice_bowtie(g);
  std::cout << "nice-bowtie " << (b ? "yes" : "no") << "\n";
  return tri ? kNotFound : kOk;
}

int write_and_verify(const EdgeColoredGraph& g, Certificate& cert, const std::string& out,
                     bool json) {
  cert.verdict = "VERIFIED";
  write_file(out, serialize_certificate(g, cert, json));
  Certificate back = parse_certificate(read_file(out));
  if (auto bad = verify_certificate_text(g, back)) {
    std::cerr << "certificate re-verification failed: " << *bad << "\n";
    return kInternal;
  }
  std::cout << "wrote " << out << " (verified)\n";
  return kOk;
}

int cmd_spider(const std::string& file, const std::string& legs, const std::string& out,
               bool json) {
  EdgeColoredGraph g = parse_graph(read_file(file));
  SpiderSpec spec(parse_legs(legs));
  PcTree t = embed_pc_spider(g, spec);
  Certificate cert;
  cert.tree = t;
  cert.is_spider = true;
  cert.spec = spec;
  return write_and_verify(g, cert, out, json);
}

int cmd_subdivide(const std::string& file, const std::string& pattern_arg, const std::string& out,
                  bool json) {
  EdgeColoredGraph g = parse_graph(read_file(file));
  TreePattern pattern = parse_pattern(pattern_arg);
  PcTree t = embed_pc_subdivision(g, pattern);
  Certificate cert;
  cert.tree = t;
  cert.is_spider = false;
  cert.pattern = pattern;
  return write_and_verify(g, cert, out, json);
}

int cmd_ramsey(int k, int max_n, std::uint64_t budget, const std::string& out, bool json) {
  RamseyResult r = compute_constraint_ramsey(k, max_n, budget);
  if (r.exact) {
    std::cout << "g(S_" << k << ",C_3) = " << r.value << " (exact, N=" << r.value + 1
              << " exhaustively refuted)\n";
  } else {
    std::cout << "g(S_" << k << ",C_3) in [" << r.value << ", " << r.upper_bound
              << "] (budget or cap reached)\n";
  }
  std::cout << "bound-check value < (k+1)!: " << (r.value < r.upper_bound + 1 ? "ok" : "violated")
            << "\n";
  std::cerr << "nodes " << r.nodes << " millis " << r.millis << "\n";
  if (!out.empty()) {
    write_file(out, serialize_graph(r.witness, json));
    std::cout << "witness " << out << "\n";
  }
  return r.exact ? kOk : kNotFound;
}

int cmd_oracle(const std::string& file, const std::string& legs, int limit) {
  EdgeColoredGraph g = parse_graph(read_file(file));
  SpiderSpec spec(parse_legs(legs));
  auto t = brute_force_pc_spider(g, spec, limit);
  if (!t) {
    std::cout << "no spanning spider with these legs (search exhausted)\n";
    return kNotFound;
  }
  std::cout << "found: center " << t->root << "\n";
  for (auto [child, par] : t->edge_list())
    std::cout << "edge " << child << " " << par << " " << g.color(child, par) << " "
              << t->piece[static_cast<size_t>(child)] << "\n";
  return kOk;
}

int cmd_export_dot(const std::string& file, const std::string& cert_file, const std::string& out) {
  EdgeColoredGraph g = parse_graph(read_file(file));
  std::string dot;
  if (cert_file.empty()) {
    dot = export_dot(g);
  } else {
    Certificate cert = parse_certificate(read_file(cert_file));
    if (auto bad = verify_certificate_text(g, cert)) {
      std::cerr << "certificate does not verify against this graph: " << *bad << "\n";
      return kNotFound;
    }
    dot = export_dot(g, &cert);
  }
  write_file(out, dot);
  std::cout << "wrote " << out << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"properly colored spanning spiders and tree subdivisions in edge-colored "
               "complete graphs without monochromatic triangles"};
  app.require_subcommand(1);
  int nthreads = 1;
  app.add_option("--threads", nthreads, "worker threads for the Ramsey search and scans");
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of the text formats");

  auto* gen = app.add_subcommand("gen", "generate an instance");
  std::string kind = "transitive", out = "out.graph";
  int n = 10, palette = 8, k = 3, max_n = 12, limit = 9;
  std::uint64_t seed = 0, budget = 200'000'000ULL;
  gen->add_option("--kind", kind, "transitive | random | degenerate")->required();
  gen->add_option("--n", n)->required();
  gen->add_option("--seed", seed);
  gen->add_option("--palette", palette);
  gen->add_option("-o,--out", out)->required();

  auto* check = app.add_subcommand("check", "validate a graph file and report its profile");
  std::string file;
  check->add_option("file", file)->required();

  auto* spider = app.add_subcommand("spider", "build a spanning properly colored spider");
  std::string legs;
  spider->add_option("file", file)->required();
  spider->add_option("--legs", legs, "comma list, e.g. 200,60,40")->required();
  spider->add_option("-o,--out", out)->required();

  auto* subdivide = app.add_subcommand("subdivide", "build a spanning properly colored subdivision");
  std::string pattern = "edge";
  subdivide->add_option("file", file)->required();
  subdivide->add_option("--pattern", pattern, "edge | star:K | @edge-list-file")->required();
  subdivide->add_option("-o,--out", out)->required();

  auto* ramsey = app.add_subcommand("ramsey", "exact small-k constraint Ramsey search");
  ramsey->add_option("--k", k)->required();
  ramsey->add_option("--max-n", max_n);
  ramsey->add_option("--budget", budget, "search node budget");
  std::string witness_out;
  ramsey->add_option("-o,--out", witness_out, "witness coloring file");

  auto* oracle = app.add_subcommand("oracle", "exhaustive spider search (small n)");
  oracle->add_option("file", file)->required();
  oracle->add_option("--legs", legs)->required();
  oracle->add_option("--limit", limit);

  auto* exdot = app.add_subcommand("export-dot", "DOT export, optionally highlighting a certificate");
  std::string cert_file;
  exdot->add_option("file", file)->required();
  exdot->add_option("--cert", cert_file);
  exdot->add_option("-o,--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  set_threads(nthreads);
  try {
    if (gen->parsed()) return cmd_gen(kind, n, seed, palette, out, json);
    if (check->parsed()) return cmd_check(file);
    if (spider->parsed()) return cmd_spider(file, legs, out, json);
    if (subdivide->parsed()) return cmd_subdivide(file, pattern, out, json);
    if (ramsey->parsed()) return cmd_ramsey(k, max_n, budget, witness_out, json);
    if (oracle->parsed()) return cmd_oracle(file, legs, limit);
    if (exdot->parsed()) return cmd_export_dot(file, cert_file, out);
  } catch (const ConstructiveFailure& e) {
    std::cerr << "failed at step " << e.step << ": " << e.what() << "\n";
    return kNotFound;
  } catch (const MonoTriangleError& e) {
    std::cerr << "host is not mono-C3-free: " << e.what() << "\n";
    return kNotFound;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
