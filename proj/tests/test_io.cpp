#include <doctest.h>

#include "helpers.hpp"
#include "pcspan/embedding.hpp"
#include "pcspan/instances.hpp"
#include "pcspan/io.hpp"
#include "pcspan/rng.hpp"

using namespace pcspan;

TEST_CASE("graph file round trip is bit exact") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(rng.below(30));
    auto g = random_mono_c3_free(n, std::max(4, n / 3), rng.next());
    std::string text = serialize_graph(g);
    auto back = parse_graph(text);
    CHECK(back.size() == g.size());
    CHECK(back.triangular() == g.triangular());
    CHECK(serialize_graph(back) == text);

    std::string json = serialize_graph(g, true);
    auto jback = parse_graph(json);
    CHECK(jback.triangular() == g.triangular());
    CHECK(serialize_graph(jback, true) == json);
  }
}

TEST_CASE("graph parser handles comments and rejects damage") {
  auto g = parse_graph("# a comment\n# another\nn 3\n0 0\n1\n");
  CHECK(g.size() == 3);
  CHECK(g.color(0, 1) == g.color(0, 2));

  CHECK_THROWS_AS(parse_graph("n 3\n0 0\n"), std::invalid_argument);        // truncated
  CHECK_THROWS_AS(parse_graph("n 3\n0 0\n1\n4\n"), std::invalid_argument);  // trailing junk
  CHECK_THROWS_AS(parse_graph("m 3\n0 0\n1\n"), std::invalid_argument);     // bad header
  CHECK_THROWS_AS(parse_graph("n 0\n"), std::invalid_argument);
}

TEST_CASE("certificate round trip and verification") {
  auto g = transitive_coloring(40);
  auto t = embed_pc_spider(g, SpiderSpec({20, 19}));
  Certificate cert;
  cert.tree = t;
  cert.is_spider = true;
  cert.spec = SpiderSpec({20, 19});
  cert.verdict = "VERIFIED";

  for (bool json : {false, true}) {
    std::string text = serialize_certificate(g, cert, json);
    auto back = parse_certificate(text);
    CHECK(back.is_spider);
    CHECK(back.spec.legs == cert.spec.legs);
    CHECK(back.tree.parent == t.parent);
    CHECK(!verify_certificate_text(g, back));
    CHECK(serialize_certificate(g, back, json) == text);
  }

  // a corrupted parent must be caught by the re-verifier
  auto bad = cert;
  int child = -1;
  for (int v = 0; v < 40; ++v)
    if (bad.tree.parent[static_cast<size_t>(v)] >= 0 && v != bad.tree.root) {
      child = v;
      break;
    }
  bad.tree.parent[static_cast<size_t>(child)] = child == 39 ? 38 : 39;
  bool broken = verify_certificate_text(g, bad).has_value() ||
                serialize_certificate(g, bad) != serialize_certificate(g, cert);
  CHECK(broken);
}

TEST_CASE("subdivision certificates carry their pattern") {
  auto g = transitive_coloring(25);
  auto pat = TreePattern::star(3);
  auto t = embed_pc_subdivision(g, pat);
  Certificate cert;
  cert.tree = t;
  cert.is_spider = false;
  cert.pattern = pat;
  cert.verdict = "VERIFIED";
  std::string text = serialize_certificate(g, cert);
  auto back = parse_certificate(text);
  CHECK(!back.is_spider);
  CHECK(back.pattern.nodes == 4);
  CHECK(!verify_certificate_text(g, back));
}

TEST_CASE("dot export is deterministic and highlights the tree") {
  auto g = transitive_coloring(8);
  auto t = embed_pc_spider(g, SpiderSpec({4, 3}));
  Certificate cert;
  cert.tree = t;
  cert.is_spider = true;
  cert.spec = SpiderSpec({4, 3});
  auto d1 = export_dot(g, &cert);
  auto d2 = export_dot(g, &cert);
  CHECK(d1 == d2);
  CHECK(d1.find("doublecircle") != std::string::npos);
  CHECK(d1.find("color=red") != std::string::npos);
  CHECK(export_dot(g).find("color=red") == std::string::npos);
}
