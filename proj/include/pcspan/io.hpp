#pragma once
#include <optional>
#include <string>

#include "pcspan/graph_core.hpp"
#include "pcspan/tree.hpp"

namespace pcspan {

// Text graph format: optional leading '#' comment lines, then "n <count>",
// then n-1 data rows; row i holds col(i, i+1..n-1). Round-trips bit-exactly
// through parse -> serialize. A JSON mirror of the same fields sits behind
// the json flag; readers sniff the leading '{'.
EdgeColoredGraph parse_graph(const std::string& text);
std::string serialize_graph(const EdgeColoredGraph& g, bool json = false);

// Self-contained tree certificate: re-verifiable against the graph file
// without the producing run.
struct Certificate {
  PcTree tree;
  bool is_spider = true;
  SpiderSpec spec;      // spider mode
  TreePattern pattern;  // subdivision mode
  std::string verdict;
};

Certificate parse_certificate(const std::string& text);
std::string serialize_certificate(const EdgeColoredGraph& g, const Certificate& c,
                                  bool json = false);

// Independent re-check of a parsed certificate: spanning tree, proper
// coloring, stored edge colors, shape, metadata.
std::optional<std::string> verify_certificate_text(const EdgeColoredGraph& g,
                                                   const Certificate& c);

// Deterministic DOT export; edges labeled with colors, certificate edges
// highlighted when given.
std::string export_dot(const EdgeColoredGraph& g, const Certificate* cert = nullptr);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pcspan
