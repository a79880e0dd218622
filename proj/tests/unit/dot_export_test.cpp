#include <string>

#include "doctest.h"
#include "targetrank/dot_export.hpp"

using namespace targetrank;

namespace {

Ranking make_ranking(std::vector<NodeId> nodes) {
  Ranking r;
  double score = 1.0;
  for (NodeId u : nodes) {
    r.records.push_back({u, score, score, score, 0.5});
    score -= 0.05;
  }
  r.k = nodes.size();
  return r;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("single target: brand plus one dashed edge") {
  auto g = SocialGraph::from_edges({{1, 2}});
  auto dot = export_top_targets_dot(g, make_ranking({1}), {"acme", 1});
  CHECK(dot.find("label=\"acme\"") != std::string::npos);
  CHECK(dot.find("brand -- n1 [style=dashed]") != std::string::npos);
  CHECK(count_occurrences(dot, "style=dashed") == 1);
  CHECK(dot.find("n1 -- ") == std::string::npos);  // no induced edges
}

TEST_CASE("adjacent targets get a solid induced edge") {
  auto g = SocialGraph::from_edges({{1, 2}, {2, 3}, {3, 4}});
  auto dot = export_top_targets_dot(g, make_ranking({1, 2, 4}), {"brand", 10});
  CHECK(dot.find("n1 -- n2;") != std::string::npos);      // 1-2 is a graph edge
  CHECK(dot.find("n1 -- n4") == std::string::npos);       // 1-4 is not
  CHECK(dot.find("n2 -- n4") == std::string::npos);
  CHECK(count_occurrences(dot, "style=dashed") == 3);     // brand to each target
}

TEST_CASE("top_n truncates the ranking") {
  auto g = SocialGraph::from_edges({{1, 2}, {2, 3}});
  auto dot = export_top_targets_dot(g, make_ranking({1, 2, 3}), {"brand", 2});
  CHECK(dot.find("n3") == std::string::npos);
  CHECK(count_occurrences(dot, "style=dashed") == 2);
}
