#pragma once

#include <string>

#include "targetrank/graph.hpp"
#include "targetrank/scoring.hpp"

namespace targetrank {

struct DotOptions {
  std::string brand_label = "brand";
  std::size_t top_n = 10;
};

// Star-plus-induced-subgraph figure: the brand in the middle, the first
// top_n ranked targets around it (dashed brand edges), and every
// social-graph edge among those targets drawn solid.
std::string export_top_targets_dot(const SocialGraph& g, const Ranking& ranking,
                                   const DotOptions& options = {});

}  // namespace targetrank
