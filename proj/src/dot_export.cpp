#include "targetrank/dot_export.hpp"

#include <algorithm>
#include <sstream>

namespace targetrank {

std::string export_top_targets_dot(const SocialGraph& g, const Ranking& ranking,
                                   const DotOptions& options) {
  std::vector<NodeId> targets;
  for (const auto& r : ranking.records) {
    if (targets.size() >= options.top_n) break;
    targets.push_back(r.node);
  }

  std::ostringstream out;
  out << "graph targets {\n";
  out << "  layout=circo;\n";
  out << "  brand [label=\"" << options.brand_label << "\", shape=box, style=filled, fillcolor=lightgrey, root=true];\n";
  for (NodeId u : targets) out << "  n" << u << " [label=\"" << u << "\"];\n";
  for (NodeId u : targets) out << "  brand -- n" << u << " [style=dashed];\n";
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto nbrs = g.neighbors(targets[i]);
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      if (std::binary_search(nbrs.begin(), nbrs.end(), targets[j]))
        out << "  n" << targets[i] << " -- n" << targets[j] << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace targetrank
