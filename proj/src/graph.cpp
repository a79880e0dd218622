#include "targetrank/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace targetrank {

namespace {

// strict integer parse of one whitespace-trimmed token
bool parse_node_id(std::string_view tok, NodeId& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

SocialGraph SocialGraph::load_edge_list(std::istream& in) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::size_t dropped = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;

    std::string_view rest(line.data() + start, line.size() - start);
    NodeId pair[2];
    for (int i = 0; i < 2; ++i) {
      std::size_t end = rest.find_first_of(" \t\r");
      std::string_view tok = rest.substr(0, end);
      if (tok.empty() || !parse_node_id(tok, pair[i]) || pair[i] < 0)
        throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                 ": expected two non-negative integers, got \"" + line + "\"");
      rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
      std::size_t next = rest.find_first_not_of(" \t\r");
      rest = next == std::string_view::npos ? std::string_view{} : rest.substr(next);
    }
    if (!rest.empty())
      throw std::runtime_error("edge list line " + std::to_string(lineno) +
                               ": trailing data \"" + std::string(rest) + "\"");
    if (pair[0] == pair[1]) {
      ++dropped;
      continue;
    }
    edges.emplace_back(pair[0], pair[1]);
  }
  return build(std::move(edges), {}, dropped);
}

SocialGraph SocialGraph::load_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return load_edge_list(in);
}

SocialGraph SocialGraph::from_edges(std::vector<std::pair<NodeId, NodeId>> edges,
                                    std::vector<NodeId> isolated) {
  std::size_t dropped = 0;
  std::erase_if(edges, [&](const auto& e) {
    if (e.first == e.second) {
      ++dropped;
      return true;
    }
    return false;
  });
  for (const auto& [u, v] : edges)
    if (u < 0 || v < 0) throw std::invalid_argument("graph: negative node id");
  for (NodeId u : isolated)
    if (u < 0) throw std::invalid_argument("graph: negative node id");
  return build(std::move(edges), std::move(isolated), dropped);
}

SocialGraph SocialGraph::build(std::vector<std::pair<NodeId, NodeId>>&& edges,
                               std::vector<NodeId>&& extra_nodes, std::size_t dropped_loops) {
  // normalize to (min, max), drop duplicates
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  SocialGraph g;
  g.dropped_self_loops_ = dropped_loops;
  g.num_edges_ = edges.size();

  g.ids_ = std::move(extra_nodes);
  g.ids_.reserve(g.ids_.size() + edges.size() * 2);
  for (const auto& [u, v] : edges) {
    g.ids_.push_back(u);
    g.ids_.push_back(v);
  }
  std::sort(g.ids_.begin(), g.ids_.end());
  g.ids_.erase(std::unique(g.ids_.begin(), g.ids_.end()), g.ids_.end());

  const auto n = g.ids_.size();
  g.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) g.index_.emplace(g.ids_[i], static_cast<std::uint32_t>(i));

  std::vector<std::uint64_t> deg(n, 0);
  for (const auto& [u, v] : edges) {
    ++deg[g.index_.at(u)];
    ++deg[g.index_.at(v)];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
  g.adj_.resize(g.offsets_[n]);
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    auto iu = g.index_.at(u), iv = g.index_.at(v);
    g.adj_[cursor[iu]++] = iv;
    g.adj_[cursor[iv]++] = iu;
  }
  for (std::size_t i = 0; i < n; ++i)
    std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
  return g;
}

std::uint32_t SocialGraph::index_of(NodeId u) const {
  auto it = index_.find(u);
  if (it == index_.end())
    throw std::invalid_argument("graph: unknown node " + std::to_string(u));
  return it->second;
}

std::vector<NodeId> SocialGraph::neighbors(NodeId u) const {
  std::vector<NodeId> out;
  for (auto idx : neighbor_indices(index_of(u))) out.push_back(ids_[idx]);
  return out;
}

void SocialGraph::write_edge_list(std::ostream& out) const {
  for (std::uint32_t i = 0; i < num_nodes(); ++i) {
    for (auto j : neighbor_indices(i)) {
      if (j > i) out << ids_[i] << ' ' << ids_[j] << '\n';
    }
  }
}

}  // namespace targetrank
