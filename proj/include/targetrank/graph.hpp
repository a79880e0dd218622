#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace targetrank {

using NodeId = std::int64_t;

// Undirected social-network topology. Node ids are arbitrary non-negative
// integers; internally they are remapped to dense indices (ascending id
// order) for array-based adjacency. Immutable after construction.
class SocialGraph {
 public:
  SocialGraph() = default;

  // SNAP-style edge list: whitespace-separated integer pairs, '#' comment
  // lines ignored, duplicate and reversed edges collapsed, self-loops
  // dropped (counted). Malformed lines raise with their line number.
  static SocialGraph load_edge_list(std::istream& in);
  static SocialGraph load_edge_list_file(const std::filesystem::path& path);

  // Direct construction; `isolated` adds degree-0 nodes an edge list cannot
  // express.
  static SocialGraph from_edges(std::vector<std::pair<NodeId, NodeId>> edges,
                                std::vector<NodeId> isolated = {});

  std::size_t num_nodes() const { return ids_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  std::size_t dropped_self_loops() const { return dropped_self_loops_; }

  const std::vector<NodeId>& nodes() const { return ids_; }  // ascending
  bool has_node(NodeId u) const { return index_.count(u) != 0; }
  std::uint32_t index_of(NodeId u) const;  // throws on unknown node
  NodeId id_of(std::uint32_t idx) const { return ids_[idx]; }

  std::span<const std::uint32_t> neighbor_indices(std::uint32_t idx) const {
    return {adj_.data() + offsets_[idx], adj_.data() + offsets_[idx + 1]};
  }
  std::vector<NodeId> neighbors(NodeId u) const;  // ascending ids
  std::size_t degree(NodeId u) const { return degree_at(index_of(u)); }
  std::size_t degree_at(std::uint32_t idx) const { return offsets_[idx + 1] - offsets_[idx]; }

  // Canonical re-export: one edge per line, smaller id first, ascending.
  void write_edge_list(std::ostream& out) const;

  friend bool operator==(const SocialGraph& a, const SocialGraph& b) {
    return a.ids_ == b.ids_ && a.offsets_ == b.offsets_ && a.adj_ == b.adj_;
  }

 private:
  static SocialGraph build(std::vector<std::pair<NodeId, NodeId>>&& edges,
                           std::vector<NodeId>&& extra_nodes, std::size_t dropped_loops);

  std::vector<NodeId> ids_;
  std::unordered_map<NodeId, std::uint32_t> index_;
  std::vector<std::uint64_t> offsets_;  // CSR, size num_nodes + 1
  std::vector<std::uint32_t> adj_;      // sorted neighbor indices
  std::size_t num_edges_ = 0;
  std::size_t dropped_self_loops_ = 0;
};

}  // namespace targetrank
