#pragma once

#include <iosfwd>
#include <span>
#include <unordered_map>
#include <vector>

#include "targetrank/corpus.hpp"
#include "targetrank/graph.hpp"

namespace targetrank {

// Per-node affinity to the brand, stored by dense node index (one value per
// graph node, all in [0, 1]).
class AffinityTable {
 public:
  AffinityTable() = default;
  AffinityTable(const SocialGraph& g, std::vector<double> values_by_index);

  // Keys are original node ids; every graph node must be present (extra keys
  // outside the graph are ignored). Missing nodes are named in the error.
  static AffinityTable from_map(const SocialGraph& g,
                                const std::unordered_map<NodeId, double>& values);

  double at_index(std::uint32_t idx) const { return values_[idx]; }
  double at(const SocialGraph& g, NodeId u) const { return values_[g.index_of(u)]; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

// TF-IDF affinity of every graph node against the brand. Parallel over
// nodes; errors name graph nodes that have no profile in the corpus.
AffinityTable compute_affinities(const SocialGraph& g, const Corpus& corpus);

// Mean affinity of u's neighbors; 0 for isolated nodes.
double centrality(NodeId u, const SocialGraph& g, const AffinityTable& aff);

// alpha * affinity + (1 - alpha) * centrality, alpha in [0, 1].
double utility(double affinity, double centrality, double alpha);

struct ScoreRecord {
  NodeId node = 0;
  double affinity = 0.0;
  double centrality = 0.0;
  double utility = 0.0;
  double alpha = 0.0;
};

// One record per node in ascending node-id order. Parallel over nodes.
std::vector<ScoreRecord> score_all(const SocialGraph& g, const AffinityTable& aff, double alpha);

enum class RankMethod { affinity, utility };
enum class FilterMode { none, min_affinity, min_utility };

struct RankFilter {
  FilterMode mode = FilterMode::none;
  double tau = 0.0;
};

struct Ranking {
  std::vector<ScoreRecord> records;  // descending score, ties by ascending node id
  RankMethod method = RankMethod::utility;
  std::size_t k = 0;
  RankFilter filter;
};

// Optional filter first, then sort by the chosen score (descending, ties by
// ascending node id) and truncate to k. Fewer than k survivors is fine.
Ranking rank_targets(std::vector<ScoreRecord> scores, RankMethod method, std::size_t k,
                     RankFilter filter = {});

// Header "node,affinity,centrality,utility,alpha", full precision.
void write_scores_csv(std::ostream& out, std::span<const ScoreRecord> records);

const char* to_string(RankMethod method);

}  // namespace targetrank
