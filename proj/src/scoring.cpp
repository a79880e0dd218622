#include "targetrank/scoring.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "targetrank/util.hpp"
#include "targetrank/vectorizer.hpp"

namespace targetrank {

namespace {

void check_affinity_range(double v, NodeId node) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument("affinity for node " + std::to_string(node) +
                                " is outside [0,1]: " + format_double(v));
}

std::string join_missing(const std::vector<NodeId>& missing) {
  std::string msg;
  const std::size_t shown = std::min<std::size_t>(missing.size(), 8);
  for (std::size_t i = 0; i < shown; ++i) {
    if (i) msg += ", ";
    msg += std::to_string(missing[i]);
  }
  if (missing.size() > shown)
    msg += ", ... (" + std::to_string(missing.size() - shown) + " more)";
  return msg;
}

}  // namespace

AffinityTable::AffinityTable(const SocialGraph& g, std::vector<double> values_by_index) {
  if (values_by_index.size() != g.num_nodes())
    throw std::invalid_argument("affinity table holds " + std::to_string(values_by_index.size()) +
                                " values for a graph of " + std::to_string(g.num_nodes()) +
                                " nodes");
  for (std::size_t i = 0; i < values_by_index.size(); ++i)
    check_affinity_range(values_by_index[i], g.id_of(static_cast<std::uint32_t>(i)));
  values_ = std::move(values_by_index);
}

AffinityTable AffinityTable::from_map(const SocialGraph& g,
                                      const std::unordered_map<NodeId, double>& values) {
  std::vector<double> by_index(g.num_nodes(), 0.0);
  std::vector<NodeId> missing;
  for (std::uint32_t i = 0; i < g.num_nodes(); ++i) {
    auto it = values.find(g.id_of(i));
    if (it == values.end()) {
      missing.push_back(g.id_of(i));
      continue;
    }
    by_index[i] = it->second;
  }
  if (!missing.empty())
    throw std::invalid_argument("affinity table misses graph nodes: " + join_missing(missing));
  return AffinityTable(g, std::move(by_index));
}

AffinityTable compute_affinities(const SocialGraph& g, const Corpus& corpus) {
  std::vector<NodeId> missing;
  for (NodeId u : g.nodes())
    if (!corpus.contains(u)) missing.push_back(u);
  if (!missing.empty())
    throw std::invalid_argument("corpus has no profile for graph nodes: " + join_missing(missing));

  TfIdfModel model(corpus);
  const auto n = g.num_nodes();
  std::vector<double> by_index(n);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    by_index[i] = model.affinity(g.id_of(static_cast<std::uint32_t>(i)));
  }
  return AffinityTable(g, std::move(by_index));
}

double centrality(NodeId u, const SocialGraph& g, const AffinityTable& aff) {
  const auto idx = g.index_of(u);
  const auto nbrs = g.neighbor_indices(idx);
  if (nbrs.empty()) return 0.0;
  double sum = 0.0;
  for (auto v : nbrs) sum += aff.at_index(v);
  return sum / static_cast<double>(nbrs.size());
}

double utility(double affinity, double centrality, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must be in [0,1], got " + format_double(alpha));
  return alpha * affinity + (1.0 - alpha) * centrality;
}

std::vector<ScoreRecord> score_all(const SocialGraph& g, const AffinityTable& aff, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must be in [0,1], got " + format_double(alpha));
  if (aff.size() != g.num_nodes())
    throw std::invalid_argument("affinity table does not cover the graph");

  const auto n = g.num_nodes();
  std::vector<ScoreRecord> records(n);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::uint32_t>(i);
    const auto nbrs = g.neighbor_indices(idx);
    double cent = 0.0;
    if (!nbrs.empty()) {
      double sum = 0.0;
      for (auto v : nbrs) sum += aff.at_index(v);
      cent = sum / static_cast<double>(nbrs.size());
    }
    const double a = aff.at_index(idx);
    records[i] = {g.id_of(idx), a, cent, alpha * a + (1.0 - alpha) * cent, alpha};
  }
  return records;
}

Ranking rank_targets(std::vector<ScoreRecord> scores, RankMethod method, std::size_t k,
                     RankFilter filter) {
  if (k == 0) throw std::invalid_argument("rank_targets: k must be positive");

  switch (filter.mode) {
    case FilterMode::none:
      break;
    case FilterMode::min_affinity:
      std::erase_if(scores, [&](const ScoreRecord& r) { return r.affinity < filter.tau; });
      break;
    case FilterMode::min_utility:
      std::erase_if(scores, [&](const ScoreRecord& r) { return r.utility < filter.tau; });
      break;
  }

  auto key = [method](const ScoreRecord& r) {
    return method == RankMethod::affinity ? r.affinity : r.utility;
  };
  std::sort(scores.begin(), scores.end(), [&](const ScoreRecord& a, const ScoreRecord& b) {
    const double ka = key(a), kb = key(b);
    if (ka != kb) return ka > kb;
    return a.node < b.node;
  });
  if (scores.size() > k) scores.resize(k);

  Ranking ranking;
  ranking.records = std::move(scores);
  ranking.method = method;
  ranking.k = k;
  ranking.filter = filter;
  return ranking;
}

void write_scores_csv(std::ostream& out, std::span<const ScoreRecord> records) {
  out << "node,affinity,centrality,utility,alpha\n";
  for (const auto& r : records) {
    out << r.node << ',' << format_double(r.affinity) << ',' << format_double(r.centrality) << ','
        << format_double(r.utility) << ',' << format_double(r.alpha) << '\n';
  }
}

const char* to_string(RankMethod method) {
  return method == RankMethod::affinity ? "affinity" : "utility";
}

}  // namespace targetrank
