#include "targetrank/reference.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "targetrank/util.hpp"

namespace targetrank::ref {

std::vector<double> dense_tfidf(const Document& doc, const Corpus& corpus) {
  const auto vocab = corpus.vocabulary_size();
  std::vector<double> weights(vocab, 0.0);
  if (doc.is_empty()) return weights;
  std::vector<double> counts(vocab, 0.0);
  for (TermId t : doc.tokens) counts[t] += 1.0;
  const auto m = static_cast<double>(corpus.num_documents());
  const auto len = static_cast<double>(doc.token_count());
  for (TermId t = 0; t < vocab; ++t) {
    if (counts[t] == 0.0) continue;
    weights[t] = (counts[t] / len) * std::log(m / static_cast<double>(corpus.doc_frequency(t)));
  }
  return weights;
}

double dense_affinity(DocId user, const Corpus& corpus) {
  const auto vu = dense_tfidf(corpus.document(user), corpus);
  const auto vb = dense_tfidf(corpus.brand(), corpus);
  double dot = 0.0, nu = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < vu.size(); ++i) {
    dot += vu[i] * vb[i];
    nu += vu[i] * vu[i];
    nb += vb[i] * vb[i];
  }
  if (nu == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(nu) * std::sqrt(nb));
}

AffinityTable compute_affinities(const SocialGraph& g, const Corpus& corpus) {
  const auto vb = dense_tfidf(corpus.brand(), corpus);
  double nb = 0.0;
  for (double w : vb) nb += w * w;
  nb = std::sqrt(nb);

  std::vector<double> by_index(g.num_nodes(), 0.0);
  for (std::uint32_t i = 0; i < g.num_nodes(); ++i) {
    const auto vu = dense_tfidf(corpus.document(g.id_of(i)), corpus);
    double dot = 0.0, nu = 0.0;
    for (std::size_t t = 0; t < vu.size(); ++t) {
      dot += vu[t] * vb[t];
      nu += vu[t] * vu[t];
    }
    by_index[i] = (nu == 0.0 || nb == 0.0) ? 0.0 : std::clamp(dot / (std::sqrt(nu) * nb), 0.0, 1.0);
  }
  return AffinityTable(g, std::move(by_index));
}

std::vector<ScoreRecord> score_all(const SocialGraph& g, const AffinityTable& aff, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must be in [0,1]");
  std::vector<ScoreRecord> out;
  out.reserve(g.num_nodes());
  for (NodeId u : g.nodes()) {
    double sum = 0.0;
    const auto nbrs = g.neighbors(u);
    for (NodeId v : nbrs) sum += aff.at(g, v);
    const double cent = nbrs.empty() ? 0.0 : sum / static_cast<double>(nbrs.size());
    const double a = aff.at(g, u);
    out.push_back({u, a, cent, alpha * a + (1.0 - alpha) * cent, alpha});
  }
  return out;
}

Ranking rank_targets(std::vector<ScoreRecord> scores, RankMethod method, std::size_t k,
                     RankFilter filter) {
  if (k == 0) throw std::invalid_argument("rank_targets: k must be positive");
  std::vector<ScoreRecord> pool;
  for (const auto& r : scores) {
    if (filter.mode == FilterMode::min_affinity && r.affinity < filter.tau) continue;
    if (filter.mode == FilterMode::min_utility && r.utility < filter.tau) continue;
    pool.push_back(r);
  }
  auto key = [&](const ScoreRecord& r) {
    return method == RankMethod::affinity ? r.affinity : r.utility;
  };

  Ranking ranking;
  ranking.method = method;
  ranking.k = k;
  ranking.filter = filter;
  while (!pool.empty() && ranking.records.size() < k) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pool.size(); ++i) {
      if (key(pool[i]) > key(pool[best]) ||
          (key(pool[i]) == key(pool[best]) && pool[i].node < pool[best].node))
        best = i;
    }
    ranking.records.push_back(pool[best]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return ranking;
}

EvalMetrics evaluate_selection(const SocialGraph& g, const AffinityTable& aff,
                               std::span<const NodeId> selection, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument("tau must be in [0,1]");
  std::set<NodeId> sel(selection.begin(), selection.end());
  std::set<NodeId> neighborhood;
  for (NodeId u : sel) {
    for (NodeId v : g.neighbors(u)) {
      if (!sel.count(v)) neighborhood.insert(v);
    }
  }
  EvalMetrics m;
  m.tau = tau;
  m.k = sel.size();
  for (NodeId u : sel)
    if (aff.at(g, u) >= tau) ++m.direct;
  for (NodeId v : neighborhood)
    if (aff.at(g, v) >= tau) ++m.from_neighborhoods;
  m.total = m.direct + m.from_neighborhoods;
  return m;
}

BaselineStats random_baseline(const SocialGraph& g, const AffinityTable& aff, std::size_t k,
                              std::size_t trials, double tau, std::uint64_t seed) {
  if (k == 0 || k > g.num_nodes() || trials == 0)
    throw std::invalid_argument("random baseline: bad k or trials");
  BaselineStats stats;
  stats.trials.reserve(trials);
  double st = 0.0, sd = 0.0, sn = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    auto sample = sample_without_replacement(static_cast<std::uint32_t>(g.num_nodes()),
                                             static_cast<std::uint32_t>(k), rng);
    std::vector<NodeId> ids;
    ids.reserve(sample.size());
    for (auto idx : sample) ids.push_back(g.id_of(idx));
    auto m = ref::evaluate_selection(g, aff, ids, tau);
    stats.trials.push_back(m);
    st += static_cast<double>(m.total);
    sd += static_cast<double>(m.direct);
    sn += static_cast<double>(m.from_neighborhoods);
  }
  const auto nt = static_cast<double>(trials);
  stats.mean_total = st / nt;
  stats.mean_direct = sd / nt;
  stats.mean_from_neighborhoods = sn / nt;
  return stats;
}

}  // namespace targetrank::ref
