#pragma once

#include "targetrank/corpus.hpp"
#include "targetrank/evaluation.hpp"
#include "targetrank/graph.hpp"
#include "targetrank/scoring.hpp"

// Serial reference implementations, written independently of the parallel
// kernels and kept simple on purpose. Tests use them as oracles; the
// benchmark uses them as the single-thread baseline. Not linked into the
// CLI pipeline.
namespace targetrank::ref {

// Dense TF-IDF weights over the whole vocabulary (zeros included).
std::vector<double> dense_tfidf(const Document& doc, const Corpus& corpus);

// Cosine over dense vectors; brute force, no sparsity, no caching.
double dense_affinity(DocId user, const Corpus& corpus);

AffinityTable compute_affinities(const SocialGraph& g, const Corpus& corpus);

std::vector<ScoreRecord> score_all(const SocialGraph& g, const AffinityTable& aff, double alpha);

// Repeated max-selection instead of sorting.
Ranking rank_targets(std::vector<ScoreRecord> scores, RankMethod method, std::size_t k,
                     RankFilter filter = {});

// Set-based restatement of the metric definitions.
EvalMetrics evaluate_selection(const SocialGraph& g, const AffinityTable& aff,
                               std::span<const NodeId> selection, double tau);

BaselineStats random_baseline(const SocialGraph& g, const AffinityTable& aff, std::size_t k,
                              std::size_t trials, double tau, std::uint64_t seed);

}  // namespace targetrank::ref
