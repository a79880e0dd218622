#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "targetrank/graph.hpp"

namespace targetrank {

struct Page {
  std::uint32_t id = 0;
  std::uint32_t topic = 0;
  std::string text;
  std::vector<std::uint32_t> out_links;  // directed cross-page links
};

struct PagePool {
  std::vector<Page> pages;  // grouped by topic: page i has topic i / pages_per_topic
  std::size_t num_topics = 0;

  std::size_t pages_per_topic() const { return num_topics ? pages.size() / num_topics : 0; }
};

struct PoolParams {
  std::size_t num_topics = 20;
  std::size_t pages_per_topic = 15;
  std::size_t vocab_per_topic = 40;
  std::size_t shared_vocab = 200;
  std::size_t doc_length = 150;
  double intra_topic_link_prob = 0.9;
  double inter_topic_link_prob = 0.01;
  std::uint64_t seed = 0;
};

// Synthetic stand-in for topic-focused web pages: each topic owns a disjoint
// vocabulary, page text mixes topic words with a shared background
// vocabulary, and cross-page links are Bernoulli per ordered pair with the
// intra-/inter-topic probabilities.
PagePool generate_topic_pool(const PoolParams& params);

struct AssignmentResult {
  std::vector<std::uint32_t> page_of;  // by dense node index
  std::vector<NodeId> seeds;           // in sampling order
  double coverage = 0.0;               // fraction of nodes reached by the seed walks
};

// Pairs a depth-first visit of the graph (from uniformly sampled seeds, seed
// i starting on topic i's first page) with a walk over the cross-page links,
// so that adjacent nodes tend to receive pages of the same topic. Components
// no seed reaches get uniformly sampled pages and show up as coverage < 1.
AssignmentResult assign_contents(const SocialGraph& g, const PagePool& pool,
                                 std::size_t num_seeds, std::uint64_t seed);

struct DatasetFiles {
  std::filesystem::path edges;
  std::filesystem::path profiles;
  std::filesystem::path manifest;
};

// Writes the edge-list and JSON-lines profile formats consumed by the graph
// and corpus loaders, plus a manifest recording every generation parameter.
void emit_dataset(const SocialGraph& g, const AssignmentResult& result, const PagePool& pool,
                  const PoolParams& pool_params, std::size_t num_seeds, std::uint64_t assign_seed,
                  const DatasetFiles& files);

}  // namespace targetrank
