#include "targetrank/datagen.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <stdexcept>

#include "json.hpp"
#include "targetrank/util.hpp"

namespace targetrank {

namespace {

// share of topic words in a page text; the rest comes from the shared pool
constexpr double kTopicWordShare = 0.8;

void require_positive(std::size_t v, const char* name) {
  if (v == 0) throw std::invalid_argument(std::string("topic pool: ") + name + " must be positive");
}

void require_prob(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string("topic pool: ") + name + " must be in [0,1]");
}

}  // namespace

PagePool generate_topic_pool(const PoolParams& params) {
  require_positive(params.num_topics, "num_topics");
  require_positive(params.pages_per_topic, "pages_per_topic");
  require_positive(params.vocab_per_topic, "vocab_per_topic");
  require_positive(params.shared_vocab, "shared_vocab");
  require_positive(params.doc_length, "doc_length");
  require_prob(params.intra_topic_link_prob, "intra_topic_link_prob");
  require_prob(params.inter_topic_link_prob, "inter_topic_link_prob");

  Rng rng(params.seed);
  PagePool pool;
  pool.num_topics = params.num_topics;
  const std::size_t num_pages = params.num_topics * params.pages_per_topic;
  pool.pages.resize(num_pages);

  for (std::size_t i = 0; i < num_pages; ++i) {
    Page& page = pool.pages[i];
    page.id = static_cast<std::uint32_t>(i);
    page.topic = static_cast<std::uint32_t>(i / params.pages_per_topic);
    std::string text;
    for (std::size_t w = 0; w < params.doc_length; ++w) {
      if (w) text += ' ';
      if (rng.unit() < kTopicWordShare) {
        text += "topic" + std::to_string(page.topic) + "word" +
                std::to_string(rng.below(params.vocab_per_topic));
      } else {
        text += "common" + std::to_string(rng.below(params.shared_vocab));
      }
    }
    page.text = std::move(text);
  }

  for (std::size_t i = 0; i < num_pages; ++i) {
    for (std::size_t j = 0; j < num_pages; ++j) {
      if (i == j) continue;
      const bool same = pool.pages[i].topic == pool.pages[j].topic;
      const double p = same ? params.intra_topic_link_prob : params.inter_topic_link_prob;
      if (rng.bernoulli(p)) pool.pages[i].out_links.push_back(static_cast<std::uint32_t>(j));
    }
  }
  return pool;
}

namespace {

class PageWalk {
 public:
  PageWalk(const PagePool& pool, Rng& rng)
      : pool_(&pool), rng_(&rng), visited_(pool.pages.size(), 0), unvisited_(pool.pages.size()) {}

  void mark_visited(std::uint32_t page) {
    if (!visited_[page]) {
      visited_[page] = 1;
      --unvisited_;
    }
  }

  // Next page after `current`: first unvisited out-link, else a random
  // unvisited page of the same topic, else any unvisited page; once the
  // pool is exhausted, a random out-link (else a random same-topic page)
  // keeps the walk on related content.
  std::uint32_t advance(std::uint32_t current) {
    const Page& page = pool_->pages[current];
    if (unvisited_ > 0) {
      for (auto link : page.out_links) {
        if (!visited_[link]) return take(link);
      }
      if (auto p = random_unvisited(page.topic)) return take(*p);
      if (auto p = random_unvisited(std::nullopt)) return take(*p);
    }
    if (!page.out_links.empty())
      return page.out_links[rng_->below(page.out_links.size())];
    return random_of_topic(page.topic);
  }

 private:
  std::uint32_t take(std::uint32_t page) {
    mark_visited(page);
    return page;
  }

  std::optional<std::uint32_t> random_unvisited(std::optional<std::uint32_t> topic) {
    candidates_.clear();
    for (std::uint32_t p = 0; p < visited_.size(); ++p) {
      if (!visited_[p] && (!topic || pool_->pages[p].topic == *topic)) candidates_.push_back(p);
    }
    if (candidates_.empty()) return std::nullopt;
    return candidates_[rng_->below(candidates_.size())];
  }

  std::uint32_t random_of_topic(std::uint32_t topic) {
    candidates_.clear();
    for (std::uint32_t p = 0; p < visited_.size(); ++p)
      if (pool_->pages[p].topic == topic) candidates_.push_back(p);
    return candidates_[rng_->below(candidates_.size())];
  }

  const PagePool* pool_;
  Rng* rng_;
  std::vector<char> visited_;
  std::size_t unvisited_;
  std::vector<std::uint32_t> candidates_;
};

}  // namespace

AssignmentResult assign_contents(const SocialGraph& g, const PagePool& pool,
                                 std::size_t num_seeds, std::uint64_t seed) {
  if (pool.pages.empty()) throw std::invalid_argument("assign_contents: empty page pool");
  if (g.num_nodes() == 0) throw std::invalid_argument("assign_contents: empty graph");
  if (num_seeds == 0 || num_seeds > std::min(g.num_nodes(), pool.pages.size()))
    throw std::invalid_argument("assign_contents: num_seeds must be in [1, min(nodes, pages)]");

  const auto n = g.num_nodes();
  Rng rng(seed);
  AssignmentResult result;
  result.page_of.assign(n, UINT32_MAX);

  auto seed_indices =
      sample_without_replacement(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(num_seeds), rng);
  result.seeds.reserve(num_seeds);
  for (auto idx : seed_indices) result.seeds.push_back(g.id_of(idx));

  PageWalk walk(pool, rng);
  std::vector<char> visited(n, 0);
  std::size_t reached = 0;
  std::vector<std::uint32_t> stack;

  // every seed is paired with a distinct starting page before any walk runs;
  // seed s gets the first unused page of topic (s mod T)
  const auto per_topic = pool.pages_per_topic();
  for (std::size_t s = 0; s < seed_indices.size(); ++s) {
    const auto start =
        static_cast<std::uint32_t>((s % pool.num_topics) * per_topic + s / pool.num_topics);
    walk.mark_visited(start);
    result.page_of[seed_indices[s]] = start;
    visited[seed_indices[s]] = 1;
    ++reached;
  }

  for (const auto seed_idx : seed_indices) {
    std::uint32_t current = result.page_of[seed_idx];
    stack.clear();
    const auto seed_nbrs = g.neighbor_indices(seed_idx);
    stack.assign(seed_nbrs.rbegin(), seed_nbrs.rend());
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      if (visited[u]) continue;
      visited[u] = 1;
      ++reached;
      current = walk.advance(current);
      result.page_of[u] = current;
      const auto nbrs = g.neighbor_indices(u);
      // descending push so the smallest index is visited first
      stack.insert(stack.end(), nbrs.rbegin(), nbrs.rend());
    }
  }

  for (std::uint32_t idx = 0; idx < n; ++idx) {
    if (!visited[idx])
      result.page_of[idx] = static_cast<std::uint32_t>(rng.below(pool.pages.size()));
  }
  result.coverage = static_cast<double>(reached) / static_cast<double>(n);
  return result;
}

void emit_dataset(const SocialGraph& g, const AssignmentResult& result, const PagePool& pool,
                  const PoolParams& pool_params, std::size_t num_seeds, std::uint64_t assign_seed,
                  const DatasetFiles& files) {
  if (result.page_of.size() != g.num_nodes())
    throw std::invalid_argument("emit_dataset: assignment does not cover the graph");
  for (auto p : result.page_of)
    if (p >= pool.pages.size())
      throw std::invalid_argument("emit_dataset: assignment references a page outside the pool");

  {
    std::ofstream out(files.edges, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + files.edges.string());
    out << "# nodes: " << g.num_nodes() << " edges: " << g.num_edges() << '\n';
    g.write_edge_list(out);
  }
  {
    std::ofstream out(files.profiles, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + files.profiles.string());
    for (std::uint32_t idx = 0; idx < g.num_nodes(); ++idx) {
      nlohmann::json line = {{"id", g.id_of(idx)}, {"text", pool.pages[result.page_of[idx]].text}};
      out << line.dump() << '\n';
    }
  }
  {
    nlohmann::json manifest = {
        {"pool",
         {{"num_topics", pool_params.num_topics},
          {"pages_per_topic", pool_params.pages_per_topic},
          {"vocab_per_topic", pool_params.vocab_per_topic},
          {"shared_vocab", pool_params.shared_vocab},
          {"doc_length", pool_params.doc_length},
          {"intra_topic_link_prob", pool_params.intra_topic_link_prob},
          {"inter_topic_link_prob", pool_params.inter_topic_link_prob},
          {"seed", pool_params.seed}}},
        {"num_seeds", num_seeds},
        {"assign_seed", assign_seed},
        {"seeds", result.seeds},
        {"coverage", result.coverage},
        {"nodes", g.num_nodes()},
        {"edges", g.num_edges()},
        {"pages", pool.pages.size()}};
    std::ofstream out(files.manifest, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + files.manifest.string());
    out << manifest.dump(2) << '\n';
  }
}

}  // namespace targetrank
