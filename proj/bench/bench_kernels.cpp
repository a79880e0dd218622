// Compares the OpenMP kernels against the serial reference implementations
// on a datagen workload. Usage: bench_kernels [nodes] [chords] [trials]

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "support/synthetic.hpp"
#include "targetrank/corpus.hpp"
#include "targetrank/datagen.hpp"
#include "targetrank/evaluation.hpp"
#include "targetrank/reference.hpp"
#include "targetrank/scoring.hpp"

using namespace targetrank;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

void report(const char* kernel, double serial, double parallel, double max_diff) {
  std::cout << std::left << std::setw(18) << kernel << std::right << std::fixed
            << std::setprecision(3) << std::setw(10) << serial * 1e3 << " ms" << std::setw(10)
            << parallel * 1e3 << " ms" << std::setw(8) << std::setprecision(2)
            << serial / parallel << "x   max|diff| " << std::scientific << std::setprecision(2)
            << max_diff << std::fixed << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t nodes = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20000;
  const std::size_t chords = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 3 * nodes;
  const std::size_t trials = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 100;

#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (OpenMP disabled)\n";
#endif

  auto g = testsupport::ring_with_chords(nodes, chords, 1);
  PoolParams params;
  params.vocab_per_topic = 400;  // text-sized vocabulary, so sparsity matters
  params.shared_vocab = 3000;
  params.doc_length = 200;
  params.seed = 2;
  auto pool = generate_topic_pool(params);
  auto assignment = assign_contents(g, pool, params.num_topics, 3);
  std::vector<std::pair<DocId, std::string>> profiles;
  profiles.reserve(g.num_nodes());
  for (std::uint32_t idx = 0; idx < g.num_nodes(); ++idx)
    profiles.emplace_back(g.id_of(idx), pool.pages[assignment.page_of[idx]].text);
  auto corpus = Corpus::build(profiles, pool.pages[0].text);
  std::cout << "workload: " << g.num_nodes() << " nodes, " << g.num_edges() << " edges, "
            << corpus.num_documents() << " documents, vocabulary " << corpus.vocabulary_size()
            << "\n\n";
  std::cout << std::left << std::setw(18) << "kernel" << std::right << std::setw(13) << "serial"
            << std::setw(13) << "openmp" << std::setw(9) << "speedup" << "\n";

  // TF-IDF affinity of every node against the brand
  auto t0 = clock_type::now();
  auto aff_serial = ref::compute_affinities(g, corpus);
  const double affinity_serial = seconds_since(t0);

  t0 = clock_type::now();
  auto aff_parallel = compute_affinities(g, corpus);
  const double affinity_parallel = seconds_since(t0);

  double diff = 0.0;
  for (std::uint32_t i = 0; i < g.num_nodes(); ++i)
    diff = std::max(diff, std::abs(aff_serial.at_index(i) - aff_parallel.at_index(i)));
  report("affinity", affinity_serial, affinity_parallel, diff);

  // centrality + utility over all nodes
  t0 = clock_type::now();
  auto scores_serial = ref::score_all(g, aff_parallel, 0.5);
  const double score_serial = seconds_since(t0);

  t0 = clock_type::now();
  auto scores_parallel = score_all(g, aff_parallel, 0.5);
  const double score_parallel = seconds_since(t0);

  diff = 0.0;
  for (std::size_t i = 0; i < scores_parallel.size(); ++i)
    diff = std::max(diff, std::abs(scores_serial[i].utility - scores_parallel[i].utility));
  report("score_all", score_serial, score_parallel, diff);

  // random-baseline trials
  const std::size_t k = std::min<std::size_t>(100, g.num_nodes());
  t0 = clock_type::now();
  auto base_serial = ref::random_baseline(g, aff_parallel, k, trials, 0.6, 7);
  const double baseline_serial = seconds_since(t0);

  t0 = clock_type::now();
  auto base_parallel = random_baseline(g, aff_parallel, k, trials, 0.6, 7);
  const double baseline_parallel = seconds_since(t0);

  report("random_baseline", baseline_serial, baseline_parallel,
         std::abs(base_serial.mean_total - base_parallel.mean_total));
  return 0;
}
