#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "targetrank/graph.hpp"
#include "targetrank/scoring.hpp"

namespace targetrank {

// Reach of one selection at threshold tau: selected nodes at or above tau
// (direct), distinct non-selected neighbors at or above tau
// (from_neighborhoods), and their sum.
struct EvalMetrics {
  std::size_t direct = 0;
  std::size_t from_neighborhoods = 0;
  std::size_t total = 0;
  double tau = 0.0;
  std::size_t k = 0;  // distinct selection size
};

EvalMetrics evaluate_selection(const SocialGraph& g, const AffinityTable& aff,
                               std::span<const NodeId> selection, double tau);

struct BaselineStats {
  double mean_total = 0.0;
  double mean_direct = 0.0;
  double mean_from_neighborhoods = 0.0;
  std::vector<EvalMetrics> trials;
};

// Each trial draws k distinct nodes uniformly; per-trial seeds are derived
// from `seed`, so parallel and serial runs are bit-identical.
BaselineStats random_baseline(const SocialGraph& g, const AffinityTable& aff, std::size_t k,
                              std::size_t trials, double tau, std::uint64_t seed);

struct MethodRow {
  std::string method;  // "affinity", "utility", "random"
  std::optional<double> alpha;
  double total = 0.0;
  double direct = 0.0;
  double from_neighborhoods = 0.0;
};

// One row per method: affinity, utility per alpha, then the random baseline.
// Rankings are unfiltered; tau applies only to the evaluation.
std::vector<MethodRow> compare_methods(const SocialGraph& g, const AffinityTable& aff,
                                       std::span<const double> alphas, std::size_t k,
                                       std::size_t trials, double tau, std::uint64_t seed);

// Header "method,alpha,total,direct,from_neighborhoods"; alpha cell empty
// where it does not apply.
void write_report_csv(std::ostream& out, std::span<const MethodRow> rows);

// Aligned human-readable table; round_decimals < 0 prints full precision.
void print_report_table(std::ostream& out, std::span<const MethodRow> rows,
                        int round_decimals = -1);

}  // namespace targetrank
