#include "targetrank/evaluation.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "targetrank/util.hpp"

namespace targetrank {

namespace {

EvalMetrics evaluate_indices(const SocialGraph& g, const AffinityTable& aff,
                             std::span<const std::uint32_t> selection, double tau) {
  std::vector<char> selected(g.num_nodes(), 0);
  std::size_t k = 0;
  for (auto idx : selection) {
    if (!selected[idx]) {
      selected[idx] = 1;
      ++k;
    }
  }

  EvalMetrics m;
  m.tau = tau;
  m.k = k;
  std::vector<char> counted(g.num_nodes(), 0);
  for (std::uint32_t idx = 0; idx < g.num_nodes(); ++idx) {
    if (!selected[idx]) continue;
    if (aff.at_index(idx) >= tau) ++m.direct;
    for (auto v : g.neighbor_indices(idx)) {
      if (selected[v] || counted[v]) continue;
      counted[v] = 1;
      if (aff.at_index(v) >= tau) ++m.from_neighborhoods;
    }
  }
  m.total = m.direct + m.from_neighborhoods;
  return m;
}

}  // namespace

EvalMetrics evaluate_selection(const SocialGraph& g, const AffinityTable& aff,
                               std::span<const NodeId> selection, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0))
    throw std::invalid_argument("tau must be in [0,1], got " + format_double(tau));
  if (aff.size() != g.num_nodes())
    throw std::invalid_argument("affinity table does not cover the graph");
  std::vector<std::uint32_t> indices;
  indices.reserve(selection.size());
  for (NodeId u : selection) indices.push_back(g.index_of(u));
  return evaluate_indices(g, aff, indices, tau);
}

BaselineStats random_baseline(const SocialGraph& g, const AffinityTable& aff, std::size_t k,
                              std::size_t trials, double tau, std::uint64_t seed) {
  if (!(tau >= 0.0 && tau <= 1.0))
    throw std::invalid_argument("tau must be in [0,1], got " + format_double(tau));
  if (k == 0 || k > g.num_nodes())
    throw std::invalid_argument("random baseline: k = " + std::to_string(k) +
                                " must be in [1, " + std::to_string(g.num_nodes()) + "]");
  if (trials == 0) throw std::invalid_argument("random baseline: at least one trial required");

  BaselineStats stats;
  stats.trials.resize(trials);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    auto sample = sample_without_replacement(static_cast<std::uint32_t>(g.num_nodes()),
                                             static_cast<std::uint32_t>(k), rng);
    stats.trials[t] = evaluate_indices(g, aff, sample, tau);
  }
  // accumulate in trial order so the means never depend on thread timing
  double st = 0.0, sd = 0.0, sn = 0.0;
  for (const auto& m : stats.trials) {
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

std::vector<MethodRow> compare_methods(const SocialGraph& g, const AffinityTable& aff,
                                       std::span<const double> alphas, std::size_t k,
                                       std::size_t trials, double tau, std::uint64_t seed) {
  std::vector<MethodRow> rows;
  rows.reserve(alphas.size() + 2);

  auto ranked_selection = [&](RankMethod method, double alpha) {
    auto ranking = rank_targets(score_all(g, aff, alpha), method, k);
    std::vector<NodeId> ids;
    ids.reserve(ranking.records.size());
    for (const auto& r : ranking.records) ids.push_back(r.node);
    return ids;
  };
  auto to_row = [&](std::string method, std::optional<double> alpha, const EvalMetrics& m) {
    return MethodRow{std::move(method), alpha, static_cast<double>(m.total),
                     static_cast<double>(m.direct), static_cast<double>(m.from_neighborhoods)};
  };

  auto sel = ranked_selection(RankMethod::affinity, 1.0);
  rows.push_back(to_row("affinity", std::nullopt, evaluate_selection(g, aff, sel, tau)));
  for (double alpha : alphas) {
    sel = ranked_selection(RankMethod::utility, alpha);
    rows.push_back(to_row("utility", alpha, evaluate_selection(g, aff, sel, tau)));
  }
  auto baseline = random_baseline(g, aff, k, trials, tau, seed);
  rows.push_back({"random", std::nullopt, baseline.mean_total, baseline.mean_direct,
                  baseline.mean_from_neighborhoods});
  return rows;
}

void write_report_csv(std::ostream& out, std::span<const MethodRow> rows) {
  out << "method,alpha,total,direct,from_neighborhoods\n";
  for (const auto& r : rows) {
    out << r.method << ',' << (r.alpha ? format_double(*r.alpha) : "") << ','
        << format_double(r.total) << ',' << format_double(r.direct) << ','
        << format_double(r.from_neighborhoods) << '\n';
  }
}

void print_report_table(std::ostream& out, std::span<const MethodRow> rows, int round_decimals) {
  auto fmt = [&](double v) {
    return round_decimals < 0 ? format_double(v) : format_fixed_trunc(v, round_decimals);
  };
  std::vector<std::array<std::string, 4>> cells;
  cells.push_back({"method", "total", "direct", "from_neighborhoods"});
  for (const auto& r : rows) {
    std::string name = r.method;
    if (r.alpha) name += " (alpha=" + format_double(*r.alpha) + ")";
    cells.push_back({name, fmt(r.total), fmt(r.direct), fmt(r.from_neighborhoods)});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : cells)
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < 4; ++c) {
      out << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
    }
    out << '\n';
  }
}

}  // namespace targetrank
