#include <sstream>

#include "doctest.h"
#include "support/synthetic.hpp"
#include "targetrank/evaluation.hpp"
#include "targetrank/reference.hpp"
#include "targetrank/util.hpp"

using namespace targetrank;
using testsupport::random_affinities;
using testsupport::random_graph;

TEST_CASE("evaluate_selection on the hand-worked path") {
  auto g = SocialGraph::from_edges({{1, 2}, {2, 3}});
  auto aff = AffinityTable::from_map(g, {{1, 0.9}, {2, 0.1}, {3, 0.9}});

  auto m = evaluate_selection(g, aff, std::vector<NodeId>{2}, 0.6);
  CHECK(m.direct == 0);
  CHECK(m.from_neighborhoods == 2);
  CHECK(m.total == 2);
  CHECK(m.k == 1);

  auto empty = evaluate_selection(g, aff, std::vector<NodeId>{}, 0.6);
  CHECK(empty.direct == 0);
  CHECK(empty.from_neighborhoods == 0);
  CHECK(empty.total == 0);

  auto all = evaluate_selection(g, aff, g.nodes(), 0.6);
  CHECK(all.from_neighborhoods == 0);  // nothing outside the selection
  CHECK(all.direct == 2);
  CHECK(all.total == 2);
}

TEST_CASE("evaluate_selection validates inputs and dedupes") {
  auto g = SocialGraph::from_edges({{1, 2}});
  auto aff = AffinityTable::from_map(g, {{1, 0.9}, {2, 0.1}});
  CHECK_THROWS_AS(evaluate_selection(g, aff, std::vector<NodeId>{9}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_selection(g, aff, std::vector<NodeId>{1}, 1.5), std::invalid_argument);

  auto dup = evaluate_selection(g, aff, std::vector<NodeId>{1, 1, 1}, 0.5);
  CHECK(dup.k == 1);
  CHECK(dup.direct == 1);
}

TEST_CASE("metric identity and tau monotonicity on random instances") {
  Rng rng(17);
  for (int iter = 0; iter < 25; ++iter) {
    auto g = random_graph(2 + rng.below(20), 0.3, rng);
    auto aff = random_affinities(g, rng);
    const auto k = 1 + rng.below(g.num_nodes());
    auto sample = sample_without_replacement(static_cast<std::uint32_t>(g.num_nodes()),
                                             static_cast<std::uint32_t>(k), rng);
    std::vector<NodeId> selection;
    for (auto idx : sample) selection.push_back(g.id_of(idx));

    EvalMetrics prev;
    bool first = true;
    for (double tau : {0.0, 0.3, 0.6, 0.9, 1.0}) {
      auto m = evaluate_selection(g, aff, selection, tau);
      CHECK(m.total == m.direct + m.from_neighborhoods);
      CHECK(m.direct <= m.k);
      if (!first) {
        CHECK(m.direct <= prev.direct);  // raising tau never increases a metric
        CHECK(m.from_neighborhoods <= prev.from_neighborhoods);
        CHECK(m.total <= prev.total);
      }
      prev = m;
      first = false;

      auto oracle = ref::evaluate_selection(g, aff, selection, tau);
      CHECK(m.direct == oracle.direct);
      CHECK(m.from_neighborhoods == oracle.from_neighborhoods);
      CHECK(m.total == oracle.total);
    }
  }
}

TEST_CASE("random baseline is deterministic and seed-sensitive") {
  Rng rng(19);
  auto g = random_graph(40, 0.15, rng);
  auto aff = random_affinities(g, rng);

  auto a = random_baseline(g, aff, 10, 20, 0.5, 777);
  auto b = random_baseline(g, aff, 10, 20, 0.5, 777);
  CHECK(a.mean_total == b.mean_total);
  CHECK(a.mean_direct == b.mean_direct);
  CHECK(a.mean_from_neighborhoods == b.mean_from_neighborhoods);
  REQUIRE(a.trials.size() == 20);
  for (std::size_t t = 0; t < a.trials.size(); ++t) {
    CHECK(a.trials[t].total == b.trials[t].total);
  }

  auto c = random_baseline(g, aff, 10, 20, 0.5, 778);
  bool any_diff = false;
  for (std::size_t t = 0; t < a.trials.size(); ++t)
    any_diff |= (a.trials[t].total != c.trials[t].total);
  CHECK(any_diff);
}

TEST_CASE("parallel baseline equals the serial reference bit for bit") {
  Rng rng(23);
  auto g = random_graph(30, 0.2, rng);
  auto aff = random_affinities(g, rng);
  auto fast = random_baseline(g, aff, 8, 16, 0.4, 31337);
  auto slow = ref::random_baseline(g, aff, 8, 16, 0.4, 31337);
  CHECK(fast.mean_total == slow.mean_total);
  CHECK(fast.mean_direct == slow.mean_direct);
  CHECK(fast.mean_from_neighborhoods == slow.mean_from_neighborhoods);
  for (std::size_t t = 0; t < fast.trials.size(); ++t) {
    CHECK(fast.trials[t].direct == slow.trials[t].direct);
    CHECK(fast.trials[t].from_neighborhoods == slow.trials[t].from_neighborhoods);
  }
}

TEST_CASE("one full-population trial equals evaluating the whole node set") {
  Rng rng(27);
  auto g = random_graph(12, 0.3, rng);
  auto aff = random_affinities(g, rng);
  auto stats = random_baseline(g, aff, g.num_nodes(), 1, 0.5, 9);
  auto full = evaluate_selection(g, aff, g.nodes(), 0.5);
  CHECK(stats.mean_total == static_cast<double>(full.total));
  CHECK(stats.mean_direct == static_cast<double>(full.direct));
  CHECK(stats.trials[0].from_neighborhoods == 0);
}

TEST_CASE("baseline means equal the hand-average of per-trial records") {
  Rng rng(29);
  auto g = random_graph(25, 0.2, rng);
  auto aff = random_affinities(g, rng);
  auto stats = random_baseline(g, aff, 5, 13, 0.5, 55);
  double st = 0;
  for (const auto& m : stats.trials) st += static_cast<double>(m.total);
  CHECK(stats.mean_total == st / 13.0);
}

TEST_CASE("baseline parameter validation") {
  auto g = SocialGraph::from_edges({{1, 2}});
  auto aff = AffinityTable::from_map(g, {{1, 0.5}, {2, 0.5}});
  CHECK_THROWS_AS(random_baseline(g, aff, 3, 5, 0.5, 1), std::invalid_argument);  // k > n
  CHECK_THROWS_AS(random_baseline(g, aff, 1, 0, 0.5, 1), std::invalid_argument);  // no trials
}

TEST_CASE("compare_methods produces the five-row report") {
  Rng rng(33);
  auto g = random_graph(60, 0.1, rng);
  auto aff = random_affinities(g, rng);
  const std::vector<double> alphas{0.25, 0.5, 0.75};
  auto rows = compare_methods(g, aff, alphas, 10, 20, 0.6, 4242);

  REQUIRE(rows.size() == 5);
  CHECK(rows[0].method == "affinity");
  CHECK(!rows[0].alpha.has_value());
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(rows[i + 1].method == "utility");
    CHECK(rows[i + 1].alpha == alphas[i]);
  }
  CHECK(rows[4].method == "random");
  for (const auto& r : rows) {
    if (r.method == "random") {
      // averaged counts: additive only up to the final rounding of the division
      CHECK(r.total == doctest::Approx(r.direct + r.from_neighborhoods).epsilon(1e-12));
    } else {
      CHECK(r.total == r.direct + r.from_neighborhoods);  // integer counts, exact
    }
  }

  auto again = compare_methods(g, aff, alphas, 10, 20, 0.6, 4242);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].total == again[i].total);
}

TEST_CASE("compare_methods on a single node: all methods coincide") {
  auto g = SocialGraph::from_edges({}, {3});
  auto aff = AffinityTable::from_map(g, {{3, 0.8}});
  auto rows = compare_methods(g, aff, std::vector<double>{0.5}, 1, 1, 0.6, 1);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) {
    CHECK(r.total == 1.0);
    CHECK(r.direct == 1.0);
    CHECK(r.from_neighborhoods == 0.0);
  }
}

TEST_CASE("report CSV layout") {
  std::vector<MethodRow> rows{{"affinity", std::nullopt, 184, 100, 84},
                              {"utility", 0.5, 192, 99, 93},
                              {"random", std::nullopt, 99.25, 13.5, 85.75}};
  std::ostringstream out;
  write_report_csv(out, rows);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "method,alpha,total,direct,from_neighborhoods");
  std::getline(in, line);
  CHECK(line == "affinity,,184,100,84");
  std::getline(in, line);
  CHECK(line == "utility,0.5,192,99,93");
  std::getline(in, line);
  CHECK(line == "random,,99.25,13.5,85.75");
}

TEST_CASE("report table honors presentation rounding") {
  std::vector<MethodRow> rows{{"utility", 0.4, 0.712, 0.708, 0.5}};
  std::ostringstream plain, rounded;
  print_report_table(plain, rows);
  print_report_table(rounded, rows, 2);
  CHECK(plain.str().find("0.712") != std::string::npos);
  CHECK(rounded.str().find("0.71") != std::string::npos);
  CHECK(rounded.str().find("0.712") == std::string::npos);
}
