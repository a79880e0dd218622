// targetrank: pick the best k users of a social network for an ad campaign
// by combining TF-IDF profile matching with neighborhood affinity, evaluate
// the selection against a random baseline, and generate attributed networks
// for desk-scale experiments.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "targetrank/corpus.hpp"
#include "targetrank/datagen.hpp"
#include "targetrank/dot_export.hpp"
#include "targetrank/evaluation.hpp"
#include "targetrank/graph.hpp"
#include "targetrank/scoring.hpp"
#include "targetrank/util.hpp"
#include "targetrank/vectorizer.hpp"

namespace fs = std::filesystem;
using namespace targetrank;

namespace {

struct InputOptions {
  std::string graph_path;
  std::string profiles_path;
  std::string profiles_dir;
  std::string brand_path;
  std::string stopwords_path;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--graph", in.graph_path, "edge-list file (SNAP format)")
      ->required()
      ->check(CLI::ExistingFile);
  auto* jsonl = cmd->add_option("--profiles", in.profiles_path,
                                "JSON-lines profiles, one {\"id\",\"text\"} per line")
                    ->check(CLI::ExistingFile);
  auto* dir = cmd->add_option("--profiles-dir", in.profiles_dir, "directory of <id>.txt profiles")
                  ->check(CLI::ExistingDirectory);
  jsonl->excludes(dir);
  cmd->add_option("--brand", in.brand_path, "brand profile text file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--stopwords", in.stopwords_path, "stop-word list, one word per line")
      ->check(CLI::ExistingFile);
}

struct Inputs {
  SocialGraph graph;
  Corpus corpus;
};

Inputs load_inputs(const InputOptions& in) {
  if (in.profiles_path.empty() && in.profiles_dir.empty())
    throw std::runtime_error("one of --profiles / --profiles-dir is required");
  Inputs data;
  data.graph = SocialGraph::load_edge_list_file(in.graph_path);
  auto profiles = in.profiles_path.empty() ? load_profiles_dir(in.profiles_dir)
                                           : load_profiles_jsonl(in.profiles_path);
  StopwordSet stopwords;
  if (!in.stopwords_path.empty()) stopwords = load_stopwords(in.stopwords_path);
  data.corpus = Corpus::build(profiles, read_text_file(in.brand_path), stopwords);
  return data;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

void write_manifest(const fs::path& dir, const std::string& command, nlohmann::json parameters,
                    std::vector<std::string> outputs) {
  nlohmann::json manifest = {
      {"command", command}, {"parameters", std::move(parameters)}, {"outputs", std::move(outputs)}};
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

RankMethod parse_method(const std::string& name) {
  return name == "affinity" ? RankMethod::affinity : RankMethod::utility;
}

RankFilter parse_filter(const std::string& mode, double tau) {
  if (mode == "affinity") return {FilterMode::min_affinity, tau};
  if (mode == "utility") return {FilterMode::min_utility, tau};
  return {};
}

int run_gen(const std::string& nodes_from, const PoolParams& pool_params, std::size_t num_seeds,
            std::uint64_t seed, const fs::path& out_dir) {
  auto graph = SocialGraph::load_edge_list_file(nodes_from);
  PoolParams params = pool_params;
  params.seed = seed;
  const auto assign_seed = derive_seed(seed, 1);
  auto pool = generate_topic_pool(params);
  auto assignment = assign_contents(graph, pool, num_seeds, assign_seed);

  fs::create_directories(out_dir);
  DatasetFiles files{out_dir / "edges.txt", out_dir / "profiles.jsonl", out_dir / "manifest.json"};
  emit_dataset(graph, assignment, pool, params, num_seeds, assign_seed, files);

  std::cout << "generated " << graph.num_nodes() << " profiles over " << pool.pages.size()
            << " pages (" << pool.num_topics << " topics), coverage "
            << format_double(assignment.coverage) << "\n"
            << "wrote " << files.edges.string() << ", " << files.profiles.string() << ", "
            << files.manifest.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"top-k advertisement target selection over attributed social networks"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file; flags take precedence");
  app.get_config_formatter_base()->comment('#');

  // ---- gen ----------------------------------------------------------
  std::string nodes_from;
  PoolParams pool_params;
  std::size_t gen_seeds = 20;
  std::uint64_t gen_seed = 42;
  std::string gen_out = "out";
  auto* gen = app.add_subcommand("gen", "generate an attributed dataset over a given topology");
  gen->add_option("--nodes-from", nodes_from, "edge-list file providing the topology")
      ->required()
      ->check(CLI::ExistingFile);
  gen->add_option("--topics", pool_params.num_topics, "number of page topics")
      ->capture_default_str();
  gen->add_option("--pages-per-topic", pool_params.pages_per_topic, "pages per topic")
      ->capture_default_str();
  gen->add_option("--vocab-per-topic", pool_params.vocab_per_topic, "distinct words per topic")
      ->capture_default_str();
  gen->add_option("--shared-vocab", pool_params.shared_vocab, "shared background vocabulary size")
      ->capture_default_str();
  gen->add_option("--doc-length", pool_params.doc_length, "words per page text")
      ->capture_default_str();
  gen->add_option("--intra", pool_params.intra_topic_link_prob,
                  "cross-page link probability within a topic")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen->add_option("--inter", pool_params.inter_topic_link_prob,
                  "cross-page link probability across topics")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen->add_option("--seeds", gen_seeds, "number of seed nodes for the content walk")
      ->capture_default_str();
  gen->add_option("--seed", gen_seed, "master RNG seed")->capture_default_str();
  gen->add_option("--out", gen_out, "output directory")->capture_default_str();

  // ---- rank ---------------------------------------------------------
  InputOptions rank_in;
  std::string rank_method = "utility";
  double rank_alpha = 0.5;
  std::size_t rank_k = 100;
  std::string rank_filter = "none";
  double rank_tau = 0.6;
  std::string rank_out = "out";
  int rank_round = -1;
  bool dump_vectors = false;
  auto* rank = app.add_subcommand("rank", "score every node and rank the top-k targets");
  add_input_options(rank, rank_in);
  rank->add_option("--method", rank_method, "ranking score")
      ->check(CLI::IsMember({"affinity", "utility"}))
      ->capture_default_str();
  rank->add_option("--alpha", rank_alpha, "utility blend weight")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  rank->add_option("--k", rank_k, "number of targets")->check(CLI::PositiveNumber)
      ->capture_default_str();
  rank->add_option("--filter", rank_filter, "pre-ranking threshold filter")
      ->check(CLI::IsMember({"none", "affinity", "utility"}))
      ->capture_default_str();
  rank->add_option("--tau", rank_tau, "threshold used by --filter")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  rank->add_option("--out", rank_out, "output directory")->capture_default_str();
  rank->add_option("--round", rank_round, "decimals for the printed preview (storage keeps full precision)");
  rank->add_flag("--dump-vectors", dump_vectors, "also write TF-IDF vectors as JSON-lines");

  // ---- eval ---------------------------------------------------------
  InputOptions eval_in;
  std::vector<double> eval_alphas;
  std::size_t eval_k = 100;
  double eval_tau = 0.6;
  std::size_t eval_trials = 100;
  std::uint64_t eval_seed = 42;
  std::string eval_out = "out";
  int eval_round = -1;
  auto* eval = app.add_subcommand("eval", "compare methods against the random baseline");
  add_input_options(eval, eval_in);
  eval->add_option("--alpha", eval_alphas, "utility blend weights (repeatable)")
      ->check(CLI::Range(0.0, 1.0));
  eval->add_option("--k", eval_k, "number of targets")->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval->add_option("--tau", eval_tau, "affinity threshold for a node to count as a target")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  eval->add_option("--trials", eval_trials, "random-baseline trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval->add_option("--seed", eval_seed, "random-baseline RNG seed")->capture_default_str();
  eval->add_option("--out", eval_out, "output directory")->capture_default_str();
  eval->add_option("--round", eval_round, "decimals for the printed table");

  // ---- export-dot ---------------------------------------------------
  InputOptions dot_in;
  std::string dot_method = "utility";
  double dot_alpha = 0.5;
  std::size_t dot_top = 10;
  std::string dot_brand_label;
  std::string dot_out = "out";
  auto* dot = app.add_subcommand("export-dot", "DOT figure of the links among the top targets");
  add_input_options(dot, dot_in);
  dot->add_option("--method", dot_method, "ranking score")
      ->check(CLI::IsMember({"affinity", "utility"}))
      ->capture_default_str();
  dot->add_option("--alpha", dot_alpha, "utility blend weight")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  dot->add_option("--top", dot_top, "number of targets in the figure")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  dot->add_option("--brand-label", dot_brand_label, "label of the central brand node");
  dot->add_option("--out", dot_out, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // nonzero parse results are usage errors
  }

  try {
    if (gen->parsed()) return run_gen(nodes_from, pool_params, gen_seeds, gen_seed, gen_out);

    if (rank->parsed()) {
      auto data = load_inputs(rank_in);
      auto aff = compute_affinities(data.graph, data.corpus);
      auto scores = score_all(data.graph, aff, rank_alpha);
      const auto method = parse_method(rank_method);
      auto full = rank_targets(scores, method, std::max<std::size_t>(scores.size(), 1));
      auto topk = rank_targets(scores, method, rank_k, parse_filter(rank_filter, rank_tau));

      fs::create_directories(rank_out);
      {
        std::ofstream out(fs::path(rank_out) / "scores.csv", std::ios::binary);
        write_scores_csv(out, full.records);
      }
      {
        std::ofstream out(fs::path(rank_out) / "topk.csv", std::ios::binary);
        write_scores_csv(out, topk.records);
      }
      std::vector<std::string> outputs{"scores.csv", "topk.csv"};
      if (dump_vectors) {
        TfIdfModel model(data.corpus);
        std::ofstream out(fs::path(rank_out) / "vectors.jsonl", std::ios::binary);
        model.dump_jsonl(out);
        outputs.push_back("vectors.jsonl");
      }
      write_manifest(rank_out, "rank",
                     {{"graph", rank_in.graph_path},
                      {"profiles", rank_in.profiles_path},
                      {"profiles_dir", rank_in.profiles_dir},
                      {"brand", rank_in.brand_path},
                      {"stopwords", rank_in.stopwords_path},
                      {"method", rank_method},
                      {"alpha", rank_alpha},
                      {"k", rank_k},
                      {"filter", rank_filter},
                      {"tau", rank_tau}},
                     outputs);

      const int digits = rank_round;
      auto fmt = [&](double v) {
        return digits < 0 ? format_double(v) : format_fixed_trunc(v, digits);
      };
      std::cout << "ranked " << full.records.size() << " nodes by " << rank_method
                << " (alpha=" << format_double(rank_alpha) << "), kept top "
                << topk.records.size() << "\n";
      const auto preview = std::min<std::size_t>(topk.records.size(), 10);
      for (std::size_t i = 0; i < preview; ++i) {
        const auto& r = topk.records[i];
        std::cout << "  " << (i + 1) << ". node " << r.node << "  affinity " << fmt(r.affinity)
                  << "  centrality " << fmt(r.centrality) << "  utility " << fmt(r.utility)
                  << "\n";
      }
      std::cout << "wrote " << (fs::path(rank_out) / "scores.csv").string() << ", "
                << (fs::path(rank_out) / "topk.csv").string() << "\n";
      return 0;
    }

    if (eval->parsed()) {
      if (eval_alphas.empty()) eval_alphas = {0.25, 0.5, 0.75};
      auto data = load_inputs(eval_in);
      auto aff = compute_affinities(data.graph, data.corpus);
      auto rows =
          compare_methods(data.graph, aff, eval_alphas, eval_k, eval_trials, eval_tau, eval_seed);

      fs::create_directories(eval_out);
      {
        std::ofstream out(fs::path(eval_out) / "report.csv", std::ios::binary);
        write_report_csv(out, rows);
      }
      write_manifest(eval_out, "eval",
                     {{"graph", eval_in.graph_path},
                      {"profiles", eval_in.profiles_path},
                      {"profiles_dir", eval_in.profiles_dir},
                      {"brand", eval_in.brand_path},
                      {"stopwords", eval_in.stopwords_path},
                      {"alphas", eval_alphas},
                      {"k", eval_k},
                      {"tau", eval_tau},
                      {"trials", eval_trials},
                      {"seed", eval_seed}},
                     {"report.csv"});
      print_report_table(std::cout, rows, eval_round);
      std::cout << "wrote " << (fs::path(eval_out) / "report.csv").string() << "\n";
      return 0;
    }

    if (dot->parsed()) {
      auto data = load_inputs(dot_in);
      auto aff = compute_affinities(data.graph, data.corpus);
      auto ranking =
          rank_targets(score_all(data.graph, aff, dot_alpha), parse_method(dot_method), dot_top);
      DotOptions options;
      options.top_n = dot_top;
      options.brand_label =
          dot_brand_label.empty() ? fs::path(dot_in.brand_path).stem().string() : dot_brand_label;
      fs::create_directories(dot_out);
      write_file(fs::path(dot_out) / "targets.dot",
                 export_top_targets_dot(data.graph, ranking, options));
      write_manifest(dot_out, "export-dot",
                     {{"graph", dot_in.graph_path},
                      {"profiles", dot_in.profiles_path},
                      {"profiles_dir", dot_in.profiles_dir},
                      {"brand", dot_in.brand_path},
                      {"stopwords", dot_in.stopwords_path},
                      {"method", dot_method},
                      {"alpha", dot_alpha},
                      {"top", dot_top},
                      {"brand_label", options.brand_label}},
                     {"targets.dot"});
      std::cout << "wrote " << (fs::path(dot_out) / "targets.dot").string() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
