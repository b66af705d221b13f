// Command-line front end: generate | holdouts | evaluate | stats | vocab.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pentoref/commands.hpp"

namespace {

struct GenerateFlags {
  std::string config_path;
  std::string mode;
  std::string out;
  std::uint64_t seed = 0;
  int boards = 0;
  int targets_per_board = 0;
  int val_size = 0;
  int test_size = 0;
  bool images = false;
};

// True when the option exists on this subcommand and was given. The
// holdouts subcommand lacks the generate-only options, so plain count()
// would throw.
bool given(const CLI::App* cmd, const std::string& name) {
  const CLI::Option* opt = cmd->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

// Config file supplies the baseline; any flag given on the command line
// wins over it.
pentoref::RunConfig merge(const CLI::App* cmd, const GenerateFlags& f) {
  pentoref::RunConfig rc;
  if (!f.config_path.empty()) rc = pentoref::load_run_config(f.config_path);
  if (given(cmd, "--mode")) rc.mode = f.mode;
  if (given(cmd, "--out")) rc.out = f.out;
  if (given(cmd, "--seed")) rc.gen.seed = f.seed;
  if (given(cmd, "--boards")) rc.gen.boards = f.boards;
  if (given(cmd, "--targets-per-board")) rc.gen.targets_per_board = f.targets_per_board;
  if (given(cmd, "--val-size")) rc.gen.val_size = f.val_size;
  if (given(cmd, "--test-size")) rc.gen.test_size = f.test_size;
  if (given(cmd, "--images") || given(cmd, "--no-images")) rc.gen.image_emission = f.images;
  return rc;
}

void add_common_options(CLI::App* cmd, GenerateFlags& f) {
  cmd->add_option("--config", f.config_path, "JSON config file (flags override it)");
  cmd->add_option("--seed", f.seed, "master seed");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_flag("--images,!--no-images", f.images, "emit PNG renderings");
}

void print_generate_summary(const pentoref::ordered_json& summary) {
  const auto& splits = summary.at("splits");
  auto split_count = [&](const char* s) -> std::size_t {
    return splits.contains(s) ? splits.at(s).get<std::size_t>() : 0;
  };
  std::cout << "generator=" << summary.at("generator").get<std::string>()
            << " boards=" << summary.at("boards").get<std::size_t>()
            << " examples=" << summary.at("examples").get<std::size_t>()
            << " train=" << split_count("train") << " val=" << split_count("val")
            << " test=" << split_count("test")
            << " filtered_out=" << summary.at("filtered_out").get<std::size_t>() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pentomino referring-expression dataset generator and scorer"};
  app.require_subcommand(1);

  GenerateFlags gen_flags;
  auto* gen = app.add_subcommand("generate", "Build a naive or didact dataset");
  gen->add_option("--mode", gen_flags.mode, "naive | didact");
  gen->add_option("--boards", gen_flags.boards, "number of boards");
  gen->add_option("--targets-per-board", gen_flags.targets_per_board,
                  "examples per board (default 4)");
  gen->add_option("--val-size", gen_flags.val_size, "val examples (default 10000)");
  gen->add_option("--test-size", gen_flags.test_size, "test examples (default 10000)");
  add_common_options(gen, gen_flags);

  GenerateFlags ho_flags;
  auto* holdouts = app.add_subcommand("holdouts", "Build the six holdout evaluation sets");
  add_common_options(holdouts, ho_flags);

  std::string predictions_path, manifest_path, report_path = "report.json";
  auto* evaluate = app.add_subcommand("evaluate", "Score predictions against a manifest");
  evaluate->add_option("--predictions", predictions_path, "JSON-lines {id, prediction}")
      ->required();
  evaluate->add_option("--manifest", manifest_path, "reference manifest")->required();
  evaluate->add_option("--out", report_path, "report file (default report.json)");

  std::string stats_manifest, stats_out;
  auto* stats = app.add_subcommand("stats", "Report statistics of a manifest");
  stats->add_option("--manifest", stats_manifest, "manifest to analyze")->required();
  stats->add_option("--out", stats_out, "report file (prints to stdout when absent)");

  std::string vocab_out = "vocab.txt";
  auto* vocab = app.add_subcommand("vocab", "Export the 38-word vocabulary");
  vocab->add_option("--out", vocab_out, "output file (default vocab.txt)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      print_generate_summary(pentoref::run_generate(merge(gen, gen_flags)));
    } else if (holdouts->parsed()) {
      const auto summary = pentoref::run_holdouts(merge(holdouts, ho_flags));
      for (const auto& [name, set] : summary.at("sets").items()) {
        std::cout << name << " examples=" << set.at("examples").get<std::size_t>() << '\n';
      }
    } else if (evaluate->parsed()) {
      const auto report = pentoref::run_evaluate(predictions_path, manifest_path, report_path);
      for (const auto& [split, m] : report.at("per_split").items()) {
        std::cout << "split=" << split << " bleu1=" << m.at("bleu1").get<double>()
                  << " senta=" << m.at("sentence_accuracy").get<double>()
                  << " n=" << m.at("count").get<std::size_t>() << '\n';
      }
      std::cout << "overall bleu1=" << report.at("bleu1").get<double>()
                << " senta=" << report.at("sentence_accuracy").get<double>() << '\n';
    } else if (stats->parsed()) {
      const auto report = pentoref::run_stats(stats_manifest);
      if (stats_out.empty()) {
        std::cout << report.dump(2) << '\n';
      } else {
        pentoref::detail::write_json(stats_out, report);
        std::cout << "wrote " << stats_out << '\n';
      }
    } else if (vocab->parsed()) {
      pentoref::write_vocab(vocab_out);
      std::cout << "wrote " << vocab_out << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
