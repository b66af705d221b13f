#pragma once

// Implementations of the CLI subcommands: dataset generation, holdout-set
// emission, prediction scoring, manifest statistics, vocabulary export.
// All functions return the report they also write, so they are testable
// without capturing process output.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentoref/eval.hpp"
#include "pentoref/manifest.hpp"
#include "pentoref/png.hpp"
#include "pentoref/realize.hpp"
#include "pentoref/sampling.hpp"

namespace pentoref {

struct RunConfig {
  std::string mode;  // naive | didact (only cmd_generate reads it)
  GenerationConfig gen;
  std::string out = "out";
};

// Structured config file: JSON object mirroring GenerationConfig plus
// "mode" and "out". Flags override these values in the CLI layer.
inline RunConfig load_run_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("config: cannot open " + path);
  ordered_json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("config: " + path + ": " + e.what());
  }
  static const std::set<std::string> known = {"mode",     "seed",      "boards",
                                              "targets_per_board", "val_size",
                                              "test_size", "images",   "out"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw std::runtime_error("config: unknown key '" + key + "'");
  }
  if (!j.contains("seed")) throw std::runtime_error("config: seed is required");
  RunConfig rc;
  rc.gen.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("mode")) rc.mode = j.at("mode").get<std::string>();
  if (j.contains("boards")) rc.gen.boards = j.at("boards").get<int>();
  if (j.contains("targets_per_board")) rc.gen.targets_per_board = j.at("targets_per_board").get<int>();
  if (j.contains("val_size")) rc.gen.val_size = j.at("val_size").get<int>();
  if (j.contains("test_size")) rc.gen.test_size = j.at("test_size").get<int>();
  if (j.contains("images")) rc.gen.image_emission = j.at("images").get<bool>();
  if (j.contains("out")) rc.out = j.at("out").get<std::string>();
  if (rc.gen.boards <= 0 || rc.gen.targets_per_board <= 0) {
    throw std::runtime_error("config: counts must be positive");
  }
  return rc;
}

namespace detail {

inline void write_json(const std::filesystem::path& path, const ordered_json& j) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  f << j.dump(2) << '\n';
  if (!f) throw std::runtime_error("short write to " + path.string());
}

inline void write_split_ids(const Dataset& ds, const std::filesystem::path& dir) {
  std::map<std::string, std::vector<int>> ids;
  for (const DatasetExample& e : ds.examples) ids[e.split].push_back(e.id);
  for (const std::string split : {"train", "val", "test"}) {
    if (!ids.count(split)) continue;
    std::ofstream f(dir / (split + ".ids"), std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open split file for " + split);
    for (int id : ids[split]) f << id << '\n';
  }
}

inline void emit_images(const Dataset& ds, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir / "images");
  for (std::size_t b = 0; b < ds.boards.size(); ++b) {
    write_png((dir / image_name(static_cast<int>(b))).string(), render(ds.boards[b]));
  }
}

inline ordered_json dataset_summary(const Dataset& ds) {
  std::map<std::string, std::size_t> splits;
  std::array<std::size_t, kExpressionTypes.size()> types{};
  std::size_t ambiguous = 0;
  for (const DatasetExample& e : ds.examples) {
    ++splits[e.split];
    ++types[static_cast<std::size_t>(e.expression_type)];
    if (e.distinguishing.ambiguous) ++ambiguous;
  }
  ordered_json type_counts;
  for (ExpressionType t : kExpressionTypes) {
    type_counts[std::string(expression_type_id(t))] = types[static_cast<std::size_t>(t)];
  }
  return ordered_json{
      {"generator", std::string(generator_name(ds.generator))},
      {"boards", ds.boards.size()},
      {"examples", ds.examples.size()},
      {"examples_before_filter", ds.prefilter_examples},
      {"filtered_out", ds.filtered_out},
      {"splits", splits},
      {"expression_types", std::move(type_counts)},
      {"ambiguous", ambiguous},
  };
}

}  // namespace detail

// Generates one dataset (naive or didact): manifest.jsonl, {split}.ids
// files, optional images/, summary.json.
inline ordered_json run_generate(const RunConfig& rc) {
  if (rc.mode != "naive" && rc.mode != "didact") {
    throw std::invalid_argument("generate: mode must be 'naive' or 'didact'");
  }
  validate_config(rc.gen);
  const HoldoutAssignment assignment = holdouts_for_seed(rc.gen.seed);
  const Dataset ds = rc.mode == "naive" ? build_naive_dataset(rc.gen, assignment)
                                        : build_didact_dataset(rc.gen, assignment);
  const std::filesystem::path out(rc.out);
  std::filesystem::create_directories(out);
  write_manifest((out / "manifest.jsonl").string(), ds);
  detail::write_split_ids(ds, out);
  if (rc.gen.image_emission) detail::emit_images(ds, out);
  ordered_json summary = detail::dataset_summary(ds);
  summary["seed"] = rc.gen.seed;
  summary["images"] = rc.gen.image_emission;
  detail::write_json(out / "summary.json", summary);
  return summary;
}

// Emits the six holdout evaluation sets, one directory each with its own
// manifest (and images when enabled), plus a top-level summary.json.
inline ordered_json run_holdouts(const RunConfig& rc) {
  const HoldoutAssignment assignment = holdouts_for_seed(rc.gen.seed);
  const HoldoutSets sets = build_holdout_sets(rc.gen, assignment);
  const std::filesystem::path out(rc.out);
  ordered_json summary{{"seed", rc.gen.seed}, {"sets", ordered_json::object()}};
  for (const auto& [name, ds] : sets.named()) {
    const std::filesystem::path dir = out / name;
    std::filesystem::create_directories(dir);
    write_manifest((dir / "manifest.jsonl").string(), *ds);
    if (rc.gen.image_emission) detail::emit_images(*ds, dir);
    summary["sets"][name] = detail::dataset_summary(*ds);
  }
  detail::write_json(out / "summary.json", summary);
  return summary;
}

// Scores a {id, prediction} JSON-lines file against a manifest and writes
// the evaluation report.
inline ordered_json run_evaluate(const std::string& predictions_path,
                                 const std::string& manifest_path,
                                 const std::string& report_path) {
  const std::vector<ManifestRecord> records = load_manifest(manifest_path);
  const std::vector<Prediction> preds = load_predictions(predictions_path);
  if (preds.empty()) throw std::runtime_error("evaluate: no predictions");

  std::vector<int> unknown;
  std::set<int> seen;
  std::vector<ScoredPair> pairs;
  pairs.reserve(preds.size());
  for (const Prediction& p : preds) {
    if (p.id < 0 || p.id >= static_cast<int>(records.size())) {
      unknown.push_back(p.id);
      continue;
    }
    if (!seen.insert(p.id).second) {
      throw std::runtime_error("evaluate: duplicate prediction id " + std::to_string(p.id));
    }
    const ManifestRecord& rec = records[static_cast<std::size_t>(p.id)];
    pairs.push_back({p.text, rec.expression, rec.split});
  }
  if (!unknown.empty()) {
    std::string msg = "evaluate: unknown ids:";
    for (int id : unknown) msg += " " + std::to_string(id);
    throw std::runtime_error(msg);
  }

  const EvaluationReport rep = evaluate(pairs);
  ordered_json per_split;
  for (const auto& [split, m] : rep.per_split) {
    per_split[split] = {{"bleu1", m.bleu1},
                        {"sentence_accuracy", m.sentence_accuracy},
                        {"count", m.count}};
  }
  ordered_json types;
  for (ExpressionType t : kExpressionTypes) {
    types[std::string(expression_type_id(t))] = rep.type_distribution.of(t);
  }
  types["ungrammatical"] = rep.type_distribution.ungrammatical;
  ordered_json errors;
  for (ErrorCategory c : kErrorCategories) {
    errors[std::string(error_category_name(c))] = rep.errors_of(c);
  }
  ordered_json labels;
  for (Property p : kProperties) {
    labels[std::string(property_name(p))] =
        rep.error_labels[static_cast<std::size_t>(p)];
  }
  const ordered_json report{
      {"examples", pairs.size()},
      {"bleu1", rep.bleu1},
      {"sentence_accuracy", rep.sentence_accuracy},
      {"per_split", std::move(per_split)},
      {"type_distribution", std::move(types)},
      {"error_breakdown", std::move(errors)},
      {"error_labels", std::move(labels)},
  };
  detail::write_json(report_path, report);
  return report;
}

// Statistics over a manifest: expression-type histogram (re-parsed from
// the expressions), target property-value histograms, per-symbol
// target/context counts.
inline ordered_json run_stats(const std::string& manifest_path) {
  const std::vector<ManifestRecord> records = load_manifest(manifest_path);
  if (records.empty()) throw std::runtime_error("stats: empty manifest");

  std::vector<std::string> expressions;
  expressions.reserve(records.size());
  for (const auto& r : records) expressions.push_back(r.expression);
  const TypeDistribution dist = type_distribution(expressions);

  std::map<std::string, std::size_t> splits;
  std::map<std::string, std::size_t> colors, shapes, positions, rotations;
  std::array<std::size_t, static_cast<std::size_t>(kNumSymbols)> target_counts{};
  std::array<std::size_t, static_cast<std::size_t>(kNumSymbols)> context_counts{};
  std::size_t ambiguous = 0;
  for (const ManifestRecord& r : records) {
    ++splits[r.split];
    if (r.ambiguous) ++ambiguous;
    const PlacedPiece& target = r.board.target();
    ++colors[std::string(kColors.at(target.symbol.color).name)];
    ++shapes[std::string(kShapes.at(target.symbol.shape).name)];
    ++positions[std::string(kPositions.at(target.symbol.position).name)];
    ++rotations[std::to_string(static_cast<int>(target.rotation))];
    for (std::size_t i = 0; i < r.board.pieces.size(); ++i) {
      const int sym = symbol_index(r.board.pieces[i].symbol);
      if (static_cast<int>(i) == r.board.target_index) {
        ++target_counts[static_cast<std::size_t>(sym)];
      } else {
        ++context_counts[static_cast<std::size_t>(sym)];
      }
    }
  }

  ordered_json per_symbol = ordered_json::array();
  std::size_t target_min = SIZE_MAX, target_max = 0;
  for (int i = 0; i < kNumSymbols; ++i) {
    const std::size_t t = target_counts[static_cast<std::size_t>(i)];
    const std::size_t c = context_counts[static_cast<std::size_t>(i)];
    if (t == 0 && c == 0) continue;
    per_symbol.push_back({{"symbol", piece_label(symbol_at(i))},
                          {"targets", t},
                          {"contexts", c}});
    target_min = std::min(target_min, t);
    target_max = std::max(target_max, t);
  }

  ordered_json types;
  for (ExpressionType t : kExpressionTypes) {
    types[std::string(expression_type_id(t))] = dist.of(t);
  }
  types["ungrammatical"] = dist.ungrammatical;
  return ordered_json{
      {"examples", records.size()},
      {"splits", splits},
      {"expression_types", std::move(types)},
      {"ambiguous", ambiguous},
      {"target_colors", colors},
      {"target_shapes", shapes},
      {"target_positions", positions},
      {"target_rotations", rotations},
      {"symbols_used", per_symbol.size()},
      {"targets_per_symbol_min", target_min},
      {"targets_per_symbol_max", target_max},
      {"per_symbol", std::move(per_symbol)},
  };
}

inline void write_vocab(const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("vocab: cannot open " + path);
  f << vocabulary_text();
  if (!f) throw std::runtime_error("vocab: short write to " + path);
}

}  // namespace pentoref
