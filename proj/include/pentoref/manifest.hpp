#pragma once

// JSON-lines manifest I/O. One record per example; boards are stored at
// tile granularity so images can be regenerated without re-sampling.

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pentoref/boardgen.hpp"
#include "pentoref/core.hpp"
#include "pentoref/sampling.hpp"

namespace pentoref {

using ordered_json = nlohmann::ordered_json;

inline ordered_json piece_record(const PlacedPiece& piece) {
  ordered_json tiles = ordered_json::array();
  for (const Tile& t : piece.occupied) tiles.push_back({t.col, t.row});
  return ordered_json{
      {"color", std::string(kColors.at(piece.symbol.color).name)},
      {"shape", std::string(kShapes.at(piece.symbol.shape).name)},
      {"position", std::string(kPositions.at(piece.symbol.position).name)},
      {"rotation", static_cast<int>(piece.rotation)},
      {"tiles", std::move(tiles)},
      {"bbox", {piece.bbox.x, piece.bbox.y, piece.bbox.w, piece.bbox.h}},
  };
}

inline ordered_json example_record(const DatasetExample& e, const PlacedBoard& board) {
  ordered_json pieces = ordered_json::array();
  for (const PlacedPiece& p : board.pieces) pieces.push_back(piece_record(p));
  ordered_json rec{
      {"id", e.id},
      {"split", e.split},
      {"generator", std::string(generator_name(e.generator))},
      {"image", nullptr},
      {"pieces", std::move(pieces)},
      {"target_index", e.target_index},
      {"expression", e.expression},
      {"expression_type", std::string(expression_type_id(e.expression_type))},
      {"ambiguous", e.distinguishing.ambiguous},
  };
  if (!e.image_path.empty()) rec["image"] = e.image_path;
  return rec;
}

inline void write_manifest(const std::string& path, const Dataset& ds) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("write_manifest: cannot open " + path);
  for (const DatasetExample& e : ds.examples) {
    f << example_record(e, ds.boards.at(static_cast<std::size_t>(e.board_index))).dump()
      << '\n';
  }
  if (!f) throw std::runtime_error("write_manifest: short write to " + path);
}

struct ManifestRecord {
  int id = 0;
  std::string split;
  std::string generator;
  std::optional<std::string> image;
  PlacedBoard board;  // target_index included
  std::string expression;
  ExpressionType expression_type = ExpressionType::C;
  bool ambiguous = false;
};

namespace detail {

inline std::runtime_error manifest_error(const std::string& path, std::size_t line,
                                         const std::string& why) {
  return std::runtime_error(path + ":" + std::to_string(line) + ": " + why);
}

inline PlacedPiece parse_piece_record(const ordered_json& rec) {
  const auto color = color_from_name(rec.at("color").get<std::string>());
  const auto shape = shape_from_name(rec.at("shape").get<std::string>());
  const auto position = position_from_name(rec.at("position").get<std::string>());
  if (!color || !shape || !position) throw std::runtime_error("unknown property value");
  const auto rotation = rotation_from_degrees(rec.at("rotation").get<int>());
  if (!rotation) throw std::runtime_error("bad rotation");
  const auto& tiles = rec.at("tiles");
  if (!tiles.is_array() || tiles.size() != 5) throw std::runtime_error("bad tiles");
  std::array<Tile, 5> occupied;
  for (std::size_t i = 0; i < 5; ++i) {
    occupied[i] = {tiles[i].at(0).get<int>(), tiles[i].at(1).get<int>()};
  }
  PlacedPiece piece = placed_piece_from_tiles(
      make_piece(*color, *shape, *position), *rotation, occupied);
  const auto& bbox = rec.at("bbox");
  const PixelRect stored{bbox.at(0).get<int>(), bbox.at(1).get<int>(),
                         bbox.at(2).get<int>(), bbox.at(3).get<int>()};
  if (stored != piece.bbox) throw std::runtime_error("bbox does not match tiles");
  return piece;
}

inline ManifestRecord parse_example_record(const ordered_json& rec) {
  ManifestRecord out;
  out.id = rec.at("id").get<int>();
  out.split = rec.at("split").get<std::string>();
  out.generator = rec.at("generator").get<std::string>();
  if (!rec.at("image").is_null()) out.image = rec.at("image").get<std::string>();
  for (const auto& piece : rec.at("pieces")) {
    out.board.pieces.push_back(parse_piece_record(piece));
  }
  out.board.target_index = rec.at("target_index").get<int>();
  if (out.board.target_index < 0 ||
      out.board.target_index >= static_cast<int>(out.board.pieces.size())) {
    throw std::runtime_error("target_index out of range");
  }
  out.expression = rec.at("expression").get<std::string>();
  const auto type = expression_type_from_id(rec.at("expression_type").get<std::string>());
  if (!type) throw std::runtime_error("unknown expression_type");
  out.expression_type = *type;
  out.ambiguous = rec.at("ambiguous").get<bool>();
  return out;
}

}  // namespace detail

// Loads a manifest, rejecting malformed lines with their line number.
// Enforces the id invariant: unique and contiguous from 0.
inline std::vector<ManifestRecord> load_manifest(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("load_manifest: cannot open " + path);
  std::vector<ManifestRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(detail::parse_example_record(ordered_json::parse(line)));
    } catch (const std::exception& e) {
      throw detail::manifest_error(path, line_no, e.what());
    }
    if (out.back().id != static_cast<int>(out.size()) - 1) {
      throw detail::manifest_error(path, line_no, "ids must be contiguous from 0");
    }
  }
  return out;
}

// Prediction files are JSON-lines of {id, prediction}.
struct Prediction {
  int id = 0;
  std::string text;
};

inline std::vector<Prediction> load_predictions(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("load_predictions: cannot open " + path);
  std::vector<Prediction> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const ordered_json rec = ordered_json::parse(line);
      out.push_back({rec.at("id").get<int>(), rec.at("prediction").get<std::string>()});
    } catch (const std::exception& e) {
      throw detail::manifest_error(path, line_no, e.what());
    }
  }
  return out;
}

inline void write_predictions(const std::string& path, const std::vector<Prediction>& preds) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("write_predictions: cannot open " + path);
  for (const Prediction& p : preds) {
    f << ordered_json{{"id", p.id}, {"prediction", p.text}}.dump() << '\n';
  }
}

}  // namespace pentoref
