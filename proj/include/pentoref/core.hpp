#pragma once

// Domain vocabulary of the Pentomino referring-expression world: the 12
// colors, 12 letter-named shapes and 9 board regions, the symbolic pieces
// and boards built from them, property preference orders, and the
// expression-type taxonomy. Everything here is immutable after
// construction and safe to share across threads.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pentoref {

inline constexpr int kNumColors = 12;
inline constexpr int kNumShapes = 12;
inline constexpr int kNumPositions = 9;
inline constexpr int kNumSymbols = kNumColors * kNumShapes * kNumPositions;  // 1296

inline constexpr int kMinBoardPieces = 4;
inline constexpr int kMaxBoardPieces = 10;
inline constexpr int kMaxPiecesPerArea = 2;

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

struct ColorValue {
  std::string_view name;
  Rgb rgb;
};

inline constexpr std::array<ColorValue, kNumColors> kColors = {{
    {"red", {255, 0, 0}},
    {"orange", {255, 165, 0}},
    {"yellow", {255, 255, 0}},
    {"green", {0, 128, 0}},
    {"blue", {0, 0, 255}},
    {"cyan", {0, 255, 255}},
    {"purple", {128, 0, 128}},
    {"brown", {139, 69, 19}},
    {"grey", {128, 128, 128}},
    {"pink", {255, 192, 203}},
    {"olive green", {128, 128, 0}},
    {"navy blue", {0, 0, 128}},
}};

// Tile offset within a shape's canonical frame (origin at the top-left of
// the bounding box, x to the right, y downward).
struct Cell {
  std::int8_t x = 0, y = 0;
  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

struct ShapeValue {
  std::string_view name;  // conventional single-letter name
  std::array<Cell, 5> cells;
};

inline constexpr std::array<ShapeValue, kNumShapes> kShapes = {{
    {"F", {{{1, 0}, {2, 0}, {0, 1}, {1, 1}, {1, 2}}}},
    {"I", {{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}}}},
    {"L", {{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 3}}}},
    {"N", {{{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 3}}}},
    {"P", {{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}}}},
    {"T", {{{0, 0}, {1, 0}, {2, 0}, {1, 1}, {1, 2}}}},
    {"U", {{{0, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}}}},
    {"V", {{{0, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 2}}}},
    {"W", {{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}}}},
    {"X", {{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}}},
    {"Y", {{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}}}},
    {"Z", {{{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 2}}}},
}};

// One of the nine regions of the 3x3 board partition. `col`/`row` give the
// region's block coordinates; `name` is also the surface realization.
struct PositionValue {
  std::string_view name;
  std::int8_t col = 0, row = 0;
};

inline constexpr std::array<PositionValue, kNumPositions> kPositions = {{
    {"top left", 0, 0},
    {"top center", 1, 0},
    {"top right", 2, 0},
    {"left center", 0, 1},
    {"center", 1, 1},
    {"right center", 2, 1},
    {"bottom left", 0, 2},
    {"bottom center", 1, 2},
    {"bottom right", 2, 2},
}};

enum class Rotation : std::uint16_t {
  Deg0 = 0,
  Deg90 = 90,
  Deg180 = 180,
  Deg270 = 270,
};

inline constexpr std::array<Rotation, 4> kRotations = {
    Rotation::Deg0, Rotation::Deg90, Rotation::Deg180, Rotation::Deg270};

inline std::optional<Rotation> rotation_from_degrees(int degrees) {
  for (Rotation r : kRotations) {
    if (static_cast<int>(r) == degrees) return r;
  }
  return std::nullopt;
}

enum class Property : std::uint8_t { Color = 0, Shape = 1, Position = 2 };

inline constexpr std::array<Property, 3> kProperties = {
    Property::Color, Property::Shape, Property::Position};

inline constexpr std::string_view property_name(Property p) {
  switch (p) {
    case Property::Color: return "color";
    case Property::Shape: return "shape";
    case Property::Position: return "position";
  }
  return "";
}

// Priority over properties used by the selection algorithm. Must mention
// each property exactly once.
using PreferenceOrder = std::array<Property, 3>;

inline constexpr PreferenceOrder kDefaultPreferenceOrder = {
    Property::Color, Property::Shape, Property::Position};

inline constexpr bool valid_preference_order(const PreferenceOrder& order) {
  unsigned seen = 0;
  for (Property p : order) seen |= 1u << static_cast<unsigned>(p);
  return seen == 0b111u;
}

// ---------------------------------------------------------------------------
// Expression types: which property subset an expression mentions.

enum class ExpressionType : std::uint8_t { C, S, P, CS, CP, SP, CSP };

inline constexpr std::array<ExpressionType, 7> kExpressionTypes = {
    ExpressionType::C,  ExpressionType::S,  ExpressionType::P,
    ExpressionType::CS, ExpressionType::CP, ExpressionType::SP,
    ExpressionType::CSP};

inline constexpr unsigned property_bit(Property p) {
  return 1u << static_cast<unsigned>(p);
}

inline constexpr unsigned expression_type_mask(ExpressionType t) {
  constexpr unsigned c = 1u << 0, s = 1u << 1, p = 1u << 2;
  switch (t) {
    case ExpressionType::C: return c;
    case ExpressionType::S: return s;
    case ExpressionType::P: return p;
    case ExpressionType::CS: return c | s;
    case ExpressionType::CP: return c | p;
    case ExpressionType::SP: return s | p;
    case ExpressionType::CSP: return c | s | p;
  }
  return 0;
}

inline constexpr std::string_view expression_type_id(ExpressionType t) {
  switch (t) {
    case ExpressionType::C: return "C";
    case ExpressionType::S: return "S";
    case ExpressionType::P: return "P";
    case ExpressionType::CS: return "CS";
    case ExpressionType::CP: return "CP";
    case ExpressionType::SP: return "SP";
    case ExpressionType::CSP: return "CSP";
  }
  return "";
}

inline ExpressionType expression_type_from_mask(unsigned mask) {
  for (ExpressionType t : kExpressionTypes) {
    if (expression_type_mask(t) == mask) return t;
  }
  throw std::invalid_argument("expression_type_from_mask: empty property set");
}

inline std::optional<ExpressionType> expression_type_from_id(std::string_view id) {
  for (ExpressionType t : kExpressionTypes) {
    if (expression_type_id(t) == id) return t;
  }
  return std::nullopt;
}

inline std::vector<Property> expression_type_properties(ExpressionType t) {
  std::vector<Property> props;
  for (Property p : kProperties) {
    if (expression_type_mask(t) & property_bit(p)) props.push_back(p);
  }
  return props;
}

// ---------------------------------------------------------------------------
// Symbolic pieces and boards.

struct SymbolicPiece {
  std::uint8_t color = 0;     // index into kColors
  std::uint8_t shape = 0;     // index into kShapes
  std::uint8_t position = 0;  // index into kPositions
  bool operator==(const SymbolicPiece&) const = default;
  auto operator<=>(const SymbolicPiece&) const = default;
};

inline SymbolicPiece make_piece(int color, int shape, int position) {
  if (color < 0 || color >= kNumColors || shape < 0 || shape >= kNumShapes ||
      position < 0 || position >= kNumPositions) {
    throw std::invalid_argument("make_piece: value index out of range");
  }
  return {static_cast<std::uint8_t>(color), static_cast<std::uint8_t>(shape),
          static_cast<std::uint8_t>(position)};
}

// Canonical rank of a piece in the color-major enumeration.
inline constexpr int symbol_index(const SymbolicPiece& p) {
  return (p.color * kNumShapes + p.shape) * kNumPositions + p.position;
}

inline constexpr SymbolicPiece symbol_at(int index) {
  const int position = index % kNumPositions;
  const int shape = (index / kNumPositions) % kNumShapes;
  const int color = index / (kNumPositions * kNumShapes);
  return {static_cast<std::uint8_t>(color), static_cast<std::uint8_t>(shape),
          static_cast<std::uint8_t>(position)};
}

inline constexpr std::uint8_t property_value(const SymbolicPiece& piece, Property p) {
  switch (p) {
    case Property::Color: return piece.color;
    case Property::Shape: return piece.shape;
    case Property::Position: return piece.position;
  }
  return 0;
}

inline constexpr bool shares_property(const SymbolicPiece& a, const SymbolicPiece& b,
                                      Property p) {
  return property_value(a, p) == property_value(b, p);
}

inline std::string_view property_value_name(Property p, std::uint8_t value) {
  switch (p) {
    case Property::Color: return kColors.at(value).name;
    case Property::Shape: return kShapes.at(value).name;
    case Property::Position: return kPositions.at(value).name;
  }
  return "";
}

inline std::string piece_label(const SymbolicPiece& p) {
  std::string s;
  s += kColors.at(p.color).name;
  s += ' ';
  s += kShapes.at(p.shape).name;
  s += ' ';
  s += kPositions.at(p.position).name;
  return s;
}

inline std::optional<std::uint8_t> color_from_name(std::string_view name) {
  for (int i = 0; i < kNumColors; ++i) {
    if (kColors[static_cast<std::size_t>(i)].name == name)
      return static_cast<std::uint8_t>(i);
  }
  return std::nullopt;
}

inline std::optional<std::uint8_t> shape_from_name(std::string_view name) {
  for (int i = 0; i < kNumShapes; ++i) {
    if (kShapes[static_cast<std::size_t>(i)].name == name)
      return static_cast<std::uint8_t>(i);
  }
  return std::nullopt;
}

inline std::optional<std::uint8_t> position_from_name(std::string_view name) {
  for (int i = 0; i < kNumPositions; ++i) {
    if (kPositions[static_cast<std::size_t>(i)].name == name)
      return static_cast<std::uint8_t>(i);
  }
  return std::nullopt;
}

// An ordered collection of pieces with one designated referent. Boards fed
// to the selection algorithm may be arbitrarily small; generated boards
// additionally satisfy validate_board below.
struct SymbolicBoard {
  std::vector<SymbolicPiece> pieces;
  int target_index = 0;

  const SymbolicPiece& target() const {
    return pieces.at(static_cast<std::size_t>(target_index));
  }
};

// Checks the constraints every generated board must satisfy: 4..10 pieces,
// a valid target index, and at most 2 pieces per board region. Violations
// are reported before any placement is attempted.
inline void validate_board(const SymbolicBoard& board) {
  const int n = static_cast<int>(board.pieces.size());
  if (n < kMinBoardPieces || n > kMaxBoardPieces) {
    throw std::invalid_argument("board must have between 4 and 10 pieces, got " +
                                std::to_string(n));
  }
  if (board.target_index < 0 || board.target_index >= n) {
    throw std::invalid_argument("target index out of range");
  }
  std::array<int, kNumPositions> per_area{};
  for (const SymbolicPiece& p : board.pieces) {
    if (++per_area[p.position] > kMaxPiecesPerArea) {
      throw std::invalid_argument(
          std::string("more than 2 pieces assigned to area '") +
          std::string(kPositions[p.position].name) + "'");
    }
  }
}

// Every (color, shape, position) combination exactly once, color-major.
inline std::vector<SymbolicPiece> enumerate_symbol_space() {
  std::vector<SymbolicPiece> symbols;
  symbols.reserve(kNumSymbols);
  for (int i = 0; i < kNumSymbols; ++i) symbols.push_back(symbol_at(i));
  return symbols;
}

}  // namespace pentoref
