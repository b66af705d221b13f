#pragma once

// Board geometry and rendering: placement of pieces onto the 30x30 tile
// grid (partitioned into nine 10x10 areas, one per position value),
// rasterization at 224x224 pixels, and bounding-box extraction.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pentoref/core.hpp"
#include "pentoref/rng.hpp"

namespace pentoref {

inline constexpr int kGridTiles = 30;
inline constexpr int kImageSize = 224;
inline constexpr int kAreaTiles = 10;
inline constexpr int kPlacementRetries = 100;

struct Tile {
  int col = 0, row = 0;
  bool operator==(const Tile&) const = default;
  auto operator<=>(const Tile&) const = default;
};

struct PixelRect {
  int x = 0, y = 0, w = 0, h = 0;
  bool operator==(const PixelRect&) const = default;
};

// Tile column/row c covers pixels [tile_to_px(c), tile_to_px(c+1)).
// 224 is not divisible by 30, so tiles are 7 or 8 pixels wide.
inline int tile_to_px(int tile) {
  return static_cast<int>(std::lround(tile * static_cast<double>(kImageSize) / kGridTiles));
}

// Tile rectangle of a position's area within the 3x3 partition.
struct AreaRect {
  int col0 = 0, row0 = 0;  // top-left tile, spans kAreaTiles in each axis
};

inline AreaRect area_of(std::uint8_t position) {
  const PositionValue& p = kPositions.at(position);
  return {p.col * kAreaTiles, p.row * kAreaTiles};
}

// Canonical cells rotated clockwise and renormalized to the origin.
inline std::array<Cell, 5> rotated_cells(std::uint8_t shape, Rotation rotation) {
  std::array<Cell, 5> cells = kShapes.at(shape).cells;
  for (Cell& c : cells) {
    int x = c.x, y = c.y;
    switch (rotation) {
      case Rotation::Deg0: break;
      case Rotation::Deg90: { const int t = x; x = -y; y = t; break; }
      case Rotation::Deg180: x = -x; y = -y; break;
      case Rotation::Deg270: { const int t = x; x = y; y = -t; break; }
    }
    c.x = static_cast<std::int8_t>(x);
    c.y = static_cast<std::int8_t>(y);
  }
  std::int8_t min_x = cells[0].x, min_y = cells[0].y;
  for (const Cell& c : cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
  }
  for (Cell& c : cells) {
    c.x = static_cast<std::int8_t>(c.x - min_x);
    c.y = static_cast<std::int8_t>(c.y - min_y);
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

struct PlacedPiece {
  SymbolicPiece symbol;
  Rotation rotation = Rotation::Deg0;
  Tile anchor;                    // top-left of the rotated bounding box
  std::array<Tile, 5> occupied;   // anchor + rotated cells
  PixelRect bbox;                 // tight pixel rect over the occupied tiles
  bool operator==(const PlacedPiece&) const = default;
};

struct PlacedBoard {
  std::vector<PlacedPiece> pieces;
  int target_index = 0;

  bool operator==(const PlacedBoard&) const = default;

  const PlacedPiece& target() const {
    return pieces.at(static_cast<std::size_t>(target_index));
  }

  SymbolicBoard symbols() const {
    SymbolicBoard b;
    b.target_index = target_index;
    b.pieces.reserve(pieces.size());
    for (const PlacedPiece& p : pieces) b.pieces.push_back(p.symbol);
    return b;
  }
};

// Tight pixel rectangle over a set of occupied tiles (the 1px black
// outline is drawn inside the tiles, so it is covered too).
inline PixelRect bbox_of_tiles(const std::array<Tile, 5>& occupied) {
  int min_col = occupied[0].col, max_col = occupied[0].col;
  int min_row = occupied[0].row, max_row = occupied[0].row;
  for (const Tile& t : occupied) {
    min_col = std::min(min_col, t.col);
    max_col = std::max(max_col, t.col);
    min_row = std::min(min_row, t.row);
    max_row = std::max(max_row, t.row);
  }
  const int x = tile_to_px(min_col);
  const int y = tile_to_px(min_row);
  return {x, y, tile_to_px(max_col + 1) - x, tile_to_px(max_row + 1) - y};
}

inline PixelRect bbox_of(const PlacedPiece& piece) { return bbox_of_tiles(piece.occupied); }

// Raised when a piece cannot be fitted after the retry budget; the caller
// is expected to resample the symbolic board.
struct PlacementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gives every piece a uniform random rotation and a uniform random anchor
// such that all five tiles land inside the piece's area. Colliding
// placements are redrawn up to kPlacementRetries times.
inline PlacedBoard place_pieces(const SymbolicBoard& board, Rng& rng) {
  validate_board(board);

  std::array<std::array<int, kGridTiles>, kGridTiles> owner{};
  for (auto& row : owner) row.fill(-1);

  PlacedBoard placed;
  placed.target_index = board.target_index;
  placed.pieces.reserve(board.pieces.size());

  for (std::size_t i = 0; i < board.pieces.size(); ++i) {
    const SymbolicPiece& symbol = board.pieces[i];
    const AreaRect area = area_of(symbol.position);
    bool done = false;
    for (int attempt = 0; attempt < kPlacementRetries && !done; ++attempt) {
      const Rotation rotation = kRotations[rng.below(4)];
      const std::array<Cell, 5> cells = rotated_cells(symbol.shape, rotation);
      int w = 0, h = 0;
      for (const Cell& c : cells) {
        w = std::max(w, c.x + 1);
        h = std::max(h, c.y + 1);
      }
      const Tile anchor{area.col0 + static_cast<int>(rng.below(kAreaTiles - w + 1)),
                        area.row0 + static_cast<int>(rng.below(kAreaTiles - h + 1))};
      std::array<Tile, 5> tiles;
      bool free = true;
      for (std::size_t k = 0; k < 5; ++k) {
        tiles[k] = {anchor.col + cells[k].x, anchor.row + cells[k].y};
        if (owner[tiles[k].row][tiles[k].col] != -1) free = false;
      }
      if (!free) continue;
      for (const Tile& t : tiles) owner[t.row][t.col] = static_cast<int>(i);
      placed.pieces.push_back(
          {symbol, rotation, anchor, tiles, bbox_of_tiles(tiles)});
      done = true;
    }
    if (!done) {
      throw PlacementError("piece " + std::to_string(i) + " (" +
                           piece_label(symbol) + ") did not fit after " +
                           std::to_string(kPlacementRetries) + " attempts");
    }
  }
  return placed;
}

// Reconstructs a placed board from stored symbols, rotations and tiles,
// e.g. when regenerating images from a manifest.
inline PlacedPiece placed_piece_from_tiles(const SymbolicPiece& symbol, Rotation rotation,
                                           const std::array<Tile, 5>& occupied) {
  Tile anchor = occupied[0];
  for (const Tile& t : occupied) {
    anchor.col = std::min(anchor.col, t.col);
    anchor.row = std::min(anchor.row, t.row);
  }
  return {symbol, rotation, anchor, occupied, bbox_of_tiles(occupied)};
}

// ---------------------------------------------------------------------------
// Rasterization.

struct BoardImage {
  int width = kImageSize;
  int height = kImageSize;
  std::vector<std::uint8_t> rgb;  // row-major, 3 bytes per pixel

  bool operator==(const BoardImage&) const = default;

  std::uint8_t* pixel(int x, int y) {
    return rgb.data() + 3 * (static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x));
  }
  const std::uint8_t* pixel(int x, int y) const {
    return rgb.data() + 3 * (static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x));
  }
};

namespace detail {

// Pixel -> tile index lookup for the uneven 7/8px tiles.
inline const std::array<int, kImageSize>& px_to_tile() {
  static const std::array<int, kImageSize> table = [] {
    std::array<int, kImageSize> t{};
    for (int tile = 0; tile < kGridTiles; ++tile) {
      for (int px = tile_to_px(tile); px < tile_to_px(tile + 1); ++px) t[px] = tile;
    }
    return t;
  }();
  return table;
}

}  // namespace detail

// Paints the placed pieces onto a white 224x224 canvas: each occupied tile
// filled with the piece color, with a 1px black outline around each
// piece's region. Purely a function of the placed board.
inline BoardImage render(const PlacedBoard& board) {
  BoardImage img;
  img.rgb.assign(static_cast<std::size_t>(kImageSize) * kImageSize * 3, 255);

  std::array<std::array<int, kGridTiles>, kGridTiles> owner{};
  for (auto& row : owner) row.fill(-1);
  for (std::size_t i = 0; i < board.pieces.size(); ++i) {
    for (const Tile& t : board.pieces[i].occupied) {
      owner[t.row][t.col] = static_cast<int>(i);
    }
  }

  const auto& to_tile = detail::px_to_tile();
  for (int y = 0; y < kImageSize; ++y) {
    const int row = to_tile[y];
    for (int x = 0; x < kImageSize; ++x) {
      const int piece = owner[row][to_tile[x]];
      if (piece < 0) continue;
      auto same = [&](int nx, int ny) {
        if (nx < 0 || ny < 0 || nx >= kImageSize || ny >= kImageSize) return false;
        return owner[to_tile[ny]][to_tile[nx]] == piece;
      };
      std::uint8_t* px = img.pixel(x, y);
      if (same(x - 1, y) && same(x + 1, y) && same(x, y - 1) && same(x, y + 1)) {
        const Rgb& c = kColors.at(board.pieces[static_cast<std::size_t>(piece)].symbol.color).rgb;
        px[0] = c.r;
        px[1] = c.g;
        px[2] = c.b;
      } else {
        px[0] = px[1] = px[2] = 0;  // outline
      }
    }
  }
  return img;
}

// Sub-raster of `bbox` grown by `dilation` pixels on each side, clamped to
// the image bounds.
inline BoardImage crop_target(const BoardImage& image, const PixelRect& bbox,
                              int dilation = 5) {
  if (bbox.w <= 0 || bbox.h <= 0) {
    throw std::invalid_argument("crop_target: degenerate bounding box");
  }
  if (bbox.x < 0 || bbox.y < 0 || bbox.x + bbox.w > image.width ||
      bbox.y + bbox.h > image.height) {
    throw std::invalid_argument("crop_target: bounding box outside image");
  }
  const int x0 = std::max(0, bbox.x - dilation);
  const int y0 = std::max(0, bbox.y - dilation);
  const int x1 = std::min(image.width, bbox.x + bbox.w + dilation);
  const int y1 = std::min(image.height, bbox.y + bbox.h + dilation);

  BoardImage out;
  out.width = x1 - x0;
  out.height = y1 - y0;
  out.rgb.resize(static_cast<std::size_t>(out.width) * static_cast<std::size_t>(out.height) * 3);
  for (int y = y0; y < y1; ++y) {
    std::copy(image.pixel(x0, y), image.pixel(x0, y) + 3 * out.width,
              out.pixel(0, y - y0));
  }
  return out;
}

}  // namespace pentoref
