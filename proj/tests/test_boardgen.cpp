#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "pentoref/boardgen.hpp"
#include "pentoref/png.hpp"
#include "pentoref/rng.hpp"

using namespace pentoref;

namespace {

SymbolicPiece named_piece(const char* color, const char* shape, const char* position) {
  return make_piece(*color_from_name(color), *shape_from_name(shape),
                    *position_from_name(position));
}

bool is_white(const std::uint8_t* px) { return px[0] == 255 && px[1] == 255 && px[2] == 255; }
bool is_black(const std::uint8_t* px) { return px[0] == 0 && px[1] == 0 && px[2] == 0; }

bool is_rgb(const std::uint8_t* px, const Rgb& c) {
  return px[0] == c.r && px[1] == c.g && px[2] == c.b;
}

// Valid random boards: at most two pieces per area by drawing positions
// from a doubled, shuffled deck.
SymbolicBoard random_board(Rng& rng) {
  std::vector<int> deck;
  for (int p = 0; p < kNumPositions; ++p) { deck.push_back(p); deck.push_back(p); }
  rng.shuffle(deck);
  SymbolicBoard board;
  const int n = rng.range(kMinBoardPieces, kMaxBoardPieces);
  for (int i = 0; i < n; ++i) {
    board.pieces.push_back(
        make_piece(rng.range(0, kNumColors - 1), rng.range(0, kNumShapes - 1), deck[i]));
  }
  board.target_index = rng.range(0, n - 1);
  return board;
}

}  // namespace

TEST_CASE("tile grid covers 224 pixels with 7px and 8px tiles") {
  CHECK(tile_to_px(0) == 0);
  CHECK(tile_to_px(kGridTiles) == kImageSize);
  for (int t = 0; t < kGridTiles; ++t) {
    const int w = tile_to_px(t + 1) - tile_to_px(t);
    CHECK((w == 7 || w == 8));
  }
  // Pixel -> tile is the inverse of the span mapping.
  for (int px = 0; px < kImageSize; ++px) {
    const int t = detail::px_to_tile()[px];
    CHECK(tile_to_px(t) <= px);
    CHECK(px < tile_to_px(t + 1));
  }
}

TEST_CASE("areas tile the grid as a 3x3 partition") {
  std::set<std::pair<int, int>> covered;
  for (int p = 0; p < kNumPositions; ++p) {
    const AreaRect a = area_of(static_cast<std::uint8_t>(p));
    for (int r = a.row0; r < a.row0 + kAreaTiles; ++r) {
      for (int c = a.col0; c < a.col0 + kAreaTiles; ++c) {
        CHECK(covered.insert({r, c}).second);
      }
    }
  }
  CHECK(covered.size() == kGridTiles * kGridTiles);
  CHECK(area_of(*position_from_name("top left")).col0 == 0);
  CHECK(area_of(*position_from_name("center")).col0 == 10);
  CHECK(area_of(*position_from_name("center")).row0 == 10);
  CHECK(area_of(*position_from_name("bottom right")).row0 == 20);
}

TEST_CASE("rotated cells stay normalized and match independent transforms") {
  const auto x_shape = *shape_from_name("X");
  for (Rotation r : kRotations) {
    CHECK(rotated_cells(x_shape, r) == rotated_cells(x_shape, Rotation::Deg0));
  }

  // I rotated by 90 degrees lies flat.
  const auto i_cells = rotated_cells(*shape_from_name("I"), Rotation::Deg90);
  for (int k = 0; k < 5; ++k) {
    CHECK(i_cells[static_cast<std::size_t>(k)] == Cell{static_cast<std::int8_t>(k), 0});
  }

  for (std::uint8_t s = 0; s < kNumShapes; ++s) {
    const auto base = rotated_cells(s, Rotation::Deg0);

    // Identity rotation equals the canonical cells, sorted.
    auto canonical = kShapes[s].cells;
    std::sort(canonical.begin(), canonical.end());
    CHECK(base == canonical);

    for (Rotation r : kRotations) {
      const auto cells = rotated_cells(s, r);
      CHECK(std::set<Cell>(cells.begin(), cells.end()).size() == 5);
      CHECK(std::is_sorted(cells.begin(), cells.end()));
      std::int8_t min_x = 127, min_y = 127;
      for (const Cell& c : cells) {
        min_x = std::min(min_x, c.x);
        min_y = std::min(min_y, c.y);
        CHECK(c.x >= 0);
        CHECK(c.y >= 0);
      }
      CHECK(min_x == 0);
      CHECK(min_y == 0);
    }

    // 180 degrees is the point reflection of the canonical frame.
    std::int8_t w = 0, h = 0;
    for (const Cell& c : base) { w = std::max(w, c.x); h = std::max(h, c.y); }
    std::array<Cell, 5> reflected;
    for (std::size_t k = 0; k < 5; ++k) {
      reflected[k] = {static_cast<std::int8_t>(w - base[k].x),
                      static_cast<std::int8_t>(h - base[k].y)};
    }
    std::sort(reflected.begin(), reflected.end());
    CHECK(rotated_cells(s, Rotation::Deg180) == reflected);

    // 90 degrees clockwise maps (x, y) to (h - y, x).
    std::array<Cell, 5> quarter;
    for (std::size_t k = 0; k < 5; ++k) {
      quarter[k] = {static_cast<std::int8_t>(h - base[k].y), base[k].x};
    }
    std::sort(quarter.begin(), quarter.end());
    CHECK(rotated_cells(s, Rotation::Deg90) == quarter);
  }
}

TEST_CASE("placement keeps pieces inside their areas without overlap") {
  const SymbolicBoard board{{named_piece("red", "X", "center"),
                             named_piece("blue", "I", "top left"),
                             named_piece("green", "T", "top left"),
                             named_piece("yellow", "L", "bottom right")},
                            0};
  Rng rng(42);
  const PlacedBoard placed = place_pieces(board, rng);
  REQUIRE(placed.pieces.size() == 4);
  CHECK(placed.target_index == 0);
  CHECK(placed.symbols().pieces == board.pieces);

  std::set<Tile> all_tiles;
  for (const PlacedPiece& p : placed.pieces) {
    const AreaRect area = area_of(p.symbol.position);
    int min_col = kGridTiles, min_row = kGridTiles;
    for (const Tile& t : p.occupied) {
      CHECK(t.col >= area.col0);
      CHECK(t.col < area.col0 + kAreaTiles);
      CHECK(t.row >= area.row0);
      CHECK(t.row < area.row0 + kAreaTiles);
      CHECK(all_tiles.insert(t).second);  // globally disjoint
      min_col = std::min(min_col, t.col);
      min_row = std::min(min_row, t.row);
    }
    CHECK(p.anchor == Tile{min_col, min_row});
    CHECK(p.bbox == bbox_of(p));

    // Occupied tiles are the rotated cells shifted by the anchor.
    const auto cells = rotated_cells(p.symbol.shape, p.rotation);
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(p.occupied[k] == Tile{p.anchor.col + cells[k].x, p.anchor.row + cells[k].y});
    }
  }

  Rng again(42);
  CHECK(place_pieces(board, again) == placed);
}

TEST_CASE("placement rejects symbolically invalid boards before drawing") {
  SymbolicBoard crowded{{named_piece("red", "X", "center"),
                         named_piece("blue", "I", "center"),
                         named_piece("green", "T", "center"),
                         named_piece("yellow", "L", "bottom right")},
                        0};
  Rng rng(1);
  CHECK_THROWS_AS(place_pieces(crowded, rng), std::invalid_argument);
  CHECK_THROWS_AS(place_pieces(SymbolicBoard{{named_piece("red", "X", "center")}, 0}, rng),
                  std::invalid_argument);
}

TEST_CASE("rendering an empty board gives a plain white canvas") {
  const BoardImage img = render(PlacedBoard{});
  REQUIRE(img.rgb.size() == static_cast<std::size_t>(kImageSize) * kImageSize * 3);
  CHECK(std::all_of(img.rgb.begin(), img.rgb.end(),
                    [](std::uint8_t v) { return v == 255; }));
}

TEST_CASE("rendered pieces use exact fill colors inside black outlines") {
  SymbolicBoard board{{named_piece("red", "X", "center"),
                       named_piece("navy blue", "I", "top left"),
                       named_piece("olive green", "U", "bottom right"),
                       named_piece("pink", "W", "top right")},
                      0};
  Rng rng(7);
  const PlacedBoard placed = place_pieces(board, rng);
  const BoardImage img = render(placed);
  CHECK(img == render(placed));  // pure function of the placement

  std::size_t outline = 0, fill = 0, white = 0;
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const std::uint8_t* px = img.pixel(x, y);
      if (is_white(px)) { ++white; continue; }
      if (is_black(px)) { ++outline; continue; }
      const bool known = std::any_of(
          placed.pieces.begin(), placed.pieces.end(),
          [&](const PlacedPiece& p) { return is_rgb(px, kColors[p.symbol.color].rgb); });
      CHECK(known);
      ++fill;
    }
  }
  CHECK(outline > 0);
  CHECK(fill > 0);
  CHECK(white > 0);

  for (const PlacedPiece& p : placed.pieces) {
    std::size_t piece_pixels = 0;
    int min_x = kImageSize, min_y = kImageSize, max_x = -1, max_y = -1;
    for (const Tile& t : p.occupied) {
      // A pixel 3px into a tile has all four neighbors inside the same
      // tile, so it must carry the fill color.
      CHECK(is_rgb(img.pixel(tile_to_px(t.col) + 3, tile_to_px(t.row) + 3),
                   kColors[p.symbol.color].rgb));
      for (int y = tile_to_px(t.row); y < tile_to_px(t.row + 1); ++y) {
        for (int x = tile_to_px(t.col); x < tile_to_px(t.col + 1); ++x) {
          CHECK_FALSE(is_white(img.pixel(x, y)));  // occupied tiles are painted
          ++piece_pixels;
          min_x = std::min(min_x, x);
          min_y = std::min(min_y, y);
          max_x = std::max(max_x, x);
          max_y = std::max(max_y, y);
        }
      }
    }
    CHECK(piece_pixels >= 5 * 7 * 7);
    // The stored bbox is exactly the painted extent: tight on all sides.
    CHECK(p.bbox == PixelRect{min_x, min_y, max_x - min_x + 1, max_y - min_y + 1});
  }
}

TEST_CASE("crop_target extracts the dilated bounding box") {
  SymbolicBoard board{{named_piece("red", "X", "center"),
                       named_piece("blue", "I", "top left"),
                       named_piece("green", "T", "top right"),
                       named_piece("yellow", "L", "bottom left")},
                      0};
  Rng rng(11);
  const PlacedBoard placed = place_pieces(board, rng);
  const BoardImage img = render(placed);
  const PixelRect bbox = placed.target().bbox;

  const BoardImage tight = crop_target(img, bbox, 0);
  CHECK(tight.width == bbox.w);
  CHECK(tight.height == bbox.h);
  for (int y = 0; y < tight.height; ++y) {
    for (int x = 0; x < tight.width; ++x) {
      CHECK(is_rgb(tight.pixel(x, y), {img.pixel(bbox.x + x, bbox.y + y)[0],
                                       img.pixel(bbox.x + x, bbox.y + y)[1],
                                       img.pixel(bbox.x + x, bbox.y + y)[2]}));
    }
  }

  // The center area keeps a margin to the image edge, so 5px dilation is
  // never clamped there.
  const BoardImage grown = crop_target(img, bbox);
  CHECK(grown.width == bbox.w + 10);
  CHECK(grown.height == bbox.h + 10);

  // A bbox touching the top-left corner clamps instead of underflowing.
  const BoardImage clamped = crop_target(img, {0, 0, 20, 20}, 5);
  CHECK(clamped.width == 25);
  CHECK(clamped.height == 25);

  CHECK_THROWS_AS(crop_target(img, {10, 10, 0, 5}, 5), std::invalid_argument);
  CHECK_THROWS_AS(crop_target(img, {220, 220, 10, 10}, 5), std::invalid_argument);
}

TEST_CASE("reconstruction from stored tiles matches the original placement") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const SymbolicBoard board = random_board(rng);
    const PlacedBoard placed = place_pieces(board, rng);
    for (const PlacedPiece& p : placed.pieces) {
      CHECK(placed_piece_from_tiles(p.symbol, p.rotation, p.occupied) == p);
    }
  }
}

TEST_CASE("png encoding is deterministic and decodes to the same pixels") {
  SymbolicBoard board{{named_piece("red", "X", "center"),
                       named_piece("blue", "I", "top left"),
                       named_piece("green", "T", "top right"),
                       named_piece("grey", "Z", "bottom center")},
                      0};
  Rng rng(2024);
  const BoardImage img = render(place_pieces(board, rng));

  const std::vector<std::uint8_t> bytes = encode_png(img);
  CHECK(bytes == encode_png(img));  // byte-stable across calls

  // PNG signature.
  REQUIRE(bytes.size() > 8);
  const std::uint8_t sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  for (int i = 0; i < 8; ++i) CHECK(bytes[static_cast<std::size_t>(i)] == sig[i]);

  const BoardImage back = decode_png(bytes);
  CHECK(back.width == img.width);
  CHECK(back.height == img.height);
  CHECK(back == img);

  CHECK_THROWS_AS(decode_png({1, 2, 3}), std::runtime_error);
}

TEST_CASE("random boards place and render cleanly") {
  Rng rng(314159);
  for (int trial = 0; trial < 50; ++trial) {
    const SymbolicBoard board = random_board(rng);
    const PlacedBoard placed = place_pieces(board, rng);

    std::set<Tile> tiles;
    for (const PlacedPiece& p : placed.pieces) {
      const AreaRect area = area_of(p.symbol.position);
      for (const Tile& t : p.occupied) {
        REQUIRE(tiles.insert(t).second);
        REQUIRE(t.col >= area.col0);
        REQUIRE(t.col < area.col0 + kAreaTiles);
        REQUIRE(t.row >= area.row0);
        REQUIRE(t.row < area.row0 + kAreaTiles);
      }
    }

    const BoardImage img = render(placed);
    for (const PlacedPiece& p : placed.pieces) {
      const Tile t = p.occupied[2];
      REQUIRE(is_rgb(img.pixel(tile_to_px(t.col) + 3, tile_to_px(t.row) + 3),
                     kColors[p.symbol.color].rgb));
    }
  }
}
