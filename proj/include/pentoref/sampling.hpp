#pragma once

// Dataset construction: holdout assignment over the symbol space, naive
// board sampling, expression-type-oriented sampling (ETOS), extra-target
// selection, split assembly, and the six holdout evaluation sets.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pentoref/boardgen.hpp"
#include "pentoref/core.hpp"
#include "pentoref/ia.hpp"
#include "pentoref/realize.hpp"
#include "pentoref/rng.hpp"

namespace pentoref {

// Every random decision derives its seed from (master seed, stream,
// index), so commands sharing a seed agree on the holdout assignment and
// every board is reproducible in isolation, in any generation order.
enum class Stream : std::uint64_t {
  HoldoutAssign = 1,
  NaiveBoard = 2,
  NaiveSplit = 3,
  DidactBoard = 4,
  DidactSplit = 5,
  HoColorVal = 6,
  HoColorTest = 7,
  HoPosVal = 8,
  HoPosTest = 9,
  HoUtsVal = 10,
  HoUtsTest = 11,
};

inline std::uint64_t stream_seed(std::uint64_t master, Stream s,
                                 std::uint64_t index = 0) {
  return derive_seed(master, static_cast<std::uint64_t>(s), index);
}

template <typename T>
struct HeldPair {
  T val{};
  T test{};
  bool operator==(const HeldPair&) const = default;
};

// The compositional splits: per shape, two held colors; per surviving
// (shape, color) combo, two held positions; per train symbol, two held
// expression types. 1296 − 12·2·9 − 120·2 = 840 train symbols remain.
struct HoldoutAssignment {
  std::array<HeldPair<std::uint8_t>, kNumShapes> held_colors{};
  // Indexed [shape][color]; entries for held shape-color combos are unused.
  std::array<std::array<HeldPair<std::uint8_t>, kNumColors>, kNumShapes> held_positions{};
  // Indexed by symbol_index; valid only for train symbols.
  std::array<HeldPair<ExpressionType>, kNumSymbols> held_types{};
  std::array<bool, kNumSymbols> train_mask{};
  std::vector<SymbolicPiece> train_symbols;

  bool operator==(const HoldoutAssignment&) const = default;

  bool color_held(int shape, int color) const {
    const auto& h = held_colors[static_cast<std::size_t>(shape)];
    return h.val == color || h.test == color;
  }

  bool position_held(int shape, int color, int position) const {
    if (color_held(shape, color)) return false;
    const auto& h = held_positions[static_cast<std::size_t>(shape)][static_cast<std::size_t>(color)];
    return h.val == position || h.test == position;
  }

  bool is_train(const SymbolicPiece& p) const {
    return train_mask[static_cast<std::size_t>(symbol_index(p))];
  }

  bool type_held(const SymbolicPiece& p, ExpressionType t) const {
    if (!is_train(p)) return false;
    const auto& h = held_types[static_cast<std::size_t>(symbol_index(p))];
    return h.val == t || h.test == t;
  }

  // The 5 expression types a train symbol is taught with, in enum order.
  std::vector<ExpressionType> train_types(const SymbolicPiece& p) const {
    if (!is_train(p)) throw std::invalid_argument("train_types: not a train symbol");
    std::vector<ExpressionType> out;
    out.reserve(5);
    for (ExpressionType t : kExpressionTypes) {
      if (!type_held(p, t)) out.push_back(t);
    }
    return out;
  }

  // 108 = 12 shapes × 1 held color × 9 positions.
  std::vector<SymbolicPiece> ho_color_symbols(bool test_split) const {
    std::vector<SymbolicPiece> out;
    out.reserve(static_cast<std::size_t>(kNumShapes) * kNumPositions);
    for (int s = 0; s < kNumShapes; ++s) {
      const auto& h = held_colors[static_cast<std::size_t>(s)];
      const int c = test_split ? h.test : h.val;
      for (int p = 0; p < kNumPositions; ++p) out.push_back(make_piece(c, s, p));
    }
    return out;
  }

  // 120 = surviving shape-color combos × 1 held position.
  std::vector<SymbolicPiece> ho_pos_symbols(bool test_split) const {
    std::vector<SymbolicPiece> out;
    out.reserve(120);
    for (int s = 0; s < kNumShapes; ++s) {
      for (int c = 0; c < kNumColors; ++c) {
        if (color_held(s, c)) continue;
        const auto& h = held_positions[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)];
        out.push_back(make_piece(c, s, test_split ? h.test : h.val));
      }
    }
    return out;
  }
};

inline HoldoutAssignment assign_holdouts(Rng& rng) {
  HoldoutAssignment a;
  for (int s = 0; s < kNumShapes; ++s) {
    const std::vector<int> c = rng.sample_distinct(kNumColors, 2);
    a.held_colors[static_cast<std::size_t>(s)] = {static_cast<std::uint8_t>(c[0]),
                                                  static_cast<std::uint8_t>(c[1])};
  }
  for (int s = 0; s < kNumShapes; ++s) {
    for (int c = 0; c < kNumColors; ++c) {
      if (a.color_held(s, c)) continue;
      const std::vector<int> p = rng.sample_distinct(kNumPositions, 2);
      a.held_positions[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)] = {
          static_cast<std::uint8_t>(p[0]), static_cast<std::uint8_t>(p[1])};
    }
  }
  for (int i = 0; i < kNumSymbols; ++i) {
    const SymbolicPiece piece = symbol_at(i);
    const bool held = a.color_held(piece.shape, piece.color) ||
                      a.position_held(piece.shape, piece.color, piece.position);
    a.train_mask[static_cast<std::size_t>(i)] = !held;
    if (!held) a.train_symbols.push_back(piece);
  }
  for (const SymbolicPiece& piece : a.train_symbols) {
    const std::vector<int> t = rng.sample_distinct(static_cast<int>(kExpressionTypes.size()), 2);
    a.held_types[static_cast<std::size_t>(symbol_index(piece))] = {
        static_cast<ExpressionType>(t[0]), static_cast<ExpressionType>(t[1])};
  }
  return a;
}

// ---------------------------------------------------------------------------
// Board samplers.

// Uniform piece count, pieces drawn uniformly with replacement from the
// train symbols; a piece whose area already holds 2 is redrawn. One
// uniform target.
inline SymbolicBoard sample_naive_board(const HoldoutAssignment& assignment, Rng& rng) {
  const int n = rng.range(kMinBoardPieces, kMaxBoardPieces);
  std::array<int, kNumPositions> area{};
  SymbolicBoard board;
  board.pieces.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (;;) {
      const SymbolicPiece& p = rng.pick(assignment.train_symbols);
      if (area[p.position] < kMaxPiecesPerArea) {
        board.pieces.push_back(p);
        ++area[p.position];
        break;
      }
    }
  }
  board.target_index = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  return board;
}

// Requested (target, type) cannot be produced from the distractor pool.
struct EtosInfeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Pool symbols split by their relation to the target; exact duplicates of
// the target are dropped so ETOS boards are never ambiguous.
struct DistractorGroups {
  std::vector<SymbolicPiece> diff_color;            // different color
  std::vector<SymbolicPiece> same_color_diff_shape; // same color, different shape
  std::vector<SymbolicPiece> same_cs_diff_pos;      // same color and shape, other position
  // Subset of same_color_diff_shape that also differs in position; the
  // guaranteed color-only sharer of a CSP board comes from here.
  std::vector<SymbolicPiece> color_only;
};

inline DistractorGroups distractor_groups(const SymbolicPiece& target,
                                          const std::vector<SymbolicPiece>& pool) {
  DistractorGroups g;
  for (const SymbolicPiece& p : pool) {
    if (p.color != target.color) {
      g.diff_color.push_back(p);
    } else if (p.shape != target.shape) {
      g.same_color_diff_shape.push_back(p);
      if (p.position != target.position) g.color_only.push_back(p);
    } else if (p.position != target.position) {
      g.same_cs_diff_pos.push_back(p);
    }
  }
  return g;
}

}  // namespace detail

// Constructs a board whose IA outcome for the given target is provably the
// requested expression type. Distractor counts follow the uniform 4..10
// piece range; one pick per required group, remaining slots filled from the
// type's allowed groups; all picks respect the ≤2-per-area rule.
inline SymbolicBoard etos_board(const SymbolicPiece& target, ExpressionType et,
                                const std::vector<SymbolicPiece>& pool, Rng& rng) {
  const detail::DistractorGroups groups = detail::distractor_groups(target, pool);

  std::vector<const std::vector<SymbolicPiece>*> required;
  std::vector<const std::vector<SymbolicPiece>*> fill;
  switch (et) {
    case ExpressionType::C:
      required = {&groups.diff_color};
      fill = {&groups.diff_color};
      break;
    case ExpressionType::S:
      required = {&groups.same_color_diff_shape};
      fill = {&groups.same_color_diff_shape};
      break;
    case ExpressionType::P:
      required = {&groups.same_cs_diff_pos};
      fill = {&groups.same_cs_diff_pos};
      break;
    case ExpressionType::CS:
      required = {&groups.diff_color, &groups.same_color_diff_shape};
      fill = {&groups.diff_color, &groups.same_color_diff_shape};
      break;
    case ExpressionType::CP:
      required = {&groups.diff_color, &groups.same_cs_diff_pos};
      fill = {&groups.diff_color, &groups.same_cs_diff_pos};
      break;
    case ExpressionType::SP:
      // Everyone shares the color, so a diff-color filler would flip the
      // type to CSP.
      required = {&groups.same_color_diff_shape, &groups.same_cs_diff_pos};
      fill = {&groups.same_color_diff_shape, &groups.same_cs_diff_pos};
      break;
    case ExpressionType::CSP:
      required = {&groups.diff_color, &groups.color_only, &groups.same_cs_diff_pos};
      fill = {&groups.diff_color, &groups.same_color_diff_shape, &groups.same_cs_diff_pos};
      break;
  }
  for (const auto* g : required) {
    if (g->empty()) {
      throw EtosInfeasible(std::string("etos_board: no pool distractors for (") +
                           piece_label(target) + ", " +
                           std::string(expression_type_id(et)) + ")");
    }
  }

  const int n = rng.range(kMinBoardPieces, kMaxBoardPieces);
  const int k = n - 1;  // distractor count; k ≥ 3 covers every recipe's minimum

  std::array<int, kNumPositions> area{};
  area[target.position] = 1;
  std::vector<SymbolicPiece> distractors;
  distractors.reserve(static_cast<std::size_t>(k));

  auto add_from = [&](const std::vector<SymbolicPiece>& group) {
    for (int attempt = 0; attempt < 32; ++attempt) {
      const SymbolicPiece& d = rng.pick(group);
      if (area[d.position] < kMaxPiecesPerArea) {
        distractors.push_back(d);
        ++area[d.position];
        return;
      }
    }
    // Crowded areas: scan the group in random order for any symbol that
    // still fits.
    std::vector<int> order(group.size());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    for (int i : order) {
      const SymbolicPiece& d = group[static_cast<std::size_t>(i)];
      if (area[d.position] < kMaxPiecesPerArea) {
        distractors.push_back(d);
        ++area[d.position];
        return;
      }
    }
    throw EtosInfeasible(std::string("etos_board: areas exhausted for (") +
                         piece_label(target) + ", " +
                         std::string(expression_type_id(et)) + ")");
  };

  for (const auto* g : required) add_from(*g);
  std::vector<SymbolicPiece> fill_pool;
  for (const auto* g : fill) fill_pool.insert(fill_pool.end(), g->begin(), g->end());
  for (int i = static_cast<int>(required.size()); i < k; ++i) add_from(fill_pool);

  // Random piece order so the target index carries no signal.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  SymbolicBoard board;
  board.pieces.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int src = order[static_cast<std::size_t>(i)];
    board.pieces[static_cast<std::size_t>(i)] =
        src == 0 ? target : distractors[static_cast<std::size_t>(src - 1)];
    if (src == 0) board.target_index = i;
  }
  validate_board(board);

  const DistinguishingSet d = run_ia(board);
  if (d.ambiguous || classify_expression_type(d) != et) {
    throw std::logic_error("etos_board: construction violated its own guarantee");
  }
  return board;
}

// Distinct extra-target indices, all different from the original target,
// in random order.
inline std::vector<int> pick_extra_targets(const SymbolicBoard& board, Rng& rng,
                                           int count = 3) {
  const int n = static_cast<int>(board.pieces.size());
  if (count < 0 || count > n - 1) {
    throw std::invalid_argument("pick_extra_targets: not enough pieces");
  }
  std::vector<int> others;
  others.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n; ++i) {
    if (i != board.target_index) others.push_back(i);
  }
  rng.shuffle(others);
  others.resize(static_cast<std::size_t>(count));
  return others;
}

// ---------------------------------------------------------------------------
// Dataset assembly.

enum class Generator { Naive, Didact, HoColor, HoPos, HoUts };

inline constexpr std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::Naive: return "naive";
    case Generator::Didact: return "didact";
    case Generator::HoColor: return "ho_color";
    case Generator::HoPos: return "ho_pos";
    case Generator::HoUts: return "ho_uts";
  }
  return "?";
}

struct GenerationConfig {
  std::uint64_t seed = 1;
  int boards = 4200;
  int targets_per_board = 4;
  int val_size = 10000;   // examples
  int test_size = 10000;  // examples
  bool image_emission = false;
};

inline void validate_config(const GenerationConfig& c) {
  if (c.boards <= 0) throw std::invalid_argument("config: boards must be positive");
  if (c.targets_per_board < 1 || c.targets_per_board > kMinBoardPieces) {
    throw std::invalid_argument("config: targets_per_board must be in [1, " +
                                std::to_string(kMinBoardPieces) + "]");
  }
  if (c.val_size < 0 || c.test_size < 0) {
    throw std::invalid_argument("config: split sizes must be non-negative");
  }
  if (c.val_size % c.targets_per_board != 0 || c.test_size % c.targets_per_board != 0) {
    throw std::invalid_argument(
        "config: splits are board-granular; val/test sizes must be multiples of targets_per_board");
  }
  const int reserved = c.val_size / c.targets_per_board + c.test_size / c.targets_per_board;
  if (reserved > c.boards) {
    throw std::invalid_argument("config: val and test splits exceed the board budget");
  }
}

struct DatasetExample {
  int id = 0;
  std::string split;  // train | val | test
  int board_index = 0;
  int target_index = 0;
  std::string expression;
  ExpressionType expression_type = ExpressionType::C;
  DistinguishingSet distinguishing;
  Generator generator = Generator::Naive;
  std::string image_path;  // empty when image emission is off
  bool intended = true;    // target the board was sampled for, not an extra
};

struct Dataset {
  Generator generator = Generator::Naive;
  std::vector<PlacedBoard> boards;
  std::vector<DatasetExample> examples;  // ordered by id
  std::size_t prefilter_examples = 0;
  std::size_t filtered_out = 0;  // held-pair train examples removed (didact)
};

namespace detail {

inline std::string image_name(int board_index) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "images/board_%06d.png", board_index);
  return buf;
}

// Random board-level split labels: whole boards go to val/test so the
// examples sharing one image never straddle splits.
inline std::vector<std::string> board_splits(int boards, int val_boards, int test_boards,
                                             Rng& rng) {
  std::vector<int> order(static_cast<std::size_t>(boards));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<std::string> split(static_cast<std::size_t>(boards), "train");
  for (int i = 0; i < val_boards; ++i) split[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = "val";
  for (int i = val_boards; i < val_boards + test_boards; ++i) {
    split[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = "test";
  }
  return split;
}

inline DatasetExample make_example(const PlacedBoard& placed, int board_index, int target,
                                   Generator gen, bool intended, bool images) {
  SymbolicBoard sym = placed.symbols();
  sym.target_index = target;
  DatasetExample e;
  e.board_index = board_index;
  e.target_index = target;
  e.distinguishing = run_ia(sym);
  e.expression = realize(e.distinguishing);
  e.expression_type = classify_expression_type(e.distinguishing);
  e.generator = gen;
  e.intended = intended;
  if (images) e.image_path = image_name(board_index);
  return e;
}

// Placement failures resample the symbolic board; ETOS infeasibility is a
// hard error and propagates.
template <typename MakeBoard>
PlacedBoard place_with_retries(MakeBoard&& make, Rng& rng, int attempts = 100) {
  for (int i = 0; i < attempts; ++i) {
    try {
      return place_pieces(make(), rng);
    } catch (const PlacementError&) {
    }
  }
  throw PlacementError("board placement failed after repeated resampling");
}

inline void renumber(Dataset& ds) {
  for (std::size_t i = 0; i < ds.examples.size(); ++i) {
    ds.examples[i].id = static_cast<int>(i);
  }
}

}  // namespace detail

inline Dataset build_naive_dataset(const GenerationConfig& config,
                                   const HoldoutAssignment& assignment) {
  validate_config(config);
  const int tpb = config.targets_per_board;
  Rng split_rng(stream_seed(config.seed, Stream::NaiveSplit));
  const std::vector<std::string> splits = detail::board_splits(
      config.boards, config.val_size / tpb, config.test_size / tpb, split_rng);

  Dataset ds;
  ds.generator = Generator::Naive;
  ds.boards.reserve(static_cast<std::size_t>(config.boards));
  ds.examples.reserve(static_cast<std::size_t>(config.boards) * static_cast<std::size_t>(tpb));
  for (int b = 0; b < config.boards; ++b) {
    Rng rng(stream_seed(config.seed, Stream::NaiveBoard, static_cast<std::uint64_t>(b)));
    PlacedBoard placed = detail::place_with_retries(
        [&] { return sample_naive_board(assignment, rng); }, rng);
    std::vector<int> targets{placed.target_index};
    if (tpb > 1) {
      const std::vector<int> extra = pick_extra_targets(placed.symbols(), rng, tpb - 1);
      targets.insert(targets.end(), extra.begin(), extra.end());
    }
    ds.boards.push_back(std::move(placed));
    for (std::size_t t = 0; t < targets.size(); ++t) {
      DatasetExample e = detail::make_example(ds.boards.back(), b, targets[t],
                                              Generator::Naive, t == 0, config.image_emission);
      e.split = splits[static_cast<std::size_t>(b)];
      ds.examples.push_back(std::move(e));
    }
  }
  ds.prefilter_examples = ds.examples.size();
  detail::renumber(ds);
  return ds;
}

// One ETOS board per (train symbol, allowed type, repetition); extra
// targets added as in the naive regime; train examples that hit a held
// (symbol, type) pair are removed afterwards.
inline Dataset build_didact_dataset(const GenerationConfig& config,
                                    const HoldoutAssignment& assignment) {
  validate_config(config);
  const int n_symbols = static_cast<int>(assignment.train_symbols.size());
  const int boards_per_rep = n_symbols * 5;
  if (n_symbols == 0 || config.boards % boards_per_rep != 0) {
    throw std::invalid_argument("config: didact boards must be a multiple of " +
                                std::to_string(boards_per_rep) +
                                " (train symbols × 5 types)");
  }
  const int reps = config.boards / boards_per_rep;
  const int tpb = config.targets_per_board;
  Rng split_rng(stream_seed(config.seed, Stream::DidactSplit));
  const std::vector<std::string> splits = detail::board_splits(
      config.boards, config.val_size / tpb, config.test_size / tpb, split_rng);

  Dataset ds;
  ds.generator = Generator::Didact;
  ds.boards.reserve(static_cast<std::size_t>(config.boards));
  ds.examples.reserve(static_cast<std::size_t>(config.boards) * static_cast<std::size_t>(tpb));
  int b = 0;
  for (int s = 0; s < n_symbols; ++s) {
    const SymbolicPiece target = assignment.train_symbols[static_cast<std::size_t>(s)];
    for (ExpressionType et : assignment.train_types(target)) {
      for (int r = 0; r < reps; ++r, ++b) {
        Rng rng(stream_seed(config.seed, Stream::DidactBoard, static_cast<std::uint64_t>(b)));
        PlacedBoard placed = detail::place_with_retries(
            [&] { return etos_board(target, et, assignment.train_symbols, rng); }, rng);
        std::vector<int> targets{placed.target_index};
        if (tpb > 1) {
          const std::vector<int> extra = pick_extra_targets(placed.symbols(), rng, tpb - 1);
          targets.insert(targets.end(), extra.begin(), extra.end());
        }
        ds.boards.push_back(std::move(placed));
        for (std::size_t t = 0; t < targets.size(); ++t) {
          DatasetExample e = detail::make_example(ds.boards.back(), b, targets[t],
                                                  Generator::Didact, t == 0,
                                                  config.image_emission);
          e.split = splits[static_cast<std::size_t>(b)];
          ds.examples.push_back(std::move(e));
        }
      }
    }
  }
  ds.prefilter_examples = ds.examples.size();
  std::erase_if(ds.examples, [&](const DatasetExample& e) {
    if (e.split != "train") return false;
    const SymbolicPiece& t =
        ds.boards[static_cast<std::size_t>(e.board_index)].pieces[static_cast<std::size_t>(e.target_index)].symbol;
    return assignment.type_held(t, e.expression_type);
  });
  ds.filtered_out = ds.prefilter_examples - ds.examples.size();
  detail::renumber(ds);
  return ds;
}

// ---------------------------------------------------------------------------
// Holdout evaluation sets.

struct HoldoutSets {
  Dataset ho_color_val, ho_color_test;
  Dataset ho_pos_val, ho_pos_test;
  Dataset ho_uts_val, ho_uts_test;

  std::array<std::pair<std::string, const Dataset*>, 6> named() const {
    return {{{"ho_color_val", &ho_color_val},
             {"ho_color_test", &ho_color_test},
             {"ho_pos_val", &ho_pos_val},
             {"ho_pos_test", &ho_pos_test},
             {"ho_uts_val", &ho_uts_val},
             {"ho_uts_test", &ho_uts_test}}};
  }
};

namespace detail {

inline Dataset build_holdout_set(Generator gen, bool test_split,
                                 const GenerationConfig& config,
                                 const HoldoutAssignment& assignment) {
  std::vector<std::pair<SymbolicPiece, ExpressionType>> jobs;
  std::vector<SymbolicPiece> pool = assignment.train_symbols;
  Stream stream;
  switch (gen) {
    case Generator::HoColor: {
      stream = test_split ? Stream::HoColorTest : Stream::HoColorVal;
      const std::vector<SymbolicPiece> targets = assignment.ho_color_symbols(test_split);
      for (const SymbolicPiece& t : targets) {
        for (ExpressionType et : kExpressionTypes) jobs.emplace_back(t, et);
      }
      // P/CP/SP/CSP recipes need color-and-shape sharers, which for a held
      // color exist only among the holdout symbols themselves.
      pool.insert(pool.end(), targets.begin(), targets.end());
      break;
    }
    case Generator::HoPos: {
      stream = test_split ? Stream::HoPosTest : Stream::HoPosVal;
      const std::vector<SymbolicPiece> targets = assignment.ho_pos_symbols(test_split);
      for (const SymbolicPiece& t : targets) {
        for (ExpressionType et : kExpressionTypes) jobs.emplace_back(t, et);
      }
      pool.insert(pool.end(), targets.begin(), targets.end());
      break;
    }
    case Generator::HoUts: {
      stream = test_split ? Stream::HoUtsTest : Stream::HoUtsVal;
      for (const SymbolicPiece& t : assignment.train_symbols) {
        const auto& h = assignment.held_types[static_cast<std::size_t>(symbol_index(t))];
        jobs.emplace_back(t, test_split ? h.test : h.val);
      }
      break;
    }
    default:
      throw std::invalid_argument("build_holdout_set: not a holdout generator");
  }

  Dataset ds;
  ds.generator = gen;
  ds.boards.reserve(jobs.size());
  ds.examples.reserve(jobs.size());
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    Rng rng(stream_seed(config.seed, stream, j));
    PlacedBoard placed = detail::place_with_retries(
        [&] { return etos_board(jobs[j].first, jobs[j].second, pool, rng); }, rng);
    ds.boards.push_back(std::move(placed));
    DatasetExample e = detail::make_example(ds.boards.back(), static_cast<int>(j),
                                            ds.boards.back().target_index, gen, true,
                                            config.image_emission);
    e.split = test_split ? "test" : "val";
    ds.examples.push_back(std::move(e));
  }
  ds.prefilter_examples = ds.examples.size();
  detail::renumber(ds);
  return ds;
}

}  // namespace detail

inline HoldoutSets build_holdout_sets(const GenerationConfig& config,
                                      const HoldoutAssignment& assignment) {
  HoldoutSets sets;
  sets.ho_color_val = detail::build_holdout_set(Generator::HoColor, false, config, assignment);
  sets.ho_color_test = detail::build_holdout_set(Generator::HoColor, true, config, assignment);
  sets.ho_pos_val = detail::build_holdout_set(Generator::HoPos, false, config, assignment);
  sets.ho_pos_test = detail::build_holdout_set(Generator::HoPos, true, config, assignment);
  sets.ho_uts_val = detail::build_holdout_set(Generator::HoUts, false, config, assignment);
  sets.ho_uts_test = detail::build_holdout_set(Generator::HoUts, true, config, assignment);
  return sets;
}

// Convenience: the assignment both dataset commands agree on for a seed.
inline HoldoutAssignment holdouts_for_seed(std::uint64_t master_seed) {
  Rng rng(stream_seed(master_seed, Stream::HoldoutAssign));
  return assign_holdouts(rng);
}

}  // namespace pentoref
