#pragma once

// Incremental selection of distinguishing properties: walk the properties
// in preference order and keep each one that excludes at least one of the
// remaining distractors. Distractors are tracked by board index, so
// repeated symbols form a proper multiset.

#include <vector>

#include "pentoref/core.hpp"

namespace pentoref {

struct Selection {
  Property property;
  std::uint8_t value = 0;  // always the target's value for that property
  bool operator==(const Selection&) const = default;
};

struct DistinguishingSet {
  std::vector<Selection> selections;  // in selection order
  bool ambiguous = false;             // distractors survived every property
  bool operator==(const DistinguishingSet&) const = default;

  unsigned property_mask() const {
    unsigned mask = 0;
    for (const Selection& s : selections) mask |= property_bit(s.property);
    return mask;
  }
};

// Runs the incremental selection for the board's target against all other
// pieces. When distractors survive every property (exact duplicates of the
// target), the result is flagged ambiguous and mentions all three
// properties, which realizes as the fully specified expression.
inline DistinguishingSet run_ia(const SymbolicBoard& board,
                                const PreferenceOrder& order = kDefaultPreferenceOrder) {
  if (!valid_preference_order(order)) {
    throw std::invalid_argument("preference order must mention each property once");
  }
  if (board.pieces.empty() || board.target_index < 0 ||
      board.target_index >= static_cast<int>(board.pieces.size())) {
    throw std::invalid_argument("board has no valid target");
  }
  const SymbolicPiece& target = board.target();

  std::vector<int> remaining;
  remaining.reserve(board.pieces.size());
  for (int i = 0; i < static_cast<int>(board.pieces.size()); ++i) {
    if (i != board.target_index) remaining.push_back(i);
  }

  DistinguishingSet result;
  for (Property p : order) {
    std::vector<int> kept;
    kept.reserve(remaining.size());
    for (int i : remaining) {
      if (shares_property(board.pieces[static_cast<std::size_t>(i)], target, p)) {
        kept.push_back(i);
      }
    }
    if (kept.size() < remaining.size()) {
      result.selections.push_back({p, property_value(target, p)});
      remaining = std::move(kept);
    }
  }

  if (!remaining.empty()) {
    result.ambiguous = true;
    result.selections.clear();
    for (Property p : order) {
      result.selections.push_back({p, property_value(target, p)});
    }
  }
  return result;
}

// Maps the selected property subset onto its expression type. A board where
// nothing distinguishes the target has no type; that only happens on
// degenerate inputs, never on generated boards.
inline ExpressionType classify_expression_type(const DistinguishingSet& d) {
  if (d.selections.empty()) {
    throw std::invalid_argument("no distinguishing properties");
  }
  return expression_type_from_mask(d.property_mask());
}

}  // namespace pentoref
