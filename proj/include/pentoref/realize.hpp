#pragma once

// Surface realization of distinguishing sets into template expressions,
// the inverse parser, the 38-word vocabulary, and the full universe of
// realizable expressions.

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pentoref/core.hpp"
#include "pentoref/ia.hpp"

namespace pentoref {

struct Template {
  ExpressionType type;
  std::string_view pattern;
};

inline constexpr std::array<Template, 7> kTemplates = {{
    {ExpressionType::C, "Take the [color] piece"},
    {ExpressionType::S, "Take the [shape]"},
    {ExpressionType::P, "Take the piece at [position]"},
    {ExpressionType::CS, "Take the [color] [shape]"},
    {ExpressionType::CP, "Take the [color] piece at [position]"},
    {ExpressionType::SP, "Take the [shape] at [position]"},
    {ExpressionType::CSP, "Take the [color] [shape] at [position]"},
}};

inline const Template& template_for(ExpressionType t) {
  for (const Template& tpl : kTemplates) {
    if (tpl.type == t) return tpl;
  }
  throw std::logic_error("no template for expression type");
}

// Values for the mentioned properties of one expression.
struct ParsedExpression {
  ExpressionType type = ExpressionType::C;
  std::optional<std::uint8_t> color;
  std::optional<std::uint8_t> shape;
  std::optional<std::uint8_t> position;

  bool operator==(const ParsedExpression&) const = default;

  std::optional<std::uint8_t> value(Property p) const {
    switch (p) {
      case Property::Color: return color;
      case Property::Shape: return shape;
      case Property::Position: return position;
    }
    return std::nullopt;
  }
};

namespace detail {

inline void set_value(ParsedExpression& e, Property p, std::uint8_t v) {
  switch (p) {
    case Property::Color: e.color = v; break;
    case Property::Shape: e.shape = v; break;
    case Property::Position: e.position = v; break;
  }
}

inline std::string fill_template(const Template& tpl, const ParsedExpression& values) {
  std::string out;
  const std::string_view pattern = tpl.pattern;
  std::size_t pos = 0;
  while (pos < pattern.size()) {
    if (pattern[pos] == '[') {
      const std::size_t end = pattern.find(']', pos);
      const std::string_view slot = pattern.substr(pos + 1, end - pos - 1);
      std::string_view name;
      if (slot == "color") {
        name = kColors.at(*values.color).name;
      } else if (slot == "shape") {
        name = kShapes.at(*values.shape).name;
      } else {
        name = kPositions.at(*values.position).name;
      }
      out += name;
      pos = end + 1;
    } else {
      out += pattern[pos];
      ++pos;
    }
  }
  return out;
}

}  // namespace detail

inline std::string realize_values(const ParsedExpression& values) {
  return detail::fill_template(template_for(values.type), values);
}

// Fills the unique template whose slots match the selected properties.
inline std::string realize(const DistinguishingSet& d) {
  if (d.selections.empty()) {
    throw std::invalid_argument("unrealizable: empty selection");
  }
  ParsedExpression values;
  values.type = expression_type_from_mask(d.property_mask());
  for (const Selection& s : d.selections) {
    detail::set_value(values, s.property, s.value);
  }
  return realize_values(values);
}

// The expression a given piece would receive under a given type.
inline std::string realize_for(const SymbolicPiece& piece, ExpressionType t) {
  ParsedExpression values;
  values.type = t;
  for (Property p : expression_type_properties(t)) {
    detail::set_value(values, p, property_value(piece, p));
  }
  return realize_values(values);
}

inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) tokens.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

inline std::string join_tokens(const std::vector<std::string>& tokens,
                               std::size_t begin = 0) {
  std::string out;
  for (std::size_t i = begin; i < tokens.size(); ++i) {
    if (i > begin) out += ' ';
    out += tokens[i];
  }
  return out;
}

namespace detail {

// Longest-match lookup of a color at the start of the token span; two-word
// colors are matched before their one-word suffixes could misfire.
inline std::optional<std::pair<std::uint8_t, std::size_t>> match_color(
    const std::vector<std::string>& tokens, std::size_t at) {
  for (std::size_t len : {std::size_t{2}, std::size_t{1}}) {
    if (at + len > tokens.size()) continue;
    std::string candidate = tokens[at];
    for (std::size_t k = 1; k < len; ++k) candidate += ' ' + tokens[at + k];
    if (auto c = color_from_name(candidate)) return std::make_pair(*c, len);
  }
  return std::nullopt;
}

// Positions terminate the expression, so the whole remaining span must
// name one region.
inline std::optional<std::uint8_t> match_position_to_end(
    const std::vector<std::string>& tokens, std::size_t at) {
  if (at >= tokens.size()) return std::nullopt;
  return position_from_name(join_tokens(tokens, at));
}

}  // namespace detail

// Inverse of realize on its image. Strings that fit no template yield
// nullopt (the "ungrammatical" outcome). Comparison is case-sensitive;
// surrounding and repeated whitespace is ignored.
inline std::optional<ParsedExpression> parse(std::string_view expression) {
  const std::vector<std::string> tokens = tokenize(expression);
  if (tokens.size() < 3 || tokens[0] != "Take" || tokens[1] != "the") {
    return std::nullopt;
  }

  ParsedExpression out;
  std::size_t at = 2;

  if (tokens[at] == "piece") {
    // "Take the piece at [position]"
    if (at + 1 >= tokens.size() || tokens[at + 1] != "at") return std::nullopt;
    auto pos = detail::match_position_to_end(tokens, at + 2);
    if (!pos) return std::nullopt;
    out.type = ExpressionType::P;
    out.position = *pos;
    return out;
  }

  if (auto color = detail::match_color(tokens, at)) {
    out.color = color->first;
    at += color->second;
    if (at >= tokens.size()) return std::nullopt;
    if (tokens[at] == "piece") {
      if (at + 1 == tokens.size()) {
        out.type = ExpressionType::C;
        return out;
      }
      if (tokens[at + 1] != "at") return std::nullopt;
      auto pos = detail::match_position_to_end(tokens, at + 2);
      if (!pos) return std::nullopt;
      out.type = ExpressionType::CP;
      out.position = *pos;
      return out;
    }
    auto shape = shape_from_name(tokens[at]);
    if (!shape) return std::nullopt;
    out.shape = *shape;
    ++at;
    if (at == tokens.size()) {
      out.type = ExpressionType::CS;
      return out;
    }
    if (tokens[at] != "at") return std::nullopt;
    auto pos = detail::match_position_to_end(tokens, at + 1);
    if (!pos) return std::nullopt;
    out.type = ExpressionType::CSP;
    out.position = *pos;
    return out;
  }

  if (auto shape = shape_from_name(tokens[at])) {
    out.shape = *shape;
    ++at;
    if (at == tokens.size()) {
      out.type = ExpressionType::S;
      return out;
    }
    if (tokens[at] != "at") return std::nullopt;
    auto pos = detail::match_position_to_end(tokens, at + 1);
    if (!pos) return std::nullopt;
    out.type = ExpressionType::SP;
    out.position = *pos;
    return out;
  }

  return std::nullopt;
}

// All realizable expressions: one entry per (type, value combination),
// 12 + 12 + 9 + 144 + 108 + 108 + 1296 = 1689 distinct strings.
inline std::vector<std::string> enumerate_expressions() {
  std::vector<std::string> out;
  out.reserve(1689);
  for (ExpressionType t : kExpressionTypes) {
    const unsigned mask = expression_type_mask(t);
    const int nc = (mask & property_bit(Property::Color)) ? kNumColors : 1;
    const int ns = (mask & property_bit(Property::Shape)) ? kNumShapes : 1;
    const int np = (mask & property_bit(Property::Position)) ? kNumPositions : 1;
    for (int c = 0; c < nc; ++c) {
      for (int s = 0; s < ns; ++s) {
        for (int p = 0; p < np; ++p) {
          ParsedExpression values;
          values.type = t;
          if (mask & property_bit(Property::Color))
            values.color = static_cast<std::uint8_t>(c);
          if (mask & property_bit(Property::Shape))
            values.shape = static_cast<std::uint8_t>(s);
          if (mask & property_bit(Property::Position))
            values.position = static_cast<std::uint8_t>(p);
          out.push_back(realize_values(values));
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vocabulary: the 38 surface tokens. Two-word colors and positions
// contribute their component words; the expressions themselves never carry
// the special tokens, which exist for model-side consumers.

inline const std::vector<std::string>& vocabulary() {
  static const std::vector<std::string> words = [] {
    std::vector<std::string> v;
    for (const ShapeValue& s : kShapes) v.emplace_back(s.name);
    for (const ColorValue& c : kColors) {
      const std::string name(c.name);
      std::istringstream ss(name);
      std::string word;
      while (ss >> word) {
        if (std::find(v.begin(), v.end(), word) == v.end()) v.push_back(word);
      }
    }
    for (const char* w : {"left", "right", "top", "bottom", "center", "middle"})
      v.emplace_back(w);
    for (const char* w : {"Take", "the", "piece", "at"}) v.emplace_back(w);
    for (const char* w : {"<s>", "<e>", "<pad>", "<unk>"}) v.emplace_back(w);
    return v;
  }();
  return words;
}

inline bool in_vocabulary(std::string_view word) {
  const auto& v = vocabulary();
  return std::find(v.begin(), v.end(), word) != v.end();
}

// Plain-text export for downstream tokenizers, one word per line.
inline std::string vocabulary_text() {
  std::string out;
  for (const std::string& w : vocabulary()) {
    out += w;
    out += '\n';
  }
  return out;
}

}  // namespace pentoref
