#pragma once

// Scoring of predictions against single references: corpus BLEU@1,
// sentence-wise accuracy, expression-type distribution, and the
// color/shape/pos/ungrammatical error taxonomy.

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pentoref/core.hpp"
#include "pentoref/realize.hpp"

namespace pentoref {

namespace detail {

inline bool has_take_the(const std::vector<std::string>& tokens) {
  return tokens.size() >= 2 && tokens[0] == "Take" && tokens[1] == "the";
}

// Token views of both sides with the shared "Take the" prefix dropped.
inline std::pair<std::vector<std::string>, std::vector<std::string>> stripped_tokens(
    const std::string& prediction, const std::string& reference) {
  std::vector<std::string> p = tokenize(prediction);
  std::vector<std::string> r = tokenize(reference);
  if (has_take_the(p) && has_take_the(r)) {
    p.erase(p.begin(), p.begin() + 2);
    r.erase(r.begin(), r.begin() + 2);
  }
  return {std::move(p), std::move(r)};
}

}  // namespace detail

// Removes the leading words "Take the" from both strings iff both begin
// with them; otherwise returns the inputs unchanged.
inline std::pair<std::string, std::string> strip_prefix(const std::string& prediction,
                                                        const std::string& reference) {
  const std::vector<std::string> p = tokenize(prediction);
  const std::vector<std::string> r = tokenize(reference);
  if (!detail::has_take_the(p) || !detail::has_take_the(r)) {
    return {prediction, reference};
  }
  return {join_tokens({p.begin() + 2, p.end()}), join_tokens({r.begin() + 2, r.end()})};
}

// Corpus-level BLEU@1 in percent: clipped unigram precision times the
// brevity penalty e^(1−r/c), computed after prefix stripping.
inline double bleu1(const std::vector<std::string>& predictions,
                    const std::vector<std::string>& references) {
  if (predictions.size() != references.size()) {
    throw std::invalid_argument("bleu1: prediction/reference length mismatch");
  }
  if (predictions.empty()) throw std::invalid_argument("bleu1: empty corpus");

  std::size_t matched = 0, pred_len = 0, ref_len = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const auto [p, r] = detail::stripped_tokens(predictions[i], references[i]);
    pred_len += p.size();
    ref_len += r.size();
    std::map<std::string, int> budget;
    for (const std::string& w : r) ++budget[w];
    for (const std::string& w : p) {
      auto it = budget.find(w);
      if (it != budget.end() && it->second > 0) {
        --it->second;
        ++matched;
      }
    }
  }
  if (pred_len == 0) return 0.0;
  const double precision = static_cast<double>(matched) / static_cast<double>(pred_len);
  const double bp = pred_len >= ref_len
                        ? 1.0
                        : std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(pred_len));
  return 100.0 * precision * bp;
}

// Percent of predictions exactly matching their reference token-for-token
// after prefix stripping.
inline double sentence_accuracy(const std::vector<std::string>& predictions,
                                const std::vector<std::string>& references) {
  if (predictions.size() != references.size()) {
    throw std::invalid_argument("sentence_accuracy: prediction/reference length mismatch");
  }
  if (predictions.empty()) throw std::invalid_argument("sentence_accuracy: empty corpus");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const auto [p, r] = detail::stripped_tokens(predictions[i], references[i]);
    if (p == r) ++hits;
  }
  return 100.0 * static_cast<double>(hits) / static_cast<double>(predictions.size());
}

struct TypeDistribution {
  std::array<std::size_t, kExpressionTypes.size()> counts{};  // by enum index
  std::size_t ungrammatical = 0;

  std::size_t of(ExpressionType t) const { return counts[static_cast<std::size_t>(t)]; }
  std::size_t total() const {
    std::size_t n = ungrammatical;
    for (std::size_t c : counts) n += c;
    return n;
  }
};

// Histogram over parsed expression types; strings no template matches go
// to the ungrammatical bucket. Values are not checked against any board.
inline TypeDistribution type_distribution(const std::vector<std::string>& expressions) {
  TypeDistribution dist;
  for (const std::string& e : expressions) {
    if (const auto parsed = parse(e)) {
      ++dist.counts[static_cast<std::size_t>(parsed->type)];
    } else {
      ++dist.ungrammatical;
    }
  }
  return dist;
}

enum class ErrorCategory { Correct, Color, Shape, Pos, Ungrammatical };

inline constexpr std::array<ErrorCategory, 5> kErrorCategories = {
    ErrorCategory::Correct, ErrorCategory::Color, ErrorCategory::Shape,
    ErrorCategory::Pos, ErrorCategory::Ungrammatical};

inline constexpr std::string_view error_category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Correct: return "correct";
    case ErrorCategory::Color: return "color";
    case ErrorCategory::Shape: return "shape";
    case ErrorCategory::Pos: return "pos";
    case ErrorCategory::Ungrammatical: return "ungrammatical";
  }
  return "?";
}

// Properties on which a wrong-but-grammatical prediction deviates from the
// reference: mentioned on one side only, or mentioned with another value.
inline std::vector<Property> error_properties(const ParsedExpression& prediction,
                                              const ParsedExpression& reference) {
  std::vector<Property> out;
  if (prediction.color != reference.color) out.push_back(Property::Color);
  if (prediction.shape != reference.shape) out.push_back(Property::Shape);
  if (prediction.position != reference.position) out.push_back(Property::Position);
  return out;
}

// Single-bucket attribution per prediction. Several deviating properties
// collapse to one bucket with priority pos > shape > color.
inline ErrorCategory classify_error(const std::string& prediction,
                                    const std::string& reference) {
  const auto ref = parse(reference);
  if (!ref) throw std::invalid_argument("classify_error: ungrammatical reference");
  const auto [p, r] = detail::stripped_tokens(prediction, reference);
  if (p == r) return ErrorCategory::Correct;
  const auto pred = parse(prediction);
  if (!pred) return ErrorCategory::Ungrammatical;
  const std::vector<Property> props = error_properties(*pred, *ref);
  for (Property want : {Property::Position, Property::Shape, Property::Color}) {
    for (Property have : props) {
      if (have == want) {
        switch (want) {
          case Property::Position: return ErrorCategory::Pos;
          case Property::Shape: return ErrorCategory::Shape;
          case Property::Color: return ErrorCategory::Color;
        }
      }
    }
  }
  // Same template and values yet unequal tokens cannot happen for
  // grammatical pairs.
  throw std::logic_error("classify_error: unequal strings with equal parse");
}

struct SplitMetrics {
  double bleu1 = 0.0;
  double sentence_accuracy = 0.0;
  std::size_t count = 0;
};

struct EvaluationReport {
  double bleu1 = 0.0;
  double sentence_accuracy = 0.0;
  std::map<std::string, SplitMetrics> per_split;
  TypeDistribution type_distribution;  // over predictions
  std::array<std::size_t, kErrorCategories.size()> error_breakdown{};  // by enum index
  // Multi-label detail: every deviating property counted, not just the
  // priority bucket.
  std::array<std::size_t, kProperties.size()> error_labels{};

  std::size_t errors_of(ErrorCategory c) const {
    return error_breakdown[static_cast<std::size_t>(c)];
  }
};

struct ScoredPair {
  std::string prediction;
  std::string reference;
  std::string split;  // empty allowed: single unnamed split
};

inline EvaluationReport evaluate(const std::vector<ScoredPair>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("evaluate: empty corpus");
  std::vector<std::string> preds, refs;
  preds.reserve(pairs.size());
  refs.reserve(pairs.size());
  std::map<std::string, std::pair<std::vector<std::string>, std::vector<std::string>>> by_split;
  for (const ScoredPair& pair : pairs) {
    preds.push_back(pair.prediction);
    refs.push_back(pair.reference);
    auto& bucket = by_split[pair.split];
    bucket.first.push_back(pair.prediction);
    bucket.second.push_back(pair.reference);
  }

  EvaluationReport report;
  report.bleu1 = bleu1(preds, refs);
  report.sentence_accuracy = sentence_accuracy(preds, refs);
  for (const auto& [split, bucket] : by_split) {
    report.per_split[split] = {bleu1(bucket.first, bucket.second),
                               sentence_accuracy(bucket.first, bucket.second),
                               bucket.first.size()};
  }
  report.type_distribution = type_distribution(preds);
  for (const ScoredPair& pair : pairs) {
    const ErrorCategory c = classify_error(pair.prediction, pair.reference);
    ++report.error_breakdown[static_cast<std::size_t>(c)];
    if (c == ErrorCategory::Correct || c == ErrorCategory::Ungrammatical) continue;
    const auto pred = parse(pair.prediction);
    const auto ref = parse(pair.reference);
    for (Property p : error_properties(*pred, *ref)) {
      ++report.error_labels[static_cast<std::size_t>(p)];
    }
  }
  return report;
}

}  // namespace pentoref
