#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "pentoref/eval.hpp"

using namespace pentoref;
using Catch::Approx;

TEST_CASE("the shared role prefix is stripped only from both sides at once") {
  auto [p1, r1] = strip_prefix("Take the blue T", "Take the T");
  CHECK(p1 == "blue T");
  CHECK(r1 == "T");

  auto [p2, r2] = strip_prefix("blue T", "Take the T");
  CHECK(p2 == "blue T");
  CHECK(r2 == "Take the T");

  auto [p3, r3] = strip_prefix("Grab the blue T", "Take the blue T");
  CHECK(p3 == "Grab the blue T");

  auto [p4, r4] = strip_prefix(" Take \t the   blue T", "Take the blue T");
  CHECK(p4 == "blue T");
  CHECK(r4 == "blue T");
}

TEST_CASE("bleu1 reproduces the worked single-pair scores") {
  CHECK(bleu1({"Take the blue T at center"}, {"Take the blue T at center"}) ==
        Approx(100.0));

  // "blue X" vs "blue T": one of two unigrams matches, no brevity penalty.
  CHECK(bleu1({"Take the blue X"}, {"Take the blue T"}) == Approx(50.0));

  // "piece" vs "blue piece": full precision, brevity penalty e^(1-2).
  CHECK(bleu1({"Take the piece"}, {"Take the blue piece"}) ==
        Approx(100.0 * std::exp(-1.0)).margin(1e-9));
  CHECK(bleu1({"Take the piece"}, {"Take the blue piece"}) == Approx(36.7879441171));
}

TEST_CASE("bleu1 pools counts over the corpus before applying the penalty") {
  const std::vector<std::string> preds = {"Take the blue X", "Take the piece"};
  const std::vector<std::string> refs = {"Take the blue T", "Take the blue piece"};
  // matched 2 of 3 predicted tokens, reference length 4: (2/3)·e^(1-4/3).
  CHECK(bleu1(preds, refs) == Approx(100.0 * (2.0 / 3.0) * std::exp(-1.0 / 3.0)));
  // Which is not the mean of the per-pair scores.
  CHECK_FALSE(bleu1(preds, refs) == Approx((50.0 + 36.7879441171) / 2));
}

TEST_CASE("bleu1 clips repeated unigrams against the reference budget") {
  // Prediction repeats "blue"; the reference only affords it once.
  CHECK(bleu1({"Take the blue blue"}, {"Take the blue T"}) == Approx(50.0));
}

TEST_CASE("prefixes that differ are kept and scored as tokens") {
  CHECK(bleu1({"Grab the blue X"}, {"Take the blue X"}) == Approx(75.0));
}

TEST_CASE("degenerate scoring inputs are rejected or zero") {
  CHECK_THROWS_AS(bleu1({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(bleu1({"a"}, {"a", "b"}), std::invalid_argument);
  CHECK_THROWS_AS(sentence_accuracy({}, {}), std::invalid_argument);
  CHECK(bleu1({""}, {"Take the X"}) == 0.0);
}

TEST_CASE("sentence accuracy is exact token equality after stripping") {
  CHECK(sentence_accuracy({"Take the blue T"}, {"Take the blue T"}) == 100.0);
  CHECK(sentence_accuracy({"Take   the blue T "}, {"Take the blue T"}) == 100.0);
  CHECK(sentence_accuracy({"Take the T blue"}, {"Take the blue T"}) == 0.0);
  CHECK(sentence_accuracy({"blue T"}, {"Take the blue T"}) == 0.0);
  CHECK(sentence_accuracy({"Take the blue T", "Take the X"},
                          {"Take the blue T", "Take the T"}) == 50.0);
}

TEST_CASE("identical corpora score 100 on both metrics") {
  std::vector<std::string> sample;
  const auto universe = enumerate_expressions();
  for (std::size_t i = 0; i < universe.size(); i += 13) sample.push_back(universe[i]);
  CHECK(bleu1(sample, sample) == 100.0);
  CHECK(sentence_accuracy(sample, sample) == 100.0);
}

TEST_CASE("type distribution decomposes the expression universe") {
  const TypeDistribution dist = type_distribution(enumerate_expressions());
  CHECK(dist.of(ExpressionType::C) == 12);
  CHECK(dist.of(ExpressionType::S) == 12);
  CHECK(dist.of(ExpressionType::P) == 9);
  CHECK(dist.of(ExpressionType::CS) == 144);
  CHECK(dist.of(ExpressionType::CP) == 108);
  CHECK(dist.of(ExpressionType::SP) == 108);
  CHECK(dist.of(ExpressionType::CSP) == 1296);
  CHECK(dist.ungrammatical == 0);
  CHECK(dist.total() == 1689);

  const TypeDistribution mixed = type_distribution(
      {"Take the blue piece", "Take the i top in the top left", "Take the T at center"});
  CHECK(mixed.of(ExpressionType::C) == 1);
  CHECK(mixed.of(ExpressionType::SP) == 1);
  CHECK(mixed.ungrammatical == 1);
  CHECK(mixed.total() == 3);
}

TEST_CASE("errors are attributed to one property with pos > shape > color") {
  CHECK(classify_error("Take the blue T", "Take the blue T") == ErrorCategory::Correct);
  CHECK(classify_error(" Take  the blue T ", "Take the blue T") == ErrorCategory::Correct);
  CHECK(classify_error("Take the red T", "Take the blue T") == ErrorCategory::Color);
  CHECK(classify_error("Take the blue X", "Take the blue T") == ErrorCategory::Shape);
  CHECK(classify_error("Take the blue T at center", "Take the blue T at top left") ==
        ErrorCategory::Pos);
  CHECK(classify_error("Take the blob", "Take the blue T") == ErrorCategory::Ungrammatical);

  // Several deviations collapse onto the highest-priority bucket.
  CHECK(classify_error("Take the red X", "Take the blue T") == ErrorCategory::Shape);
  CHECK(classify_error("Take the red X at center", "Take the blue T at top left") ==
        ErrorCategory::Pos);

  // A property mentioned on one side only is a deviation on that property.
  CHECK(classify_error("Take the blue piece", "Take the blue piece at center") ==
        ErrorCategory::Pos);
  CHECK(classify_error("Take the blue T", "Take the blue piece") == ErrorCategory::Shape);
  CHECK(classify_error("Take the piece at center", "Take the blue piece at center") ==
        ErrorCategory::Color);

  CHECK_THROWS_AS(classify_error("Take the blue T", "Take the blob"),
                  std::invalid_argument);
}

TEST_CASE("every universe expression is correct against itself") {
  const auto universe = enumerate_expressions();
  for (std::size_t i = 0; i < universe.size(); i += 7) {
    CHECK(classify_error(universe[i], universe[i]) == ErrorCategory::Correct);
  }
}

TEST_CASE("error_properties lists each deviating property once") {
  const auto pred = parse("Take the red X at center");
  const auto ref = parse("Take the blue T at center");
  REQUIRE(pred.has_value());
  REQUIRE(ref.has_value());
  CHECK(error_properties(*pred, *ref) ==
        std::vector<Property>{Property::Color, Property::Shape});
  CHECK(error_properties(*ref, *ref).empty());
}

TEST_CASE("evaluate aggregates metrics overall, per split and per error bucket") {
  const std::vector<ScoredPair> pairs = {
      {"Take the blue T", "Take the blue T", "val"},
      {"Take the blue X", "Take the blue T", "val"},
      {"Take the piece at center", "Take the piece at center", "test"},
      {"Take the blob", "Take the red piece", "test"},
  };
  const EvaluationReport report = evaluate(pairs);

  CHECK(report.per_split.size() == 2);
  CHECK(report.per_split.at("val").count == 2);
  CHECK(report.per_split.at("test").count == 2);
  CHECK(report.per_split.at("val").sentence_accuracy == Approx(50.0));
  CHECK(report.per_split.at("test").sentence_accuracy == Approx(50.0));
  CHECK(report.sentence_accuracy == Approx(50.0));

  CHECK(report.errors_of(ErrorCategory::Correct) == 2);
  CHECK(report.errors_of(ErrorCategory::Shape) == 1);
  CHECK(report.errors_of(ErrorCategory::Ungrammatical) == 1);
  CHECK(report.errors_of(ErrorCategory::Color) == 0);
  CHECK(report.error_labels[static_cast<std::size_t>(Property::Shape)] == 1);
  CHECK(report.error_labels[static_cast<std::size_t>(Property::Color)] == 0);

  // Prediction-side type histogram.
  CHECK(report.type_distribution.of(ExpressionType::CS) == 2);
  CHECK(report.type_distribution.of(ExpressionType::P) == 1);
  CHECK(report.type_distribution.ungrammatical == 1);

  CHECK_THROWS_AS(evaluate({}), std::invalid_argument);
}

TEST_CASE("a copy predictor scores perfectly") {
  std::vector<ScoredPair> pairs;
  const auto universe = enumerate_expressions();
  for (std::size_t i = 0; i < universe.size(); i += 11) {
    pairs.push_back({universe[i], universe[i], i % 2 ? "val" : "test"});
  }
  const EvaluationReport report = evaluate(pairs);
  CHECK(report.bleu1 == Approx(100.0));
  CHECK(report.sentence_accuracy == Approx(100.0));
  CHECK(report.errors_of(ErrorCategory::Correct) == pairs.size());
  for (const auto& [split, metrics] : report.per_split) {
    CHECK(metrics.bleu1 == Approx(100.0));
    CHECK(metrics.sentence_accuracy == Approx(100.0));
  }
}
