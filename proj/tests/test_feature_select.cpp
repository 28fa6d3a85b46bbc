#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "fuzzcrypt/feature_select.hpp"
#include "test_support.hpp"

using namespace fuzzcrypt;
using testsupport::HasCode;
using testsupport::rel_close;

namespace {

CategorySet weighted_cats(const std::vector<double>& weights) {
  std::vector<FuzzyCategory> cats;
  for (std::size_t j = 0; j < weights.size(); ++j)
    cats.push_back({"c" + std::to_string(j), static_cast<double>(j), 1.0,
                    weights[j]});
  return {std::move(cats), MembershipKind::rational(2.0)};
}

MembershipMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                               std::size_t cols) {
  std::uniform_real_distribution<double> u_dist(1e-6, 1.0);
  std::vector<double> values(rows * cols);
  for (double& v : values) v = u_dist(rng);
  return {rows, cols, std::move(values)};
}

// Independent scoring route: same formula, written as its own double loop.
std::vector<double> oracle_scores(const MembershipMatrix& m,
                                  const std::vector<double>& weights) {
  std::vector<double> scores;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += weights[j] * m(i, j);
    scores.push_back(s);
  }
  return scores;
}

// Independent ranking route: stable sort of (score, index) pairs.
std::vector<std::size_t> oracle_ranking(const std::vector<double>& scores) {
  std::vector<std::pair<double, std::size_t>> pairs;
  for (std::size_t i = 0; i < scores.size(); ++i)
    pairs.emplace_back(scores[i], i);
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const auto& a, const auto& b) {
                     return a.first > b.first;
                   });
  std::vector<std::size_t> ranking;
  for (const auto& [score, idx] : pairs) ranking.push_back(idx);
  return ranking;
}

}  // namespace

TEST_CASE("relevance scores frozen examples") {
  SECTION("single category collapses to the matrix column") {
    const MembershipMatrix m(3, 1, {0.9, 0.3, 0.6});
    const auto r = relevance_scores(m, weighted_cats({1.0}));
    CHECK(r.scores == std::vector<double>{0.9, 0.3, 0.6});
    CHECK(r.ranking == std::vector<std::size_t>{0, 2, 1});
  }
  SECTION("equal scores break ties by ascending index") {
    const MembershipMatrix m(2, 2, {0.5, 0.5, 1.0, 0.0});
    const auto r = relevance_scores(m, weighted_cats({1.0, 1.0}));
    CHECK(rel_close(r.scores[0], 1.0, 1e-12));
    CHECK(rel_close(r.scores[1], 1.0, 1e-12));
    CHECK(r.ranking == std::vector<std::size_t>{0, 1});
  }
  SECTION("hand-computed weighted sums") {
    const MembershipMatrix m(2, 2, {0.2, 0.9, 0.8, 0.1});
    const auto r = relevance_scores(m, weighted_cats({2.0, 1.0}));
    CHECK(rel_close(r.scores[0], 1.3, 1e-12));
    CHECK(rel_close(r.scores[1], 1.7, 1e-12));
    CHECK(r.ranking == std::vector<std::size_t>{1, 0});

    CHECK(select_top_k(r, 1).indices == std::vector<std::size_t>{1});
    CHECK(select_by_threshold(r, 1.5).indices == std::vector<std::size_t>{1});
  }
}

TEST_CASE("relevance scores dimension check") {
  const MembershipMatrix m(2, 2, {0.2, 0.9, 0.8, 0.1});
  CHECK_THROWS_MATCHES(relevance_scores(m, weighted_cats({1.0})), Error,
                       HasCode(ErrorCode::dimension_mismatch));
}

TEST_CASE("scores and ranking match the brute-force oracles") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> rows_dist(1, 200);
  std::uniform_int_distribution<std::size_t> cols_dist(1, 8);
  std::uniform_real_distribution<double> w_dist(0.0, 3.0);
  for (int round = 0; round < 50; ++round) {
    const std::size_t rows = rows_dist(rng);
    const std::size_t cols = cols_dist(rng);
    const auto m = random_matrix(rng, rows, cols);
    std::vector<double> weights;
    for (std::size_t j = 0; j < cols; ++j) weights.push_back(w_dist(rng));
    const auto r = relevance_scores(m, weighted_cats(weights));
    const auto expected_scores = oracle_scores(m, weights);
    REQUIRE(r.scores.size() == expected_scores.size());
    for (std::size_t i = 0; i < rows; ++i)
      CHECK(rel_close(r.scores[i], expected_scores[i], 1e-12));
    CHECK(r.ranking == oracle_ranking(r.scores));
  }
}

TEST_CASE("power-of-two weight scaling leaves ranks and selections intact") {
  std::mt19937_64 rng(2025);
  std::uniform_real_distribution<double> w_dist(0.01, 3.0);
  for (int round = 0; round < 30; ++round) {
    const auto m = random_matrix(rng, 60, 4);
    std::vector<double> weights;
    for (int j = 0; j < 4; ++j) weights.push_back(w_dist(rng));
    // Powers of two rescale binary floats exactly, so score ordering cannot
    // move by rounding.
    const double c = std::ldexp(1.0, (round % 12) - 4);
    std::vector<double> scaled = weights;
    for (double& w : scaled) w *= c;
    const auto base = relevance_scores(m, weighted_cats(weights));
    const auto scaledr = relevance_scores(m, weighted_cats(scaled));
    for (std::size_t i = 0; i < base.scores.size(); ++i)
      CHECK(scaledr.scores[i] == base.scores[i] * c);
    CHECK(scaledr.ranking == base.ranking);
    CHECK(select_top_k(scaledr, 7).indices == select_top_k(base, 7).indices);
    const double tau = base.scores[17];
    CHECK(select_by_threshold(scaledr, tau * c).indices ==
          select_by_threshold(base, tau).indices);
  }
}

TEST_CASE("a zero-weight category changes no score") {
  std::mt19937_64 rng(2026);
  const auto m = random_matrix(rng, 40, 3);
  const auto base = relevance_scores(m, weighted_cats({1.5, 0.25, 2.0}));

  std::vector<double> padded_values;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      padded_values.push_back(m(i, j));
    padded_values.push_back(0.5);
  }
  const MembershipMatrix padded(40, 4, std::move(padded_values));
  const auto extended =
      relevance_scores(padded, weighted_cats({1.5, 0.25, 2.0, 0.0}));
  CHECK(extended.scores == base.scores);
  CHECK(extended.ranking == base.ranking);
}

TEST_CASE("top-k selection edge cases") {
  const MembershipMatrix m(3, 1, {0.5, 0.5, 0.5});
  const auto r = relevance_scores(m, weighted_cats({1.0}));

  CHECK_THROWS_MATCHES(select_top_k(r, 0), Error,
                       HasCode(ErrorCode::invalid_parameter));
  // saturation past n
  CHECK(select_top_k(r, 10).indices == std::vector<std::size_t>{0, 1, 2});
  // ties resolved by ascending index
  CHECK(select_top_k(r, 2).indices == std::vector<std::size_t>{0, 1});
  CHECK(select_top_k(r, 2).mode == Selection::Mode::top_k);
  CHECK(select_top_k(r, 2).k == 2);
}

TEST_CASE("threshold selection edge cases") {
  const MembershipMatrix m(2, 2, {0.2, 0.9, 0.8, 0.1});
  const auto r = relevance_scores(m, weighted_cats({2.0, 1.0}));

  CHECK(select_by_threshold(r, -1.0).indices ==
        std::vector<std::size_t>{0, 1});
  CHECK(select_by_threshold(r, 2.0 * 1.7 + 1.0).indices.empty());
  CHECK_THROWS_MATCHES(
      select_by_threshold(r, std::numeric_limits<double>::quiet_NaN()), Error,
      HasCode(ErrorCode::invalid_parameter));
  CHECK_THROWS_MATCHES(
      select_by_threshold(r, std::numeric_limits<double>::infinity()), Error,
      HasCode(ErrorCode::invalid_parameter));
}

TEST_CASE("top-k selections nest and the minimum threshold selects all") {
  std::mt19937_64 rng(2027);
  for (int round = 0; round < 20; ++round) {
    const auto m = random_matrix(rng, 30, 4);
    const auto r = relevance_scores(m, weighted_cats({1.0, 0.5, 2.0, 0.1}));
    for (std::size_t k = 1; k < 30; ++k) {
      const auto small = select_top_k(r, k).indices;
      const auto big = select_top_k(r, k + 1).indices;
      CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    }
    const double min_score =
        *std::min_element(r.scores.begin(), r.scores.end());
    CHECK(select_by_threshold(r, min_score).indices.size() == r.scores.size());
  }
}
