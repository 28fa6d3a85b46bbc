#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fuzzcrypt/error.hpp"
#include "fuzzcrypt/fuzzy.hpp"

namespace fuzzcrypt {

/// Per-feature relevance plus a deterministic ranking: descending score,
/// ties broken by ascending feature index.
struct RelevanceScores {
  std::vector<double> scores;
  std::vector<std::size_t> ranking;
};

/// Outcome of a selection strategy.  Indices are unique and ascending.
struct Selection {
  enum class Mode { top_k, threshold };

  Mode mode = Mode::top_k;
  std::size_t k = 0;  // top_k only: the requested k (may exceed |indices|)
  double tau = 0.0;   // threshold only
  std::vector<std::size_t> indices;
};

/// Relevance of each feature as the weighted sum of its membership degrees
/// across all categories.
inline RelevanceScores relevance_scores(const MembershipMatrix& matrix,
                                        const CategorySet& cats) {
  if (matrix.cols() != cats.size())
    raise(ErrorCode::dimension_mismatch,
          "relevance_scores: matrix has " + std::to_string(matrix.cols()) +
              " columns for " + std::to_string(cats.size()) + " categories");
  std::vector<double> scores(matrix.rows(), 0.0);
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < cats.size(); ++j)
      sum += cats[j].weight * matrix(i, j);
    scores[i] = sum;
  }
  std::vector<std::size_t> ranking(scores.size());
  std::iota(ranking.begin(), ranking.end(), std::size_t{0});
  std::sort(ranking.begin(), ranking.end(),
            [&scores](std::size_t a, std::size_t b) {
              if (scores[a] != scores[b]) return scores[a] > scores[b];
              return a < b;
            });
  return {std::move(scores), std::move(ranking)};
}

/// The min(k, n) features with the highest scores, reported in ascending
/// index order.  k past n saturates to all features.
inline Selection select_top_k(const RelevanceScores& scores, std::size_t k) {
  if (k == 0)
    raise(ErrorCode::invalid_parameter, "select_top_k: k must be >= 1");
  const std::size_t take = std::min(k, scores.ranking.size());
  std::vector<std::size_t> indices(scores.ranking.begin(),
                                   scores.ranking.begin() + take);
  std::sort(indices.begin(), indices.end());
  return {Selection::Mode::top_k, k, 0.0, std::move(indices)};
}

/// Every feature scoring at least tau, in ascending index order.
inline Selection select_by_threshold(const RelevanceScores& scores,
                                     double tau) {
  if (!std::isfinite(tau))
    raise(ErrorCode::invalid_parameter,
          "select_by_threshold: tau must be finite");
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < scores.scores.size(); ++i)
    if (scores.scores[i] >= tau) indices.push_back(i);
  return {Selection::Mode::threshold, 0, tau, std::move(indices)};
}

}  // namespace fuzzcrypt
