#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fuzzcrypt/error.hpp"

namespace fuzzcrypt {

/// Shape of the membership curve used when fuzzifying crisp values.
///
/// `gaussian` evaluates exp(-(x-mu)^2 / (2 sigma^2)); `rational` evaluates
/// 1 / (1 + (|x-mu|/sigma)^p).  Rational with p = 2 is the default.
struct MembershipKind {
  enum class Shape { gaussian, rational };

  Shape shape = Shape::rational;
  double p = 2.0;  // exponent; used by the rational shape only

  static MembershipKind gaussian() { return {Shape::gaussian, 2.0}; }

  static MembershipKind rational(double p = 2.0) {
    if (!std::isfinite(p) || p <= 0.0)
      raise(ErrorCode::invalid_parameter,
            "MembershipKind: p must be finite and > 0");
    return {Shape::rational, p};
  }
};

/// One fuzzy category: a named centre with a spread and a ranking weight.
struct FuzzyCategory {
  std::string name;
  double mu = 0.0;      // centre, in crisp-value units
  double sigma = 1.0;   // spread, strictly positive
  double weight = 1.0;  // relevance weight, non-negative
};

namespace detail {

// Nonzero-distance memberships are pinned inside the open interval (0, 1):
// values that round up to 1.0 or underflow to 0.0 are moved to the nearest
// representable interior value, so full membership remains an exact marker
// for a centre hit.
inline double pin_partial(double u) {
  if (u >= 1.0) return 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
  if (u <= 0.0) return std::numeric_limits<double>::denorm_min();
  return u;
}

inline void check_membership_args(const char* fn, double x, double mu,
                                  double sigma) {
  if (!std::isfinite(x) || !std::isfinite(mu))
    raise(ErrorCode::invalid_parameter,
          std::string(fn) + ": x and mu must be finite");
  if (!std::isfinite(sigma) || sigma <= 0.0)
    raise(ErrorCode::invalid_parameter,
          std::string(fn) + ": sigma must be finite and > 0");
}

}  // namespace detail

/// Gaussian membership degree of x in a category centred at mu.  Returns a
/// value in (0, 1]; exactly 1 if and only if x equals mu.
inline double gaussian_membership(double x, double mu, double sigma) {
  detail::check_membership_args("gaussian_membership", x, mu, sigma);
  const double dist = x - mu;
  if (dist == 0.0) return 1.0;
  const double z = dist / sigma;
  return detail::pin_partial(std::exp(-0.5 * z * z));
}

/// Rational membership degree 1 / (1 + (|x-mu|/sigma)^p).  Returns a value
/// in (0, 1]; exactly 1 if and only if x equals mu.
inline double rational_membership(double x, double mu, double sigma,
                                  double p) {
  detail::check_membership_args("rational_membership", x, mu, sigma);
  if (!std::isfinite(p) || p <= 0.0)
    raise(ErrorCode::invalid_parameter,
          "rational_membership: p must be finite and > 0");
  const double dist = std::fabs(x - mu);
  if (dist == 0.0) return 1.0;
  return detail::pin_partial(1.0 / (1.0 + std::pow(dist / sigma, p)));
}

/// Ordered, validated collection of fuzzy categories sharing one membership
/// shape.  Immutable after construction and safe to share across threads.
class CategorySet {
 public:
  CategorySet(std::vector<FuzzyCategory> categories, MembershipKind kind)
      : categories_(std::move(categories)), kind_(kind) {
    if (categories_.empty())
      raise(ErrorCode::invalid_parameter,
            "CategorySet: at least one category required");
    if (kind_.shape == MembershipKind::Shape::rational &&
        (!std::isfinite(kind_.p) || kind_.p <= 0.0))
      raise(ErrorCode::invalid_parameter,
            "CategorySet: p must be finite and > 0");
    std::unordered_set<std::string> seen;
    for (const auto& cat : categories_) {
      if (cat.name.empty())
        raise(ErrorCode::invalid_parameter,
              "CategorySet: category name must be non-empty");
      if (!seen.insert(cat.name).second)
        raise(ErrorCode::invalid_parameter,
              "CategorySet: duplicate category name '" + cat.name + "'");
      if (!std::isfinite(cat.mu))
        raise(ErrorCode::invalid_parameter,
              "category '" + cat.name + "': mu must be finite");
      if (!std::isfinite(cat.sigma) || cat.sigma <= 0.0)
        raise(ErrorCode::invalid_parameter,
              "category '" + cat.name + "': sigma must be finite and > 0");
      if (!std::isfinite(cat.weight) || cat.weight < 0.0)
        raise(ErrorCode::invalid_parameter,
              "category '" + cat.name + "': weight must be finite and >= 0");
    }
  }

  std::size_t size() const noexcept { return categories_.size(); }

  const FuzzyCategory& operator[](std::size_t j) const {
    return categories_[j];
  }

  const std::vector<FuzzyCategory>& categories() const noexcept {
    return categories_;
  }

  const MembershipKind& kind() const noexcept { return kind_; }

  /// Membership of crisp value x in category j under this set's shape.
  double membership(double x, std::size_t j) const {
    if (j >= categories_.size())
      raise(ErrorCode::dimension_mismatch,
            "CategorySet: category index out of range");
    const FuzzyCategory& cat = categories_[j];
    return kind_.shape == MembershipKind::Shape::gaussian
               ? gaussian_membership(x, cat.mu, cat.sigma)
               : rational_membership(x, cat.mu, cat.sigma, kind_.p);
  }

 private:
  std::vector<FuzzyCategory> categories_;
  MembershipKind kind_;
};

/// Dense row-major matrix of membership degrees: one row per feature, one
/// column per category.
class MembershipMatrix {
 public:
  MembershipMatrix(std::size_t rows, std::size_t cols,
                   std::vector<double> values)
      : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (cols_ == 0)
      raise(ErrorCode::invalid_parameter,
            "MembershipMatrix: need at least one column");
    if (values_.size() != rows_ * cols_)
      raise(ErrorCode::dimension_mismatch,
            "MembershipMatrix: " + std::to_string(values_.size()) +
                " values do not fill " + std::to_string(rows_) + "x" +
                std::to_string(cols_));
    for (double v : values_)
      if (!std::isfinite(v) || v < 0.0 || v > 1.0)
        raise(ErrorCode::invalid_parameter,
              "MembershipMatrix: entries must lie in [0, 1]");
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return values_[i * cols_ + j];
  }

  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * cols_, cols_};
  }

  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

/// Fuzzify a stream of crisp values into an n-by-m membership matrix; entry
/// (i, j) is the membership of values[i] in category j.
inline MembershipMatrix fuzzify(std::span<const double> values,
                                const CategorySet& cats) {
  if (values.empty())
    raise(ErrorCode::empty_input, "fuzzify: no crisp values given");
  std::vector<double> out;
  out.reserve(values.size() * cats.size());
  for (double x : values)
    for (std::size_t j = 0; j < cats.size(); ++j)
      out.push_back(cats.membership(x, j));
  return {values.size(), cats.size(), std::move(out)};
}

/// Weighted-centroid defuzzification over the category means.  Lossy by
/// nature: many membership vectors map to the same crisp value.  The result
/// always lies within [min mu, max mu].
inline double defuzzify(std::span<const double> row, const CategorySet& cats) {
  if (row.size() != cats.size())
    raise(ErrorCode::dimension_mismatch,
          "defuzzify: row has " + std::to_string(row.size()) +
              " entries for " + std::to_string(cats.size()) + " categories");
  if (cats.size() == 1) return cats[0].mu;  // convex combination of one point
  double numerator = 0.0;
  double denominator = 0.0;
  double lo = cats[0].mu;
  double hi = cats[0].mu;
  for (std::size_t j = 0; j < cats.size(); ++j) {
    numerator += row[j] * cats[j].mu;
    denominator += row[j];
    lo = std::min(lo, cats[j].mu);
    hi = std::max(hi, cats[j].mu);
  }
  if (!(denominator > 0.0))
    raise(ErrorCode::invalid_parameter,
          "defuzzify: membership row must have positive mass");
  // Division may drift an ulp outside the hull; the contract is closed.
  return std::clamp(numerator / denominator, lo, hi);
}

}  // namespace fuzzcrypt
