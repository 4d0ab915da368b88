/**
 * @file core.hpp
 * @brief Scenario model, weight vectors and the OWA aggregation operator.
 *
 * The OWA (Ordered Weighted Averaging) value of a cost vector is the
 * weighted sum of its entries sorted in nonincreasing order: weight j
 * multiplies the j-th largest entry. Presets cover the classic decision
 * criteria (maximum, minimum, average, quantile, median, Hurwicz).
 */

#ifndef OWA_CORE_HPP
#define OWA_CORE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "owa/errors.hpp"

namespace owa {

/// Absolute tolerance used for all weight and OWA comparisons.
inline constexpr double kTol = 1e-9;

using Cost = std::int64_t;

/// K x n nonnegative integer cost matrix, one row per scenario.
struct ScenarioSet {
  int n = 0;                             ///< element count
  int K = 0;                             ///< scenario count
  std::vector<std::vector<Cost>> costs;  ///< costs[j][i]: element i under scenario j

  ScenarioSet() = default;
  ScenarioSet(int n_, int K_, std::vector<std::vector<Cost>> costs_)
      : n(n_), K(K_), costs(std::move(costs_)) {
    validate();
  }

  void validate() const {
    if (n < 1 || K < 1)
      throw ParameterError("ScenarioSet requires K >= 1 and n >= 1");
    if (static_cast<int>(costs.size()) != K)
      throw DimensionError("ScenarioSet: expected K rows");
    for (const auto &row : costs) {
      if (static_cast<int>(row.size()) != n)
        throw DimensionError("ScenarioSet: row length != n");
      for (Cost c : row)
        if (c < 0) throw ParameterError("ScenarioSet: negative cost");
    }
  }

  bool operator==(const ScenarioSet &) const = default;
};

/// K OWA weights in [0,1] summing to 1.
class WeightVector {
public:
  WeightVector() = default;
  explicit WeightVector(std::vector<double> w) : w_(std::move(w)) {
    if (w_.empty()) throw ParameterError("WeightVector: empty");
    double sum = 0.0;
    for (double x : w_) {
      if (x < -kTol || x > 1.0 + kTol)
        throw ParameterError("WeightVector: weight outside [0,1]");
      sum += x;
    }
    if (std::abs(sum - 1.0) > kTol)
      throw ParameterError("WeightVector: weights must sum to 1");
  }

  int size() const { return static_cast<int>(w_.size()); }
  double operator[](int j) const { return w_[j]; }
  const std::vector<double> &values() const { return w_; }

  bool operator==(const WeightVector &) const = default;

private:
  std::vector<double> w_;
};

enum class WeightKind {
  Maximum,
  Minimum,
  Average,
  Quantile,
  Median,
  Hurwicz,
  Nonincreasing,
  Nondecreasing,
  General
};

/// Classification tag for a weight vector; `k` is set for Quantile,
/// `alpha` for Hurwicz.
struct WeightClass {
  WeightKind kind = WeightKind::General;
  int k = 0;
  double alpha = 0.0;

  static WeightClass maximum() { return {WeightKind::Maximum}; }
  static WeightClass minimum() { return {WeightKind::Minimum}; }
  static WeightClass average() { return {WeightKind::Average}; }
  static WeightClass quantile(int k) { return {WeightKind::Quantile, k}; }
  static WeightClass median() { return {WeightKind::Median}; }
  static WeightClass hurwicz(double alpha) { return {WeightKind::Hurwicz, 0, alpha}; }

  bool operator==(const WeightClass &o) const {
    if (kind != o.kind) return false;
    if (kind == WeightKind::Quantile) return k == o.k;
    if (kind == WeightKind::Hurwicz) return std::abs(alpha - o.alpha) <= kTol;
    return true;
  }

  std::string str() const {
    switch (kind) {
      case WeightKind::Maximum: return "maximum";
      case WeightKind::Minimum: return "minimum";
      case WeightKind::Average: return "average";
      case WeightKind::Quantile: return "quantile(" + std::to_string(k) + ")";
      case WeightKind::Median: return "median";
      case WeightKind::Hurwicz: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "hurwicz(%g)", alpha);
        return buf;
      }
      case WeightKind::Nonincreasing: return "nonincreasing";
      case WeightKind::Nondecreasing: return "nondecreasing";
      case WeightKind::General: return "general";
    }
    return "general";
  }
};

/// Sorted set of ground-set element indices in [0, n).
struct Solution {
  std::vector<int> elements;

  Solution() = default;
  explicit Solution(std::vector<int> elems) : elements(std::move(elems)) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  }

  bool operator==(const Solution &) const = default;
  bool operator<(const Solution &o) const { return elements < o.elements; }
};

/// Permutation sorting `values` nonincreasingly; ties broken by ascending
/// original index.
template <typename T>
std::vector<int> sort_permutation(std::span<const T> values) {
  std::vector<int> sigma(values.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::stable_sort(sigma.begin(), sigma.end(),
                   [&](int a, int b) { return values[a] > values[b]; });
  return sigma;
}

/// owa(values) = sum_j w_j * values_{sigma(j)} with sigma sorting
/// nonincreasingly.
template <typename T>
double owa_value(std::span<const T> values, const WeightVector &w) {
  if (static_cast<int>(values.size()) != w.size())
    throw DimensionError("owa_value: values length != weight length");
  const auto sigma = sort_permutation(values);
  double acc = 0.0;
  for (int j = 0; j < w.size(); ++j)
    acc += w[j] * static_cast<double>(values[sigma[j]]);
  return acc;
}

inline double owa_value(const std::vector<double> &values, const WeightVector &w) {
  return owa_value(std::span<const double>(values), w);
}
inline double owa_value(const std::vector<Cost> &values, const WeightVector &w) {
  return owa_value(std::span<const Cost>(values), w);
}

/// Builds the weight distribution of a named criterion.
/// Median is Quantile(floor(K/2)+1). Structural tags (nonincreasing,
/// nondecreasing, general) have no canonical distribution.
inline WeightVector preset_weights(const WeightClass &cls, int K) {
  if (K < 1) throw ParameterError("preset_weights: K >= 1 required");
  std::vector<double> w(K, 0.0);
  switch (cls.kind) {
    case WeightKind::Maximum:
      w[0] = 1.0;
      break;
    case WeightKind::Minimum:
      w[K - 1] = 1.0;
      break;
    case WeightKind::Average:
      std::fill(w.begin(), w.end(), 1.0 / K);
      break;
    case WeightKind::Quantile:
      if (cls.k < 1 || cls.k > K)
        throw ParameterError("preset_weights: quantile k outside [1,K]");
      w[cls.k - 1] = 1.0;
      break;
    case WeightKind::Median:
      w[K / 2] = 1.0;  // position floor(K/2)+1, 1-based
      break;
    case WeightKind::Hurwicz:
      if (cls.alpha < -kTol || cls.alpha > 1.0 + kTol)
        throw ParameterError("preset_weights: hurwicz alpha outside [0,1]");
      if (K == 1) {
        w[0] = 1.0;
      } else {
        w[0] = cls.alpha;
        w[K - 1] = 1.0 - cls.alpha;
      }
      break;
    default:
      throw ParameterError("preset_weights: no canonical distribution for tag " + cls.str());
  }
  return WeightVector(std::move(w));
}

/// Most specific tag matching `w` under tolerance kTol. Named special
/// cases take precedence over the monotone classes, which precede General.
inline WeightClass classify_weights(const WeightVector &w) {
  const int K = w.size();
  auto near = [](double a, double b) { return std::abs(a - b) <= kTol; };

  // single unit weight
  int unit = -1, zeros = 0;
  for (int j = 0; j < K; ++j) {
    if (near(w[j], 1.0)) unit = j;
    else if (near(w[j], 0.0)) ++zeros;
  }
  if (unit >= 0 && zeros == K - 1) {
    if (unit == 0) return WeightClass::maximum();
    if (unit == K - 1) return WeightClass::minimum();
    if (unit == K / 2) return WeightClass::median();
    return WeightClass::quantile(unit + 1);
  }

  bool uniform = true;
  for (int j = 0; j < K; ++j) uniform = uniform && near(w[j], 1.0 / K);
  if (uniform) return WeightClass::average();

  if (K >= 2) {
    bool middle_zero = true;
    for (int j = 1; j < K - 1; ++j) middle_zero = middle_zero && near(w[j], 0.0);
    if (middle_zero) return WeightClass::hurwicz(w[0]);
  }

  bool noninc = true, nondec = true;
  for (int j = 0; j + 1 < K; ++j) {
    noninc = noninc && (w[j] >= w[j + 1] - kTol);
    nondec = nondec && (w[j] <= w[j + 1] + kTol);
  }
  if (noninc) return {WeightKind::Nonincreasing};
  if (nondec) return {WeightKind::Nondecreasing};
  return {WeightKind::General};
}

/// True when w_1 >= w_2 >= ... >= w_K; the regime where the aggregation
/// algorithm carries a w_1*K ratio certificate.
inline bool weights_nonincreasing(const WeightVector &w) {
  for (int j = 0; j + 1 < w.size(); ++j)
    if (w[j] < w[j + 1] - kTol) return false;
  return true;
}

} // namespace owa

#endif
