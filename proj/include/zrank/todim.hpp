#pragma once

/**
 * @file todim.hpp
 * @brief Prospect-theory ranking over a normalized fuzzy matrix.
 *
 * For a pair of alternatives (i, j) and criterion c, a gain contributes
 * +sqrt(w_c * d(x_ic, x_jc)), a loss -(1/theta) * sqrt(w_c * d(x_ic, x_jc)),
 * where gain/loss is decided by the sign of the difference of vertex means.
 * The global value is the min-max normalized dominance row sum.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zrank/fuzzy.hpp"
#include "zrank/matrix.hpp"
#include "zrank/problem.hpp"
#include "zrank/result.hpp"

namespace zrank {

class InvalidTheta : public std::invalid_argument {
 public:
  explicit InvalidTheta(double theta, std::optional<std::size_t> index = std::nullopt)
      : std::invalid_argument(message(theta, index)), index_(index) {}

  [[nodiscard]] std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  static std::string message(double theta, std::optional<std::size_t> index) {
    std::string out = "theta must be a positive finite number, got " + std::to_string(theta);
    if (index) out += " at index " + std::to_string(*index);
    return out;
  }

  std::optional<std::size_t> index_;
};

inline void require_theta(double theta, std::optional<std::size_t> index = std::nullopt) {
  if (!(theta > 0.0) || !std::isfinite(theta)) throw InvalidTheta(theta, index);
}

/// phi_c(i, j): contribution of criterion c when comparing alternative i with j.
inline double dominance_contribution(std::size_t i, std::size_t j, std::size_t c, const Matrix<FuzzyTrapezoid>& values,
                                     std::span<const double> weights, double theta) {
  require_theta(theta);
  const FuzzyTrapezoid& x = values(i, c);
  const FuzzyTrapezoid& y = values(j, c);
  const double diff = defuzzify_mean(x) - defuzzify_mean(y);
  if (diff == 0.0) return 0.0;
  const double magnitude = std::sqrt(weights[c] * distance(x, y));
  return diff > 0.0 ? magnitude : -magnitude / theta;
}

inline double dominance_contribution(std::size_t i, std::size_t j, std::size_t c, const NormalizedMatrix& normalized,
                                     double theta) {
  return dominance_contribution(i, j, c, normalized.values, normalized.weights, theta);
}

inline DominanceMatrix dominance_matrix(const NormalizedMatrix& normalized, double theta) {
  require_theta(theta);
  const std::size_t m = normalized.rows();
  const std::size_t n = normalized.cols();
  DominanceMatrix dm;
  dm.total = Matrix<double>(m, m, 0.0);
  dm.partial.assign(n, Matrix<double>(m, m, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      double sum = 0.0;
      for (std::size_t c = 0; c < n; ++c) {
        const double phi = dominance_contribution(i, j, c, normalized, theta);
        dm.partial[c](i, j) = phi;
        sum += phi;
      }
      dm.total(i, j) = sum;
    }
  }
  return dm;
}

struct GlobalValues {
  std::vector<double> xi;
  std::vector<double> row_sums;
  /// Every row sum equal; all xi are then set to 1.
  bool degenerate = false;
};

inline GlobalValues global_values(const DominanceMatrix& dm) {
  GlobalValues out;
  out.row_sums = dm.row_sums();
  if (out.row_sums.empty()) return out;
  const auto [lo_it, hi_it] = std::minmax_element(out.row_sums.begin(), out.row_sums.end());
  const double lo = *lo_it;
  const double range = *hi_it - lo;
  if (range <= kEpsilon) {
    out.xi.assign(out.row_sums.size(), 1.0);
    out.degenerate = true;
    return out;
  }
  out.xi.reserve(out.row_sums.size());
  for (double s : out.row_sums) out.xi.push_back((s - lo) / range);
  return out;
}

namespace detail {

inline void apply_todim(RankingResult& r, double theta) {
  auto dm = dominance_matrix(r.normalized, theta);
  auto gv = global_values(dm);
  r.scores = gv.xi;
  r.degenerate = gv.degenerate;
  r.options.theta = theta;
  r.todim = TodimAudit{std::move(dm), std::move(gv.row_sums)};
  finish(r);
}

}  // namespace detail

/// Convert, normalize, dominate, normalize dominance. Uses options.theta.
inline RankingResult rank_todim(const DecisionProblem& p, const SolveOptions& options = {}) {
  require_theta(options.theta);
  auto r = detail::prepare(p, Method::todim, options);
  detail::apply_todim(r, options.theta);
  return r;
}

inline RankingResult rank_todim(const DecisionProblem& p, double theta) {
  SolveOptions opts;
  opts.theta = theta;
  return rank_todim(p, opts);
}

struct SensitivityReport {
  std::vector<std::string> alternatives;
  std::vector<double> thetas;
  /// scores(i, k): global value of alternative i at thetas[k].
  Matrix<double> scores;
  /// ranks[k][i]: rank of alternative i at thetas[k].
  std::vector<std::vector<std::size_t>> ranks;
  /// Rank order is identical at every theta.
  bool stable = true;
  SolveOptions options;
};

inline SensitivityReport sensitivity(const DecisionProblem& p, std::span<const double> thetas,
                                     const SolveOptions& options = {}) {
  if (thetas.empty()) throw std::invalid_argument("theta list is empty");
  for (std::size_t k = 0; k < thetas.size(); ++k) require_theta(thetas[k], k);

  const auto base = detail::prepare(p, Method::todim, options);
  SensitivityReport rep;
  rep.alternatives = p.alternatives;
  rep.thetas.assign(thetas.begin(), thetas.end());
  rep.options = options;
  rep.scores = Matrix<double>(p.alternative_count(), thetas.size());
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    RankingResult r = base;
    detail::apply_todim(r, thetas[k]);
    for (std::size_t i = 0; i < r.scores.size(); ++i) rep.scores(i, k) = r.scores[i];
    if (!rep.ranks.empty() && r.ranks != rep.ranks.front()) rep.stable = false;
    rep.ranks.push_back(std::move(r.ranks));
  }
  return rep;
}

}  // namespace zrank
