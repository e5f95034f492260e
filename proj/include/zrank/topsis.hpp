#pragma once

/**
 * @file topsis.hpp
 * @brief Ideal-solution ranking over the weighted normalized fuzzy matrix.
 *
 * Separations are the plain sum over criteria of the fuzzy vertex distance to
 * the positive and negative ideal; closeness is d- / (d+ + d-).
 */

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "zrank/fuzzy.hpp"
#include "zrank/matrix.hpp"
#include "zrank/problem.hpp"
#include "zrank/result.hpp"

namespace zrank {

inline Matrix<FuzzyTrapezoid> weighted_matrix(const NormalizedMatrix& normalized) {
  Matrix<FuzzyTrapezoid> out(normalized.rows(), normalized.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = scale(normalized.values(i, j), normalized.weights[j]);
  return out;
}

namespace detail {

/// true if a is a better "maximum" candidate than b: larger mean, then larger a4.
inline bool better_max(const FuzzyTrapezoid& a, const FuzzyTrapezoid& b) {
  const double ma = defuzzify_mean(a);
  const double mb = defuzzify_mean(b);
  if (ma != mb) return ma > mb;
  return a.a4 > b.a4;
}

/// true if a is a better "minimum" candidate than b: smaller mean, then smaller a1.
inline bool better_min(const FuzzyTrapezoid& a, const FuzzyTrapezoid& b) {
  const double ma = defuzzify_mean(a);
  const double mb = defuzzify_mean(b);
  if (ma != mb) return ma < mb;
  return a.a1 < b.a1;
}

inline FuzzyTrapezoid column_argmax(const Matrix<FuzzyTrapezoid>& w, std::size_t j) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < w.rows(); ++i)
    if (better_max(w(i, j), w(best, j))) best = i;
  return w(best, j);
}

inline FuzzyTrapezoid column_argmin(const Matrix<FuzzyTrapezoid>& w, std::size_t j) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < w.rows(); ++i)
    if (better_min(w(i, j), w(best, j))) best = i;
  return w(best, j);
}

inline FuzzyTrapezoid column_componentwise(const Matrix<FuzzyTrapezoid>& w, std::size_t j, bool take_max) {
  FuzzyTrapezoid out = w(0, j);
  out.height = 1.0;
  auto pick = [take_max](double a, double b) { return take_max ? std::max(a, b) : std::min(a, b); };
  for (std::size_t i = 1; i < w.rows(); ++i) {
    out.a1 = pick(out.a1, w(i, j).a1);
    out.a2 = pick(out.a2, w(i, j).a2);
    out.a3 = pick(out.a3, w(i, j).a3);
    out.a4 = pick(out.a4, w(i, j).a4);
  }
  return out;
}

}  // namespace detail

/**
 * Positive and negative ideal per criterion. Benefit-oriented columns take the
 * positive ideal from the maximum; cost-oriented columns (only present when
 * cost flipping is disabled) take it from the minimum.
 */
inline IdealPair ideal_solutions(const Matrix<FuzzyTrapezoid>& weighted, std::span<const CriterionKind> orientation,
                                 IdealStrategy strategy = IdealStrategy::defuzzified_argmax) {
  if (weighted.rows() < 2) throw std::invalid_argument("ideal solutions need at least 2 alternatives");
  IdealPair out;
  out.strategy = strategy;
  for (std::size_t j = 0; j < weighted.cols(); ++j) {
    const bool benefit = orientation.empty() || orientation[j] == CriterionKind::benefit;
    FuzzyTrapezoid hi;
    FuzzyTrapezoid lo;
    if (strategy == IdealStrategy::defuzzified_argmax) {
      hi = detail::column_argmax(weighted, j);
      lo = detail::column_argmin(weighted, j);
    } else {
      hi = detail::column_componentwise(weighted, j, true);
      lo = detail::column_componentwise(weighted, j, false);
    }
    out.positive.push_back(benefit ? hi : lo);
    out.negative.push_back(benefit ? lo : hi);
  }
  return out;
}

struct Separations {
  std::vector<double> positive;
  std::vector<double> negative;
};

inline Separations separations(const Matrix<FuzzyTrapezoid>& weighted, const IdealPair& ideals) {
  Separations out;
  out.positive.assign(weighted.rows(), 0.0);
  out.negative.assign(weighted.rows(), 0.0);
  for (std::size_t i = 0; i < weighted.rows(); ++i) {
    for (std::size_t j = 0; j < weighted.cols(); ++j) {
      out.positive[i] += distance(weighted(i, j), ideals.positive[j]);
      out.negative[i] += distance(weighted(i, j), ideals.negative[j]);
    }
  }
  return out;
}

struct Closeness {
  std::vector<double> xi;
  bool degenerate = false;
};

inline Closeness closeness(std::span<const double> d_positive, std::span<const double> d_negative) {
  if (d_positive.size() != d_negative.size()) throw std::invalid_argument("separation vectors differ in length");
  Closeness out;
  out.xi.reserve(d_positive.size());
  for (std::size_t i = 0; i < d_positive.size(); ++i) {
    const double total = d_positive[i] + d_negative[i];
    if (total <= 0.0) {
      out.xi.push_back(1.0);
      out.degenerate = true;
    } else {
      out.xi.push_back(d_negative[i] / total);
    }
  }
  return out;
}

inline RankingResult rank_topsis(const DecisionProblem& p, const SolveOptions& options = {}) {
  auto r = detail::prepare(p, Method::topsis, options);
  TopsisAudit audit;
  audit.weighted = weighted_matrix(r.normalized);
  audit.ideals = ideal_solutions(audit.weighted, r.normalized.orientation, options.ideal);
  auto sep = separations(audit.weighted, audit.ideals);
  auto cl = closeness(sep.positive, sep.negative);
  audit.distance_positive = std::move(sep.positive);
  audit.distance_negative = std::move(sep.negative);
  r.scores = std::move(cl.xi);
  r.degenerate = cl.degenerate;
  r.topsis = std::move(audit);
  detail::finish(r);
  return r;
}

}  // namespace zrank
