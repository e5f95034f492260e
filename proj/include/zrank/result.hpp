#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zrank/fuzzy.hpp"
#include "zrank/matrix.hpp"
#include "zrank/problem.hpp"

namespace zrank {

inline constexpr std::string_view kEngineName = "zrank";
inline constexpr std::string_view kEngineVersion = "1.0.0";

enum class Method { todim, topsis };

inline std::string_view to_string(Method m) { return m == Method::todim ? "todim" : "topsis"; }

inline std::optional<Method> parse_method(std::string_view s) {
  if (s == "todim") return Method::todim;
  if (s == "topsis") return Method::topsis;
  return std::nullopt;
}

/// Pairwise dominance delta(i, j) and the per-criterion partial matrices phi_c(i, j).
struct DominanceMatrix {
  Matrix<double> total;
  std::vector<Matrix<double>> partial;

  [[nodiscard]] std::size_t size() const noexcept { return total.rows(); }

  /// sum_j delta(i, j), summed in ascending j.
  [[nodiscard]] std::vector<double> row_sums() const {
    std::vector<double> out(total.rows(), 0.0);
    for (std::size_t i = 0; i < total.rows(); ++i)
      for (std::size_t j = 0; j < total.cols(); ++j) out[i] += total(i, j);
    return out;
  }

  friend bool operator==(const DominanceMatrix&, const DominanceMatrix&) = default;
};

struct IdealPair {
  std::vector<FuzzyTrapezoid> positive;
  std::vector<FuzzyTrapezoid> negative;
  IdealStrategy strategy = IdealStrategy::defuzzified_argmax;

  friend bool operator==(const IdealPair&, const IdealPair&) = default;
};

struct TodimAudit {
  DominanceMatrix dominance;
  std::vector<double> row_sums;
};

struct TopsisAudit {
  Matrix<FuzzyTrapezoid> weighted;
  IdealPair ideals;
  std::vector<double> distance_positive;
  std::vector<double> distance_negative;
};

/// Competition ranks (1 = best). Scores within kEpsilon of a group's leader share its rank.
struct RankAssignment {
  std::vector<std::size_t> ranks;
  bool tie = false;
};

inline RankAssignment assign_ranks(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  RankAssignment out;
  out.ranks.assign(scores.size(), 0);
  std::size_t leader = 0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (pos > 0 && scores[order[leader]] - scores[order[pos]] <= kEpsilon) {
      out.ranks[order[pos]] = out.ranks[order[leader]];
      out.tie = true;
    } else {
      leader = pos;
      out.ranks[order[pos]] = pos + 1;
    }
  }
  return out;
}

struct RankingResult {
  Method method = Method::todim;
  std::vector<std::string> alternatives;
  std::vector<std::string> criteria;
  /// TODIM global value or TOPSIS relative closeness, in [0, 1].
  std::vector<double> scores;
  std::vector<std::size_t> ranks;
  bool tie = false;
  /// All dominance row sums equal (TODIM) or every separation zero (TOPSIS).
  bool degenerate = false;
  SolveOptions options;

  Matrix<FuzzyTrapezoid> converted;
  std::vector<FuzzyTrapezoid> converted_weights;
  std::vector<double> weights;
  NormalizedMatrix normalized;
  std::optional<TodimAudit> todim;
  std::optional<TopsisAudit> topsis;
  std::vector<Diagnostic> warnings;

  /// Alternative indices from best to worst; ties keep input order.
  [[nodiscard]] std::vector<std::size_t> order() const {
    std::vector<std::size_t> idx(ranks.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return ranks[a] < ranks[b]; });
    return idx;
  }
};

namespace detail {

/// Shared front half of both pipelines: validate, convert, weigh, normalize.
inline RankingResult prepare(const DecisionProblem& p, Method method, const SolveOptions& options) {
  RankingResult r;
  r.method = method;
  r.options = options;
  r.alternatives = p.alternatives;
  for (const auto& c : p.criteria) r.criteria.push_back(c.id);

  require_solvable(p, options);
  r.converted = convert_matrix(p, options.centroid);
  r.converted_weights = convert_weights(p, options.centroid);
  r.weights = resolve_weights(p, options.centroid);
  r.normalized = normalize_converted(r.converted, p, r.weights, options);
  r.warnings = r.normalized.warnings;
  return r;
}

inline void finish(RankingResult& r) {
  auto ranks = assign_ranks(r.scores);
  r.ranks = std::move(ranks.ranks);
  r.tie = ranks.tie;
}

}  // namespace detail

}  // namespace zrank
