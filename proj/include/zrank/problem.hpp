#pragma once

/**
 * @file problem.hpp
 * @brief Decision problem definition, validation, weight resolution and the
 * min-max normalization shared by both ranking methods.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zrank/fuzzy.hpp"
#include "zrank/matrix.hpp"
#include "zrank/znumber.hpp"

namespace zrank {

enum class CriterionKind { benefit, cost };

inline std::string_view to_string(CriterionKind k) { return k == CriterionKind::benefit ? "benefit" : "cost"; }

inline std::optional<CriterionKind> parse_criterion_kind(std::string_view s) {
  if (s == "benefit") return CriterionKind::benefit;
  if (s == "cost") return CriterionKind::cost;
  return std::nullopt;
}

/// A plain real number.
struct Crisp {
  double value = 0.0;
  friend bool operator==(const Crisp&, const Crisp&) = default;
};

/// Reference to a term of a named linguistic scale.
struct TermRef {
  std::string scale;
  std::string label;
  friend bool operator==(const TermRef&, const TermRef&) = default;
};

/// Either side of a Z-cell may be given numerically or as a term.
using FuzzyOperand = std::variant<FuzzyTrapezoid, TermRef>;

struct ZCell {
  FuzzyOperand restriction;
  FuzzyOperand reliability;
  friend bool operator==(const ZCell&, const ZCell&) = default;
};

/// Rating or weight as written by the user. monostate marks a missing entry.
using Cell = std::variant<std::monostate, Crisp, FuzzyTrapezoid, ZCell, TermRef>;

struct Criterion {
  std::string id;
  CriterionKind kind = CriterionKind::benefit;
  Cell weight = Crisp{1.0};
  friend bool operator==(const Criterion&, const Criterion&) = default;
};

struct DecisionProblem {
  std::string name;
  std::vector<std::string> alternatives;
  std::vector<Criterion> criteria;
  /// ratings[i][j] rates alternative i on criterion j.
  std::vector<std::vector<Cell>> ratings;
  std::map<std::string, LinguisticScale> scales;

  [[nodiscard]] std::size_t alternative_count() const noexcept { return alternatives.size(); }
  [[nodiscard]] std::size_t criterion_count() const noexcept { return criteria.size(); }

  friend bool operator==(const DecisionProblem&, const DecisionProblem&) = default;
};

enum class IdealStrategy {
  defuzzified_argmax,  ///< ideals are actual cells, chosen by mean value
  componentwise,       ///< ideals built from per-component extremes
};

inline std::string_view to_string(IdealStrategy s) {
  return s == IdealStrategy::defuzzified_argmax ? "argmax" : "componentwise";
}

inline std::optional<IdealStrategy> parse_ideal_strategy(std::string_view s) {
  if (s == "argmax") return IdealStrategy::defuzzified_argmax;
  if (s == "componentwise") return IdealStrategy::componentwise;
  return std::nullopt;
}

struct SolveOptions {
  double theta = 1.0;
  IdealStrategy ideal = IdealStrategy::defuzzified_argmax;
  CentroidMode centroid = CentroidMode::exact;
  /// Drop zero-range criteria with a warning instead of failing.
  bool drop_degenerate = false;
  /// Mirror cost columns during normalization so every column is benefit-oriented.
  /// When false, cost columns keep their orientation and TOPSIS takes their ideal from the minimum.
  bool flip_cost = true;

  friend bool operator==(const SolveOptions&, const SolveOptions&) = default;
};

// ---------------------------------------------------------------------------
// Diagnostics

enum class Severity { error, warning };

struct Diagnostic {
  Severity severity = Severity::error;
  std::string code;
  std::string message;
  std::optional<std::size_t> row;
  std::optional<std::size_t> col;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

inline bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Diagnostic> diags)
      : std::runtime_error(summarize(diags)), diagnostics_(std::move(diags)) {}

  [[nodiscard]] const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  static std::string summarize(const std::vector<Diagnostic>& diags) {
    std::string out = "problem is not solvable";
    for (const auto& d : diags) {
      if (d.severity != Severity::error) continue;
      out += "; " + d.message;
    }
    return out;
  }

  std::vector<Diagnostic> diagnostics_;
};

class DegenerateCriterion : public std::domain_error {
 public:
  DegenerateCriterion(std::size_t index, const std::string& id)
      : std::domain_error("degenerate criterion '" + id + "': all ratings span a zero range"),
        index_(index) {}

  [[nodiscard]] std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// ---------------------------------------------------------------------------
// Cell resolution

inline FuzzyTrapezoid resolve_operand(const FuzzyOperand& op,
                                      const std::map<std::string, LinguisticScale>& scales) {
  if (const auto* f = std::get_if<FuzzyTrapezoid>(&op)) return require_valid(*f);
  const auto& term = std::get<TermRef>(op);
  const auto it = scales.find(term.scale);
  if (it == scales.end()) throw UnknownTerm(term.scale, term.label);
  return require_valid(resolve_term(it->second, term.label));
}

/// Cell as a fully resolved Z-number (crisp and fuzzy cells get reliability 1).
inline ZNumber resolve_znumber(const Cell& cell, const std::map<std::string, LinguisticScale>& scales) {
  struct Visitor {
    const std::map<std::string, LinguisticScale>& scales;
    ZNumber operator()(std::monostate) const { throw std::invalid_argument("missing cell"); }
    ZNumber operator()(const Crisp& c) const { return {FuzzyTrapezoid::crisp(c.value)}; }
    ZNumber operator()(const FuzzyTrapezoid& f) const { return {require_valid(f)}; }
    ZNumber operator()(const TermRef& t) const { return {resolve_operand(t, scales)}; }
    ZNumber operator()(const ZCell& z) const {
      return {resolve_operand(z.restriction, scales), resolve_operand(z.reliability, scales)};
    }
  };
  return std::visit(Visitor{scales}, cell);
}

/// Converted fuzzy value of a cell.
inline FuzzyTrapezoid resolve_cell(const Cell& cell, const std::map<std::string, LinguisticScale>& scales,
                                   CentroidMode mode = CentroidMode::exact) {
  if (const auto* c = std::get_if<Crisp>(&cell)) return require_valid(FuzzyTrapezoid::crisp(c->value));
  return convert_to_fuzzy(resolve_znumber(cell, scales), mode);
}

inline const Cell& cell_at(const DecisionProblem& p, std::size_t i, std::size_t j) {
  static const Cell missing{};
  if (i >= p.ratings.size() || j >= p.ratings[i].size()) return missing;
  return p.ratings[i][j];
}

/// Every rating cell converted to a plain fuzzy number.
inline Matrix<FuzzyTrapezoid> convert_matrix(const DecisionProblem& p, CentroidMode mode = CentroidMode::exact) {
  Matrix<FuzzyTrapezoid> out(p.alternative_count(), p.criterion_count());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = resolve_cell(cell_at(p, i, j), p.scales, mode);
  return out;
}

/// Weight cells converted to fuzzy numbers (crisp weights become degenerate trapezoids).
inline std::vector<FuzzyTrapezoid> convert_weights(const DecisionProblem& p, CentroidMode mode = CentroidMode::exact) {
  std::vector<FuzzyTrapezoid> out;
  out.reserve(p.criteria.size());
  for (const auto& c : p.criteria) out.push_back(resolve_cell(c.weight, p.scales, mode));
  return out;
}

/// Crisp weights summing to 1. Fuzzy and Z weights are collapsed by the centroid mode.
inline std::vector<double> resolve_weights(const DecisionProblem& p, CentroidMode mode = CentroidMode::exact) {
  std::vector<double> w;
  w.reserve(p.criteria.size());
  for (const auto& c : p.criteria) {
    double v = 0.0;
    if (const auto* crisp = std::get_if<Crisp>(&c.weight)) {
      v = crisp->value;
    } else {
      v = collapse(resolve_cell(c.weight, p.scales, mode), mode);
    }
    if (!(v >= 0.0)) throw std::invalid_argument("weight of criterion '" + c.id + "' is negative");
    w.push_back(v);
  }
  double total = 0.0;
  for (double v : w) total += v;
  if (!(total > 0.0)) throw std::invalid_argument("weight vector is all zero");
  for (double& v : w) v /= total;
  return w;
}

// ---------------------------------------------------------------------------
// Validation

namespace detail {

inline std::string location(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

/// Range max(a4) - min(a1) of a column of converted cells.
inline double column_range(const Matrix<FuzzyTrapezoid>& m, std::size_t col) {
  double lo = m(0, col).a1;
  double hi = m(0, col).a4;
  for (std::size_t i = 1; i < m.rows(); ++i) {
    lo = std::min(lo, m(i, col).a1);
    hi = std::max(hi, m(i, col).a4);
  }
  return hi - lo;
}

}  // namespace detail

/**
 * Collects everything that would stop the problem from being solved. The list
 * is empty iff the problem is solvable under `options`. Degenerate criteria
 * are errors unless `options.drop_degenerate` is set.
 */
inline std::vector<Diagnostic> validate(const DecisionProblem& p, const SolveOptions& options = {}) {
  std::vector<Diagnostic> out;
  auto error = [&out](std::string code, std::string msg, std::optional<std::size_t> r = {},
                      std::optional<std::size_t> c = {}) {
    out.push_back({Severity::error, std::move(code), std::move(msg), r, c});
  };

  const std::size_t m = p.alternative_count();
  const std::size_t n = p.criterion_count();
  if (m < 2) error("too-few-alternatives", "at least 2 alternatives are required");
  if (n < 1) error("no-criteria", "at least 1 criterion is required");

  std::set<std::string> ids;
  for (std::size_t j = 0; j < n; ++j) {
    if (!ids.insert(p.criteria[j].id).second)
      error("duplicate-criterion", "duplicate criterion id '" + p.criteria[j].id + "'", std::nullopt, j);
  }
  std::set<std::string> labels;
  for (const auto& a : p.alternatives)
    if (!labels.insert(a).second) error("duplicate-alternative", "duplicate alternative '" + a + "'");

  if (p.ratings.size() != m)
    error("dimension-mismatch", "ratings have " + std::to_string(p.ratings.size()) + " rows, expected " +
                                    std::to_string(m));
  for (std::size_t i = 0; i < p.ratings.size(); ++i) {
    if (p.ratings[i].size() != n)
      error("dimension-mismatch", "row " + std::to_string(i) + " has " + std::to_string(p.ratings[i].size()) +
                                      " cells, expected " + std::to_string(n), i);
  }

  Matrix<FuzzyTrapezoid> converted(m, n);
  bool all_cells_ok = true;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Cell& cell = cell_at(p, i, j);
      if (std::holds_alternative<std::monostate>(cell)) {
        error("missing-cell", "missing rating at " + detail::location(i, j), i, j);
        all_cells_ok = false;
        continue;
      }
      try {
        converted(i, j) = resolve_cell(cell, p.scales, options.centroid);
      } catch (const std::exception& e) {
        error("invalid-cell", std::string(e.what()) + " at " + detail::location(i, j), i, j);
        all_cells_ok = false;
      }
    }
  }

  bool weights_ok = true;
  for (std::size_t j = 0; j < n; ++j) {
    const Cell& w = p.criteria[j].weight;
    if (std::holds_alternative<std::monostate>(w)) {
      error("missing-weight", "criterion '" + p.criteria[j].id + "' has no weight", std::nullopt, j);
      weights_ok = false;
      continue;
    }
    if (const auto* c = std::get_if<Crisp>(&w); c && !(c->value >= 0.0)) {
      error("negative-weight", "criterion '" + p.criteria[j].id + "' has a negative weight", std::nullopt, j);
      weights_ok = false;
      continue;
    }
    try {
      resolve_cell(w, p.scales, options.centroid);
    } catch (const std::exception& e) {
      error("invalid-weight", std::string(e.what()) + " in weight of '" + p.criteria[j].id + "'", std::nullopt, j);
      weights_ok = false;
    }
  }
  if (weights_ok && n > 0) {
    try {
      resolve_weights(p, options.centroid);
    } catch (const std::exception& e) {
      error("invalid-weights", e.what());
    }
  }

  if (all_cells_ok && m >= 2) {
    std::size_t dropped = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (detail::column_range(converted, j) > 0.0) continue;
      ++dropped;
      out.push_back({options.drop_degenerate ? Severity::warning : Severity::error, "degenerate-criterion",
                     "degenerate criterion '" + p.criteria[j].id + "': all ratings are identical", std::nullopt, j});
    }
    if (options.drop_degenerate && n > 0 && dropped == n)
      error("no-criteria", "every criterion is degenerate");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normalization

/// Min-max normalized matrix plus the crisp weights of the criteria it keeps.
struct NormalizedMatrix {
  Matrix<FuzzyTrapezoid> values;
  std::vector<double> weights;
  /// Indices into the problem's criteria of the kept columns.
  std::vector<std::size_t> criteria;
  /// Orientation of each kept column after normalization.
  std::vector<CriterionKind> orientation;
  std::vector<Diagnostic> warnings;

  [[nodiscard]] std::size_t rows() const noexcept { return values.rows(); }
  [[nodiscard]] std::size_t cols() const noexcept { return values.cols(); }

  friend bool operator==(const NormalizedMatrix&, const NormalizedMatrix&) = default;
};

/**
 * Normalizes one column to [0, 1] by max(a4) - min(a1).
 *
 * Benefit: r^k = (a^k - min a1) / range.
 * Cost with flip: r^k = (max a4 - a^k) / range, then the quadruplet is reversed
 * so the result is again an ordered trapezoid.
 * Cost without flip: same as benefit (orientation kept for the caller).
 */
inline std::vector<FuzzyTrapezoid> normalize_column(std::span<const FuzzyTrapezoid> column, CriterionKind kind,
                                                    bool flip_cost = true) {
  if (column.empty()) return {};
  double lo = column[0].a1;
  double hi = column[0].a4;
  for (const auto& f : column) {
    lo = std::min(lo, f.a1);
    hi = std::max(hi, f.a4);
  }
  const double range = hi - lo;
  if (!(range > 0.0)) throw std::domain_error("zero-range column");

  std::vector<FuzzyTrapezoid> out;
  out.reserve(column.size());
  for (const auto& f : column) {
    if (kind == CriterionKind::cost && flip_cost) {
      out.emplace_back((hi - f.a4) / range, (hi - f.a3) / range, (hi - f.a2) / range, (hi - f.a1) / range, f.height);
    } else {
      out.emplace_back((f.a1 - lo) / range, (f.a2 - lo) / range, (f.a3 - lo) / range, (f.a4 - lo) / range, f.height);
    }
  }
  return out;
}

/// Normalizes an already converted matrix. Weights must be aligned with the columns.
inline NormalizedMatrix normalize_converted(const Matrix<FuzzyTrapezoid>& converted, const DecisionProblem& p,
                                            std::span<const double> weights, const SolveOptions& options = {}) {
  NormalizedMatrix out;
  std::vector<std::vector<FuzzyTrapezoid>> columns;
  for (std::size_t j = 0; j < converted.cols(); ++j) {
    const auto col = converted.column(j);
    const auto& crit = p.criteria[j];
    try {
      columns.push_back(normalize_column(col, crit.kind, options.flip_cost));
    } catch (const std::domain_error&) {
      if (!options.drop_degenerate) throw DegenerateCriterion(j, crit.id);
      out.warnings.push_back({Severity::warning, "degenerate-criterion",
                              "dropped degenerate criterion '" + crit.id + "'", std::nullopt, j});
      continue;
    }
    out.criteria.push_back(j);
    out.orientation.push_back(options.flip_cost ? CriterionKind::benefit : crit.kind);
  }
  if (out.criteria.empty()) throw std::domain_error("no criteria left after dropping degenerate ones");

  out.values = Matrix<FuzzyTrapezoid>(converted.rows(), out.criteria.size());
  double total = 0.0;
  for (std::size_t k = 0; k < out.criteria.size(); ++k) {
    for (std::size_t i = 0; i < converted.rows(); ++i) out.values(i, k) = columns[k][i];
    out.weights.push_back(weights[out.criteria[k]]);
    total += out.weights.back();
  }
  if (!(total > 0.0)) throw std::domain_error("remaining criteria all have zero weight");
  for (double& w : out.weights) w /= total;
  return out;
}

/// Throws DegenerateCriterion when that is the only problem, ValidationError otherwise.
inline void require_solvable(const DecisionProblem& p, const SolveOptions& options = {}) {
  auto diags = validate(p, options);
  if (!has_errors(diags)) return;
  const Diagnostic* degenerate = nullptr;
  std::size_t errors = 0;
  for (const auto& d : diags) {
    if (d.severity != Severity::error) continue;
    ++errors;
    if (d.code == "degenerate-criterion" && !degenerate) degenerate = &d;
  }
  if (degenerate && errors == 1) throw DegenerateCriterion(*degenerate->col, p.criteria[*degenerate->col].id);
  throw ValidationError(std::move(diags));
}

/// Validates, converts, and normalizes the whole problem.
inline NormalizedMatrix normalize(const DecisionProblem& p, const SolveOptions& options = {}) {
  require_solvable(p, options);
  const auto weights = resolve_weights(p, options.centroid);
  return normalize_converted(convert_matrix(p, options.centroid), p, weights, options);
}

}  // namespace zrank
