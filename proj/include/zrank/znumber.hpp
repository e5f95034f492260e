#pragma once

/**
 * @file znumber.hpp
 * @brief Z-numbers (restriction, reliability), linguistic scales, and the
 * reduction of a Z-number to an ordinary trapezoidal fuzzy number.
 *
 * The reduction collapses the reliability B to a crisp weight alpha (its
 * centroid) and shrinks the restriction by sqrt(alpha).
 */

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "zrank/fuzzy.hpp"

namespace zrank {

/// How a reliability (or a fuzzy weight) is collapsed to a crisp value.
enum class CentroidMode {
  exact,        ///< true area centroid of the membership graph
  vertex_mean,  ///< (b1 + b2 + b3 + b4) / 4
};

inline std::string_view to_string(CentroidMode mode) {
  return mode == CentroidMode::exact ? "exact" : "eq19";
}

inline std::optional<CentroidMode> parse_centroid_mode(std::string_view s) {
  if (s == "exact") return CentroidMode::exact;
  if (s == "eq19" || s == "mean") return CentroidMode::vertex_mean;
  return std::nullopt;
}

inline double collapse(const FuzzyTrapezoid& f, CentroidMode mode) {
  return mode == CentroidMode::exact ? centroid(f) : defuzzify_mean(f);
}

struct ZNumber {
  FuzzyTrapezoid restriction;
  FuzzyTrapezoid reliability = FuzzyTrapezoid::crisp(1.0);

  friend bool operator==(const ZNumber&, const ZNumber&) = default;
};

class UnknownTerm : public std::out_of_range {
 public:
  UnknownTerm(const std::string& scale, const std::string& label)
      : std::out_of_range("unknown term '" + label + "' in scale '" + scale + "'"),
        scale_(scale),
        label_(label) {}

  [[nodiscard]] const std::string& scale() const noexcept { return scale_; }
  [[nodiscard]] const std::string& label() const noexcept { return label_; }

 private:
  std::string scale_;
  std::string label_;
};

struct LinguisticScale {
  std::string name;
  std::map<std::string, FuzzyTrapezoid> entries;

  [[nodiscard]] bool contains(const std::string& label) const { return entries.contains(label); }

  friend bool operator==(const LinguisticScale&, const LinguisticScale&) = default;
};

inline FuzzyTrapezoid resolve_term(const LinguisticScale& scale, const std::string& label) {
  const auto it = scale.entries.find(label);
  if (it == scale.entries.end()) throw UnknownTerm(scale.name, label);
  return it->second;
}

/// Scale name that resolves to the built-in reliability scale when a document
/// does not define it.
inline constexpr const char* kDefaultReliabilityScale = "reliability-3";

/**
 * Three-level reliability scale on [0, 1]. Both the "very high / high / medium"
 * and the "very sure / sure / not very sure" vocabularies map to the same
 * triangles: (0.75,1,1), (0.5,0.75,1), (0.25,0.5,0.75).
 */
inline LinguisticScale default_reliability_scale(std::string name = kDefaultReliabilityScale) {
  const auto top = FuzzyTrapezoid::triangular(0.75, 1.0, 1.0);
  const auto mid = FuzzyTrapezoid::triangular(0.5, 0.75, 1.0);
  const auto low = FuzzyTrapezoid::triangular(0.25, 0.5, 0.75);
  return {std::move(name),
          {{"VH", top}, {"VS", top}, {"H", mid}, {"S", mid}, {"M", low}, {"NVS", low}}};
}

class InvalidReliability : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Crisp reliability weight alpha in [0, 1].
inline double reliability_weight(const FuzzyTrapezoid& reliability,
                                 CentroidMode mode = CentroidMode::exact) {
  require_valid(reliability);
  if (reliability.a1 < -kEpsilon || reliability.a4 > 1.0 + kEpsilon) {
    throw InvalidReliability("reliability " + to_string(reliability) +
                             " has support outside [0, 1]");
  }
  const double alpha = collapse(reliability, mode);
  return alpha < 0.0 ? 0.0 : (alpha > 1.0 ? 1.0 : alpha);
}

/// Restriction scaled by sqrt(alpha); its height is preserved.
inline FuzzyTrapezoid convert_to_fuzzy(const ZNumber& z, CentroidMode mode = CentroidMode::exact) {
  require_valid(z.restriction);
  return scale(z.restriction, std::sqrt(reliability_weight(z.reliability, mode)));
}

}  // namespace zrank
