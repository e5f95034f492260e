#pragma once

/**
 * @file fuzzy.hpp
 * @brief Trapezoidal fuzzy numbers and the metrics the ranking methods need.
 *
 * Triangular and crisp values are not separate types: a triangular number is
 * stored with a2 == a3 and a crisp value with all four components equal.
 */

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace zrank {

/// Tolerance used for invariant checks and tie detection.
inline constexpr double kEpsilon = 1e-9;

class InvalidFuzzyNumber : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FuzzyTrapezoid {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double a4 = 0.0;
  double height = 1.0;

  constexpr FuzzyTrapezoid() = default;
  constexpr FuzzyTrapezoid(double v1, double v2, double v3, double v4, double h = 1.0)
      : a1(v1), a2(v2), a3(v3), a4(v4), height(h) {}

  static constexpr FuzzyTrapezoid crisp(double x) { return {x, x, x, x}; }
  static constexpr FuzzyTrapezoid triangular(double lo, double mode, double hi, double h = 1.0) {
    return {lo, mode, mode, hi, h};
  }

  [[nodiscard]] constexpr std::array<double, 4> components() const { return {a1, a2, a3, a4}; }
  [[nodiscard]] constexpr bool is_crisp() const { return a1 == a2 && a2 == a3 && a3 == a4; }
  [[nodiscard]] constexpr bool is_triangular() const { return a2 == a3; }

  /// Ordering a1 <= a2 <= a3 <= a4 and 0 < height <= 1, within kEpsilon.
  [[nodiscard]] bool valid() const {
    const bool finite = std::isfinite(a1) && std::isfinite(a2) && std::isfinite(a3) &&
                        std::isfinite(a4) && std::isfinite(height);
    return finite && a1 <= a2 + kEpsilon && a2 <= a3 + kEpsilon && a3 <= a4 + kEpsilon &&
           height > 0.0 && height <= 1.0 + kEpsilon;
  }

  friend constexpr bool operator==(const FuzzyTrapezoid&, const FuzzyTrapezoid&) = default;
};

inline std::string to_string(const FuzzyTrapezoid& f) {
  std::ostringstream os;
  os << '(' << f.a1 << ", " << f.a2 << ", " << f.a3 << ", " << f.a4;
  if (f.height != 1.0) os << "; " << f.height;
  os << ')';
  return os.str();
}

/// Throws InvalidFuzzyNumber unless f satisfies the trapezoid invariants.
inline const FuzzyTrapezoid& require_valid(const FuzzyTrapezoid& f) {
  if (!f.valid()) {
    throw InvalidFuzzyNumber("invalid trapezoid " + to_string(f) +
                             ": requires a1 <= a2 <= a3 <= a4 and 0 < height <= 1");
  }
  return f;
}

/// Piecewise-linear membership grade, scaled by the height.
inline double membership(const FuzzyTrapezoid& f, double x) {
  if (x < f.a1 || x > f.a4) return 0.0;
  if (x >= f.a2 && x <= f.a3) return f.height;
  if (x < f.a2) return f.height * (x - f.a1) / (f.a2 - f.a1);
  return f.height * (f.a4 - x) / (f.a4 - f.a3);
}

/// Mean of the four defining points.
inline double defuzzify_mean(const FuzzyTrapezoid& f) { return (f.a1 + f.a2 + f.a3 + f.a4) / 4.0; }

/**
 * x-coordinate of the area centroid of the membership graph.
 *
 * Integrating x*mu(x) and mu(x) over the three linear pieces gives
 *   (a4^2 + a3*a4 + a3^2 - a1^2 - a1*a2 - a2^2) / (3 * (a4 + a3 - a1 - a2)).
 * The height scales numerator and denominator alike and drops out. The
 * denominator vanishes only for crisp numbers, which return their value.
 */
inline double centroid(const FuzzyTrapezoid& f) {
  const double den = 3.0 * (f.a4 + f.a3 - f.a1 - f.a2);
  if (den <= 0.0) return f.a1;
  const double num = f.a4 * f.a4 + f.a3 * f.a4 + f.a3 * f.a3 - f.a1 * f.a1 - f.a1 * f.a2 - f.a2 * f.a2;
  return num / den;
}

/// Vertex distance with cross terms on the (1,2) and (3,4) pairs. Heights are ignored.
inline double distance(const FuzzyTrapezoid& a, const FuzzyTrapezoid& b) {
  const double d1 = b.a1 - a.a1;
  const double d2 = b.a2 - a.a2;
  const double d3 = b.a3 - a.a3;
  const double d4 = b.a4 - a.a4;
  const double q = d1 * d1 + d2 * d2 + d3 * d3 + d4 * d4 + d1 * d2 + d3 * d4;
  // q is a positive definite form; clamp rounding noise below zero.
  return std::sqrt(q > 0.0 ? q / 6.0 : 0.0);
}

/// Multiplies every component by s >= 0; the height is kept.
inline FuzzyTrapezoid scale(const FuzzyTrapezoid& f, double s) {
  if (!(s >= 0.0)) {
    throw std::invalid_argument("scale factor must be non-negative, got " + std::to_string(s));
  }
  return {f.a1 * s, f.a2 * s, f.a3 * s, f.a4 * s, f.height};
}

}  // namespace zrank
