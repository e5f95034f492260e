#pragma once

// Bundled case files and the published figures they are checked against.

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "zrank/zrank.hpp"

#ifndef ZRANK_TEST_DATA_DIR
#error "ZRANK_TEST_DATA_DIR must point at the bundled data directory"
#endif

namespace zrank::fixtures {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(ZRANK_TEST_DATA_DIR) / name;
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline ProblemDocument load(const std::string& name) { return parse_document(read_text(data_path(name))); }

inline constexpr std::array<double, 8> kThetaGrid{0.5, 0.8, 1.0, 1.2, 1.5, 1.8, 2.5, 5.0};

// Vehicle selection: converted ratings, rows A1..A3, columns price, journey time, comfort.
inline constexpr std::array<std::array<std::array<double, 3>, 3>, 3> kCase1Converted{{
    {{{8.62, 9.57, 11.49}, {49.50, 70.71, 84.85}, {3.46, 4.33, 5.20}}},
    {{{17.32, 20.79, 21.65}, {57.45, 67.02, 95.75}, {6.06, 6.93, 8.660}}},
    {{{12.99, 12.99, 12.99}, {60.62, 69.28, 77.94}, {0.87, 3.46, 6.06}}},
}};

// Converted fuzzy weights. Only the first is printed converted; the other two
// follow from sqrt(centroid of VH) times the H and M importance triples.
inline constexpr std::array<std::array<double, 3>, 3> kCase1ConvertedWeights{{
    {0.72, 0.96, 0.96},
    {0.479, 0.718, 0.957},
    {0.239, 0.479, 0.718},
}};

// Global value of A3 over kThetaGrid; A1 is 1 and A2 is 0 throughout.
inline constexpr std::array<double, 8> kCase1TrainTodim{0.3012, 0.2722, 0.2570, 0.2442,
                                                        0.2283, 0.2155, 0.1933, 0.1540};

inline constexpr std::array<double, 3> kCase1TopsisPublished{0.2305, 0.1363, 0.1856};

// Clothing evaluation: converted ratings, rows A1..A4, columns C1..C3.
inline constexpr std::array<std::array<std::array<double, 4>, 3>, 4> kCase2Converted{{
    {{{0, 0.15, 0.24, 0.34}, {0, 0.03, 0.10, 0.17}, {0, 0.08, 0.15, 0.19}}},
    {{{0.22, 0.30, 0.36, 0.43}, {0.34, 0.43, 0.56, 0.65}, {0.21, 0.25, 0.32, 0.39}}},
    {{{0.14, 0.18, 0.25, 0.32}, {0.09, 0.13, 0.22, 0.30}, {0.24, 0.29, 0.37, 0.44}}},
    {{{0, 0.08, 0.10, 0.19}, {0, 0.07, 0.15, 0.19}, {0.09, 0.13, 0.22, 0.30}}},
}};

// Global values of A3 and A4 over kThetaGrid; A2 is 1 and A1 is 0 throughout.
inline constexpr std::array<double, 8> kCase2A3Todim{0.6095, 0.5872, 0.5766, 0.5682,
                                                     0.5584, 0.5509, 0.5388, 0.5197};
inline constexpr std::array<double, 8> kCase2A4Todim{0.0058, 0.0075, 0.0084, 0.0090,
                                                     0.0098, 0.0103, 0.0113, 0.0127};

inline constexpr std::array<double, 4> kCase2TopsisPublished{0.0429, 0.2539, 0.1207, 0.0348};

// Source ratings of the vehicle case: restriction triangles and reliability terms.
inline constexpr std::array<std::array<std::array<double, 3>, 3>, 3> kCase1Restrictions{{
    {{{9, 10, 12}, {70, 100, 120}, {4, 5, 6}}},
    {{{20, 24, 25}, {60, 70, 100}, {7, 8, 10}}},
    {{{15, 15, 15}, {70, 80, 90}, {1, 4, 7}}},
}};
inline const std::array<std::array<const char*, 3>, 3> kCase1Reliability{{
    {"VH", "M", "H"},
    {"H", "VH", "H"},
    {"H", "H", "H"},
}};
inline const std::array<const char*, 3> kCase1Importance{"VH", "H", "M"};

// Numeric reliability triangles as printed next to the restrictions. The car
// journey-time cell is printed (0.75, 1, 1) although its term is M.
inline constexpr std::array<std::array<std::array<double, 3>, 3>, 3> kCase1ReliabilityPrinted{{
    {{{0.75, 1, 1}, {0.75, 1, 1}, {0.5, 0.75, 1}}},
    {{{0.5, 0.75, 1}, {0.75, 1, 1}, {0.5, 0.75, 1}}},
    {{{0.5, 0.75, 1}, {0.5, 0.75, 1}, {0.5, 0.75, 1}}},
}};

// Source ratings of the clothing case.
inline constexpr std::array<std::array<std::array<double, 4>, 3>, 4> kCase2Restrictions{{
    {{{0, 0.15, 0.25, 0.35}, {0, 0.03, 0.12, 0.2}, {0, 0.08, 0.16, 0.2}}},
    {{{0.25, 0.35, 0.42, 0.5}, {0.4, 0.5, 0.65, 0.75}, {0.3, 0.35, 0.45, 0.55}}},
    {{{0.2, 0.25, 0.35, 0.45}, {0.1, 0.15, 0.25, 0.35}, {0.25, 0.3, 0.38, 0.45}}},
    {{{0, 0.08, 0.1, 0.2}, {0, 0.07, 0.16, 0.2}, {0.1, 0.15, 0.25, 0.35}}},
}};
inline const std::array<std::array<const char*, 3>, 4> kCase2Reliability{{
    {"VS", "S", "VS"},
    {"S", "S", "NVS"},
    {"NVS", "S", "VS"},
    {"VS", "VS", "S"},
}};
inline constexpr std::array<double, 3> kCase2Weights{0.35, 0.5, 0.15};

// Printed numeric reliabilities: triangle then height.
inline constexpr std::array<std::array<std::array<double, 4>, 3>, 4> kCase2ReliabilityPrinted{{
    {{{0, 0.2, 0.35, 0.8}, {0, 0.1, 0.2, 0.8}, {0, 0.1, 0.2, 0.9}}},
    {{{0.3, 0.4, 0.5, 0.8}, {0.4, 0.6, 0.75, 0.8}, {0.3, 0.4, 0.55, 0.7}}},
    {{{0.2, 0.3, 0.45, 0.7}, {0.1, 0.2, 0.35, 0.9}, {0.25, 0.3, 0.45, 0.9}}},
    {{{0, 0.1, 0.2, 0.8}, {0, 0.1, 0.2, 0.8}, {0.1, 0.2, 0.35, 0.9}}},
}};

inline std::array<double, 4> quad(const FuzzyTrapezoid& f) { return {f.a1, f.a2, f.a3, f.a4}; }

/// Largest absolute component difference; triangles are compared as (a1, a2, a4).
inline double max_deviation(const FuzzyTrapezoid& f, const std::array<double, 3>& tri) {
  return std::max({std::abs(f.a1 - tri[0]), std::abs(f.a2 - tri[1]), std::abs(f.a3 - tri[1]),
                   std::abs(f.a4 - tri[2])});
}

inline double max_deviation(const FuzzyTrapezoid& f, const std::array<double, 4>& q) {
  return std::max({std::abs(f.a1 - q[0]), std::abs(f.a2 - q[1]), std::abs(f.a3 - q[2]), std::abs(f.a4 - q[3])});
}

}  // namespace zrank::fixtures
