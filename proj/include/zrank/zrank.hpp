#pragma once

/**
 * @file zrank.hpp
 * @brief Umbrella header for the ranking engine (no HTTP dependencies).
 */

#include "zrank/fuzzy.hpp"
#include "zrank/io.hpp"
#include "zrank/matrix.hpp"
#include "zrank/problem.hpp"
#include "zrank/result.hpp"
#include "zrank/todim.hpp"
#include "zrank/topsis.hpp"
#include "zrank/znumber.hpp"

namespace zrank {

inline RankingResult solve(const DecisionProblem& p, Method method, const SolveOptions& options = {}) {
  return method == Method::todim ? rank_todim(p, options) : rank_topsis(p, options);
}

}  // namespace zrank
