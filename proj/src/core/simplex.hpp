// Copyright 2026 The cubic2ec Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUBIC2EC_CORE_SIMPLEX_HPP_
#define CUBIC2EC_CORE_SIMPLEX_HPP_

#include <span>
#include <utility>
#include <vector>

#include "core/rational.hpp"

namespace cubic2ec {

// Column of an equality-form LP with small integer coefficients.
struct LpColumn {
  std::vector<std::pair<int, int>> entries;  // (row, coefficient)
  Rational cost;
};

enum class LpStatus { kOptimal, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kOptimal;
  Rational objective;
  std::vector<Rational> x;      // one value per column
  std::vector<Rational> duals;  // c_B B^-1, one per row
  std::vector<int> basis;       // column index per row
  int iterations = 0;
};

// Revised primal simplex over exact rationals:
//   maximize cost . x  subject to  A x = rhs,  x >= 0.
// `initial_basis` must name columns forming an identity matrix, so that
// x_B = rhs >= 0 is a feasible start. Bland's rule on both the entering and
// leaving choice makes the run terminate and the final basis deterministic.
LpResult maximize(int rows, std::span<const LpColumn> columns, std::span<const Rational> rhs,
                  std::vector<int> initial_basis);

}  // namespace cubic2ec

#endif  // CUBIC2EC_CORE_SIMPLEX_HPP_
