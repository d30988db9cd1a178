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

#ifndef CUBIC2EC_CORE_ORACLE_HPP_
#define CUBIC2EC_CORE_ORACLE_HPP_

#include <vector>

#include "core/connectivity.hpp"
#include "core/graph.hpp"
#include "core/rational.hpp"

namespace cubic2ec {

inline constexpr int kDefaultOracleMaxOrder = 16;

struct OptResult {
  int value = 0;
  EdgeSet witness;  // lexicographically least optimum
};

// Minimum 2EC spanning subgraph by branch and bound. Needs a 2EC graph with
// at most kDefaultOracleMaxOrder vertices.
OptResult exact_opt(const Graph& g);

struct LpSolution {
  Rational value;
  std::vector<Rational> x;      // per edge, in [0, 1]
  std::vector<Cut> tight_cuts;  // sum of x over the cut equals 2
};

// min sum x_e  s.t.  x(delta(S)) >= 2 for every cut, 0 <= x <= 1.
LpSolution lp_bound(const Graph& g);

struct GapReport {
  int opt = 0;
  Rational lp;
  Rational gap;  // opt / lp
};

GapReport integrality_gap(const Graph& g);

}  // namespace cubic2ec

#endif  // CUBIC2EC_CORE_ORACLE_HPP_
