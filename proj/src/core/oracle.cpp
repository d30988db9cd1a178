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

#include "core/oracle.hpp"

#include "core/errors.hpp"
#include "core/simplex.hpp"

namespace cubic2ec {

namespace {

void check_oracle_input(const Graph& g) {
  if (g.order() > kDefaultOracleMaxOrder) {
    fail(ErrorCode::kSizeLimit, "graph has " + std::to_string(g.order()) +
                                    " vertices; the oracles are limited to " +
                                    std::to_string(kDefaultOracleMaxOrder));
  }
  require(g.order() >= 2, "the oracles need at least 2 vertices");
  require(g.size() <= kMaxEdges, "too many edges");
  require(is_2ec(g, g.all_edges()), "graph is not 2-edge-connected");
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g) : g_(g) {}

  OptResult run() {
    // Incumbent: drop edges from the top while the rest stays 2EC.
    EdgeSet greedy = g_.all_edges();
    for (EdgeId e = g_.size() - 1; e >= 0; --e) {
      EdgeSet trial = greedy;
      trial.erase(e);
      if (is_2ec(g_, trial)) greedy = trial;
    }
    best_ = greedy.size();
    witness_ = greedy;
    search(0, EdgeSet(), g_.all_edges());
    return {best_, witness_};
  }

 private:
  // Every vertex keeps at least two edges.
  int lower_bound(EdgeSet included) const {
    int total = 0;
    for (VertexId v = 0; v < g_.order(); ++v) {
      int d = 0;
      for (EdgeId e : g_.incident(v)) d += included.contains(e) ? 1 : 0;
      total += std::max(2, d);
    }
    return (total + 1) / 2;
  }

  // Include-first over ascending edge ids visits equal-size sets in
  // lexicographic order, so the first optimum reached is the least one.
  void search(EdgeId next, EdgeSet included, EdgeSet available) {
    const int lb = lower_bound(included);
    if (lb > best_ || (found_ && lb >= best_)) return;
    if (!is_2ec(g_, available)) return;
    if (is_2ec(g_, included)) {
      const int size = included.size();
      if (size < best_ || (!found_ && size <= best_)) {
        best_ = size;
        witness_ = included;
        found_ = true;
      }
      return;
    }
    if (next >= g_.size()) return;
    EdgeSet with = included;
    with.insert(next);
    search(next + 1, with, available);
    EdgeSet without = available;
    without.erase(next);
    search(next + 1, included, without);
  }

  const Graph& g_;
  int best_ = 0;
  EdgeSet witness_;
  bool found_ = false;
};

}  // namespace

OptResult exact_opt(const Graph& g) {
  check_oracle_input(g);
  return BranchAndBound(g).run();
}

LpSolution lp_bound(const Graph& g) {
  check_oracle_input(g);
  const int m = g.size();
  const std::vector<Cut> cuts = enumerate_cuts(g, m);

  // Dual: max 2 sum y_S - sum w_e  s.t.  sum_{S : e in delta(S)} y_S - w_e + s_e = 1.
  // The primal x is the dual price vector of the final basis.
  std::vector<LpColumn> columns;
  columns.reserve(cuts.size() + 2 * m);
  for (const Cut& cut : cuts) {
    LpColumn col;
    for (EdgeId e : cut.crossing.ids()) col.entries.emplace_back(e, 1);
    col.cost = 2;
    columns.push_back(std::move(col));
  }
  for (EdgeId e = 0; e < m; ++e) columns.push_back(LpColumn{{{e, -1}}, Rational(-1)});
  std::vector<int> basis;
  for (EdgeId e = 0; e < m; ++e) {
    basis.push_back(static_cast<int>(columns.size()));
    columns.push_back(LpColumn{{{e, 1}}, Rational(0)});
  }
  const std::vector<Rational> rhs(m, Rational(1));
  const LpResult lp = maximize(m, columns, rhs, std::move(basis));
  if (lp.status != LpStatus::kOptimal) {
    fail(ErrorCode::kPrecondition, "cut LP is infeasible");
  }

  LpSolution out;
  out.x = lp.duals;
  out.value = 0;
  for (EdgeId e = 0; e < m; ++e) {
    if (out.x[e] < 0 || out.x[e] > 1) {
      fail(ErrorCode::kOracleInconsistency, "LP value of edge " + std::to_string(e) +
                                                " is " + to_display_string(out.x[e]));
    }
    out.value += out.x[e];
  }
  for (const Cut& cut : cuts) {
    Rational load = 0;
    for (EdgeId e : cut.crossing.ids()) load += out.x[e];
    if (load < 2) fail(ErrorCode::kOracleInconsistency, "LP solution violates a cut");
    if (load == 2) out.tight_cuts.push_back(cut);
  }
  if (out.value != lp.objective) {
    fail(ErrorCode::kOracleInconsistency, "LP primal " + to_display_string(out.value) +
                                              " differs from dual " +
                                              to_display_string(lp.objective));
  }
  return out;
}

GapReport integrality_gap(const Graph& g) {
  GapReport report;
  report.opt = exact_opt(g).value;
  report.lp = lp_bound(g).value;
  report.gap = Rational(report.opt) / report.lp;
  return report;
}

}  // namespace cubic2ec
