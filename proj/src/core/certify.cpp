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

#include "core/certify.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "core/canonical.hpp"
#include "core/simplex.hpp"

namespace cubic2ec {

const char* step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::kBase: return "base";
    case StepKind::kEdgeRemoval: return "edge_removal";
    case StepKind::kShoreContraction: return "shore_contraction";
  }
  return "unknown";
}

Case1Profile case1_profile(const Graph& g, EdgeId e) {
  require(g.degree(g.edge(e).u) == 3 && g.degree(g.edge(e).v) == 3,
          "profiles are defined for edges between degree-3 vertices");
  Case1Profile p;
  int on_four_cycle = 0;
  const std::array<VertexId, 2> ends{g.edge(e).u, g.edge(e).v};
  for (int side = 0; side < 2; ++side) {
    const VertexId w = ends[side];
    const VertexId other = ends[1 - side];
    for (VertexId x : g.neighbors(w)) {
      if (x == other) continue;
      for (VertexId y : g.neighbors(x)) {
        if (y == w) continue;
        if (y == other) {
          fail(ErrorCode::kPrecondition, "profiles need a triangle-free neighbourhood");
        }
        if (g.find_edge(y, other)) {
          ++on_four_cycle;
        } else {
          ++p.r;
        }
      }
    }
  }
  // Every 4-cycle through e is reached once from each end.
  p.t = on_four_cycle / 2;
  return p;
}

ConvexCombination base_case_combination(const Graph& g, int* candidate_count) {
  require(g.is_cubic(), "base case needs a cubic graph");
  require(g.order() <= 6, "base case covers graphs with at most 6 vertices");
  require(is_essentially_4ec(g), "base case needs an essentially 4-edge-connected graph");

  const int m = g.size();
  std::vector<EdgeSet> candidates;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    if (is_2ec(g, EdgeSet(bits))) candidates.emplace_back(bits);
  }
  if (candidate_count) *candidate_count = static_cast<int>(candidates.size());

  // Rows: one per edge (occurrence = 7/9) plus the convexity row. Phase one
  // only: artificial columns carry cost -1 and must all leave at value 0.
  const int rows = m + 1;
  std::vector<LpColumn> columns;
  for (EdgeSet h : candidates) {
    LpColumn col;
    for (EdgeId e : h.ids()) col.entries.emplace_back(e, 1);
    col.entries.emplace_back(m, 1);
    col.cost = 0;
    columns.push_back(std::move(col));
  }
  std::vector<int> basis;
  for (int i = 0; i < rows; ++i) {
    basis.push_back(static_cast<int>(columns.size()));
    columns.push_back(LpColumn{{{i, 1}}, Rational(-1)});
  }
  std::vector<Rational> rhs(m, seven_ninths());
  rhs.push_back(1);
  const LpResult lp = maximize(rows, columns, rhs, std::move(basis));
  if (lp.status != LpStatus::kOptimal || lp.objective != 0) {
    fail(ErrorCode::kBaseCaseFailure,
         "no convex combination of 2EC spanning subgraphs reaches 7/9 on every edge of " +
             to_graph6(g));
  }
  ConvexCombination out(m);
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (lp.x[k] > 0) out.add(lp.x[k], candidates[k]);
  }
  return out;
}

Certifier::Certifier(CertifyOptions options) : options_(options) {
  require(options_.max_order >= 4, "max order must be at least 4");
  if (options_.max_order > kHardCertifyMaxOrder) {
    fail(ErrorCode::kSizeLimit, "max order is capped at " + std::to_string(kHardCertifyMaxOrder));
  }
}

std::size_t Certifier::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

void Certifier::check_input(const Graph& g) const {
  if (g.order() > options_.max_order) {
    fail(ErrorCode::kSizeLimit, "graph has " + std::to_string(g.order()) +
                                    " vertices; certification is limited to " +
                                    std::to_string(options_.max_order));
  }
  require(g.order() >= 4, "certification needs at least 4 vertices");
  require(g.is_cubic(), "certification needs a cubic graph");
  require(edge_connectivity(g) >= 3, "certification needs a 3-edge-connected graph");
}

Certificate Certifier::certify(const Graph& g) {
  check_input(g);
  Solved top = solve(g);
  Certificate cert;
  cert.graph = g;
  cert.target = seven_ninths();
  cert.combination = std::move(top.combination);
  cert.trace.push_back(top.record);

  std::set<std::string> seen;
  std::deque<std::string> queue(top.record.children.begin(), top.record.children.end());
  while (!queue.empty()) {
    std::string key = std::move(queue.front());
    queue.pop_front();
    if (!seen.insert(key).second) continue;
    const auto solved = lookup(key);
    cert.trace.push_back(solved->record);
    for (const auto& child : solved->record.children) queue.push_back(child);
  }
  return cert;
}

Case1Step Certifier::reduce_case1(const Graph& g, EdgeId uv) {
  check_input(g);
  require(g.order() > 6, "the edge-removal step needs more than 6 vertices");
  require(!find_essential_3cut(g), "the edge-removal step needs no essential 3-edge cut");
  require(uv >= 0 && uv < g.size(), "pivot edge id out of range");
  const auto cuts = essential_cuts_of_size(g, 4);
  return reduce_case1_unchecked(g, uv, cuts, nullptr);
}

std::shared_ptr<const Certifier::Solved> Certifier::lookup(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = cache_.find(key);
  return it == cache_.end() ? nullptr : it->second;
}

ConvexCombination Certifier::certified_child(const Graph& child, std::string* key) {
  if (!child.is_cubic() || edge_connectivity(child) < 3) {
    fail(ErrorCode::kStructuralViolation,
         "reduced graph " + to_graph6(child) + " is not cubic and 3-edge-connected");
  }
  const CanonicalForm cf = canonical_form(child);
  if (key) *key = cf.key;
  std::shared_ptr<const Solved> solved = lookup(cf.key);
  if (!solved) {
    auto fresh = std::make_shared<const Solved>(solve(cf.graph));
    std::lock_guard lock(mutex_);
    solved = cache_.try_emplace(cf.key, std::move(fresh)).first->second;
  }

  std::vector<EdgeId> canon_to_child(child.size());
  for (EdgeId e = 0; e < child.size(); ++e) canon_to_child[cf.edge_to_canon[e]] = e;
  ConvexCombination out(child.size());
  for (const auto& entry : solved->combination.entries()) {
    EdgeSet mapped;
    for (EdgeId e : entry.edges.ids()) mapped.insert(canon_to_child[e]);
    out.add(entry.weight, mapped);
  }
  return out;
}

Case1Step Certifier::reduce_case1_unchecked(const Graph& g, EdgeId uv,
                                            std::span<const Cut> cuts,
                                            std::vector<std::string>* child_keys) {
  Case1Step step;
  step.decision = find_safe_pair(g, uv, cuts);
  step.first = remove_edges_and_smooth(g, step.decision.pair_a[0], step.decision.pair_a[1]);
  step.second = remove_edges_and_smooth(g, step.decision.pair_b[0], step.decision.pair_b[1]);
  std::string k1;
  std::string k2;
  const ConvexCombination c1 = certified_child(step.first.child, &k1);
  const ConvexCombination c2 = certified_child(step.second.child, &k2);
  const ConvexCombination l1 = lift(c1, step.first, g);
  const ConvexCombination l2 = lift(c2, step.second, g);
  const std::array<WeightedPart, 2> halves{WeightedPart{make_rational(1, 2), l1},
                                           WeightedPart{make_rational(1, 2), l2}};
  step.combination = average(halves);
  step.profile = case1_profile(g, uv);
  if (child_keys) {
    child_keys->push_back(std::move(k1));
    child_keys->push_back(std::move(k2));
  }
  return step;
}

Certifier::Solved Certifier::solve(const Graph& g) {
  try {
    return solve_unguarded(g);
  } catch (const Error& e) {
    if (!is_internal_violation(e.code())) throw;
    // One line per enclosing subproblem, innermost first.
    throw Error(e.code(), std::string(e.what()) + "\n  while certifying " + to_graph6(g) +
                              " (n=" + std::to_string(g.order()) + ")");
  }
}

Certifier::Solved Certifier::solve_unguarded(const Graph& g) {
  Solved out;
  out.record.graph6 = to_graph6(g);
  out.record.order = g.order();

  if (auto cut = find_essential_3cut(g)) {
    out.record.kind = StepKind::kShoreContraction;
    const Reduction inside = contract_shore(g, *cut, ShoreSide::kInside);
    const Reduction outside = contract_shore(g, *cut, ShoreSide::kOutside);
    std::string k1;
    std::string k2;
    const ConvexCombination c1 = certified_child(inside.child, &k1);
    const ConvexCombination c2 = certified_child(outside.child, &k2);
    out.combination = glue(c1, c2, inside, outside, g);
    out.record.cut_shore = cut->shore;
    out.record.cut_edges = cut->crossing.ids();
    out.record.children = {k1};
    if (k2 != k1) out.record.children.push_back(k2);
  } else if (g.order() <= 6) {
    out.record.kind = StepKind::kBase;
    out.combination = base_case_combination(g, &out.record.base_candidates);
  } else {
    out.record.kind = StepKind::kEdgeRemoval;
    const auto cuts = essential_cuts_of_size(g, 4);
    std::vector<Case1Step> steps;
    steps.reserve(g.size());
    for (EdgeId uv = 0; uv < g.size(); ++uv) {
      std::vector<std::string> keys;
      steps.push_back(reduce_case1_unchecked(g, uv, cuts, &keys));
      const Case1Step& s = steps.back();
      PivotRecord rec;
      rec.pivot = uv;
      rec.orientation = s.decision.chosen;
      rec.first_removal = s.decision.pair_a;
      rec.second_removal = s.decision.pair_b;
      if (s.decision.witness) rec.witness_shore = s.decision.witness->shore;
      rec.profile = s.profile;
      rec.children = {keys[0], keys[1]};
      out.record.pivots.push_back(std::move(rec));
      for (auto& k : keys) {
        if (std::find(out.record.children.begin(), out.record.children.end(), k) ==
            out.record.children.end()) {
          out.record.children.push_back(std::move(k));
        }
      }
    }
    const Rational share = make_rational(1, g.size());
    std::vector<WeightedPart> parts;
    parts.reserve(steps.size());
    for (const auto& s : steps) parts.push_back({share, s.combination});
    const ConvexCombination averaged = average(parts);
    const auto occ = edge_occurrences(averaged);
    out.record.padded = std::any_of(occ.begin(), occ.end(),
                                    [](const Rational& x) { return x != seven_ninths(); });
    out.combination = pad_to_uniform(averaged, seven_ninths());
  }
  out.record.entries = out.combination.entry_count();
  return out;
}

Certificate certify(const Graph& g, const CertifyOptions& options) {
  Certifier certifier(options);
  return certifier.certify(g);
}

}  // namespace cubic2ec
