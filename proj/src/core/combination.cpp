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

#include "core/combination.hpp"

#include <algorithm>

#include "core/connectivity.hpp"

namespace cubic2ec {

void ConvexCombination::add(const Rational& weight, EdgeSet edges) {
  require(weight > 0, "combination weights must be positive");
  require(edges.is_subset_of(EdgeSet::all(edge_count_)), "subgraph edge outside the host");
  auto [it, inserted] = index_.try_emplace(edges, entries_.size());
  if (inserted) {
    entries_.push_back({weight, edges});
  } else {
    entries_[it->second].weight += weight;
  }
}

ConvexCombination ConvexCombination::from_raw(int edge_count,
                                              std::vector<WeightedSubgraph> entries) {
  ConvexCombination c(edge_count);
  c.entries_ = std::move(entries);
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.index_.try_emplace(c.entries_[i].edges, i);
  return c;
}

Rational ConvexCombination::total_weight() const {
  Rational sum = 0;
  for (const auto& entry : entries_) sum += entry.weight;
  return sum;
}

std::vector<Rational> edge_occurrences(const ConvexCombination& c) {
  require(!c.empty(), "an empty combination has no occurrences");
  require(c.total_weight() == 1, "combination weights must sum to exactly 1");
  std::vector<Rational> occ(c.edge_count(), Rational(0));
  for (const auto& entry : c.entries()) {
    for (EdgeId e : entry.edges.ids()) occ[e] += entry.weight;
  }
  return occ;
}

void require_2ec_members(const Graph& host, const ConvexCombination& c, ErrorCode on_failure,
                         const char* stage) {
  for (std::size_t i = 0; i < c.entry_count(); ++i) {
    const EdgeSet edges = c.entries()[i].edges;
    if (!is_2ec(host, edges)) {
      fail(on_failure, std::string(stage) + ": member " + std::to_string(i) +
                           " is not a 2-edge-connected spanning subgraph (edge mask " +
                           std::to_string(edges.bits()) + ")");
    }
  }
}

ConvexCombination average(std::span<const WeightedPart> parts) {
  require(!parts.empty(), "average needs at least one part");
  Rational sum = 0;
  const int m = parts.front().combination.get().edge_count();
  for (const auto& part : parts) {
    require(part.weight > 0, "average weights must be positive");
    if (part.combination.get().edge_count() != m) {
      fail(ErrorCode::kPrecondition, "average over combinations of different hosts");
    }
    sum += part.weight;
  }
  require(sum == 1, "average weights must sum to exactly 1");
  ConvexCombination out(m);
  for (const auto& part : parts) {
    for (const auto& entry : part.combination.get().entries()) {
      out.add(part.weight * entry.weight, entry.edges);
    }
  }
  return out;
}

ConvexCombination pad_to_uniform(const ConvexCombination& c, const Rational& target) {
  const std::vector<Rational> occ = edge_occurrences(c);
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    if (occ[e] > target) {
      fail(ErrorCode::kPrecondition, "edge " + std::to_string(e) + " already occurs " +
                                         to_display_string(occ[e]) + " > target " +
                                         to_display_string(target));
    }
  }
  // Work on a plain list; merging happens once at the end.
  std::vector<WeightedSubgraph> work(c.entries().begin(), c.entries().end());
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    Rational deficit = target - occ[e];
    const std::size_t original = work.size();
    for (std::size_t i = 0; i < original && deficit > 0; ++i) {
      if (work[i].edges.contains(e)) continue;
      EdgeSet with_e = work[i].edges;
      with_e.insert(e);
      if (work[i].weight <= deficit) {
        deficit -= work[i].weight;
        work[i].edges = with_e;
      } else {
        work[i].weight -= deficit;
        work.push_back({deficit, with_e});
        deficit = 0;
      }
    }
    if (deficit != 0) {
      fail(ErrorCode::kPrecondition, "cannot pad edge " + std::to_string(e) + " to target");
    }
  }
  ConvexCombination out(c.edge_count());
  for (const auto& entry : work) out.add(entry.weight, entry.edges);
  return out;
}

ConvexCombination lift(const ConvexCombination& child, const Reduction& red,
                       const Graph& parent) {
  require(red.kind == ReductionKind::kEdgeRemoval, "lift applies to edge-removal reductions");
  require(child.edge_count() == red.child.size(), "combination does not match the child graph");
  ConvexCombination out(parent.size());
  for (const auto& entry : child.entries()) {
    const EdgeSet mapped =
        (map_to_parent(red, entry.edges) | red.forced_include).minus(red.forced_exclude);
    if (!is_2ec(parent, mapped)) {
      fail(ErrorCode::kLiftFailure, "lifted subgraph (edge mask " +
                                        std::to_string(mapped.bits()) +
                                        ") is not 2-edge-connected in the parent");
    }
    out.add(entry.weight, mapped);
  }
  return out;
}

VertexPattern vertex_pattern(const Graph& g, const ConvexCombination& c, VertexId v) {
  require(g.degree(v) == 3, "vertex patterns are defined at degree-3 vertices");
  VertexPattern p;
  const auto inc = g.incident(v);
  std::copy(inc.begin(), inc.end(), p.edges.begin());
  p.omit_one.fill(Rational(0));
  p.omit_none = 0;
  p.omit_several = 0;
  for (const auto& entry : c.entries()) {
    int missing = 0;
    int which = -1;
    for (int k = 0; k < 3; ++k) {
      if (!entry.edges.contains(p.edges[k])) {
        ++missing;
        which = k;
      }
    }
    if (missing == 0) {
      p.omit_none += entry.weight;
    } else if (missing == 1) {
      p.omit_one[which] += entry.weight;
    } else {
      p.omit_several += entry.weight;
    }
  }
  return p;
}

namespace {

// 0..2: the omitted pseudo-vertex edge (cut_correspondence order); 3: none.
int pattern_class(const WeightedSubgraph& entry, const Reduction& red) {
  int missing = 0;
  int which = 3;
  for (int k = 0; k < 3; ++k) {
    if (!entry.edges.contains(red.cut_correspondence[k].first)) {
      ++missing;
      which = k;
    }
  }
  if (missing > 1) {
    fail(ErrorCode::kPatternMismatch, "a member omits two edges at the pseudo-vertex");
  }
  return which;
}

}  // namespace

std::array<Rational, 4> pseudo_vertex_pattern(const ConvexCombination& c, const Reduction& red) {
  require(red.kind == ReductionKind::kShoreContraction && red.cut_correspondence.size() == 3,
          "pseudo-vertex patterns need a shore contraction");
  std::array<Rational, 4> weights;
  weights.fill(Rational(0));
  for (const auto& entry : c.entries()) weights[pattern_class(entry, red)] += entry.weight;
  return weights;
}

ConvexCombination glue(const ConvexCombination& inside, const ConvexCombination& outside,
                       const Reduction& inside_red, const Reduction& outside_red,
                       const Graph& parent) {
  require(inside_red.kind == ReductionKind::kShoreContraction &&
              outside_red.kind == ReductionKind::kShoreContraction,
          "glue needs two shore contractions");
  require(inside_red.cut && outside_red.cut && *inside_red.cut == *outside_red.cut,
          "glue needs contractions of the same cut");
  require(inside_red.kept_side != outside_red.kept_side,
          "glue needs the two opposite shores of the cut");
  require(inside.edge_count() == inside_red.child.size() &&
              outside.edge_count() == outside_red.child.size(),
          "combination does not match its contraction");
  for (int k = 0; k < 3; ++k) {
    require(inside_red.cut_correspondence[k].second == outside_red.cut_correspondence[k].second,
            "cut correspondences disagree");
  }

  const std::array<Rational, 4> expected = {make_rational(2, 9), make_rational(2, 9),
                                            make_rational(2, 9), make_rational(1, 3)};
  for (const auto* side : {&inside, &outside}) {
    const Reduction& red = side == &inside ? inside_red : outside_red;
    const auto weights = pseudo_vertex_pattern(*side, red);
    if (weights != expected) {
      fail(ErrorCode::kPatternMismatch,
           "pseudo-vertex pattern weights are (" + to_display_string(weights[0]) + ", " +
               to_display_string(weights[1]) + ", " + to_display_string(weights[2]) + ", " +
               to_display_string(weights[3]) + "), expected (2/9, 2/9, 2/9, 1/3)");
    }
  }

  struct Piece {
    Rational weight;
    EdgeSet parent_edges;
  };
  auto classify = [](const ConvexCombination& c, const Reduction& red) {
    std::array<std::vector<Piece>, 4> classes;
    for (const auto& entry : c.entries()) {
      classes[pattern_class(entry, red)].push_back({entry.weight, map_to_parent(red, entry.edges)});
    }
    return classes;
  };
  const auto left = classify(inside, inside_red);
  const auto right = classify(outside, outside_red);

  ConvexCombination out(parent.size());
  for (int k = 0; k < 4; ++k) {
    // Common refinement of the two weight sequences of this class.
    std::size_t i = 0;
    std::size_t j = 0;
    Rational left_rest = left[k].empty() ? Rational(0) : left[k][0].weight;
    Rational right_rest = right[k].empty() ? Rational(0) : right[k][0].weight;
    while (i < left[k].size() && j < right[k].size()) {
      const Rational piece = std::min(left_rest, right_rest);
      const EdgeSet edges = left[k][i].parent_edges | right[k][j].parent_edges;
      if (!is_2ec(parent, edges)) {
        fail(ErrorCode::kGlueFailure, "glued subgraph (edge mask " +
                                          std::to_string(edges.bits()) +
                                          ") is not 2-edge-connected");
      }
      out.add(piece, edges);
      left_rest -= piece;
      right_rest -= piece;
      if (left_rest == 0 && ++i < left[k].size()) left_rest = left[k][i].weight;
      if (right_rest == 0 && ++j < right[k].size()) right_rest = right[k][j].weight;
    }
  }
  return out;
}

}  // namespace cubic2ec
