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

#ifndef CUBIC2EC_CORE_REDUCTION_HPP_
#define CUBIC2EC_CORE_REDUCTION_HPP_

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "core/connectivity.hpp"
#include "core/graph.hpp"

namespace cubic2ec {

enum class ReductionKind { kEdgeRemoval, kShoreContraction };

enum class ShoreSide { kInside, kOutside };

// A smaller cubic graph derived from a parent, plus the bookkeeping needed
// to map subgraphs of the child back onto the parent.
struct Reduction {
  ReductionKind kind = ReductionKind::kEdgeRemoval;
  Graph child;
  // child EdgeId -> parent edges it stands for. A merged edge lists its
  // underlying path in walk order; every other child edge lists one edge.
  std::vector<std::vector<EdgeId>> edge_provenance;
  // child VertexId -> parent VertexId, or -1 for the pseudo-vertex.
  std::vector<VertexId> vertex_origin;
  // Edge removal only: parent edges always taken / always dropped on lift.
  EdgeSet forced_include;
  EdgeSet forced_exclude;
  // Shore contraction only.
  std::optional<VertexId> pseudo_vertex;
  // (child edge at the pseudo-vertex, parent cut edge), ordered by parent id.
  std::vector<std::pair<EdgeId, EdgeId>> cut_correspondence;
  // The contracted cut, as seen in the parent.
  std::optional<Cut> cut;
  ShoreSide kept_side = ShoreSide::kInside;
};

// Deletes two non-adjacent edges of a cubic graph and suppresses every
// resulting degree-2 vertex. Throws StructuralViolation when suppression
// would produce a loop or a parallel edge.
Reduction remove_edges_and_smooth(const Graph& g, EdgeId e1, EdgeId e2);

// Keeps the chosen shore of an essential 3-edge cut and collapses the other
// shore into a single pseudo-vertex (numbered last).
Reduction contract_shore(const Graph& g, const Cut& cut, ShoreSide side);

// Parent edges covered by a child subgraph under the provenance map.
EdgeSet map_to_parent(const Reduction& red, EdgeSet child_edges);

}  // namespace cubic2ec

#endif  // CUBIC2EC_CORE_REDUCTION_HPP_
