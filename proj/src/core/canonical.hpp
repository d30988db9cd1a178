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

#ifndef CUBIC2EC_CORE_CANONICAL_HPP_
#define CUBIC2EC_CORE_CANONICAL_HPP_

#include <string>
#include <vector>

#include "core/graph.hpp"

namespace cubic2ec {

// Isomorphism-invariant relabeling. Two graphs are isomorphic iff their
// canonical graphs are identical (same edge list, which is in graph6 order).
struct CanonicalForm {
  Graph graph;
  std::vector<VertexId> relabel;      // original vertex -> canonical vertex
  std::vector<EdgeId> edge_to_canon;  // original edge -> canonical edge
  std::string key;                    // graph6 of `graph`
};

// Individualization-refinement search over equitable partitions; picks the
// leaf with the smallest sorted edge list. Exponential in the worst case,
// quick for small cubic graphs.
CanonicalForm canonical_form(const Graph& g);

}  // namespace cubic2ec

#endif  // CUBIC2EC_CORE_CANONICAL_HPP_
