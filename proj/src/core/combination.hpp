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

#ifndef CUBIC2EC_CORE_COMBINATION_HPP_
#define CUBIC2EC_CORE_COMBINATION_HPP_

#include <array>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "core/errors.hpp"
#include "core/graph.hpp"
#include "core/rational.hpp"
#include "core/reduction.hpp"

namespace cubic2ec {

struct WeightedSubgraph {
  Rational weight;
  EdgeSet edges;
};

// Weighted spanning subgraphs of one host graph. Entries with equal edge
// sets are merged on insertion; first-insertion order is kept.
class ConvexCombination {
 public:
  ConvexCombination() = default;
  explicit ConvexCombination(int edge_count) : edge_count_(edge_count) {}

  void add(const Rational& weight, EdgeSet edges);

  // Takes entries verbatim: no merging, no weight checks. For loading
  // untrusted data that a verifier inspects afterwards.
  static ConvexCombination from_raw(int edge_count, std::vector<WeightedSubgraph> entries);

  int edge_count() const { return edge_count_; }
  std::span<const WeightedSubgraph> entries() const { return entries_; }
  std::size_t entry_count() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Rational total_weight() const;

 private:
  int edge_count_ = 0;
  std::vector<WeightedSubgraph> entries_;
  std::unordered_map<EdgeSet, std::size_t, EdgeSetHash> index_;
};

// Per-edge total weight of the members containing the edge. Rejects empty
// combinations and weights that do not sum to exactly one.
std::vector<Rational> edge_occurrences(const ConvexCombination& c);

// Throws `on_failure` naming `stage` unless every member is a 2-edge-connected
// spanning subgraph of `host`.
void require_2ec_members(const Graph& host, const ConvexCombination& c, ErrorCode on_failure,
                         const char* stage);

struct WeightedPart {
  Rational weight;
  std::reference_wrapper<const ConvexCombination> combination;
};

// Weighted merge; the part weights must sum to one and all parts must share
// the same host edge count.
ConvexCombination average(std::span<const WeightedPart> parts);

// Raises every edge to exactly `target` by splitting weight off members
// that lack it (ascending edge id, then ascending member index).
ConvexCombination pad_to_uniform(const ConvexCombination& c, const Rational& target);

// Maps a combination of an edge-removal child back onto the parent: merged
// edges expand to their paths, forced edges are added, removed edges dropped.
ConvexCombination lift(const ConvexCombination& child, const Reduction& red,
                       const Graph& parent);

// Weight pattern at a vertex of degree 3: weight of members omitting each
// incident edge (in incidence order), omitting none, and omitting two or more.
struct VertexPattern {
  std::array<EdgeId, 3> edges{};
  std::array<Rational, 3> omit_one;
  Rational omit_none;
  Rational omit_several;
};

VertexPattern vertex_pattern(const Graph& g, const ConvexCombination& c, VertexId v);

// Pattern weights at the pseudo-vertex of a shore contraction, indexed by the
// cut_correspondence order, plus the all-present class last.
std::array<Rational, 4> pseudo_vertex_pattern(const ConvexCombination& c, const Reduction& red);

// Recombines uniform certificates of the two shore contractions of one
// essential 3-edge cut into a combination for the parent graph.
ConvexCombination glue(const ConvexCombination& inside, const ConvexCombination& outside,
                       const Reduction& inside_red, const Reduction& outside_red,
                       const Graph& parent);

}  // namespace cubic2ec

#endif  // CUBIC2EC_CORE_COMBINATION_HPP_
