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

#ifndef CUBIC2EC_CORE_CONNECTIVITY_HPP_
#define CUBIC2EC_CORE_CONNECTIVITY_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace cubic2ec {

// Vertex subsets of graphs with at most 64 vertices.
using VertexMask = std::uint64_t;

// Exhaustive cut queries enumerate 2^(n-1) shores; keep n at desk scale.
inline constexpr int kMaxCutEnumerationOrder = 20;

// delta(S) together with its shore. The canonical shore is the side that
// does not contain vertex 0.
struct Cut {
  VertexMask shore = 0;
  EdgeSet crossing;

  int size() const { return crossing.size(); }
  std::vector<VertexId> shore_vertices() const;
  friend bool operator==(const Cut&, const Cut&) = default;
};

VertexMask vertex_mask(std::span<const VertexId> vertices);
EdgeSet crossing_edges(const Graph& g, VertexMask shore);
// Builds the cut for either side; the result carries the canonical shore.
Cut make_cut(const Graph& g, VertexMask side);
// Both shores hold at least two vertices and at least one edge.
bool is_essential(const Graph& g, const Cut& cut);

bool is_connected(const Graph& g, EdgeSet sub);
// Spanning subgraph (V, sub) is connected and bridgeless.
bool is_2ec(const Graph& g, EdgeSet sub);
bool is_2ec(const Graph& g, std::span<const EdgeId> sub);

// Minimum |delta(S)| via unit-capacity max flow; 0 when disconnected.
int edge_connectivity(const Graph& g);

// All cuts with |delta(S)| <= max_size, one per {S, complement} pair, ordered
// by shore cardinality then shore bitmask.
std::vector<Cut> enumerate_cuts(const Graph& g, int max_size);

std::vector<Cut> essential_cuts_of_size(const Graph& g, int size);
std::optional<Cut> find_essential_3cut(const Graph& g);
bool is_essentially_4ec(const Graph& g);

std::optional<Cut> essential_4cut_with_pair(const Graph& g, EdgeId e1, EdgeId e2,
                                            std::pair<VertexId, VertexId> excluded_shore);

enum class Orientation { kFirst, kSecond };

// Labels around a pivot edge uv: a < b are the other neighbours of u,
// c < d those of v, with u < v.
struct PivotFrame {
  EdgeId pivot;
  VertexId u, v, a, b, c, d;
  EdgeId au, bu, vc, vd;
};

PivotFrame pivot_frame(const Graph& g, EdgeId uv);

struct SafePairDecision {
  PivotFrame frame;
  // kFirst removes {au, vc} and {bu, vd}; kSecond removes {au, vd} and {bu, vc}.
  Orientation chosen = Orientation::kFirst;
  std::array<EdgeId, 2> pair_a{};
  std::array<EdgeId, 2> pair_b{};
  // The essential 4-cut that blocked the first orientation, if any.
  std::optional<Cut> witness;
};

SafePairDecision find_safe_pair(const Graph& g, EdgeId uv);
// Variant for callers that already hold the essential 4-cuts of g and have
// checked the preconditions.
SafePairDecision find_safe_pair(const Graph& g, EdgeId uv,
                                std::span<const Cut> essential_4cuts);

struct Lemma3Counterexample {
  PivotFrame frame;
  VertexId a_side;  // the a of the statement; c and d are v's other neighbours
  Cut with_vd;
  Cut with_vc;
};

struct Lemma3Report {
  long configurations = 0;        // (u, v, a) triples examined
  long essential_4cuts = 0;
  long lemma_violations = 0;      // statement form: au blocked with vc and vd
  long case1_violations = 0;      // application form: both orientations blocked
  long divergences = 0;           // pivots where the two forms disagree
  std::vector<Lemma3Counterexample> counterexamples;
  bool ok() const { return lemma_violations == 0 && case1_violations == 0; }
};

Lemma3Report verify_lemma3(const Graph& g);

}  // namespace cubic2ec

#endif  // CUBIC2EC_CORE_CONNECTIVITY_HPP_
