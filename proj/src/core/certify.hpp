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

#ifndef CUBIC2EC_CORE_CERTIFY_HPP_
#define CUBIC2EC_CORE_CERTIFY_HPP_

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "core/combination.hpp"
#include "core/connectivity.hpp"
#include "core/graph.hpp"
#include "core/reduction.hpp"

namespace cubic2ec {

inline constexpr int kDefaultCertifyMaxOrder = 14;
inline constexpr int kHardCertifyMaxOrder = kMaxCutEnumerationOrder;

// How often an edge e sits one edge away from another edge f, counted from
// e's side: r placements where the connecting structure is a plain path,
// t 4-cycles through e and an opposite edge. Cubic simple triangle-free
// graphs always give 2t + r = 8.
struct Case1Profile {
  int t = 0;
  int r = 0;
  friend bool operator==(const Case1Profile&, const Case1Profile&) = default;
};

Case1Profile case1_profile(const Graph& g, EdgeId e);

enum class StepKind { kBase, kEdgeRemoval, kShoreContraction };

const char* step_kind_name(StepKind kind);

struct PivotRecord {
  EdgeId pivot = -1;
  Orientation orientation = Orientation::kFirst;
  std::array<EdgeId, 2> first_removal{};
  std::array<EdgeId, 2> second_removal{};
  std::optional<VertexMask> witness_shore;
  Case1Profile profile;
  std::array<std::string, 2> children;  // canonical graph6 of G1, G2
};

// One construction step. The first record of a certificate is stated in the
// input's labels; the others describe cached subproblems in the labels of
// their canonical graph6 string.
struct TraceRecord {
  std::string graph6;
  StepKind kind = StepKind::kBase;
  int order = 0;
  std::size_t entries = 0;
  int base_candidates = 0;                // base: 2EC spanning subgraphs offered to the LP
  std::optional<VertexMask> cut_shore;    // shore contraction
  std::vector<EdgeId> cut_edges;          // shore contraction
  std::vector<PivotRecord> pivots;        // edge removal, ascending pivot id
  bool padded = false;                    // edge removal: padding changed something
  std::vector<std::string> children;      // canonical graph6 of direct subproblems
};

struct Certificate {
  Graph graph;
  ConvexCombination combination;
  Rational target;
  std::vector<TraceRecord> trace;
};

struct CertifyOptions {
  int max_order = kDefaultCertifyMaxOrder;
};

// Exact feasibility search: some convex combination of the graph's 2EC
// spanning subgraphs puts weight 7/9 on every edge. Needs an essentially
// 4-edge-connected cubic graph with at most 6 vertices.
ConvexCombination base_case_combination(const Graph& g, int* candidate_count = nullptr);

struct Case1Step {
  ConvexCombination combination;  // 1/2 lift(G1) + 1/2 lift(G2)
  Case1Profile profile;           // of the pivot edge
  SafePairDecision decision;
  Reduction first;
  Reduction second;
};

// Builds uniform 7/9 combinations by induction on the order. Subproblems are
// memoized by canonical form; one Certifier may be shared between threads.
class Certifier {
 public:
  explicit Certifier(CertifyOptions options = {});

  Certificate certify(const Graph& g);

  // The per-pivot step of the essentially 4-edge-connected case.
  Case1Step reduce_case1(const Graph& g, EdgeId uv);

  std::size_t cache_size() const;

 private:
  struct Solved {
    ConvexCombination combination;
    TraceRecord record;
  };

  void check_input(const Graph& g) const;
  Solved solve(const Graph& g);
  Solved solve_unguarded(const Graph& g);
  Case1Step reduce_case1_unchecked(const Graph& g, EdgeId uv, std::span<const Cut> cuts,
                                   std::vector<std::string>* child_keys);
  // Uniform combination for a reduced graph, served from the cache.
  ConvexCombination certified_child(const Graph& child, std::string* key);
  std::shared_ptr<const Solved> lookup(const std::string& key) const;

  CertifyOptions options_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const Solved>> cache_;
};

Certificate certify(const Graph& g, const CertifyOptions& options = {});

}  // namespace cubic2ec

#endif  // CUBIC2EC_CORE_CERTIFY_HPP_
