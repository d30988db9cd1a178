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

#ifndef CUBIC2EC_CORE_GRAPH_HPP_
#define CUBIC2EC_CORE_GRAPH_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/edge_set.hpp"

namespace cubic2ec {

// Largest order accepted by the text parsers.
inline constexpr int kMaxParseOrder = 1024;

struct Edge {
  VertexId u;  // u < v
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph. Edge identity is the position in the edge list;
// it never changes for the lifetime of the value.
class Graph {
 public:
  Graph() = default;
  // Throws FormatError on loops, parallel edges or out-of-range endpoints.
  Graph(int order, std::vector<Edge> edges);

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const { return incidence_[v]; }
  int degree(VertexId v) const { return static_cast<int>(incidence_[v].size()); }
  VertexId other_end(EdgeId e, VertexId v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  bool adjacent_edges(EdgeId e, EdgeId f) const;
  std::vector<VertexId> neighbors(VertexId v) const;

  bool is_cubic() const;
  EdgeSet all_edges() const { return EdgeSet::all(size()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

// graph6: one line, no trailing newline. Edges come back in the format's
// column-major upper-triangle order: (0,1), (0,2), (1,2), (0,3), ...
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// "n m" header followed by m lines "u v", 0-based.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// k4, k33, prism, petersen. Labelings:
//   k33      parts {0,1,2} and {3,4,5}
//   prism    triangles 0-1-2 and 3-4-5, rungs i -- i+3
//   petersen outer cycle 0..4, spokes i -- i+5, inner pentagram i+5 -- (i+2)%5+5
// Edges are listed in graph6 order.
Graph builtin_graph(std::string_view name);
std::span<const std::string_view> builtin_graph_names();

// Same edge set re-listed in graph6 order.
Graph with_graph6_edge_order(const Graph& g);

}  // namespace cubic2ec

#endif  // CUBIC2EC_CORE_GRAPH_HPP_
