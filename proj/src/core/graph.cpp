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

#include "core/graph.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "core/errors.hpp"

namespace cubic2ec {

Graph::Graph(int order, std::vector<Edge> edges)
    : order_(order), edges_(std::move(edges)), incidence_(order) {
  if (order < 0) fail(ErrorCode::kFormat, "negative vertex count");
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e = 0; e < size(); ++e) {
    Edge& ed = edges_[e];
    if (ed.u < 0 || ed.v < 0 || ed.u >= order || ed.v >= order) {
      fail(ErrorCode::kFormat, "edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (ed.u == ed.v) {
      fail(ErrorCode::kFormat, "self-loop at vertex " + std::to_string(ed.u));
    }
    if (ed.u > ed.v) std::swap(ed.u, ed.v);
    if (!seen.emplace(ed.u, ed.v).second) {
      fail(ErrorCode::kFormat, "parallel edge " + std::to_string(ed.u) + "-" +
                                   std::to_string(ed.v));
    }
    incidence_[ed.u].push_back(e);
    incidence_[ed.v].push_back(e);
  }
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  for (EdgeId e : incidence_[a]) {
    if (other_end(e, a) == b) return e;
  }
  return std::nullopt;
}

bool Graph::adjacent_edges(EdgeId e, EdgeId f) const {
  if (e == f) return false;
  const Edge& x = edges_[e];
  const Edge& y = edges_[f];
  return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(incidence_[v].size());
  for (EdgeId e : incidence_[v]) out.push_back(other_end(e, v));
  return out;
}

bool Graph::is_cubic() const {
  return std::all_of(incidence_.begin(), incidence_.end(),
                     [](const auto& inc) { return inc.size() == 3; });
}

Graph with_graph6_edge_order(const Graph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.v != b.v ? a.v < b.v : a.u < b.u;
  });
  return Graph(g.order(), std::move(edges));
}

namespace {

constexpr std::array<std::string_view, 4> kBuiltinNames = {"k4", "k33", "prism",
                                                           "petersen"};

}  // namespace

std::span<const std::string_view> builtin_graph_names() { return kBuiltinNames; }

Graph builtin_graph(std::string_view name) {
  std::vector<Edge> edges;
  int n = 0;
  if (name == "k4") {
    n = 4;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) edges.push_back({i, j});
  } else if (name == "k33") {
    n = 6;
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) edges.push_back({i, j});
  } else if (name == "prism") {
    n = 6;
    edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  } else if (name == "petersen") {
    n = 10;
    for (int i = 0; i < 5; ++i) {
      edges.push_back({i, (i + 1) % 5});
      edges.push_back({i, i + 5});
      edges.push_back({i + 5, (i + 2) % 5 + 5});
    }
  } else {
    fail(ErrorCode::kPrecondition, "unknown builtin graph '" + std::string(name) +
                                       "' (expected k4, k33, prism or petersen)");
  }
  return with_graph6_edge_order(Graph(n, std::move(edges)));
}

}  // namespace cubic2ec
