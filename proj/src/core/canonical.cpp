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

#include "core/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>

namespace cubic2ec {

namespace {

using Partition = std::vector<int>;  // vertex -> ordered cell index

int cell_count(const Partition& p) {
  return p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
}

// Coarsest equitable refinement. Cell indices depend only on the partition
// structure, never on vertex labels.
void refine(const Graph& g, Partition& cells) {
  const int n = g.order();
  std::vector<std::vector<int>> sig(n);
  std::vector<VertexId> order(n);
  int cells_before = cell_count(cells);
  while (true) {
    for (VertexId v = 0; v < n; ++v) {
      sig[v].clear();
      sig[v].push_back(cells[v]);
      for (VertexId w : g.neighbors(v)) sig[v].push_back(cells[w]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId x, VertexId y) { return sig[x] < sig[y]; });
    int index = -1;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || sig[order[i]] != sig[order[i - 1]]) ++index;
      cells[order[i]] = index;
    }
    const int cells_after = index + 1;
    if (cells_after == cells_before) return;
    cells_before = cells_after;
  }
}

using Certificate = std::vector<std::pair<VertexId, VertexId>>;

Certificate leaf_certificate(const Graph& g, const Partition& cells) {
  Certificate cert;
  cert.reserve(g.size());
  for (const Edge& e : g.edges()) {
    VertexId a = cells[e.u];
    VertexId b = cells[e.v];
    if (a > b) std::swap(a, b);
    cert.emplace_back(b, a);  // graph6 order: by larger endpoint first
  }
  std::sort(cert.begin(), cert.end());
  return cert;
}

struct Search {
  const Graph& g;
  std::optional<Certificate> best;
  Partition best_leaf;

  void run(Partition cells) {
    refine(g, cells);
    const int n = g.order();
    const int k = cell_count(cells);
    if (k == n) {
      Certificate cert = leaf_certificate(g, cells);
      if (!best || cert < *best) {
        best = std::move(cert);
        best_leaf = cells;
      }
      return;
    }
    // First non-singleton cell.
    std::vector<int> size(k, 0);
    for (int c : cells) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;
    for (VertexId w = 0; w < n; ++w) {
      if (cells[w] != target) continue;
      Partition next = cells;
      for (VertexId x = 0; x < n; ++x) {
        if (next[x] > target || (next[x] == target && x != w)) ++next[x];
      }
      run(std::move(next));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  CanonicalForm out;
  Search search{g, std::nullopt, {}};
  search.run(Partition(g.order(), 0));
  out.relabel = search.g.order() == 0 ? std::vector<VertexId>{} : search.best_leaf;

  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.push_back({out.relabel[e.u], out.relabel[e.v]});
  out.graph = with_graph6_edge_order(Graph(g.order(), std::move(edges)));
  out.edge_to_canon.resize(g.size());
  for (EdgeId e = 0; e < g.size(); ++e) {
    out.edge_to_canon[e] =
        *out.graph.find_edge(out.relabel[g.edge(e).u], out.relabel[g.edge(e).v]);
  }
  out.key = g.order() > 0 ? to_graph6(out.graph) : std::string();
  return out;
}

}  // namespace cubic2ec
