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

#include "core/reduction.hpp"

#include <algorithm>
#include <set>

#include "core/errors.hpp"

namespace cubic2ec {

namespace {

struct MergedPath {
  VertexId from;
  VertexId to;
  std::vector<EdgeId> edges;
};

}  // namespace

Reduction remove_edges_and_smooth(const Graph& g, EdgeId e1, EdgeId e2) {
  require(g.is_cubic(), "edge removal needs a cubic graph");
  require(g.size() <= kMaxEdges, "edge removal needs |E| <= 64");
  require(e1 >= 0 && e2 >= 0 && e1 < g.size() && e2 < g.size(), "edge id out of range");
  require(e1 != e2, "the two removed edges must differ");
  require(!g.adjacent_edges(e1, e2), "the two removed edges must not share an endpoint");

  const int n = g.order();
  std::vector<char> suppressed(n, 0);
  for (EdgeId e : {e1, e2}) {
    suppressed[g.edge(e).u] = 1;
    suppressed[g.edge(e).v] = 1;
  }
  auto kept_edge = [&](EdgeId e) { return e != e1 && e != e2; };

  // Walk every maximal path whose interior consists of suppressed vertices.
  std::vector<int> path_of(g.size(), -1);
  std::vector<MergedPath> paths;
  for (VertexId x = 0; x < n; ++x) {
    if (suppressed[x]) continue;
    for (EdgeId start : g.incident(x)) {
      if (!kept_edge(start) || path_of[start] >= 0) continue;
      if (!suppressed[g.other_end(start, x)]) continue;
      MergedPath p{x, -1, {start}};
      path_of[start] = static_cast<int>(paths.size());
      EdgeId prev = start;
      VertexId cur = g.other_end(start, x);
      while (suppressed[cur]) {
        EdgeId next = -1;
        for (EdgeId f : g.incident(cur)) {
          if (f != prev && kept_edge(f)) next = f;
        }
        p.edges.push_back(next);
        path_of[next] = static_cast<int>(paths.size());
        prev = next;
        cur = g.other_end(next, cur);
      }
      p.to = cur;
      if (p.to == p.from) {
        fail(ErrorCode::kStructuralViolation,
             "suppressing degree-2 vertices creates a loop at vertex " + std::to_string(x));
      }
      paths.push_back(std::move(p));
    }
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!kept_edge(e)) continue;
    const bool touches = suppressed[g.edge(e).u] || suppressed[g.edge(e).v];
    if (touches && path_of[e] < 0) {
      fail(ErrorCode::kStructuralViolation,
           "removing the edge pair leaves a cycle of degree-2 vertices");
    }
  }

  Reduction red;
  red.kind = ReductionKind::kEdgeRemoval;
  std::vector<VertexId> relabel(n, -1);
  for (VertexId x = 0; x < n; ++x) {
    if (!suppressed[x]) {
      relabel[x] = static_cast<VertexId>(red.vertex_origin.size());
      red.vertex_origin.push_back(x);
    }
  }

  std::vector<Edge> child_edges;
  std::set<std::pair<VertexId, VertexId>> seen;
  auto add_child_edge = [&](VertexId x, VertexId y, std::vector<EdgeId> provenance) {
    VertexId cx = relabel[x];
    VertexId cy = relabel[y];
    if (cx > cy) std::swap(cx, cy);
    if (!seen.emplace(cx, cy).second) {
      fail(ErrorCode::kStructuralViolation,
           "suppressing degree-2 vertices creates a parallel edge between vertices " +
               std::to_string(x) + " and " + std::to_string(y));
    }
    child_edges.push_back({cx, cy});
    red.edge_provenance.push_back(std::move(provenance));
  };
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!kept_edge(e)) continue;
    if (path_of[e] < 0) {
      add_child_edge(g.edge(e).u, g.edge(e).v, {e});
      continue;
    }
    const MergedPath& p = paths[path_of[e]];
    if (*std::min_element(p.edges.begin(), p.edges.end()) == e) {
      add_child_edge(p.from, p.to, p.edges);
    }
  }
  red.child = Graph(static_cast<int>(red.vertex_origin.size()), std::move(child_edges));

  red.forced_exclude.insert(e1);
  red.forced_exclude.insert(e2);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (kept_edge(e) && (g.adjacent_edges(e, e1) || g.adjacent_edges(e, e2))) {
      red.forced_include.insert(e);
    }
  }
  return red;
}

Reduction contract_shore(const Graph& g, const Cut& cut, ShoreSide side) {
  require(g.is_cubic(), "shore contraction needs a cubic graph");
  require(g.size() <= kMaxEdges, "shore contraction needs |E| <= 64");
  require(cut.size() == 3, "shore contraction needs a 3-edge cut");
  require(cut.crossing == crossing_edges(g, cut.shore), "cut edges do not match the shore");
  require(is_essential(g, cut), "shore contraction needs an essential cut");
  std::set<VertexId> ends;
  for (EdgeId e : cut.crossing.ids()) {
    ends.insert(g.edge(e).u);
    ends.insert(g.edge(e).v);
  }
  require(ends.size() == 6, "the three cut edges must have six distinct endpoints");

  const int n = g.order();
  const VertexMask all = n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  const VertexMask kept = side == ShoreSide::kInside ? cut.shore : (all & ~cut.shore);
  auto is_kept = [kept](VertexId x) { return ((kept >> x) & 1U) != 0; };

  Reduction red;
  red.kind = ReductionKind::kShoreContraction;
  red.cut = cut;
  red.kept_side = side;
  std::vector<VertexId> relabel(n, -1);
  for (VertexId x = 0; x < n; ++x) {
    if (is_kept(x)) {
      relabel[x] = static_cast<VertexId>(red.vertex_origin.size());
      red.vertex_origin.push_back(x);
    }
  }
  const VertexId pseudo = static_cast<VertexId>(red.vertex_origin.size());
  red.vertex_origin.push_back(-1);
  red.pseudo_vertex = pseudo;

  std::vector<Edge> child_edges;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    const bool ku = is_kept(ed.u);
    const bool kv = is_kept(ed.v);
    if (!ku && !kv) continue;
    const EdgeId child_id = static_cast<EdgeId>(child_edges.size());
    if (ku && kv) {
      child_edges.push_back({relabel[ed.u], relabel[ed.v]});
    } else {
      child_edges.push_back({relabel[ku ? ed.u : ed.v], pseudo});
      red.cut_correspondence.emplace_back(child_id, e);
    }
    red.edge_provenance.push_back({e});
  }
  red.child = Graph(static_cast<int>(red.vertex_origin.size()), std::move(child_edges));
  return red;
}

EdgeSet map_to_parent(const Reduction& red, EdgeSet child_edges) {
  EdgeSet out;
  for (EdgeId e : child_edges.ids()) {
    for (EdgeId p : red.edge_provenance[e]) out.insert(p);
  }
  return out;
}

}  // namespace cubic2ec
