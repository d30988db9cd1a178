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

#include "core/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>

#include "core/errors.hpp"

namespace cubic2ec {

std::vector<VertexId> Cut::shore_vertices() const {
  std::vector<VertexId> out;
  for (VertexMask m = shore; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

VertexMask vertex_mask(std::span<const VertexId> vertices) {
  VertexMask m = 0;
  for (VertexId v : vertices) m |= VertexMask{1} << v;
  return m;
}

namespace {

VertexMask full_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

bool in_mask(VertexMask m, VertexId v) { return (m >> v) & 1U; }

void require_mask_sized(const Graph& g) {
  if (g.order() > 64) fail(ErrorCode::kSizeLimit, "vertex subsets need n <= 64");
}

}  // namespace

EdgeSet crossing_edges(const Graph& g, VertexMask shore) {
  EdgeSet out;
  const auto edges = g.edges();
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (in_mask(shore, edges[e].u) != in_mask(shore, edges[e].v)) out.insert(e);
  }
  return out;
}

Cut make_cut(const Graph& g, VertexMask side) {
  require_mask_sized(g);
  const VertexMask all = full_mask(g.order());
  side &= all;
  require(side != 0 && side != all, "a cut needs two nonempty sides");
  const VertexMask shore = in_mask(side, 0) ? (all & ~side) : side;
  return Cut{shore, crossing_edges(g, shore)};
}

bool is_essential(const Graph& g, const Cut& cut) {
  const VertexMask all = full_mask(g.order());
  const VertexMask other = all & ~cut.shore;
  if (std::popcount(cut.shore) < 2 || std::popcount(other) < 2) return false;
  bool edge_in_shore = false;
  bool edge_in_other = false;
  for (const Edge& e : g.edges()) {
    const bool iu = in_mask(cut.shore, e.u);
    const bool iv = in_mask(cut.shore, e.v);
    if (iu && iv) edge_in_shore = true;
    if (!iu && !iv) edge_in_other = true;
  }
  return edge_in_shore && edge_in_other;
}

namespace {

// Bridge detection restricted to the edges accepted by `keep`.
template <typename Keep>
bool is_2ec_impl(const Graph& g, Keep keep) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int timer = 0;
  disc[0] = low[0] = timer++;
  stack.push_back({0, -1, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto inc = g.incident(f.v);
    if (f.next < inc.size()) {
      const EdgeId e = inc[f.next++];
      if (e == f.parent_edge || !keep(e)) continue;
      const VertexId w = g.other_end(e, f.v);
      if (disc[w] < 0) {
        disc[w] = low[w] = timer++;
        stack.push_back({w, e, 0});
      } else {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    const Frame done = f;
    stack.pop_back();
    if (!stack.empty()) {
      const VertexId parent = stack.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] > disc[parent]) return false;  // bridge
    }
  }
  return timer == n;
}

}  // namespace

bool is_connected(const Graph& g, EdgeSet sub) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> todo{0};
  seen[0] = 1;
  int reached = 1;
  while (!todo.empty()) {
    const VertexId v = todo.back();
    todo.pop_back();
    for (EdgeId e : g.incident(v)) {
      if (!sub.contains(e)) continue;
      const VertexId w = g.other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        todo.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_2ec(const Graph& g, EdgeSet sub) {
  if (g.size() > kMaxEdges) fail(ErrorCode::kSizeLimit, "edge sets need |E| <= 64");
  return is_2ec_impl(g, [sub](EdgeId e) { return sub.contains(e); });
}

bool is_2ec(const Graph& g, std::span<const EdgeId> sub) {
  std::vector<char> keep(g.size(), 0);
  for (EdgeId e : sub) {
    require(e >= 0 && e < g.size(), "subgraph edge id out of range");
    keep[e] = 1;
  }
  return is_2ec_impl(g, [&keep](EdgeId e) { return keep[e] != 0; });
}

namespace {

// Unit-capacity max flow between s and t on the undirected graph, with the
// two directions of an edge sharing one residual pair.
int unit_max_flow(const Graph& g, VertexId s, VertexId t) {
  // flow[e] in {-1, 0, 1}: +1 means one unit from edge.u to edge.v.
  std::vector<int> flow(g.size(), 0);
  int total = 0;
  std::vector<EdgeId> via(g.order());
  while (true) {
    std::fill(via.begin(), via.end(), -1);
    std::deque<VertexId> queue{s};
    std::vector<char> seen(g.order(), 0);
    seen[s] = 1;
    while (!queue.empty() && !seen[t]) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.other_end(e, x);
        const int dir = (g.edge(e).u == x) ? 1 : -1;
        if (seen[y] || flow[e] == dir) continue;  // saturated in this direction
        seen[y] = 1;
        via[y] = e;
        queue.push_back(y);
      }
    }
    if (!seen[t]) return total;
    for (VertexId y = t; y != s;) {
      const EdgeId e = via[y];
      const VertexId x = g.other_end(e, y);
      flow[e] += (g.edge(e).u == x) ? 1 : -1;
      y = x;
    }
    ++total;
  }
}

}  // namespace

int edge_connectivity(const Graph& g) {
  require(g.order() >= 2, "edge connectivity needs at least two vertices");
  int best = std::numeric_limits<int>::max();
  for (VertexId t = 1; t < g.order(); ++t) {
    best = std::min(best, unit_max_flow(g, 0, t));
    if (best == 0) break;
  }
  return best;
}

std::vector<Cut> enumerate_cuts(const Graph& g, int max_size) {
  const int n = g.order();
  if (n > kMaxCutEnumerationOrder) {
    fail(ErrorCode::kSizeLimit, "cut enumeration is limited to n <= " +
                                    std::to_string(kMaxCutEnumerationOrder));
  }
  std::vector<Cut> cuts;
  if (n < 2) return cuts;
  const auto edges = g.edges();
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t bits = 1; bits < count; ++bits) {
    const VertexMask shore = bits << 1;
    std::uint64_t crossing = 0;
    int size = 0;
    for (EdgeId e = 0; e < g.size(); ++e) {
      if (in_mask(shore, edges[e].u) != in_mask(shore, edges[e].v)) {
        crossing |= std::uint64_t{1} << e;
        if (++size > max_size) break;
      }
    }
    if (size <= max_size) cuts.push_back(Cut{shore, EdgeSet(crossing)});
  }
  std::stable_sort(cuts.begin(), cuts.end(), [](const Cut& a, const Cut& b) {
    const int pa = std::popcount(a.shore);
    const int pb = std::popcount(b.shore);
    return pa != pb ? pa < pb : a.shore < b.shore;
  });
  return cuts;
}

std::vector<Cut> essential_cuts_of_size(const Graph& g, int size) {
  std::vector<Cut> out;
  for (Cut& c : enumerate_cuts(g, size)) {
    if (c.size() == size && is_essential(g, c)) out.push_back(std::move(c));
  }
  return out;
}

std::optional<Cut> find_essential_3cut(const Graph& g) {
  for (Cut& c : enumerate_cuts(g, 3)) {
    if (is_essential(g, c)) return std::move(c);
  }
  return std::nullopt;
}

bool is_essentially_4ec(const Graph& g) {
  return g.order() >= 2 && edge_connectivity(g) >= 3 && !find_essential_3cut(g);
}

namespace {

VertexMask canonical_shore(const Graph& g, VertexMask side) {
  const VertexMask all = full_mask(g.order());
  return in_mask(side, 0) ? (all & ~side) : side;
}

std::optional<Cut> first_blocking_cut(std::span<const Cut> essential_4cuts, EdgeId e1,
                                      EdgeId e2, VertexMask excluded) {
  for (const Cut& c : essential_4cuts) {
    if (c.shore != excluded && c.crossing.contains(e1) && c.crossing.contains(e2)) return c;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Cut> essential_4cut_with_pair(const Graph& g, EdgeId e1, EdgeId e2,
                                            std::pair<VertexId, VertexId> excluded_shore) {
  require(e1 != e2, "essential_4cut_with_pair needs two distinct edges");
  require(e1 >= 0 && e2 >= 0 && e1 < g.size() && e2 < g.size(), "edge id out of range");
  const std::array<VertexId, 2> pair{excluded_shore.first, excluded_shore.second};
  const VertexMask excluded = canonical_shore(g, vertex_mask(pair));
  const auto cuts = essential_cuts_of_size(g, 4);
  return first_blocking_cut(cuts, e1, e2, excluded);
}

PivotFrame pivot_frame(const Graph& g, EdgeId uv) {
  require(uv >= 0 && uv < g.size(), "pivot edge id out of range");
  PivotFrame f{};
  f.pivot = uv;
  f.u = g.edge(uv).u;
  f.v = g.edge(uv).v;
  require(g.degree(f.u) == 3 && g.degree(f.v) == 3, "pivot endpoints must have degree 3");
  std::vector<VertexId> nu;
  std::vector<VertexId> nv;
  for (VertexId x : g.neighbors(f.u))
    if (x != f.v) nu.push_back(x);
  for (VertexId x : g.neighbors(f.v))
    if (x != f.u) nv.push_back(x);
  std::sort(nu.begin(), nu.end());
  std::sort(nv.begin(), nv.end());
  f.a = nu[0];
  f.b = nu[1];
  f.c = nv[0];
  f.d = nv[1];
  f.au = *g.find_edge(f.a, f.u);
  f.bu = *g.find_edge(f.b, f.u);
  f.vc = *g.find_edge(f.v, f.c);
  f.vd = *g.find_edge(f.v, f.d);
  return f;
}

SafePairDecision find_safe_pair(const Graph& g, EdgeId uv) {
  require(g.is_cubic(), "find_safe_pair needs a cubic graph");
  require(g.order() > 6, "find_safe_pair needs more than 6 vertices");
  require(is_essentially_4ec(g), "find_safe_pair needs an essentially 4-edge-connected graph");
  const auto cuts = essential_cuts_of_size(g, 4);
  return find_safe_pair(g, uv, cuts);
}

SafePairDecision find_safe_pair(const Graph& g, EdgeId uv,
                                std::span<const Cut> essential_4cuts) {
  SafePairDecision d;
  d.frame = pivot_frame(g, uv);
  const PivotFrame& f = d.frame;
  const std::array<VertexId, 2> uvpair{f.u, f.v};
  const VertexMask excluded = canonical_shore(g, vertex_mask(uvpair));
  auto blocked = [&](EdgeId x, EdgeId y) {
    return first_blocking_cut(essential_4cuts, x, y, excluded);
  };

  std::optional<Cut> first = blocked(f.au, f.vc);
  if (!first) first = blocked(f.bu, f.vd);
  if (!first) {
    d.chosen = Orientation::kFirst;
    d.pair_a = {f.au, f.vc};
    d.pair_b = {f.bu, f.vd};
    return d;
  }
  std::optional<Cut> second = blocked(f.au, f.vd);
  if (!second) second = blocked(f.bu, f.vc);
  if (second) {
    fail(ErrorCode::kLemma3Violation,
         "both removal orientations are blocked around pivot edge " + std::to_string(uv) +
             " (witness shores " + std::to_string(first->shore) + " and " +
             std::to_string(second->shore) + ")");
  }
  d.chosen = Orientation::kSecond;
  d.pair_a = {f.au, f.vd};
  d.pair_b = {f.bu, f.vc};
  d.witness = std::move(first);
  return d;
}

Lemma3Report verify_lemma3(const Graph& g) {
  require(g.is_cubic(), "verify_lemma3 needs a cubic graph");
  require(g.order() > 6, "verify_lemma3 needs more than 6 vertices");
  require(is_essentially_4ec(g), "verify_lemma3 needs an essentially 4-edge-connected graph");
  Lemma3Report report;
  const auto cuts = essential_cuts_of_size(g, 4);
  report.essential_4cuts = static_cast<long>(cuts.size());

  for (EdgeId uv = 0; uv < g.size(); ++uv) {
    const PivotFrame f = pivot_frame(g, uv);
    const std::array<VertexId, 2> uvpair{f.u, f.v};
    const VertexMask excluded = canonical_shore(g, vertex_mask(uvpair));
    auto blocked = [&](EdgeId x, EdgeId y) {
      return first_blocking_cut(cuts, x, y, excluded);
    };

    // Statement form, from both ends of the pivot and for each choice of a.
    bool statement_violated = false;
    struct Side {
      EdgeId near;
      EdgeId far1;
      EdgeId far2;
      VertexId near_vertex;
    };
    const std::array<Side, 4> sides{{{f.au, f.vc, f.vd, f.a},
                                     {f.bu, f.vc, f.vd, f.b},
                                     {f.vc, f.au, f.bu, f.c},
                                     {f.vd, f.au, f.bu, f.d}}};
    for (const Side& s : sides) {
      ++report.configurations;
      auto with_far2 = blocked(s.near, s.far2);
      auto with_far1 = blocked(s.near, s.far1);
      if (with_far1 && with_far2) {
        ++report.lemma_violations;
        statement_violated = true;
        report.counterexamples.push_back({f, s.near_vertex, *with_far2, *with_far1});
      }
    }

    // Application form: each orientation is blocked if either pair is.
    const bool first_blocked = blocked(f.au, f.vc) || blocked(f.bu, f.vd);
    const bool second_blocked = blocked(f.au, f.vd) || blocked(f.bu, f.vc);
    const bool case1_violated = first_blocked && second_blocked;
    if (case1_violated) ++report.case1_violations;
    if (case1_violated != statement_violated) ++report.divergences;
  }
  return report;
}

}  // namespace cubic2ec
