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

// Writes every cubic 3-edge-connected simple graph up to a given order, one
// graph6 line per isomorphism class, as <outdir>/cubic3ec_n<N>.g6.
//
// Every such graph other than K4 arises from a smaller one by subdividing two
// distinct edges and joining the two new vertices, so growing from K4 and
// keeping the 3-edge-connected results reaches all classes.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include "core/canonical.hpp"
#include "core/connectivity.hpp"
#include "core/graph.hpp"

namespace {

using namespace cubic2ec;

Graph add_handle(const Graph& g, EdgeId e1, EdgeId e2) {
  const int x = g.order();
  const int y = x + 1;
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    if (e == e1) {
      edges.push_back({ed.u, x});
      edges.push_back({ed.v, x});
    } else if (e == e2) {
      edges.push_back({ed.u, y});
      edges.push_back({ed.v, y});
    } else {
      edges.push_back(ed);
    }
  }
  edges.push_back({x, y});
  return Graph(g.order() + 2, std::move(edges));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: gen_corpus <max_n> <outdir>\n";
    return 2;
  }
  const int max_n = std::atoi(argv[1]);
  const std::string outdir = argv[2];
  if (max_n < 4 || max_n > 16) {
    std::cerr << "gen_corpus: max_n must lie in [4, 16]\n";
    return 2;
  }

  std::set<std::string> level = {canonical_form(builtin_graph("k4")).key};
  for (int n = 4; n <= max_n; n += 2) {
    std::ofstream out(outdir + "/cubic3ec_n" + std::to_string(n) + ".g6");
    for (const std::string& key : level) out << key << "\n";
    std::cout << "n=" << n << " graphs=" << level.size() << "\n";
    if (n + 2 > max_n) break;

    std::set<std::string> next;
    for (const std::string& key : level) {
      const Graph g = parse_graph6(key);
      for (EdgeId e1 = 0; e1 < g.size(); ++e1) {
        for (EdgeId e2 = e1 + 1; e2 < g.size(); ++e2) {
          const Graph h = add_handle(g, e1, e2);
          if (edge_connectivity(h) >= 3) next.insert(canonical_form(h).key);
        }
      }
    }
    level = std::move(next);
  }
  return 0;
}
