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

#include <doctest.h>

#include <map>
#include <random>

#include "core/connectivity.hpp"
#include "core/errors.hpp"
#include "test_support.hpp"

using namespace cubic2ec;
using namespace cubic2ec::testing;

namespace {

std::map<std::string, bool> frozen_essentially_4ec() {
  std::map<std::string, bool> out;
  const auto lines = read_lines(data_path("oracle_frozen.csv"));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    const auto c1 = l.find(',');
    std::size_t pos = c1;
    for (int k = 0; k < 2; ++k) pos = l.find(',', pos + 1);
    out[l.substr(0, c1)] = l.substr(pos + 1, 4) == "true";
  }
  return out;
}

}  // namespace

TEST_CASE("is_2ec agrees with the deletion definition") {
  std::mt19937_64 rng(11);
  for (const auto& line : corpus(10)) {
    const Graph g = parse_graph6(line);
    const std::uint64_t full = EdgeSet::all(g.size()).bits();
    for (int trial = 0; trial < 300; ++trial) {
      // Dense random subsets so that both outcomes occur.
      const std::uint64_t keep = full & (rng() | rng());
      CHECK(is_2ec(g, EdgeSet(keep)) == brute_2ec(g, keep));
    }
  }
  const Graph prism = builtin_graph("prism");
  for (std::uint64_t s = 0; s < (1U << prism.size()); ++s) {
    CHECK(is_2ec(prism, EdgeSet(s)) == brute_2ec(prism, s));
  }
}

TEST_CASE("edge connectivity matches the subset minimum cut") {
  for (const auto& line : corpus(12)) {
    const Graph g = parse_graph6(line);
    CHECK(edge_connectivity(g) == brute_min_cut(g));
    CHECK(edge_connectivity(g) == 3);
  }
  const Graph bridged(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(edge_connectivity(bridged) == 1);
  const Graph cycle(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(edge_connectivity(cycle) == 2);
  CHECK(edge_connectivity(Graph(4, {{0, 1}, {2, 3}})) == 0);
}

TEST_CASE("cut enumeration covers every shore once, in order") {
  const Graph g = builtin_graph("petersen");
  const auto cuts = enumerate_cuts(g, g.size());
  CHECK(cuts.size() == (1U << 9) - 1);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    CHECK((cuts[i].shore & 1U) == 0);
    CHECK(cuts[i].size() == brute_cut_size(g, cuts[i].shore));
    if (i > 0) {
      const int pa = std::popcount(cuts[i - 1].shore);
      const int pb = std::popcount(cuts[i].shore);
      CHECK((pa < pb || (pa == pb && cuts[i - 1].shore < cuts[i].shore)));
    }
  }
  CHECK(enumerate_cuts(g, 3).size() == 10);  // the vertex stars
  std::vector<Edge> ring;
  for (int i = 0; i < 21; ++i) ring.push_back({i, (i + 1) % 21});
  CHECK_THROWS_AS(enumerate_cuts(Graph(21, ring), 3), Error);
}

TEST_CASE("cuts of cubic graphs have the parity of their shore") {
  for (const auto& line : corpus(12)) {
    const Graph g = parse_graph6(line);
    for (const Cut& c : enumerate_cuts(g, g.size())) {
      CHECK(c.size() % 2 == std::popcount(c.shore) % 2);
    }
  }
}

TEST_CASE("cut function is symmetric submodular on samples") {
  std::mt19937_64 rng(3);
  for (const auto& line : corpus(14)) {
    const Graph g = parse_graph6(line);
    const std::uint64_t all = (std::uint64_t{1} << g.order()) - 1;
    auto d = [&](std::uint64_t s) { return crossing_edges(g, s).size(); };
    for (int t = 0; t < 40; ++t) {
      const std::uint64_t y = rng() & all;
      const std::uint64_t z = rng() & all;
      CHECK(d(y) + d(z) >= d(y | z) + d(y & z));
      CHECK(d(y) + d(z) >= d(y & ~z) + d(z & ~y));
      CHECK(d(y) == d(all & ~y));
    }
  }
}

TEST_CASE("essential 3-cuts and essential 4-edge-connectivity") {
  const Graph prism = builtin_graph("prism");
  const auto cut = find_essential_3cut(prism);
  REQUIRE(cut);
  CHECK(cut->shore == 0b111000);
  CHECK(is_essential(prism, *cut));
  CHECK_FALSE(is_essentially_4ec(prism));
  CHECK(is_essentially_4ec(builtin_graph("petersen")));
  CHECK(is_essentially_4ec(builtin_graph("k33")));
  CHECK(is_essentially_4ec(cube_graph()));
  // A vertex star is a 3-cut but never essential.
  CHECK_FALSE(is_essential(prism, make_cut(prism, 0b1)));

  const auto frozen = frozen_essentially_4ec();
  REQUIRE(frozen.size() == corpus(14).size());
  for (const auto& [g6, expected] : frozen) {
    CHECK(is_essentially_4ec(parse_graph6(g6)) == expected);
  }
}

TEST_CASE("safe pair on the cube") {
  const Graph cube = cube_graph();
  const EdgeId uv = *cube.find_edge(0, 1);
  const PivotFrame f = pivot_frame(cube, uv);
  CHECK(f.a == 2);
  CHECK(f.b == 4);
  CHECK(f.c == 3);
  CHECK(f.d == 5);
  // Some essential 4-cut other than delta({u,v}) holds au and vc.
  const auto blocking = essential_4cut_with_pair(cube, f.au, f.vc, {f.u, f.v});
  REQUIRE(blocking);
  CHECK(is_essential(cube, *blocking));
  CHECK(blocking->crossing.size() == 4);
  CHECK(blocking->crossing.contains(f.au));
  CHECK(blocking->crossing.contains(f.vc));
  CHECK(blocking->crossing != crossing_edges(cube, 0b11));
  CHECK_FALSE(essential_4cut_with_pair(cube, f.au, f.vd, {f.u, f.v}));

  const SafePairDecision d = find_safe_pair(cube, uv);
  CHECK(d.chosen == Orientation::kSecond);
  REQUIRE(d.witness);
  CHECK((d.witness->crossing.contains(f.au) || d.witness->crossing.contains(f.bu)));
  CHECK(d.pair_a == std::array<EdgeId, 2>{f.au, f.vd});
  CHECK(d.pair_b == std::array<EdgeId, 2>{f.bu, f.vc});

  const SafePairDecision p = find_safe_pair(builtin_graph("petersen"), 0);
  CHECK(p.chosen == Orientation::kFirst);
  CHECK_FALSE(p.witness);
}

TEST_CASE("safe pair preconditions") {
  CHECK_THROWS_AS(find_safe_pair(builtin_graph("prism"), 0), Error);
  CHECK_THROWS_AS(find_safe_pair(builtin_graph("k33"), 0), Error);
}

TEST_CASE("Lemma 3 holds on small essentially 4-edge-connected graphs") {
  for (const Graph& g : {cube_graph(), builtin_graph("petersen")}) {
    const Lemma3Report r = verify_lemma3(g);
    CHECK(r.ok());
    CHECK(r.configurations == 4 * g.size());
    CHECK(r.counterexamples.empty());
  }
  CHECK(verify_lemma3(builtin_graph("petersen")).essential_4cuts == 15);
}
