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

#include <random>

#include "core/errors.hpp"
#include "core/graph.hpp"
#include "core/rational.hpp"
#include "test_support.hpp"

using namespace cubic2ec;
using namespace cubic2ec::testing;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kPrecondition;
}

}  // namespace

TEST_CASE("builtin graphs have the reference graph6 strings") {
  // Strings produced by networkx from the documented labelings.
  CHECK(to_graph6(builtin_graph("k4")) == "C~");
  CHECK(to_graph6(builtin_graph("k33")) == "EFz_");
  CHECK(to_graph6(builtin_graph("prism")) == "E{Sw");
  CHECK(to_graph6(builtin_graph("petersen")) == "IheA@GUAo");
  CHECK(to_graph6(cube_graph()) == "Gr`HOk");
  for (auto name : builtin_graph_names()) {
    const Graph g = builtin_graph(name);
    CHECK(g.is_cubic());
    CHECK(g == with_graph6_edge_order(g));
  }
  CHECK(code_of([] { builtin_graph("dodecahedron"); }) == ErrorCode::kPrecondition);
}

TEST_CASE("graph6 decodes edges in column-major order") {
  const Graph g = parse_graph6("C~");
  REQUIRE(g.size() == 6);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 2});
  CHECK(g.edge(2) == Edge{1, 2});
  CHECK(g.edge(3) == Edge{0, 3});
  CHECK(parse_graph6(">>graph6<<C~\r\n") == g);
}

TEST_CASE("graph6 round trip on the corpus and relabelings") {
  std::mt19937 rng(7);
  for (const auto& line : corpus(14)) {
    const Graph g = parse_graph6(line);
    CHECK(to_graph6(g) == line);
    const Graph h = with_graph6_edge_order(relabel(g, random_permutation(g.order(), rng)));
    CHECK(parse_graph6(to_graph6(h)) == h);
  }
}

TEST_CASE("graph6 long header form") {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < 70; ++i) edges.push_back({i, i + 1});
  const Graph path = with_graph6_edge_order(Graph(70, edges));
  const std::string text = to_graph6(path);
  CHECK(text[0] == '~');
  CHECK(parse_graph6(text) == path);
}

TEST_CASE("graph6 rejects malformed input with byte offsets") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  try {
    parse_graph6("B}");  // triangle body with a nonzero padding bit
    FAIL("accepted nonzero padding");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  try {
    parse_graph6("C~~");
    FAIL("accepted trailing data");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    parse_graph6("C\x01");
    FAIL("accepted a control byte");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("edge lists parse, print and reject junk") {
  const Graph k4 = builtin_graph("k4");
  CHECK(parse_edge_list(to_edge_list(k4)) == k4);
  CHECK(parse_edge_list("3 2\n0 1\n1 2\n").size() == 2);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n5"), ParseError);
  CHECK(code_of([] { parse_edge_list("3 1\n0 7\n"); }) != ErrorCode::kPrecondition);
}

TEST_CASE("graph construction rejects loops and parallel edges") {
  CHECK(code_of([] { Graph(3, {{0, 0}}); }) == ErrorCode::kFormat);
  CHECK(code_of([] { Graph(3, {{0, 1}, {1, 0}}); }) == ErrorCode::kFormat);
  CHECK(code_of([] { Graph(3, {{0, 3}}); }) == ErrorCode::kFormat);
  const Graph g(3, {{2, 0}});
  CHECK(g.edge(0) == Edge{0, 2});
  CHECK(g.find_edge(2, 0) == 0);
  CHECK(!g.find_edge(1, 2));
}

TEST_CASE("edge set lexicographic order") {
  auto set = [](std::initializer_list<int> ids) { return EdgeSet::from_ids(ids); };
  CHECK(lex_less(set({0, 5}), set({1, 2})));
  CHECK(lex_less(set({0, 1}), set({0, 2})));
  CHECK(lex_less(set({0, 1}), set({0, 1, 2})));
  CHECK_FALSE(lex_less(set({0, 1, 2}), set({0, 1})));
  CHECK_FALSE(lex_less(set({1, 2}), set({1, 2})));
  CHECK(lex_less(set({}), set({3})));
  CHECK(lex_less(set({2, 63}), set({3})));
}

TEST_CASE("rational text forms") {
  CHECK(to_fraction_string(make_rational(14, 18)) == "7/9");
  CHECK(to_fraction_string(Rational(1)) == "1/1");
  CHECK(to_display_string(Rational(10)) == "10");
  CHECK(to_display_string(make_rational(11, 10)) == "11/10");
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
}
