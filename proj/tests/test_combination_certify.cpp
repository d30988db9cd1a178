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

#include <thread>

#include "core/canonical.hpp"
#include "core/certificate.hpp"
#include "core/certify.hpp"
#include "core/errors.hpp"
#include "core/sweep.hpp"
#include "test_support.hpp"

using namespace cubic2ec;
using namespace cubic2ec::testing;

namespace {

EdgeSet ids(std::initializer_list<int> list) { return EdgeSet::from_ids(list); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kPrecondition;
}

// Two copies of K4 minus an edge, joined into a cubic graph with a 2-edge cut.
Graph two_edge_cut_graph() {
  std::vector<Edge> edges;
  for (int base : {0, 4}) {
    edges.push_back({base + 0, base + 1});
    edges.push_back({base + 0, base + 2});
    edges.push_back({base + 0, base + 3});
    edges.push_back({base + 1, base + 2});
    edges.push_back({base + 1, base + 3});
  }
  edges.push_back({2, 6});
  edges.push_back({3, 7});
  return Graph(8, edges);
}

}  // namespace

TEST_CASE("convex combinations merge duplicates and guard inputs") {
  ConvexCombination c(4);
  c.add(make_rational(1, 3), ids({0, 1}));
  c.add(make_rational(1, 3), ids({2}));
  c.add(make_rational(1, 3), ids({0, 1}));
  REQUIRE(c.entry_count() == 2);
  CHECK(c.entries()[0].weight == make_rational(2, 3));
  CHECK(c.entries()[0].edges == ids({0, 1}));
  CHECK(c.total_weight() == 1);
  CHECK_THROWS_AS(c.add(Rational(0), ids({1})), Error);
  CHECK_THROWS_AS(c.add(Rational(1), ids({4})), Error);

  ConvexCombination reordered(4);
  reordered.add(make_rational(1, 3), ids({2}));
  reordered.add(make_rational(1, 6), ids({0, 1}));
  reordered.add(make_rational(1, 2), ids({0, 1}));
  CHECK(edge_occurrences(reordered) == edge_occurrences(c));
  CHECK_THROWS_AS(edge_occurrences(ConvexCombination(4)), Error);
}

TEST_CASE("average weights parts and checks the total") {
  ConvexCombination a(3);
  a.add(1, ids({0}));
  ConvexCombination b(3);
  b.add(1, ids({1}));
  const std::array<WeightedPart, 2> parts{WeightedPart{make_rational(1, 4), a},
                                          WeightedPart{make_rational(3, 4), b}};
  const ConvexCombination avg = average(parts);
  CHECK(edge_occurrences(avg) ==
        std::vector<Rational>{make_rational(1, 4), make_rational(3, 4), 0});
  const std::array<WeightedPart, 1> short_weight{WeightedPart{make_rational(1, 2), a}};
  CHECK_THROWS_AS(average(short_weight), Error);
}

TEST_CASE("padding raises every edge to the target") {
  ConvexCombination c(3);
  c.add(make_rational(1, 2), ids({0}));
  c.add(make_rational(1, 2), ids({1}));
  const ConvexCombination padded = pad_to_uniform(c, seven_ninths());
  CHECK(padded.total_weight() == 1);
  for (const Rational& x : edge_occurrences(padded)) CHECK(x == seven_ninths());

  ConvexCombination hamiltonian(6);
  hamiltonian.add(1, ids({0, 2, 3, 5}));
  CHECK(code_of([&] { pad_to_uniform(hamiltonian, seven_ninths()); }) ==
        ErrorCode::kPrecondition);
}

TEST_CASE("base cases") {
  int candidates = 0;
  const ConvexCombination k4 = base_case_combination(builtin_graph("k4"), &candidates);
  CHECK(candidates == 10);
  for (const Rational& x : edge_occurrences(k4)) CHECK(x == seven_ninths());
  require_2ec_members(builtin_graph("k4"), k4, ErrorCode::kBaseCaseFailure, "test");

  const ConvexCombination k33 = base_case_combination(builtin_graph("k33"));
  for (const Rational& x : edge_occurrences(k33)) CHECK(x == seven_ninths());
  CHECK_THROWS_AS(base_case_combination(builtin_graph("prism")), Error);
}

TEST_CASE("Case 1 profiles") {
  const Graph petersen = builtin_graph("petersen");
  for (EdgeId e = 0; e < petersen.size(); ++e) {
    CHECK(case1_profile(petersen, e) == Case1Profile{0, 8});
  }
  const Graph cube = cube_graph();
  for (EdgeId e = 0; e < cube.size(); ++e) {
    CHECK(case1_profile(cube, e) == Case1Profile{2, 4});
  }
  CHECK_THROWS_AS(case1_profile(builtin_graph("k4"), 0), Error);
}

TEST_CASE("Case 1 step on Petersen follows the piecewise occurrence profile") {
  const Graph g = builtin_graph("petersen");
  Certifier certifier;
  for (EdgeId uv = 0; uv < g.size(); ++uv) {
    const Case1Step step = certifier.reduce_case1(g, uv);
    const PivotFrame& f = step.decision.frame;
    const EdgeSet four = ids({f.au, f.bu, f.vc, f.vd});
    const auto occ = edge_occurrences(step.combination);
    for (EdgeId e = 0; e < g.size(); ++e) {
      int touching = 0;
      for (EdgeId k : four.ids()) touching += g.adjacent_edges(e, k) ? 1 : 0;
      Rational expected = seven_ninths();
      if (e == uv) {
        expected = 1;
      } else if (four.contains(e)) {
        expected = make_rational(1, 2);
      } else if (touching == 1) {
        expected = make_rational(8, 9);
      } else if (touching >= 2) {
        expected = 1;
      }
      CHECK(occ[e] == expected);
    }
  }
}

TEST_CASE("glue rejects combinations without the pseudo-vertex pattern") {
  const Graph prism = builtin_graph("prism");
  const Cut cut = *find_essential_3cut(prism);
  const Reduction in = contract_shore(prism, cut, ShoreSide::kInside);
  const Reduction out = contract_shore(prism, cut, ShoreSide::kOutside);
  ConvexCombination whole_in(in.child.size());
  whole_in.add(1, in.child.all_edges());
  ConvexCombination whole_out(out.child.size());
  whole_out.add(1, out.child.all_edges());
  CHECK(code_of([&] { glue(whole_in, whole_out, in, out, prism); }) ==
        ErrorCode::kPatternMismatch);

  const ConvexCombination ci = base_case_combination(in.child);
  const ConvexCombination co = base_case_combination(out.child);
  const ConvexCombination glued = glue(ci, co, in, out, prism);
  for (const Rational& x : edge_occurrences(glued)) CHECK(x == seven_ninths());
  require_2ec_members(prism, glued, ErrorCode::kGlueFailure, "test");
}

TEST_CASE("certify the named graphs") {
  for (auto name : builtin_graph_names()) {
    const Graph g = builtin_graph(name);
    const Certificate cert = certify(g);
    CHECK(cert.graph == g);
    for (const Rational& x : edge_occurrences(cert.combination)) CHECK(x == seven_ninths());
    require_2ec_members(g, cert.combination, ErrorCode::kStructuralViolation, "test");
    CHECK(verify_certificate(g, cert).ok());
    CHECK(min_support_subgraph(cert).size() <= support_bound(g.order()));
  }
  const Certificate petersen = certify(builtin_graph("petersen"));
  REQUIRE_FALSE(petersen.trace.empty());
  CHECK(petersen.trace[0].kind == StepKind::kEdgeRemoval);
  CHECK(petersen.trace[0].pivots.size() == 15);
  CHECK_FALSE(petersen.trace[0].padded);

  const Certificate prism = certify(builtin_graph("prism"));
  CHECK(prism.trace[0].kind == StepKind::kShoreContraction);
  CHECK(prism.trace[0].children == std::vector<std::string>{"C~"});
  REQUIRE(prism.trace.size() == 2);
  CHECK(prism.trace[1].kind == StepKind::kBase);
  CHECK(prism.trace[1].base_candidates == 10);
}

TEST_CASE("certify preconditions") {
  CHECK(code_of([] { certify(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})); }) ==
        ErrorCode::kPrecondition);
  CHECK(code_of([] { certify(two_edge_cut_graph()); }) == ErrorCode::kPrecondition);
  const Graph big = parse_graph6(corpus(14).back());
  CHECK(code_of([&] { certify(big, CertifyOptions{12}); }) == ErrorCode::kSizeLimit);
  CHECK(code_of([] { Certifier(CertifyOptions{21}); }) == ErrorCode::kSizeLimit);
}

TEST_CASE("certificate JSON round trip and tamper detection") {
  const Graph g = builtin_graph("petersen");
  const Certificate cert = certify(g);
  const std::string json = certificate_to_json(cert);
  const Certificate back = certificate_from_json(json);
  CHECK(certificate_to_json(back) == json);
  CHECK(verify_certificate(g, back).ok());

  Certificate tampered = back;
  std::vector<WeightedSubgraph> entries(tampered.combination.entries().begin(),
                                        tampered.combination.entries().end());
  entries[0].weight += make_rational(1, 1000000);
  tampered.combination = ConvexCombination::from_raw(g.size(), entries);
  const VerificationReport report = verify_certificate(g, tampered);
  CHECK_FALSE(report.ok());
  for (const auto& check : report.checks) {
    if (check.name == "weights_sum_to_one" || check.name == "uniform_occurrence") {
      CHECK_FALSE(check.passed);
    }
  }

  const VerificationReport other = verify_certificate(builtin_graph("k4"), back);
  CHECK_FALSE(other.ok());
  CHECK_FALSE(other.checks[0].passed);
  CHECK(other.checks[0].name == "graph_matches");

  CHECK_THROWS_AS(certificate_from_json("{"), ParseError);
  CHECK_THROWS_AS(certificate_from_json("{\"n\": 4}"), Error);
}

TEST_CASE("minimum support picks the lexicographically least smallest member") {
  Certificate cert;
  cert.graph = builtin_graph("k4");
  cert.combination = ConvexCombination::from_raw(
      6, {{make_rational(1, 3), ids({0, 1, 2, 3, 4})},
          {make_rational(1, 3), ids({1, 2, 3, 5})},
          {make_rational(1, 3), ids({0, 2, 3, 5})}});
  CHECK(min_support_subgraph(cert) == ids({0, 2, 3, 5}));
  CHECK(support_bound(10) == 11);
  CHECK(support_bound(14) == 16);
}

TEST_CASE("shared certifier is deterministic across threads") {
  const auto lines = corpus(12);
  std::vector<std::string> serial;
  for (const auto& l : lines) serial.push_back(certificate_to_json(certify(parse_graph6(l))));

  Certifier shared;
  std::vector<std::string> parallel(lines.size());
  std::vector<std::jthread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < lines.size(); i += 4) {
        parallel[i] = certificate_to_json(shared.certify(parse_graph6(lines[i])));
      }
    });
  }
  pool.clear();
  CHECK(parallel == serial);
}

TEST_CASE("sweep rows and CSV") {
  CHECK(sweep_csv(run_sweep("", {})) == sweep_csv_header());
  const auto rows = run_sweep("IheA@GUAo\nE{Sw\nnot-graph6\nC^\n", {14, 2});
  REQUIRE(rows.size() == 4);
  CHECK(sweep_csv_row(rows[0]) == "10,true,0,11,10,11/10,11,true,ok\n");
  CHECK(rows[1].essentially_4ec == false);
  CHECK_FALSE(rows[1].lemma3_violations);
  CHECK(rows[1].bound_ok);
  CHECK(rows[2].severity == RowSeverity::kBadInput);
  CHECK(rows[3].severity == RowSeverity::kBadInput);  // K4 minus an edge
  CHECK(worst_severity(rows) == RowSeverity::kBadInput);
}
