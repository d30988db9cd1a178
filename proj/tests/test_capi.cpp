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

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "cubic2ec/cubic2ec.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  c2ec_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("graph handles") {
  c2ec_graph* g = nullptr;
  REQUIRE(c2ec_graph_builtin("petersen", &g) == C2EC_OK);
  CHECK(c2ec_graph_order(g) == 10);
  CHECK(c2ec_graph_size(g) == 15);
  char* text = nullptr;
  REQUIRE(c2ec_graph_to_graph6(g, &text) == C2EC_OK);
  CHECK(take(text) == "IheA@GUAo");
  int e4 = 0;
  REQUIRE(c2ec_graph_is_essentially_4ec(g, &e4) == C2EC_OK);
  CHECK(e4 == 1);
  c2ec_graph_free(g);

  c2ec_graph* h = nullptr;
  REQUIRE(c2ec_graph_from_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", &h) == C2EC_OK);
  CHECK(c2ec_graph_order(h) == 4);
  c2ec_graph_free(h);

  char* names = nullptr;
  REQUIRE(c2ec_builtin_names(&names) == C2EC_OK);
  CHECK(take(names).find("prism\n") != std::string::npos);
}

TEST_CASE("errors carry a status and a message") {
  c2ec_graph* g = nullptr;
  CHECK(c2ec_graph_from_graph6("B}", &g) == C2EC_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::string(c2ec_last_error()).find("byte 1") != std::string::npos);
  CHECK(c2ec_graph_builtin("nope", &g) == C2EC_ERR_PRECONDITION);
  CHECK(c2ec_graph_from_graph6(nullptr, &g) == C2EC_ERR_INVALID_ARGUMENT);
  CHECK(c2ec_graph_order(nullptr) == -1);
  CHECK(c2ec_status_is_internal(C2EC_ERR_LEMMA3));
  CHECK_FALSE(c2ec_status_is_internal(C2EC_ERR_SIZE_LIMIT));
  CHECK(std::string(c2ec_status_name(C2EC_ERR_GLUE)) == "GlueFailure");

  REQUIRE(c2ec_graph_from_graph6("C^", &g) == C2EC_OK);
  c2ec_certificate* cert = nullptr;
  CHECK(c2ec_certify(g, 14, &cert) == C2EC_ERR_PRECONDITION);
  CHECK(cert == nullptr);
  c2ec_graph_free(g);
}

TEST_CASE("certify, serialize, reload and verify") {
  c2ec_graph* g = nullptr;
  REQUIRE(c2ec_graph_builtin("petersen", &g) == C2EC_OK);
  c2ec_certificate* cert = nullptr;
  REQUIRE(c2ec_certify(g, 14, &cert) == C2EC_OK);
  int n = 0;
  size_t entries = 0;
  int support = 0;
  int bound = 0;
  REQUIRE(c2ec_certificate_summary(cert, &n, &entries, &support, &bound) == C2EC_OK);
  CHECK(n == 10);
  CHECK(entries > 0);
  CHECK(support == 11);
  CHECK(bound == 11);

  char* json = nullptr;
  REQUIRE(c2ec_certificate_to_json(cert, &json) == C2EC_OK);
  const std::string text = take(json);
  c2ec_certificate* back = nullptr;
  REQUIRE(c2ec_certificate_from_json(text.c_str(), &back) == C2EC_OK);
  int ok = 0;
  char* report = nullptr;
  REQUIRE(c2ec_verify(g, back, &ok, &report) == C2EC_OK);
  CHECK(ok == 1);
  CHECK(take(report).find("\"ok\":true") != std::string::npos);

  c2ec_graph* k4 = nullptr;
  REQUIRE(c2ec_graph_builtin("k4", &k4) == C2EC_OK);
  REQUIRE(c2ec_verify(k4, back, &ok, &report) == C2EC_OK);
  CHECK(ok == 0);
  take(report);

  c2ec_certificate_free(back);
  c2ec_certificate_free(cert);
  c2ec_graph_free(k4);
  c2ec_graph_free(g);
}

TEST_CASE("oracles, Lemma 3 and sweep") {
  c2ec_graph* g = nullptr;
  REQUIRE(c2ec_graph_builtin("petersen", &g) == C2EC_OK);
  int opt = 0;
  REQUIRE(c2ec_exact_opt(g, 16, &opt) == C2EC_OK);
  CHECK(opt == 11);
  char* lp = nullptr;
  REQUIRE(c2ec_lp_bound(g, 16, &lp) == C2EC_OK);
  CHECK(take(lp) == "10");
  char* gap = nullptr;
  REQUIRE(c2ec_integrality_gap(g, 16, &gap) == C2EC_OK);
  CHECK(take(gap) == "11/10");
  CHECK(c2ec_exact_opt(g, 8, &opt) == C2EC_ERR_SIZE_LIMIT);
  CHECK(c2ec_exact_opt(g, 17, &opt) == C2EC_ERR_SIZE_LIMIT);

  int ok = 0;
  char* report = nullptr;
  REQUIRE(c2ec_lemma3(g, &ok, &report) == C2EC_OK);
  CHECK(ok == 1);
  CHECK(take(report).find("\"lemma_violations\":0") != std::string::npos);
  c2ec_graph_free(g);

  char* csv = nullptr;
  int worst = -1;
  REQUIRE(c2ec_sweep("", 14, 1, &csv, &worst) == C2EC_OK);
  CHECK(take(csv) ==
        "n,essentially4ec,lemma3_violations,opt,lp,gap,cert_min_support,bound_ok,status\n");
  CHECK(worst == 0);
  REQUIRE(c2ec_sweep("E{Sw\n", 14, 1, &csv, &worst) == C2EC_OK);
  CHECK(take(csv).find("\n6,false,-,6,6,1,6,true,ok\n") != std::string::npos);
  CHECK(c2ec_sweep("", 30, 1, &csv, &worst) == C2EC_ERR_SIZE_LIMIT);
}
