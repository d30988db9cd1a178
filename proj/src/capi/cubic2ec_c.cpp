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

#include "cubic2ec/cubic2ec.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "core/certificate.hpp"
#include "core/oracle.hpp"
#include "core/sweep.hpp"

struct c2ec_graph {
  cubic2ec::Graph graph;
};

struct c2ec_certificate {
  cubic2ec::Certificate cert;
};

namespace {

using namespace cubic2ec;

thread_local std::string last_error;

c2ec_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return C2EC_ERR_PARSE;
    case ErrorCode::kFormat: return C2EC_ERR_FORMAT;
    case ErrorCode::kPrecondition: return C2EC_ERR_PRECONDITION;
    case ErrorCode::kSizeLimit: return C2EC_ERR_SIZE_LIMIT;
    case ErrorCode::kStructuralViolation: return C2EC_ERR_STRUCTURAL;
    case ErrorCode::kLemma3Violation: return C2EC_ERR_LEMMA3;
    case ErrorCode::kBaseCaseFailure: return C2EC_ERR_BASE_CASE;
    case ErrorCode::kLiftFailure: return C2EC_ERR_LIFT;
    case ErrorCode::kGlueFailure: return C2EC_ERR_GLUE;
    case ErrorCode::kPatternMismatch: return C2EC_ERR_PATTERN;
    case ErrorCode::kOracleInconsistency: return C2EC_ERR_ORACLE;
  }
  return C2EC_ERR_UNKNOWN;
}

// Runs `body`, translating exceptions into a status and last_error.
template <typename F>
c2ec_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return C2EC_OK;
  } catch (const Error& e) {
    last_error = std::string(error_code_name(e.code())) + ": " + e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return C2EC_ERR_UNKNOWN;
  } catch (const std::exception& e) {
    last_error = e.what();
    return C2EC_ERR_UNKNOWN;
  }
}

c2ec_status invalid(const char* what) {
  last_error = std::string("invalid argument: ") + what;
  return C2EC_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void check_oracle_order(const Graph& g, int max_order) {
  if (max_order < 2 || max_order > kDefaultOracleMaxOrder) {
    fail(ErrorCode::kSizeLimit, "oracle max order must lie in [2, " +
                                    std::to_string(kDefaultOracleMaxOrder) + "]");
  }
  if (g.order() > max_order) {
    fail(ErrorCode::kSizeLimit, "graph has " + std::to_string(g.order()) +
                                    " vertices; limit is " + std::to_string(max_order));
  }
}

c2ec_status make_graph(Graph (*build)(std::string_view), const char* text, c2ec_graph** out) {
  if (!text || !out) return invalid("null pointer");
  *out = nullptr;
  return guarded([&] { *out = new c2ec_graph{build(text)}; });
}

}  // namespace

extern "C" {

const char* c2ec_last_error(void) { return last_error.c_str(); }

const char* c2ec_status_name(c2ec_status status) {
  switch (status) {
    case C2EC_OK: return "ok";
    case C2EC_ERR_PARSE: return "ParseError";
    case C2EC_ERR_FORMAT: return "FormatError";
    case C2EC_ERR_PRECONDITION: return "PreconditionError";
    case C2EC_ERR_SIZE_LIMIT: return "SizeLimitError";
    case C2EC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case C2EC_ERR_STRUCTURAL: return "StructuralViolation";
    case C2EC_ERR_LEMMA3: return "Lemma3Violation";
    case C2EC_ERR_BASE_CASE: return "BaseCaseFailure";
    case C2EC_ERR_LIFT: return "LiftFailure";
    case C2EC_ERR_GLUE: return "GlueFailure";
    case C2EC_ERR_PATTERN: return "PatternMismatch";
    case C2EC_ERR_ORACLE: return "OracleInconsistency";
    case C2EC_ERR_UNKNOWN: return "Unknown";
  }
  return "Unknown";
}

int c2ec_status_is_internal(c2ec_status status) { return status >= C2EC_ERR_STRUCTURAL; }

void c2ec_string_free(char* s) { std::free(s); }

c2ec_status c2ec_graph_from_graph6(const char* text, c2ec_graph** out) {
  return make_graph(&parse_graph6, text, out);
}

c2ec_status c2ec_graph_from_edge_list(const char* text, c2ec_graph** out) {
  return make_graph(&parse_edge_list, text, out);
}

c2ec_status c2ec_graph_builtin(const char* name, c2ec_graph** out) {
  return make_graph(&builtin_graph, name, out);
}

c2ec_status c2ec_builtin_names(char** out) {
  if (!out) return invalid("null pointer");
  return guarded([&] {
    std::string names;
    for (std::string_view name : builtin_graph_names()) {
      names.append(name);
      names.push_back('\n');
    }
    *out = dup_string(names);
  });
}

void c2ec_graph_free(c2ec_graph* g) { delete g; }

int c2ec_graph_order(const c2ec_graph* g) { return g ? g->graph.order() : -1; }

int c2ec_graph_size(const c2ec_graph* g) { return g ? g->graph.size() : -1; }

c2ec_status c2ec_graph_to_graph6(const c2ec_graph* g, char** out) {
  if (!g || !out) return invalid("null pointer");
  return guarded([&] { *out = dup_string(to_graph6(g->graph)); });
}

c2ec_status c2ec_graph_is_essentially_4ec(const c2ec_graph* g, int* out) {
  if (!g || !out) return invalid("null pointer");
  return guarded([&] { *out = is_essentially_4ec(g->graph) ? 1 : 0; });
}

c2ec_status c2ec_certify(const c2ec_graph* g, int max_order, c2ec_certificate** out) {
  if (!g || !out) return invalid("null pointer");
  *out = nullptr;
  return guarded([&] {
    *out = new c2ec_certificate{certify(g->graph, CertifyOptions{max_order})};
  });
}

void c2ec_certificate_free(c2ec_certificate* cert) { delete cert; }

c2ec_status c2ec_certificate_to_json(const c2ec_certificate* cert, char** out) {
  if (!cert || !out) return invalid("null pointer");
  return guarded([&] { *out = dup_string(certificate_to_json(cert->cert)); });
}

c2ec_status c2ec_certificate_from_json(const char* json, c2ec_certificate** out) {
  if (!json || !out) return invalid("null pointer");
  *out = nullptr;
  return guarded([&] { *out = new c2ec_certificate{certificate_from_json(json)}; });
}

c2ec_status c2ec_certificate_summary(const c2ec_certificate* cert, int* order, size_t* entries,
                                     int* min_support, int* bound) {
  if (!cert || !order || !entries || !min_support || !bound) return invalid("null pointer");
  return guarded([&] {
    *order = cert->cert.graph.order();
    *entries = cert->cert.combination.entry_count();
    *min_support = min_support_subgraph(cert->cert).size();
    *bound = support_bound(cert->cert.graph.order());
  });
}

c2ec_status c2ec_verify(const c2ec_graph* g, const c2ec_certificate* cert, int* ok,
                        char** report_json) {
  if (!g || !cert || !ok || !report_json) return invalid("null pointer");
  return guarded([&] {
    const VerificationReport report = verify_certificate(g->graph, cert->cert);
    *ok = report.ok() ? 1 : 0;
    *report_json = dup_string(report.to_json());
  });
}

c2ec_status c2ec_exact_opt(const c2ec_graph* g, int max_order, int* value) {
  if (!g || !value) return invalid("null pointer");
  return guarded([&] {
    check_oracle_order(g->graph, max_order);
    *value = exact_opt(g->graph).value;
  });
}

c2ec_status c2ec_lp_bound(const c2ec_graph* g, int max_order, char** value) {
  if (!g || !value) return invalid("null pointer");
  return guarded([&] {
    check_oracle_order(g->graph, max_order);
    *value = dup_string(to_display_string(lp_bound(g->graph).value));
  });
}

c2ec_status c2ec_integrality_gap(const c2ec_graph* g, int max_order, char** value) {
  if (!g || !value) return invalid("null pointer");
  return guarded([&] {
    check_oracle_order(g->graph, max_order);
    *value = dup_string(to_display_string(integrality_gap(g->graph).gap));
  });
}

c2ec_status c2ec_lemma3(const c2ec_graph* g, int* ok, char** report_json) {
  if (!g || !ok || !report_json) return invalid("null pointer");
  return guarded([&] {
    const Lemma3Report report = verify_lemma3(g->graph);
    nlohmann::json out;
    out["ok"] = report.ok();
    out["configurations"] = report.configurations;
    out["essential_4cuts"] = report.essential_4cuts;
    out["lemma_violations"] = report.lemma_violations;
    out["case1_violations"] = report.case1_violations;
    out["divergences"] = report.divergences;
    nlohmann::json examples = nlohmann::json::array();
    for (const auto& ce : report.counterexamples) {
      examples.push_back({{"u", ce.frame.u},
                          {"v", ce.frame.v},
                          {"a", ce.a_side},
                          {"cut_with_vd", ce.with_vd.crossing.ids()},
                          {"cut_with_vc", ce.with_vc.crossing.ids()}});
    }
    out["counterexamples"] = std::move(examples);
    *ok = report.ok() ? 1 : 0;
    *report_json = dup_string(out.dump());
  });
}

c2ec_status c2ec_sweep(const char* corpus, int max_order, int jobs, char** csv, int* worst) {
  if (!corpus || !csv || !worst) return invalid("null pointer");
  return guarded([&] {
    if (max_order < 4 || max_order > kHardCertifyMaxOrder) {
      fail(ErrorCode::kSizeLimit,
           "sweep max order must lie in [4, " + std::to_string(kHardCertifyMaxOrder) + "]");
    }
    require(jobs >= 1, "jobs must be positive");
    const auto rows = run_sweep(corpus, SweepOptions{max_order, jobs});
    *csv = dup_string(sweep_csv(rows));
    *worst = static_cast<int>(worst_severity(rows));
  });
}

}  // extern "C"
