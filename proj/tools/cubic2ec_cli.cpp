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

// Command-line front end. Talks to the library through the C API only.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "cubic2ec/cubic2ec.h"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kInternal = 3 };

constexpr int kCertifyDefaultMaxN = 14;
constexpr int kOracleDefaultMaxN = 16;

struct GraphDeleter {
  void operator()(c2ec_graph* g) const { c2ec_graph_free(g); }
};
struct CertDeleter {
  void operator()(c2ec_certificate* c) const { c2ec_certificate_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { c2ec_string_free(s); }
};
using GraphPtr = std::unique_ptr<c2ec_graph, GraphDeleter>;
using CertPtr = std::unique_ptr<c2ec_certificate, CertDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind with a chosen exit code after printing a diagnostic.
struct ExitRequest {
  int code;
};

struct RunConfig {
  std::string graph_name;
  std::string g6_path;
  std::string edges_path;
  std::string output;
  std::string certificate;
  std::optional<int> max_n;
  int jobs = 1;
  bool verbose = false;
};

[[noreturn]] void die(int code, const std::string& message) {
  std::cerr << "cubic2ec: " << message << "\n";
  throw ExitRequest{code};
}

void check(c2ec_status status, const char* what) {
  if (status == C2EC_OK) return;
  const int code = c2ec_status_is_internal(status) ? kInternal : kBadInput;
  std::string message = std::string(what) + ": " + c2ec_last_error();
  if (code == kInternal) message = "internal invariant violation while " + message;
  die(code, message);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kBadInput, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) die(kBadInput, "cannot write '" + path + "'");
}

std::string first_nonblank_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  die(kBadInput, "graph6 file holds no graph");
}

GraphPtr load_graph(const RunConfig& cfg) {
  const int sources =
      !cfg.graph_name.empty() + !cfg.g6_path.empty() + !cfg.edges_path.empty();
  if (sources != 1) die(kBadInput, "give exactly one of --graph, --g6, --edges");
  c2ec_graph* g = nullptr;
  if (!cfg.graph_name.empty()) {
    check(c2ec_graph_builtin(cfg.graph_name.c_str(), &g), "loading builtin graph");
  } else if (!cfg.g6_path.empty()) {
    const std::string line = first_nonblank_line(read_file(cfg.g6_path));
    check(c2ec_graph_from_graph6(line.c_str(), &g), "parsing graph6");
  } else {
    const std::string text = read_file(cfg.edges_path);
    check(c2ec_graph_from_edge_list(text.c_str(), &g), "parsing edge list");
  }
  if (cfg.verbose) {
    std::cerr << "cubic2ec: n=" << c2ec_graph_order(g) << " m=" << c2ec_graph_size(g) << "\n";
  }
  return GraphPtr(g);
}

int max_n(const RunConfig& cfg, int fallback) { return cfg.max_n.value_or(fallback); }

int cmd_certify(const RunConfig& cfg) {
  GraphPtr g = load_graph(cfg);
  c2ec_certificate* raw = nullptr;
  check(c2ec_certify(g.get(), max_n(cfg, kCertifyDefaultMaxN), &raw), "certifying");
  CertPtr cert(raw);
  char* json = nullptr;
  check(c2ec_certificate_to_json(cert.get(), &json), "serializing");
  StringPtr json_owner(json);
  if (!cfg.output.empty()) write_output(cfg.output, json);
  int n = 0;
  size_t entries = 0;
  int support = 0;
  int bound = 0;
  check(c2ec_certificate_summary(cert.get(), &n, &entries, &support, &bound), "summarizing");
  std::cout << "n=" << n << " entries=" << entries << " min_support=" << support
            << " bound=" << bound << "\n";
  return support <= bound ? kOk : kInternal;
}

int cmd_verify(const RunConfig& cfg) {
  GraphPtr g = load_graph(cfg);
  c2ec_certificate* raw = nullptr;
  const std::string text = read_file(cfg.certificate);
  check(c2ec_certificate_from_json(text.c_str(), &raw), "reading certificate");
  CertPtr cert(raw);
  int ok = 0;
  char* report = nullptr;
  check(c2ec_verify(g.get(), cert.get(), &ok, &report), "verifying");
  StringPtr report_owner(report);
  write_output(cfg.output, std::string(report) + "\n");
  return ok ? kOk : kVerifyFailed;
}

int cmd_opt(const RunConfig& cfg) {
  GraphPtr g = load_graph(cfg);
  int value = 0;
  check(c2ec_exact_opt(g.get(), max_n(cfg, kOracleDefaultMaxN), &value), "computing OPT");
  write_output(cfg.output, std::to_string(value) + "\n");
  return kOk;
}

int cmd_rational(const RunConfig& cfg,
                 c2ec_status (*query)(const c2ec_graph*, int, char**), const char* what) {
  GraphPtr g = load_graph(cfg);
  char* value = nullptr;
  check(query(g.get(), max_n(cfg, kOracleDefaultMaxN), &value), what);
  StringPtr owner(value);
  write_output(cfg.output, std::string(value) + "\n");
  return kOk;
}

int cmd_sweep(const RunConfig& cfg) {
  if (cfg.g6_path.empty() || !cfg.graph_name.empty() || !cfg.edges_path.empty()) {
    die(kBadInput, "sweep reads a graph6 corpus given with --g6");
  }
  const std::string corpus = read_file(cfg.g6_path);
  char* csv = nullptr;
  int worst = 0;
  check(c2ec_sweep(corpus.c_str(), max_n(cfg, kCertifyDefaultMaxN), cfg.jobs, &csv, &worst),
        "sweeping");
  StringPtr owner(csv);
  write_output(cfg.output, csv);
  return worst;
}

int cmd_lemma3(const RunConfig& cfg) {
  GraphPtr g = load_graph(cfg);
  const int cap = max_n(cfg, kCertifyDefaultMaxN);
  if (c2ec_graph_order(g.get()) > cap) {
    die(kBadInput, "graph exceeds --max-n " + std::to_string(cap));
  }
  int ok = 0;
  char* report = nullptr;
  check(c2ec_lemma3(g.get(), &ok, &report), "checking Lemma 3");
  StringPtr owner(report);
  write_output(cfg.output, std::string(report) + "\n");
  return ok ? kOk : kVerifyFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool needs_graph) {
  auto* graph = sub->add_option("--graph", cfg.graph_name, "Builtin graph name");
  auto* g6 = sub->add_option("--g6", cfg.g6_path, "graph6 file");
  auto* edges = sub->add_option("--edges", cfg.edges_path, "Edge-list file");
  graph->excludes(g6, edges);
  g6->excludes(edges);
  if (needs_graph) {
    sub->callback([sub, graph, g6, edges] {
      if (graph->count() + g6->count() + edges->count() == 0) {
        throw CLI::RequiredError(sub->get_name() + ": one of --graph, --g6, --edges");
      }
    });
  }
  sub->add_option("-o,--output", cfg.output, "Output path");
  sub->add_option("--max-n", cfg.max_n, "Largest accepted order")->check(CLI::Range(2, 20));
  sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1, 256));
  sub->add_flag("-v,--verbose", cfg.verbose, "Verbose diagnostics");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform 7/9 certificates for 2-edge-connected spanning subgraphs of cubic graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* certify = app.add_subcommand("certify", "Build and write a certificate");
  auto* verify = app.add_subcommand("verify", "Re-check a certificate against a graph");
  auto* opt = app.add_subcommand("opt", "Exact minimum 2EC spanning subgraph size");
  auto* lp = app.add_subcommand("lp", "Exact cut LP optimum");
  auto* gap = app.add_subcommand("gap", "Exact integrality gap OPT/LP");
  auto* sweep = app.add_subcommand("sweep", "Validate every graph of a graph6 corpus (CSV)");
  auto* lemma3 = app.add_subcommand("lemma3", "Exhaustive check of the safe-pair lemma");
  for (auto* sub : {certify, verify, opt, lp, gap, lemma3}) add_common(sub, cfg, true);
  add_common(sweep, cfg, false);
  verify->add_option("certificate", cfg.certificate, "Certificate JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kBadInput;
  try {
    if (*certify) code = cmd_certify(cfg);
    if (*verify) code = cmd_verify(cfg);
    if (*opt) code = cmd_opt(cfg);
    if (*lp) code = cmd_rational(cfg, &c2ec_lp_bound, "computing the LP bound");
    if (*gap) code = cmd_rational(cfg, &c2ec_integrality_gap, "computing the gap");
    if (*sweep) code = cmd_sweep(cfg);
    if (*lemma3) code = cmd_lemma3(cfg);
  } catch (const ExitRequest& request) {
    code = request.code;
  }
  if (cfg.verbose) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << "cubic2ec: exit " << code << " after " << elapsed.count() << " s\n";
  }
  return code;
}
