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

#include "core/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "core/certificate.hpp"
#include "core/oracle.hpp"

namespace cubic2ec {

namespace {

void flag(SweepRow& row, RowSeverity severity, std::string status) {
  if (severity > row.severity) {
    row.severity = severity;
    row.status = std::move(status);
  }
}

void evaluate(const Graph& g, Certifier& certifier, const SweepOptions& options, SweepRow& row) {
  row.n = g.order();
  if (g.order() > options.max_order) {
    fail(ErrorCode::kSizeLimit, "graph exceeds --max-n");
  }
  require(g.is_cubic(), "graph is not cubic");
  require(edge_connectivity(g) >= 3, "graph is not 3-edge-connected");

  row.essentially_4ec = is_essentially_4ec(g);
  if (*row.essentially_4ec && g.order() > 6) {
    const Lemma3Report report = verify_lemma3(g);
    row.lemma3_violations = report.lemma_violations;
    if (!report.ok()) flag(row, RowSeverity::kInvariantFailed, "lemma3");
  }

  const OptResult opt = exact_opt(g);
  const LpSolution lp = lp_bound(g);
  row.opt = opt.value;
  row.lp = lp.value;
  row.gap = Rational(opt.value) / lp.value;

  const Certificate cert = certifier.certify(g);
  const VerificationReport verified = verify_certificate(g, cert);
  const int support = min_support_subgraph(cert).size();
  row.cert_min_support = support;

  row.bound_ok = verified.ok() && lp.value <= opt.value && opt.value <= support &&
                 support <= support_bound(g.order()) && *row.gap <= make_rational(7, 6);
  if (!verified.ok()) flag(row, RowSeverity::kInvariantFailed, "verify");
  if (!row.bound_ok) flag(row, RowSeverity::kInvariantFailed, "bound");
}

std::string cell(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }
std::string cell(const std::optional<long>& v) { return v ? std::to_string(*v) : "-"; }
std::string cell(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : "-"; }
std::string cell(const std::optional<Rational>& v) { return v ? to_display_string(*v) : "-"; }

}  // namespace

SweepRow evaluate_sweep_row(std::string_view graph6_line, Certifier& certifier,
                            const SweepOptions& options) {
  SweepRow row;
  try {
    evaluate(parse_graph6(graph6_line), certifier, options, row);
  } catch (const Error& e) {
    row.bound_ok = false;
    flag(row, is_internal_violation(e.code()) ? RowSeverity::kInternal : RowSeverity::kBadInput,
         error_code_name(e.code()));
  } catch (const std::exception&) {
    row.bound_ok = false;
    flag(row, RowSeverity::kInternal, "exception");
  }
  return row;
}

std::vector<SweepRow> run_sweep(std::string_view corpus, const SweepOptions& options) {
  std::vector<std::string_view> lines;
  while (!corpus.empty()) {
    const std::size_t end = corpus.find('\n');
    std::string_view line = corpus.substr(0, end);
    corpus = end == std::string_view::npos ? std::string_view() : corpus.substr(end + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
  }

  Certifier certifier(CertifyOptions{std::max(options.max_order, 4)});
  std::vector<SweepRow> rows(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      rows[i] = evaluate_sweep_row(lines[i], certifier, options);
    }
  };
  const int jobs = std::clamp(options.jobs, 1, 256);
  std::vector<std::jthread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  return rows;
}

std::string sweep_csv_header() {
  return "n,essentially4ec,lemma3_violations,opt,lp,gap,cert_min_support,bound_ok,status\n";
}

std::string sweep_csv_row(const SweepRow& row) {
  return std::to_string(row.n) + "," + cell(row.essentially_4ec) + "," +
         cell(row.lemma3_violations) + "," + cell(row.opt) + "," + cell(row.lp) + "," +
         cell(row.gap) + "," + cell(row.cert_min_support) + "," +
         (row.bound_ok ? "true" : "false") + "," + row.status + "\n";
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = sweep_csv_header();
  for (const auto& row : rows) out += sweep_csv_row(row);
  return out;
}

RowSeverity worst_severity(const std::vector<SweepRow>& rows) {
  RowSeverity worst = RowSeverity::kOk;
  for (const auto& row : rows) worst = std::max(worst, row.severity);
  return worst;
}

}  // namespace cubic2ec
