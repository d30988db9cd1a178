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

#ifndef CUBIC2EC_CORE_SWEEP_HPP_
#define CUBIC2EC_CORE_SWEEP_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/certify.hpp"
#include "core/rational.hpp"

namespace cubic2ec {

// Severity of a row, also the process exit code it calls for.
enum class RowSeverity { kOk = 0, kInvariantFailed = 1, kBadInput = 2, kInternal = 3 };

struct SweepRow {
  int n = 0;
  std::optional<bool> essentially_4ec;
  std::optional<long> lemma3_violations;  // only for essentially 4EC, n > 6
  std::optional<int> opt;
  std::optional<Rational> lp;
  std::optional<Rational> gap;
  std::optional<int> cert_min_support;
  bool bound_ok = false;
  std::string status = "ok";  // error name or failed invariant
  RowSeverity severity = RowSeverity::kOk;
};

struct SweepOptions {
  int max_order = kDefaultCertifyMaxOrder;
  int jobs = 1;
};

// Certifies, verifies and runs every oracle on one graph6 line. Never throws;
// problems become the row's status.
SweepRow evaluate_sweep_row(std::string_view graph6_line, Certifier& certifier,
                            const SweepOptions& options);

// Rows in input order; blank lines are skipped.
std::vector<SweepRow> run_sweep(std::string_view corpus, const SweepOptions& options);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row);
std::string sweep_csv(const std::vector<SweepRow>& rows);

RowSeverity worst_severity(const std::vector<SweepRow>& rows);

}  // namespace cubic2ec

#endif  // CUBIC2EC_CORE_SWEEP_HPP_
