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

#ifndef CUBIC2EC_CORE_CERTIFICATE_HPP_
#define CUBIC2EC_CORE_CERTIFICATE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "core/certify.hpp"

namespace cubic2ec {

// Member with the fewest edges; ties go to the lexicographically smallest
// sorted edge list.
EdgeSet min_support_subgraph(const Certificate& cert);

// floor(7n/6)
int support_bound(int order);

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool ok() const;
  std::string to_json() const;
};

// Re-checks a certificate from scratch against `g`; never throws on a bad
// certificate, every problem becomes a failed check.
VerificationReport verify_certificate(const Graph& g, const Certificate& cert);

// {"n", "edges", "target", "entries": [{"weight": "p/q", "edges": [...]}],
//  "trace", "min_support_size"}; weights and target as reduced "p/q".
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(std::string_view text);

}  // namespace cubic2ec

#endif  // CUBIC2EC_CORE_CERTIFICATE_HPP_
