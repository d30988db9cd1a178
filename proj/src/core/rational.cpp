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

#include "core/rational.hpp"

#include <cctype>

#include "core/errors.hpp"

namespace cubic2ec {

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_display_string(const Rational& r) { return r.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw ParseError(0, "invalid rational '" + std::string(text) + "'");
  }
  const mpz_class d{std::string(den)};
  if (d == 0) throw ParseError(slash + 1, "zero denominator");
  Rational r{mpz_class{std::string(num)}, d};
  r.canonicalize();
  return r;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kFormat: return "FormatError";
    case ErrorCode::kPrecondition: return "PreconditionError";
    case ErrorCode::kSizeLimit: return "SizeLimitError";
    case ErrorCode::kStructuralViolation: return "StructuralViolation";
    case ErrorCode::kLemma3Violation: return "Lemma3Violation";
    case ErrorCode::kBaseCaseFailure: return "BaseCaseFailure";
    case ErrorCode::kLiftFailure: return "LiftFailure";
    case ErrorCode::kGlueFailure: return "GlueFailure";
    case ErrorCode::kPatternMismatch: return "PatternMismatch";
    case ErrorCode::kOracleInconsistency: return "OracleInconsistency";
  }
  return "Error";
}

}  // namespace cubic2ec
