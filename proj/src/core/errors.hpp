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

#ifndef CUBIC2EC_CORE_ERRORS_HPP_
#define CUBIC2EC_CORE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubic2ec {

enum class ErrorCode {
  kParse,
  kFormat,
  kPrecondition,
  kSizeLimit,
  // Internal invariant violations. Any of these firing means the
  // construction itself is wrong for the input at hand.
  kStructuralViolation,
  kLemma3Violation,
  kBaseCaseFailure,
  kLiftFailure,
  kGlueFailure,
  kPatternMismatch,
  kOracleInconsistency,
};

const char* error_code_name(ErrorCode code);

inline bool is_internal_violation(ErrorCode code) {
  return code >= ErrorCode::kStructuralViolation;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Malformed textual input. `offset` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::kParse,
              what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorCode::kPrecondition, what);
}

}  // namespace cubic2ec

#endif  // CUBIC2EC_CORE_ERRORS_HPP_
