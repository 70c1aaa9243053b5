// Copyright 2026 The latfree Authors
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

#ifndef LATFREE_ERROR_HPP_
#define LATFREE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace latfree {

enum class ErrorCode {
  kNonFiniteValue,
  kPolicyMismatch,
  kParse,
  kNotUnimodular,
  kInvalidRelabel,
  kInvalidModel,
  kNotStronglyConvexInX,
  kLevelSetAssumptionViolated,
  kNonConvexOracleDetected,
  kInternalInvariantViolation,
  kBudgetExhausted,
  kBoxTooSmall,
  kNotApplicable,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported as latfree::Error (or a subclass) so that
// callers can branch on code() instead of parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace latfree

#endif  // LATFREE_ERROR_HPP_
