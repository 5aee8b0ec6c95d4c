// Copyright 2026 The circdd Authors.
//
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

#ifndef CIRCDD_ERROR_HPP_
#define CIRCDD_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace circdd {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidOrder,
  kInvalidGenerator,
  kEmptySet,
  kParseError,
  kNotAUnit,
  kNotCoprime,
  kDisconnectedFactor,
  kDegenerateOrder,
  kEvenBase,
  kParityError,
  kTooLarge,
  kNoProductFound,
  kRejectedUnverified,
  kSingularFit,
  kDivisionByZero,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Domain error raised by every module. what() is prefixed with the case name,
// e.g. "NotAUnit: gcd(2, 12) = 2".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace circdd

#endif  // CIRCDD_ERROR_HPP_
