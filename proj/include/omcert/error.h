// Copyright 2026 The Authors.
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

#ifndef OMCERT_ERROR_H_
#define OMCERT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace omcert {

enum class ErrorCode {
  kLengthMismatch,
  kBadCharacter,
  kAllZero,
  kRankDeficient,
  kIndexOutOfRange,
  kRepeatedIndex,
  kNoNormalization,
  kNotAffineBasis,
  kNotAPivot,
  kDegeneratePivot,
  kUnlistedPattern,
  kTypeClassificationFailed,
  kCancellationFailed,
  kZeroBracket,
  kEmptyInequalitySupport,
  kInvalidArgument,
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception; `code()` is the
// stable machine-readable part.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the file readers. Line and column are 1-based; 0 when the
// problem is structural rather than tied to a position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(ErrorCode::kParse,
              line > 0 ? "line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message
                       : message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace omcert

#endif  // OMCERT_ERROR_H_
