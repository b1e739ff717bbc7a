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

#include "omcert/error.h"

namespace omcert {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kBadCharacter:
      return "BadCharacter";
    case ErrorCode::kAllZero:
      return "AllZero";
    case ErrorCode::kRankDeficient:
      return "RankDeficient";
    case ErrorCode::kIndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorCode::kRepeatedIndex:
      return "RepeatedIndex";
    case ErrorCode::kNoNormalization:
      return "NoNormalization";
    case ErrorCode::kNotAffineBasis:
      return "NotAffineBasis";
    case ErrorCode::kNotAPivot:
      return "NotAPivot";
    case ErrorCode::kDegeneratePivot:
      return "DegeneratePivot";
    case ErrorCode::kUnlistedPattern:
      return "UnlistedPattern";
    case ErrorCode::kTypeClassificationFailed:
      return "TypeClassificationFailed";
    case ErrorCode::kCancellationFailed:
      return "CancellationFailed";
    case ErrorCode::kZeroBracket:
      return "ZeroBracket";
    case ErrorCode::kEmptyInequalitySupport:
      return "EmptyInequalitySupport";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kParse:
      return "ParseError";
  }
  return "Unknown";
}

}  // namespace omcert
