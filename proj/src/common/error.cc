// Copyright 2026 The ordlist Authors.
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

#include "ordlist/common/error.h"

namespace ordlist {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidList: return "InvalidList";
    case ErrorCode::kEmptyAggregate: return "EmptyAggregate";
    case ErrorCode::kInconsistentDigest: return "InconsistentDigest";
    case ErrorCode::kIndexError: return "IndexError";
    case ErrorCode::kNotMember: return "NotMember";
    case ErrorCode::kInvalidQuery: return "InvalidQuery";
    case ErrorCode::kMessageTooLarge: return "MessageTooLarge";
    case ErrorCode::kDegenerateElement: return "DegenerateElement";
    case ErrorCode::kNegativeInput: return "NegativeInput";
    case ErrorCode::kNegativeWitness: return "NegativeWitness";
    case ErrorCode::kInvalidOpening: return "InvalidOpening";
    case ErrorCode::kNonPositiveWitness: return "NonPositiveWitness";
    case ErrorCode::kCannotOpenSoft: return "CannotOpenSoft";
    case ErrorCode::kInvalidTease: return "InvalidTease";
    case ErrorCode::kKeyLengthError: return "KeyLengthError";
    case ErrorCode::kHashCollision: return "HashCollision";
    case ErrorCode::kInvalidFlag: return "InvalidFlag";
    case ErrorCode::kMalformed: return "Malformed";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace ordlist
