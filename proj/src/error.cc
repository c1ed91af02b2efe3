// Copyright 2026 The hmmfst Authors.
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

#include "hmmfst/error.h"

namespace hmmfst {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNotDeterministic: return "NotDeterministic";
    case ErrorCode::kNotAutomaton: return "NotAutomaton";
    case ErrorCode::kMalformedAlphabet: return "MalformedAlphabet";
    case ErrorCode::kNoPath: return "NoPath";
    case ErrorCode::kAmbiguous: return "Ambiguous";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kTagNotInClass: return "TagNotInClass";
    case ErrorCode::kNoFiniteScore: return "NoFiniteScore";
    case ErrorCode::kNoTerminalBarrier: return "NoTerminalBarrier";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kWrongKind: return "WrongKind";
    case ErrorCode::kEmptyUnion: return "EmptyUnion";
    case ErrorCode::kAlignmentMismatch: return "AlignmentMismatch";
    case ErrorCode::kOutputMismatch: return "OutputMismatch";
    case ErrorCode::kValidation: return "Validation";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace hmmfst
