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

#include "hmmfst/symbol.h"

#include "hmmfst/error.h"

namespace hmmfst {

Symbol Symbol::Pair(Symbol upper, Symbol lower) {
  if (upper.is_pair() || lower.is_pair()) {
    throw Error(ErrorCode::kMalformedAlphabet, "pair atoms cannot nest");
  }
  if (upper.is_epsilon() && lower.is_epsilon()) {
    throw Error(ErrorCode::kMalformedAlphabet,
                "pair atom with epsilon on both sides");
  }
  return Symbol((1ULL << 63) | (upper.code() << 32) | lower.code());
}

Symbol Symbol::Marked() const {
  switch (kind()) {
    case SymbolKind::kClass: return MarkedClass(class_id());
    case SymbolKind::kTag: return MarkedTag(tag_id());
    default: return *this;
  }
}

Symbol Symbol::Unmarked() const {
  switch (kind()) {
    case SymbolKind::kMarkedClass: return Class(class_id());
    case SymbolKind::kMarkedTag: return Tag(tag_id());
    default: return *this;
  }
}

}  // namespace hmmfst
