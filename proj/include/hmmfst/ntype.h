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

#ifndef HMMFST_NTYPE_H_
#define HMMFST_NTYPE_H_

#include "hmmfst/fst.h"
#include "hmmfst/hmm.h"

namespace hmmfst {

// n-type approximations: every tag decision is taken greedily, left to
// right, from the previous decision only, and is never revised.

struct PairChoice {
  ClassId cls;
  TagId tag;
  double score;  // log probability of the maximized product
};

// argmax_k pi(t_k) b(c|t_k).
PairChoice BestPairInitial(const HmmParams &params, ClassId c);
// argmax_k a(t_k|prev) b(c|t_k).
PairChoice BestPairTransition(const HmmParams &params, ClassId c, TagId prev);
// argmax_k b(c|t_k); the n0 choice.
PairChoice BestPairLexical(const HmmParams &params, ClassId c);
// All three break ties (see kLogTieTolerance) toward the lowest TagId and
// throw NoFiniteScore when every candidate has zero probability.

enum class NTypeOrder { kN0, kN1, kN2 };

// The unminimized construction: an initial state plus one final state per
// (class, member tag) pair, and from every state one arc per class,
// labelled class:tag and pointing at the state of the chosen pair.
// Throws Unsupported for kN2.
Fst BuildNTypeRaw(const HmmParams &params, NTypeOrder order);

// BuildNTypeRaw followed by pair determinization and minimization.
Fst BuildNType(const HmmParams &params, NTypeOrder order);

inline Fst BuildN0(const HmmParams &params) {
  return BuildNType(params, NTypeOrder::kN0);
}
inline Fst BuildN1(const HmmParams &params) {
  return BuildNType(params, NTypeOrder::kN1);
}

}  // namespace hmmfst

#endif  // HMMFST_NTYPE_H_
