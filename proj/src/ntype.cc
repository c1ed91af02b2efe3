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

#include "hmmfst/ntype.h"

#include <string>
#include <vector>

#include "hmmfst/error.h"
#include "hmmfst/fst_ops.h"

namespace hmmfst {
namespace {

template <typename ScoreFn>
PairChoice BestPair(const HmmParams &params, ClassId c, ScoreFn score) {
  const auto &cls = params.inventory().Class(c);
  std::vector<double> scores(cls.sorted_tags.size());
  for (std::size_t k = 0; k < scores.size(); ++k) {
    scores[k] = score(cls.sorted_tags[k]) + params.log_b(c, cls.sorted_tags[k]);
  }
  const std::size_t k = LowestNearMax(scores.data(), scores.size());
  if (scores[k] == kLogZero) {
    throw Error(ErrorCode::kNoFiniteScore,
                "no tag of class " + cls.name + " has nonzero probability");
  }
  return PairChoice{c, cls.sorted_tags[k], scores[k]};
}

}  // namespace

PairChoice BestPairInitial(const HmmParams &params, ClassId c) {
  return BestPair(params, c, [&](TagId t) { return params.log_pi(t); });
}

PairChoice BestPairTransition(const HmmParams &params, ClassId c,
                              TagId prev) {
  return BestPair(params, c,
                  [&](TagId t) { return params.log_a(prev, t); });
}

PairChoice BestPairLexical(const HmmParams &params, ClassId c) {
  return BestPair(params, c, [](TagId) { return 0.0; });
}

Fst BuildNTypeRaw(const HmmParams &params, NTypeOrder order) {
  if (order == NTypeOrder::kN2) {
    throw Error(ErrorCode::kUnsupported,
                "second-order n-type approximation is not implemented");
  }
  const Inventory &inv = params.inventory();
  const std::size_t nc = inv.num_classes();

  Fst fst;
  fst.SetFinal(fst.initial());
  // pair_state[c][k]: state of (class c, k-th tag of c in TagId order).
  std::vector<std::vector<StateId>> pair_state(nc);
  std::vector<TagId> state_tag(1, TagId{});
  for (std::size_t c = 0; c < nc; ++c) {
    for (TagId t : inv.Class(static_cast<ClassId>(c)).sorted_tags) {
      StateId s = fst.AddState();
      fst.SetFinal(s);
      pair_state[c].push_back(s);
      state_tag.push_back(t);
    }
  }
  auto target = [&](const PairChoice &choice) {
    const auto &tags = inv.Class(choice.cls).sorted_tags;
    std::size_t k = 0;
    while (tags[k] != choice.tag) ++k;
    return pair_state[ToIndex(choice.cls)][k];
  };

  for (StateId s = 0; s < fst.NumStates(); ++s) {
    for (std::size_t c = 0; c < nc; ++c) {
      ClassId cls = static_cast<ClassId>(c);
      PairChoice choice =
          order == NTypeOrder::kN0 ? BestPairLexical(params, cls)
          : s == fst.initial()     ? BestPairInitial(params, cls)
                                   : BestPairTransition(params, cls,
                                                        state_tag[s]);
      fst.AddArc(s, Symbol::Class(cls), Symbol::Tag(choice.tag),
                 target(choice));
    }
  }
  return fst;
}

Fst BuildNType(const HmmParams &params, NTypeOrder order) {
  return Optimize(BuildNTypeRaw(params, order));
}

}  // namespace hmmfst
