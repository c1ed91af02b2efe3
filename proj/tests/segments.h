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

#ifndef HMMFST_TESTS_SEGMENTS_H_
#define HMMFST_TESTS_SEGMENTS_H_

#include <set>
#include <vector>

#include "hmmfst/hmm.h"
#include "hmmfst/stype.h"
#include "oracle.h"

namespace hmmfst::testing {

using ClassSeqSet = std::set<std::vector<ClassId>>;

struct Coverage {
  ClassSeqSet initials;
  ClassSeqSet middles;
};

inline Coverage CoverageOf(const SubsequenceSets &sets) {
  Coverage out;
  for (const auto &s : sets.initials) out.initials.insert(s.classes);
  for (const auto &s : sets.middles) out.middles.insert(s.classes);
  return out;
}

// One piece of a sentence after barrier splitting: the positions it tags
// (a middle's leading barrier belongs to the previous piece) and the tags
// the completed s+n1 model must assign to them.
struct ExpectedSegment {
  std::size_t begin = 0;
  std::size_t end = 0;
  bool covered = false;
  std::vector<TagId> tags;
};

// Covered pieces take their Viterbi tags. Uncovered pieces take the greedy
// n1 chain, which for a middle starts from the barrier's tag.
inline std::vector<ExpectedSegment> ExpectedSegments(
    const HmmParams &params, const Coverage &coverage,
    const std::vector<ClassId> &classes) {
  const Inventory &inv = params.inventory();
  BarrierSplit split = SplitAtBarriers(inv, classes);
  std::vector<ExpectedSegment> out;

  ExpectedSegment first;
  first.end = split.initial.size();
  first.covered = coverage.initials.count(split.initial) > 0;
  first.tags = first.covered
                   ? Viterbi(params, split.initial, ProbMode::kInitial)
                   : oracle::GreedyChain(params, split.initial, true);
  out.push_back(first);

  std::size_t pos = first.end;
  for (const auto &m : split.middles) {
    ExpectedSegment seg;
    seg.begin = pos;
    seg.end = pos + m.size() - 1;
    seg.covered = coverage.middles.count(m) > 0;
    if (seg.covered) {
      std::vector<TagId> tags = Viterbi(params, m, ProbMode::kMiddle);
      seg.tags.assign(tags.begin() + 1, tags.end());
    } else {
      std::vector<ClassId> tail(m.begin() + 1, m.end());
      seg.tags = oracle::GreedyChain(params, tail, true,
                                     inv.Class(m.front()).tags.front());
    }
    out.push_back(std::move(seg));
    pos = out.back().end;
  }
  return out;
}

}  // namespace hmmfst::testing

#endif  // HMMFST_TESTS_SEGMENTS_H_
