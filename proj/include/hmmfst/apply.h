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

#ifndef HMMFST_APPLY_H_
#define HMMFST_APPLY_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "hmmfst/fst.h"

namespace hmmfst {

struct ApplyStats {
  std::size_t states_visited = 0;
  bool fast_path = false;
};

// Maps input strings through a transducer that is functional on its upper
// language. Input-deterministic transducers are walked state by state
// (with a dense class-indexed table when every input symbol is a class);
// others fall back to a memoized depth-first search that also detects
// ambiguity. A Matcher is immutable and can be shared across threads.
class Matcher {
 public:
  explicit Matcher(Fst fst);

  // Output of the unique accepting path whose upper side is `input`, with
  // epsilons removed. Throws NoPath or Ambiguous.
  std::vector<Symbol> Apply(std::span<const Symbol> input,
                            ApplyStats *stats = nullptr) const;

  bool input_deterministic() const { return deterministic_; }
  const Fst &fst() const { return fst_; }

 private:
  class Search;
  friend class Search;

  std::vector<Symbol> ApplyDeterministic(std::span<const Symbol> input,
                                         ApplyStats *stats) const;

  Fst fst_;
  // Arcs of every state sorted by input symbol, in one flat array.
  std::vector<std::size_t> offsets_;
  std::vector<Arc> arcs_;
  bool deterministic_ = false;
  // Dense table: state * num_classes_ + class id -> arc index or -1.
  std::vector<std::int32_t> class_table_;
  std::size_t num_classes_ = 0;
};

inline std::vector<Symbol> Apply(const Fst &t, std::span<const Symbol> input,
                                 ApplyStats *stats = nullptr) {
  return Matcher(t).Apply(input, stats);
}

}  // namespace hmmfst

#endif  // HMMFST_APPLY_H_
