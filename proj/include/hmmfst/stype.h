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

#ifndef HMMFST_STYPE_H_
#define HMMFST_STYPE_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "hmmfst/fst.h"
#include "hmmfst/hmm.h"
#include "hmmfst/ntype.h"

namespace hmmfst {

// s-type approximation: class subsequences between barriers are tagged
// exactly by Viterbi, stored as a transducer, and concatenated back into a
// sentence model. Completion fills the gaps with n-type subsequences.

enum class SubsequenceKind { kInitial, kMiddle };

// Initial: c_a* c_u. Middle: the extended form c_u c_a* c_u, whose first
// class belongs to the preceding piece.
struct ClassSubsequence {
  SubsequenceKind kind = SubsequenceKind::kInitial;
  std::vector<ClassId> classes;
  std::size_t frequency = 1;

  friend bool operator==(const ClassSubsequence &,
                         const ClassSubsequence &) = default;
};

// A class subsequence bound positionally to its Viterbi tags. When
// `marked`, position 0 carries the marked class and marked tag.
struct PairedSubsequence {
  SubsequenceKind kind = SubsequenceKind::kInitial;
  std::vector<ClassId> classes;
  std::vector<TagId> tags;
  bool marked = false;

  std::vector<Symbol> UpperSymbols() const;
  std::vector<Symbol> LowerSymbols() const;
};

struct SubsequenceSets {
  std::vector<ClassSubsequence> initials;
  std::vector<ClassSubsequence> middles;
};

// Collects the initial subsequence and every extended middle of each
// sentence and keeps those seen at least `min_freq` times. The two pools
// are counted and thresholded independently. Output is sorted by class
// sequence. Throws NoTerminalBarrier.
SubsequenceSets ExtractSubsequences(
    const Inventory &inv, const std::vector<std::vector<ClassId>> &corpus,
    std::size_t min_freq);

// All c_a^j c_u initials and c_u c_a^j c_u middles with j + 1 <= max_len.
// A middle's leading extension class is not counted.
SubsequenceSets EnumerateSubsequences(const Inventory &inv,
                                      std::size_t max_len);

// Viterbi tags (pi-anchored for initials, b-anchored for middles).
PairedSubsequence Disambiguate(const HmmParams &params,
                               const ClassSubsequence &sub);

// Marks the first class and tag of a middle. Throws WrongKind for an
// initial, an already marked subsequence, or one shorter than two.
PairedSubsequence MarkExtension(PairedSubsequence sub);

// Trie-shaped union of the subsequences' cross products.
Fst UnionOfSubsequences(std::span<const PairedSubsequence> subs);

// Automaton over `alphabet` in which every marked unambiguous class is
// immediately preceded by its unmarked twin (no factor \c_u c_u^0).
Fst ConcatenationConstraint(const SymbolSet &alphabet, const Inventory &inv);

// Sentence model from unions of initials and marked middles: concatenates
// the initials with the starred middles, restricts the upper side with the
// concatenation constraint, deletes marked classes (upper) and marked tags
// (lower), then determinizes over pairs and minimizes. Throws EmptyUnion
// if either union accepts nothing.
Fst AssembleFromUnions(const Fst &initial_union, const Fst &middle_union,
                       const Inventory &inv);

// Same, starting from tagged subsequence sets (middles must be marked).
Fst AssembleSentenceModel(std::span<const PairedSubsequence> initials,
                          std::span<const PairedSubsequence> middles,
                          const HmmParams &params);

// Union of the initial subsequences of a sentence-model transducer: each
// path is copied up to and including its first unambiguous pair.
Fst ExtractInitialUnion(const Fst &t, const Inventory &inv);
// Union of the marked extended middles: from some unambiguous pair
// (emitted marked) through the ambiguous pairs up to the next unambiguous
// pair.
Fst ExtractMiddleUnion(const Fst &t, const Inventory &inv);

// Completes s-type unions with the n-type subsequences whose class
// sequences they do not cover, then assembles the sentence model. `n` must
// be total over class sequences.
Fst Complete(const Fst &s_initials, const Fst &s_middles, const Fst &n,
             const Inventory &inv);

// Disambiguates `sets`, builds the s-type unions and completes them with
// an n-type transducer of the given order.
Fst BuildCompletedSType(const HmmParams &params, const SubsequenceSets &sets,
                        NTypeOrder fallback);

// "I c1 c2 ... | t1 t2 ..." or "M ..." per line; marked positions print
// with a "0." prefix.
void WriteSubsequences(std::ostream &os,
                       std::span<const PairedSubsequence> subs,
                       const Inventory &inv);

}  // namespace hmmfst

#endif  // HMMFST_STYPE_H_
