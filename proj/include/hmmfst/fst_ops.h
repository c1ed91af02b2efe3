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

#ifndef HMMFST_FST_OPS_H_
#define HMMFST_FST_OPS_H_

#include <optional>
#include <span>

#include "hmmfst/fst.h"

namespace hmmfst {

enum class Side { kUpper, kLower };

// Rational operations. All results are epsilon:epsilon-free and trimmed
// (every state accessible and coaccessible), except that the initial state
// is always kept. Unless noted otherwise the results are not determinized.

Fst Union(const Fst &a, const Fst &b);
Fst Concat(const Fst &a, const Fst &b);
Fst KleeneStar(const Fst &a);

// Single path whose i-th arc is upper[i]:lower[i]. Throws LengthMismatch
// unless both sequences have the same nonzero length.
Fst CrossPair(std::span<const Symbol> upper, std::span<const Symbol> lower);

// Relation composition r .o. q. Epsilon outputs of r and epsilon inputs
// of q are matched through a three-state filter so that every composed
// path is generated once.
Fst Compose(const Fst &r, const Fst &q);

// Subset construction over atomic (input, output) label pairs.
Fst DeterminizePairs(const Fst &a);

// Minimizes a pair-deterministic transducer. Throws NotDeterministic
// otherwise.
Fst Minimize(const Fst &a);

// DeterminizePairs followed by Minimize.
Fst Optimize(const Fst &a);

Fst Project(const Fst &r, Side side);

// Strings of automaton a that are not in automaton b. Throws NotAutomaton
// if either argument is a proper relation.
Fst Difference(const Fst &a, const Fst &b);

// Automaton over `alphabet` accepting strings with no contiguous
// occurrence of `factor`.
Fst NotContainsFactor(std::span<const Symbol> factor,
                      const SymbolSet &alphabet);

// Replaces every member of `marked` on the given side by epsilon.
Fst DeleteMarked(const Fst &r, Side side, const SymbolSet &marked);

// x:y -> <x,y>:<x,y>. Throws MalformedAlphabet if a pair atom is present.
Fst OneLevel(const Fst &r);
// <x,y>:<x,y> -> x:y. Throws MalformedAlphabet unless every arc carries
// the same pair atom on both sides.
Fst TwoLevel(const Fst &a);

// Identity relation over the strings of automaton a; kept for readability
// of relation expressions.
Fst IdentityOf(const Fst &automaton);

// Removes epsilon:epsilon arcs and trims.
Fst RemoveEpsilons(const Fst &a);
// Drops states that are not both accessible and coaccessible.
Fst Connect(const Fst &a);

// First state with two arcs on the same input, or with an epsilon-input
// arc next to any other arc.
std::optional<StateId> FindInputNondeterminism(const Fst &t);
inline bool IsInputDeterministic(const Fst &t) {
  return !FindInputNondeterminism(t).has_value();
}
bool IsPairDeterministic(const Fst &t);

}  // namespace hmmfst

#endif  // HMMFST_FST_OPS_H_
