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

#ifndef HMMFST_FST_H_
#define HMMFST_FST_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "hmmfst/symbol.h"

namespace hmmfst {

using StateId = std::int32_t;
using SymbolSet = std::set<Symbol>;

struct Arc {
  Symbol input;
  Symbol output;
  StateId next = 0;

  friend auto operator<=>(const Arc &, const Arc &) = default;
};

// Unweighted finite-state transducer. An automaton is the special case
// where every arc has input == output. A default-constructed Fst has a
// single non-final initial state and accepts nothing.
class Fst {
 public:
  Fst();

  StateId AddState();
  void SetInitial(StateId s);
  void SetFinal(StateId s, bool is_final = true);
  // Throws Validation if either endpoint is not a valid state.
  void AddArc(StateId from, const Arc &arc);
  void AddArc(StateId from, Symbol input, Symbol output, StateId to) {
    AddArc(from, Arc{input, output, to});
  }
  // Declares an alphabet member that need not occur on any arc (used for
  // complement and "any symbol" constructions).
  void DeclareSymbol(Symbol s);
  void DeclareSymbols(const SymbolSet &symbols);

  StateId initial() const { return initial_; }
  StateId NumStates() const { return static_cast<StateId>(arcs_.size()); }
  std::size_t NumArcs() const;
  bool IsFinal(StateId s) const { return finals_[s] != 0; }
  std::span<const Arc> Arcs(StateId s) const { return arcs_[s]; }
  std::vector<Arc> &MutableArcs(StateId s) { return arcs_[s]; }
  void ReserveStates(std::size_t n);

  // Every non-epsilon symbol on any arc side plus declared symbols.
  SymbolSet Alphabet() const;
  // Symbols seen on the input (upper) side, plus declared symbols.
  SymbolSet InputAlphabet() const;
  const SymbolSet &declared_symbols() const { return declared_; }

  bool IsAutomaton() const;
  bool HasEpsilonPairs() const;

  // Sorts every state's arcs and drops duplicates.
  void SortAndDedupArcs();

 private:
  std::vector<std::vector<Arc>> arcs_;
  std::vector<std::uint8_t> finals_;
  StateId initial_ = 0;
  SymbolSet declared_;
};

}  // namespace hmmfst

#endif  // HMMFST_FST_H_
