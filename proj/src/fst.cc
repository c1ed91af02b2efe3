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

#include "hmmfst/fst.h"

#include <algorithm>
#include <string>

#include "hmmfst/error.h"

namespace hmmfst {

Fst::Fst() { AddState(); }

StateId Fst::AddState() {
  arcs_.emplace_back();
  finals_.push_back(0);
  return NumStates() - 1;
}

void Fst::SetInitial(StateId s) {
  if (s < 0 || s >= NumStates()) {
    throw Error(ErrorCode::kValidation, "initial state out of range");
  }
  initial_ = s;
}

void Fst::SetFinal(StateId s, bool is_final) { finals_[s] = is_final ? 1 : 0; }

void Fst::AddArc(StateId from, const Arc &arc) {
  if (from < 0 || from >= NumStates() || arc.next < 0 ||
      arc.next >= NumStates()) {
    throw Error(ErrorCode::kValidation,
                "arc " + std::to_string(from) + "->" +
                    std::to_string(arc.next) + " references a missing state");
  }
  arcs_[from].push_back(arc);
}

void Fst::DeclareSymbol(Symbol s) {
  if (!s.is_epsilon()) declared_.insert(s);
}

void Fst::DeclareSymbols(const SymbolSet &symbols) {
  for (Symbol s : symbols) DeclareSymbol(s);
}

std::size_t Fst::NumArcs() const {
  std::size_t n = 0;
  for (const auto &v : arcs_) n += v.size();
  return n;
}

void Fst::ReserveStates(std::size_t n) {
  arcs_.reserve(n);
  finals_.reserve(n);
}

SymbolSet Fst::Alphabet() const {
  SymbolSet out = declared_;
  for (const auto &v : arcs_) {
    for (const Arc &a : v) {
      if (!a.input.is_epsilon()) out.insert(a.input);
      if (!a.output.is_epsilon()) out.insert(a.output);
    }
  }
  return out;
}

SymbolSet Fst::InputAlphabet() const {
  SymbolSet out = declared_;
  for (const auto &v : arcs_) {
    for (const Arc &a : v) {
      if (!a.input.is_epsilon()) out.insert(a.input);
    }
  }
  return out;
}

bool Fst::IsAutomaton() const {
  for (const auto &v : arcs_) {
    for (const Arc &a : v) {
      if (a.input != a.output) return false;
    }
  }
  return true;
}

bool Fst::HasEpsilonPairs() const {
  for (const auto &v : arcs_) {
    for (const Arc &a : v) {
      if (a.input.is_epsilon() && a.output.is_epsilon()) return true;
    }
  }
  return false;
}

void Fst::SortAndDedupArcs() {
  for (auto &v : arcs_) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
}

}  // namespace hmmfst
