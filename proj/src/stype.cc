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

#include "hmmfst/stype.h"

#include <map>
#include <ostream>
#include <tuple>

#include "hmmfst/error.h"
#include "hmmfst/fst_ops.h"

namespace hmmfst {
namespace {

bool IsBarrierClass(Symbol s, const Inventory &inv) {
  return s.kind() == SymbolKind::kClass && inv.IsUnambiguous(s.class_id());
}

bool IsBarrierPair(Symbol p, const Inventory &inv) {
  return p.is_pair() && IsBarrierClass(p.upper(), inv);
}

bool AcceptsNothing(const Fst &fst) {
  Fst trimmed = Connect(fst);
  return !trimmed.IsFinal(trimmed.initial()) &&
         trimmed.Arcs(trimmed.initial()).empty();
}

void AppendAll(std::vector<ClassId> *prefix, std::size_t remaining,
               const std::vector<ClassId> &pool,
               const std::vector<ClassId> &tail_pool,
               const std::vector<ClassId> &head, SubsequenceKind kind,
               std::vector<ClassSubsequence> *out) {
  for (ClassId u : tail_pool) {
    ClassSubsequence sub{kind, head, 1};
    sub.classes.insert(sub.classes.end(), prefix->begin(), prefix->end());
    sub.classes.push_back(u);
    out->push_back(std::move(sub));
  }
  if (remaining == 0) return;
  for (ClassId a : pool) {
    prefix->push_back(a);
    AppendAll(prefix, remaining - 1, pool, tail_pool, head, kind, out);
    prefix->pop_back();
  }
}

}  // namespace

std::vector<Symbol> PairedSubsequence::UpperSymbols() const {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    Symbol s = Symbol::Class(classes[i]);
    out.push_back(marked && i == 0 ? s.Marked() : s);
  }
  return out;
}

std::vector<Symbol> PairedSubsequence::LowerSymbols() const {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    Symbol s = Symbol::Tag(tags[i]);
    out.push_back(marked && i == 0 ? s.Marked() : s);
  }
  return out;
}

SubsequenceSets ExtractSubsequences(
    const Inventory &inv, const std::vector<std::vector<ClassId>> &corpus,
    std::size_t min_freq) {
  std::map<std::vector<ClassId>, std::size_t> initials, middles;
  for (const auto &sentence : corpus) {
    BarrierSplit split = SplitAtBarriers(inv, sentence);
    ++initials[split.initial];
    for (auto &m : split.middles) ++middles[m];
  }
  SubsequenceSets sets;
  for (const auto &[classes, count] : initials) {
    if (count >= min_freq) {
      sets.initials.push_back({SubsequenceKind::kInitial, classes, count});
    }
  }
  for (const auto &[classes, count] : middles) {
    if (count >= min_freq) {
      sets.middles.push_back({SubsequenceKind::kMiddle, classes, count});
    }
  }
  return sets;
}

SubsequenceSets EnumerateSubsequences(const Inventory &inv,
                                      std::size_t max_len) {
  if (max_len == 0) {
    throw Error(ErrorCode::kValidation, "enumeration length must be >= 1");
  }
  const auto unambiguous = inv.UnambiguousClasses();
  const auto ambiguous = inv.AmbiguousClasses();
  SubsequenceSets sets;
  std::vector<ClassId> prefix;
  AppendAll(&prefix, max_len - 1, ambiguous, unambiguous, {},
            SubsequenceKind::kInitial, &sets.initials);
  for (ClassId u : unambiguous) {
    AppendAll(&prefix, max_len - 1, ambiguous, unambiguous, {u},
              SubsequenceKind::kMiddle, &sets.middles);
  }
  auto by_classes = [](const ClassSubsequence &a, const ClassSubsequence &b) {
    return a.classes < b.classes;
  };
  std::sort(sets.initials.begin(), sets.initials.end(), by_classes);
  std::sort(sets.middles.begin(), sets.middles.end(), by_classes);
  return sets;
}

PairedSubsequence Disambiguate(const HmmParams &params,
                               const ClassSubsequence &sub) {
  ProbMode mode = sub.kind == SubsequenceKind::kInitial ? ProbMode::kInitial
                                                        : ProbMode::kMiddle;
  return PairedSubsequence{sub.kind, sub.classes,
                           Viterbi(params, sub.classes, mode), false};
}

PairedSubsequence MarkExtension(PairedSubsequence sub) {
  if (sub.kind != SubsequenceKind::kMiddle) {
    throw Error(ErrorCode::kWrongKind, "only middle subsequences are marked");
  }
  if (sub.marked) {
    throw Error(ErrorCode::kWrongKind, "subsequence is already marked");
  }
  if (sub.classes.size() < 2) {
    throw Error(ErrorCode::kWrongKind,
                "an extended middle spans at least two barriers");
  }
  sub.marked = true;
  return sub;
}

Fst UnionOfSubsequences(std::span<const PairedSubsequence> subs) {
  Fst trie;
  std::map<std::tuple<StateId, Symbol, Symbol>, StateId> child;
  for (const auto &sub : subs) {
    auto upper = sub.UpperSymbols();
    auto lower = sub.LowerSymbols();
    if (upper.size() != lower.size() || upper.empty()) {
      throw Error(ErrorCode::kLengthMismatch,
                  "subsequence classes and tags differ in length");
    }
    StateId s = trie.initial();
    for (std::size_t i = 0; i < upper.size(); ++i) {
      auto key = std::make_tuple(s, upper[i], lower[i]);
      auto it = child.find(key);
      if (it == child.end()) {
        StateId next = trie.AddState();
        trie.AddArc(s, upper[i], lower[i], next);
        it = child.emplace(key, next).first;
      }
      s = it->second;
    }
    trie.SetFinal(s);
  }
  return trie;
}

Fst ConcatenationConstraint(const SymbolSet &alphabet, const Inventory &inv) {
  // State 0: start. State 1: last symbol is not an unmarked barrier class.
  // State 2 + k: last symbol was the k-th barrier class of the alphabet.
  std::vector<Symbol> barriers;
  for (Symbol s : alphabet) {
    if (IsBarrierClass(s, inv)) barriers.push_back(s);
  }
  Fst rc;
  rc.AddState();
  for (std::size_t k = 0; k < barriers.size(); ++k) rc.AddState();
  for (StateId s = 0; s < rc.NumStates(); ++s) rc.SetFinal(s);
  auto barrier_state = [&](Symbol s) -> StateId {
    auto it = std::lower_bound(barriers.begin(), barriers.end(), s);
    if (it == barriers.end() || *it != s) return -1;
    return static_cast<StateId>(2 + (it - barriers.begin()));
  };
  for (StateId from = 0; from < rc.NumStates(); ++from) {
    for (Symbol x : alphabet) {
      StateId to = barrier_state(x);
      if (to < 0) to = 1;
      if (x.kind() == SymbolKind::kMarkedClass &&
          inv.IsUnambiguous(x.class_id()) && from != 0 &&
          from != barrier_state(x.Unmarked())) {
        continue;
      }
      rc.AddArc(from, x, x, to);
    }
  }
  rc.DeclareSymbols(alphabet);
  return Connect(rc);
}

Fst AssembleFromUnions(const Fst &initial_union, const Fst &middle_union,
                       const Inventory &inv) {
  if (AcceptsNothing(initial_union) || AcceptsNothing(middle_union)) {
    throw Error(ErrorCode::kEmptyUnion,
                "sentence model needs nonempty initial and middle unions");
  }
  Fst preliminary = Concat(initial_union, KleeneStar(middle_union));
  SymbolSet upper_alphabet, marked_classes, marked_tags;
  for (StateId s = 0; s < preliminary.NumStates(); ++s) {
    for (const Arc &a : preliminary.Arcs(s)) {
      if (!a.input.is_epsilon()) upper_alphabet.insert(a.input);
      if (a.input.kind() == SymbolKind::kMarkedClass) {
        marked_classes.insert(a.input);
      }
      if (a.output.kind() == SymbolKind::kMarkedTag) {
        marked_tags.insert(a.output);
      }
    }
  }
  Fst constrained =
      Compose(ConcatenationConstraint(upper_alphabet, inv), preliminary);
  Fst deleted = DeleteMarked(
      DeleteMarked(constrained, Side::kUpper, marked_classes), Side::kLower,
      marked_tags);
  return Optimize(deleted);
}

Fst AssembleSentenceModel(std::span<const PairedSubsequence> initials,
                          std::span<const PairedSubsequence> middles,
                          const HmmParams &params) {
  for (const auto &m : middles) {
    if (m.kind != SubsequenceKind::kMiddle || !m.marked) {
      throw Error(ErrorCode::kWrongKind,
                  "middle union expects marked middle subsequences");
    }
  }
  for (const auto &i : initials) {
    if (i.kind != SubsequenceKind::kInitial) {
      throw Error(ErrorCode::kWrongKind,
                  "initial union expects initial subsequences");
    }
  }
  return AssembleFromUnions(UnionOfSubsequences(initials),
                            UnionOfSubsequences(middles), params.inventory());
}

Fst ExtractInitialUnion(const Fst &t, const Inventory &inv) {
  Fst one = OneLevel(t);
  SymbolSet alphabet = one.InputAlphabet();
  Fst filter;
  StateId done = filter.AddState();
  filter.SetFinal(done);
  for (Symbol p : alphabet) {
    filter.AddArc(filter.initial(), p, p,
                  IsBarrierPair(p, inv) ? done : filter.initial());
    filter.AddArc(done, p, Symbol::Epsilon(), done);
  }
  return Optimize(TwoLevel(Project(Compose(one, filter), Side::kLower)));
}

Fst ExtractMiddleUnion(const Fst &t, const Inventory &inv) {
  Fst one = OneLevel(t);
  SymbolSet alphabet = one.InputAlphabet();
  Fst filter;
  const StateId skip = filter.initial();
  const StateId inside = filter.AddState();
  const StateId done = filter.AddState();
  filter.SetFinal(done);
  for (Symbol p : alphabet) {
    filter.AddArc(skip, p, Symbol::Epsilon(), skip);
    filter.AddArc(done, p, Symbol::Epsilon(), done);
    if (IsBarrierPair(p, inv)) {
      filter.AddArc(skip, p,
                    Symbol::Pair(p.upper().Marked(), p.lower().Marked()),
                    inside);
      filter.AddArc(inside, p, p, done);
    } else {
      filter.AddArc(inside, p, p, inside);
    }
  }
  return Optimize(TwoLevel(Project(Compose(one, filter), Side::kLower)));
}

Fst Complete(const Fst &s_initials, const Fst &s_middles, const Fst &n,
             const Inventory &inv) {
  auto joint = [](const Fst &s_union, const Fst &n_union) {
    Fst uncovered = Difference(Project(n_union, Side::kUpper),
                               Project(s_union, Side::kUpper));
    Fst from_n = Compose(IdentityOf(uncovered), n_union);
    return Optimize(Union(s_union, from_n));
  };
  Fst initials = joint(s_initials, ExtractInitialUnion(n, inv));
  Fst middles = joint(s_middles, ExtractMiddleUnion(n, inv));
  return AssembleFromUnions(initials, middles, inv);
}

Fst BuildCompletedSType(const HmmParams &params, const SubsequenceSets &sets,
                        NTypeOrder fallback) {
  std::vector<PairedSubsequence> initials, middles;
  initials.reserve(sets.initials.size());
  middles.reserve(sets.middles.size());
  for (const auto &sub : sets.initials) {
    initials.push_back(Disambiguate(params, sub));
  }
  for (const auto &sub : sets.middles) {
    middles.push_back(MarkExtension(Disambiguate(params, sub)));
  }
  Fst s_initials = Optimize(UnionOfSubsequences(initials));
  Fst s_middles = Optimize(UnionOfSubsequences(middles));
  return Complete(s_initials, s_middles, BuildNType(params, fallback),
                  params.inventory());
}

void WriteSubsequences(std::ostream &os,
                       std::span<const PairedSubsequence> subs,
                       const Inventory &inv) {
  for (const auto &sub : subs) {
    os << (sub.kind == SubsequenceKind::kInitial ? 'I' : 'M');
    for (std::size_t i = 0; i < sub.classes.size(); ++i) {
      os << ' ' << (sub.marked && i == 0 ? "0." : "")
         << inv.Class(sub.classes[i]).name;
    }
    os << " |";
    for (std::size_t i = 0; i < sub.tags.size(); ++i) {
      os << ' ' << (sub.marked && i == 0 ? "0." : "")
         << inv.TagName(sub.tags[i]);
    }
    os << '\n';
  }
}

}  // namespace hmmfst
