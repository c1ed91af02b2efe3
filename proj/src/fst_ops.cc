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

#include "hmmfst/fst_ops.h"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hmmfst/error.h"

namespace hmmfst {
namespace {

struct VectorHash {
  template <typename T>
  std::size_t operator()(const std::vector<T> &v) const {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ v.size();
    for (const T &x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Appends the states of `src` to `dst` and returns the id offset.
StateId AppendStates(const Fst &src, Fst *dst) {
  StateId offset = dst->NumStates();
  for (StateId s = 0; s < src.NumStates(); ++s) {
    StateId t = dst->AddState();
    dst->SetFinal(t, src.IsFinal(s));
  }
  for (StateId s = 0; s < src.NumStates(); ++s) {
    for (const Arc &a : src.Arcs(s)) {
      dst->AddArc(s + offset, Arc{a.input, a.output, a.next + offset});
    }
  }
  dst->DeclareSymbols(src.declared_symbols());
  return offset;
}

void CopyArcsShifted(const Fst &src, StateId from, StateId offset,
                     StateId to_state, Fst *dst) {
  for (const Arc &a : src.Arcs(from)) {
    dst->AddArc(to_state, Arc{a.input, a.output, a.next + offset});
  }
}

}  // namespace

Fst Connect(const Fst &a) {
  const StateId n = a.NumStates();
  std::vector<std::uint8_t> access(n, 0), coaccess(n, 0);
  std::vector<StateId> stack{a.initial()};
  access[a.initial()] = 1;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (const Arc &arc : a.Arcs(s)) {
      if (!access[arc.next]) {
        access[arc.next] = 1;
        stack.push_back(arc.next);
      }
    }
  }
  std::vector<std::vector<StateId>> reverse(n);
  for (StateId s = 0; s < n; ++s) {
    for (const Arc &arc : a.Arcs(s)) reverse[arc.next].push_back(s);
  }
  for (StateId s = 0; s < n; ++s) {
    if (a.IsFinal(s)) {
      coaccess[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (StateId p : reverse[s]) {
      if (!coaccess[p]) {
        coaccess[p] = 1;
        stack.push_back(p);
      }
    }
  }

  std::vector<StateId> remap(n, -1);
  Fst out;
  out.DeclareSymbols(a.declared_symbols());
  remap[a.initial()] = 0;
  out.SetFinal(0, a.IsFinal(a.initial()));
  for (StateId s = 0; s < n; ++s) {
    if (s == a.initial() || !access[s] || !coaccess[s]) continue;
    remap[s] = out.AddState();
    out.SetFinal(remap[s], a.IsFinal(s));
  }
  for (StateId s = 0; s < n; ++s) {
    if (remap[s] < 0) continue;
    if (!coaccess[s]) continue;  // a dead initial state keeps no arcs
    for (const Arc &arc : a.Arcs(s)) {
      if (remap[arc.next] < 0 || !coaccess[arc.next]) continue;
      out.AddArc(remap[s], Arc{arc.input, arc.output, remap[arc.next]});
    }
  }
  return out;
}

Fst RemoveEpsilons(const Fst &a) {
  if (!a.HasEpsilonPairs()) return Connect(a);
  const StateId n = a.NumStates();
  Fst out;
  out.DeclareSymbols(a.declared_symbols());
  for (StateId s = 1; s < n; ++s) out.AddState();
  out.SetInitial(a.initial());

  std::vector<StateId> closure, stack;
  std::vector<StateId> seen(n, -1);
  for (StateId s = 0; s < n; ++s) {
    closure.clear();
    stack.assign(1, s);
    seen[s] = s;
    while (!stack.empty()) {
      StateId p = stack.back();
      stack.pop_back();
      closure.push_back(p);
      for (const Arc &arc : a.Arcs(p)) {
        if (arc.input.is_epsilon() && arc.output.is_epsilon() &&
            seen[arc.next] != s) {
          seen[arc.next] = s;
          stack.push_back(arc.next);
        }
      }
    }
    bool is_final = false;
    for (StateId p : closure) {
      is_final = is_final || a.IsFinal(p);
      for (const Arc &arc : a.Arcs(p)) {
        if (arc.input.is_epsilon() && arc.output.is_epsilon()) continue;
        out.AddArc(s, arc);
      }
    }
    out.SetFinal(s, is_final);
  }
  out.SortAndDedupArcs();
  return Connect(out);
}

Fst Union(const Fst &a, const Fst &b) {
  Fst out;
  StateId off_a = AppendStates(a, &out);
  StateId off_b = AppendStates(b, &out);
  out.SetFinal(0, a.IsFinal(a.initial()) || b.IsFinal(b.initial()));
  CopyArcsShifted(a, a.initial(), off_a, 0, &out);
  CopyArcsShifted(b, b.initial(), off_b, 0, &out);
  out.SortAndDedupArcs();
  return Connect(out);
}

Fst Concat(const Fst &a, const Fst &b) {
  Fst out;
  StateId off_a = AppendStates(a, &out);
  StateId off_b = AppendStates(b, &out);
  out.SetInitial(a.initial() + off_a);
  const bool b_initial_final = b.IsFinal(b.initial());
  for (StateId s = 0; s < a.NumStates(); ++s) {
    if (!a.IsFinal(s)) continue;
    CopyArcsShifted(b, b.initial(), off_b, s + off_a, &out);
    out.SetFinal(s + off_a, b_initial_final);
  }
  out.SortAndDedupArcs();
  return Connect(out);
}

Fst KleeneStar(const Fst &a) {
  Fst out;
  StateId off = AppendStates(a, &out);
  out.SetFinal(0, true);
  CopyArcsShifted(a, a.initial(), off, 0, &out);
  for (StateId s = 0; s < a.NumStates(); ++s) {
    if (a.IsFinal(s)) CopyArcsShifted(a, a.initial(), off, s + off, &out);
  }
  out.SortAndDedupArcs();
  return Connect(out);
}

Fst CrossPair(std::span<const Symbol> upper, std::span<const Symbol> lower) {
  if (upper.size() != lower.size() || upper.empty()) {
    throw Error(ErrorCode::kLengthMismatch,
                "cross product needs equal nonzero lengths, got " +
                    std::to_string(upper.size()) + " and " +
                    std::to_string(lower.size()));
  }
  Fst out;
  StateId prev = out.initial();
  for (std::size_t i = 0; i < upper.size(); ++i) {
    StateId next = out.AddState();
    out.AddArc(prev, upper[i], lower[i], next);
    prev = next;
  }
  out.SetFinal(prev);
  return RemoveEpsilons(out);
}

Fst Compose(const Fst &r, const Fst &q) {
  // q's arcs indexed by input symbol.
  std::vector<std::vector<Arc>> q_arcs(q.NumStates());
  for (StateId s = 0; s < q.NumStates(); ++s) {
    auto arcs = q.Arcs(s);
    q_arcs[s].assign(arcs.begin(), arcs.end());
    std::sort(q_arcs[s].begin(), q_arcs[s].end(),
              [](const Arc &x, const Arc &y) { return x.input < y.input; });
  }

  // Filter states: 0 = free, 1 = r moved alone on an epsilon output,
  // 2 = q moved alone on an epsilon input.
  const std::uint64_t nq = static_cast<std::uint64_t>(q.NumStates());
  std::unordered_map<std::uint64_t, StateId> ids;
  std::deque<std::tuple<StateId, StateId, int>> queue;
  Fst out;
  out.DeclareSymbols(r.declared_symbols());
  out.DeclareSymbols(q.declared_symbols());

  auto state_of = [&](StateId rs, StateId qs, int f) {
    std::uint64_t key = (static_cast<std::uint64_t>(rs) * nq + qs) * 3 + f;
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    StateId id = ids.empty() ? out.initial() : out.AddState();
    ids.emplace(key, id);
    out.SetFinal(id, r.IsFinal(rs) && q.IsFinal(qs));
    queue.emplace_back(rs, qs, f);
    return id;
  };
  state_of(r.initial(), q.initial(), 0);

  while (!queue.empty()) {
    auto [rs, qs, f] = queue.front();
    queue.pop_front();
    StateId src = ids.at((static_cast<std::uint64_t>(rs) * nq + qs) * 3 + f);
    const auto &qa = q_arcs[qs];
    for (const Arc &ra : r.Arcs(rs)) {
      if (ra.output.is_epsilon()) {
        if (f != 2) {
          StateId dst = state_of(ra.next, qs, 1);
          out.AddArc(src, ra.input, Symbol::Epsilon(), dst);
        }
        if (f == 0) {
          // Simultaneous epsilon moves on both sides.
          auto [lo, hi] = std::equal_range(
              qa.begin(), qa.end(), Arc{Symbol::Epsilon(), {}, 0},
              [](const Arc &x, const Arc &y) { return x.input < y.input; });
          for (auto it = lo; it != hi; ++it) {
            StateId dst = state_of(ra.next, it->next, 0);
            out.AddArc(src, ra.input, it->output, dst);
          }
        }
        continue;
      }
      auto [lo, hi] = std::equal_range(
          qa.begin(), qa.end(), Arc{ra.output, {}, 0},
          [](const Arc &x, const Arc &y) { return x.input < y.input; });
      for (auto it = lo; it != hi; ++it) {
        StateId dst = state_of(ra.next, it->next, 0);
        out.AddArc(src, ra.input, it->output, dst);
      }
    }
    if (f != 1) {
      for (const Arc &qarc : qa) {
        if (!qarc.input.is_epsilon()) break;
        StateId dst = state_of(rs, qarc.next, 2);
        out.AddArc(src, Symbol::Epsilon(), qarc.output, dst);
      }
    }
  }
  return RemoveEpsilons(out);
}

Fst DeterminizePairs(const Fst &input) {
  Fst a = RemoveEpsilons(input);
  using Subset = std::vector<StateId>;
  std::unordered_map<Subset, StateId, VectorHash> ids;
  std::vector<Subset> pending;
  Fst out;
  out.DeclareSymbols(a.declared_symbols());

  auto state_of = [&](Subset subset) {
    auto it = ids.find(subset);
    if (it != ids.end()) return it->second;
    StateId id = ids.empty() ? out.initial() : out.AddState();
    bool is_final = false;
    for (StateId s : subset) is_final = is_final || a.IsFinal(s);
    out.SetFinal(id, is_final);
    ids.emplace(subset, id);
    pending.push_back(std::move(subset));
    return id;
  };
  state_of(Subset{a.initial()});

  std::vector<Arc> arcs;
  while (!pending.empty()) {
    Subset subset = std::move(pending.back());
    pending.pop_back();
    StateId src = ids.at(subset);
    arcs.clear();
    for (StateId s : subset) {
      auto sa = a.Arcs(s);
      arcs.insert(arcs.end(), sa.begin(), sa.end());
    }
    std::sort(arcs.begin(), arcs.end());
    std::size_t i = 0;
    while (i < arcs.size()) {
      std::size_t j = i;
      Subset targets;
      while (j < arcs.size() && arcs[j].input == arcs[i].input &&
             arcs[j].output == arcs[i].output) {
        if (targets.empty() || targets.back() != arcs[j].next) {
          targets.push_back(arcs[j].next);
        }
        ++j;
      }
      Symbol in = arcs[i].input, out_sym = arcs[i].output;
      StateId dst = state_of(std::move(targets));
      out.AddArc(src, in, out_sym, dst);
      i = j;
    }
  }
  return Connect(out);
}

bool IsPairDeterministic(const Fst &t) {
  std::vector<std::pair<Symbol, Symbol>> labels;
  for (StateId s = 0; s < t.NumStates(); ++s) {
    labels.clear();
    for (const Arc &a : t.Arcs(s)) {
      if (a.input.is_epsilon() && a.output.is_epsilon()) return false;
      labels.emplace_back(a.input, a.output);
    }
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
      return false;
    }
  }
  return true;
}

Fst Minimize(const Fst &input) {
  if (!IsPairDeterministic(input)) {
    throw Error(ErrorCode::kNotDeterministic,
                "minimization requires a pair-deterministic transducer");
  }
  Fst a = Connect(input);
  a.SortAndDedupArcs();
  const StateId n = a.NumStates();

  // Moore refinement; missing transitions go to an implicit dead state,
  // which is distinct from every state because `a` is trimmed.
  std::vector<std::int32_t> block(n);
  for (StateId s = 0; s < n; ++s) block[s] = a.IsFinal(s) ? 1 : 0;
  std::size_t num_blocks = 0;
  {
    bool any_final = false, any_nonfinal = false;
    for (StateId s = 0; s < n; ++s) {
      (a.IsFinal(s) ? any_final : any_nonfinal) = true;
    }
    num_blocks = (any_final ? 1 : 0) + (any_nonfinal ? 1 : 0);
  }
  std::vector<std::uint64_t> signature;
  std::vector<std::int32_t> next_block(n);
  while (true) {
    std::unordered_map<std::vector<std::uint64_t>, std::int32_t, VectorHash>
        ids;
    ids.reserve(n);
    for (StateId s = 0; s < n; ++s) {
      signature.clear();
      signature.push_back(static_cast<std::uint64_t>(block[s]));
      for (const Arc &arc : a.Arcs(s)) {
        signature.push_back(arc.input.code());
        signature.push_back(arc.output.code());
        signature.push_back(static_cast<std::uint64_t>(block[arc.next]));
      }
      auto [it, inserted] =
          ids.emplace(signature, static_cast<std::int32_t>(ids.size()));
      next_block[s] = it->second;
    }
    bool stable = ids.size() == num_blocks;
    num_blocks = ids.size();
    block.swap(next_block);
    if (stable) break;
  }

  Fst out;
  out.DeclareSymbols(a.declared_symbols());
  std::vector<StateId> remap(num_blocks, -1);
  std::vector<StateId> representative(num_blocks, -1);
  remap[block[a.initial()]] = out.initial();
  representative[block[a.initial()]] = a.initial();
  for (StateId s = 0; s < n; ++s) {
    if (remap[block[s]] < 0) remap[block[s]] = out.AddState();
    if (representative[block[s]] < 0) representative[block[s]] = s;
  }
  for (std::size_t b = 0; b < num_blocks; ++b) {
    StateId rep = representative[b];
    out.SetFinal(remap[b], a.IsFinal(rep));
    for (const Arc &arc : a.Arcs(rep)) {
      out.AddArc(remap[b], Arc{arc.input, arc.output, remap[block[arc.next]]});
    }
  }
  return out;
}

Fst Optimize(const Fst &a) { return Minimize(DeterminizePairs(a)); }

Fst Project(const Fst &r, Side side) {
  Fst out;
  for (StateId s = 1; s < r.NumStates(); ++s) out.AddState();
  out.SetInitial(r.initial());
  for (StateId s = 0; s < r.NumStates(); ++s) {
    out.SetFinal(s, r.IsFinal(s));
    for (const Arc &a : r.Arcs(s)) {
      Symbol sym = side == Side::kUpper ? a.input : a.output;
      out.AddArc(s, sym, sym, a.next);
    }
  }
  return RemoveEpsilons(out);
}

Fst Difference(const Fst &a, const Fst &b) {
  if (!a.IsAutomaton() || !b.IsAutomaton()) {
    throw Error(ErrorCode::kNotAutomaton,
                "difference is defined on automata only");
  }
  SymbolSet alphabet = a.Alphabet();
  for (Symbol s : b.Alphabet()) alphabet.insert(s);

  // Complete deterministic complement of b over the joint alphabet.
  Fst comp = DeterminizePairs(b);
  StateId sink = comp.AddState();
  for (StateId s = 0; s < comp.NumStates(); ++s) {
    std::vector<Arc> &arcs = comp.MutableArcs(s);
    std::sort(arcs.begin(), arcs.end());
    std::vector<Arc> missing;
    std::size_t i = 0;
    for (Symbol x : alphabet) {
      while (i < arcs.size() && arcs[i].input < x) ++i;
      if (i == arcs.size() || arcs[i].input != x) {
        missing.push_back(Arc{x, x, sink});
      }
    }
    for (const Arc &m : missing) comp.AddArc(s, m);
    comp.SetFinal(s, !comp.IsFinal(s));
  }
  Fst out = Compose(a, comp);
  out.DeclareSymbols(alphabet);
  return out;
}

Fst NotContainsFactor(std::span<const Symbol> factor,
                      const SymbolSet &alphabet) {
  if (factor.empty()) {
    throw Error(ErrorCode::kValidation, "factor must be nonempty");
  }
  const std::size_t m = factor.size();
  // KMP failure function.
  std::vector<std::size_t> fail(m + 1, 0);
  for (std::size_t i = 1; i < m; ++i) {
    std::size_t k = fail[i];
    while (k > 0 && factor[i] != factor[k]) k = fail[k];
    fail[i + 1] = factor[i] == factor[k] ? k + 1 : 0;
  }
  Fst out;
  for (std::size_t q = 1; q < m; ++q) out.AddState();
  for (std::size_t q = 0; q < m; ++q) {
    out.SetFinal(static_cast<StateId>(q));
    for (Symbol x : alphabet) {
      std::size_t k = q;
      while (k > 0 && factor[k] != x) k = fail[k];
      if (factor[k] == x) ++k;
      if (k == m) continue;  // factor completed: reject
      out.AddArc(static_cast<StateId>(q), x, x, static_cast<StateId>(k));
    }
  }
  out.DeclareSymbols(alphabet);
  return Connect(out);
}

Fst DeleteMarked(const Fst &r, Side side, const SymbolSet &marked) {
  Fst out;
  for (StateId s = 1; s < r.NumStates(); ++s) out.AddState();
  out.SetInitial(r.initial());
  for (StateId s = 0; s < r.NumStates(); ++s) {
    out.SetFinal(s, r.IsFinal(s));
    for (Arc a : r.Arcs(s)) {
      Symbol &sym = side == Side::kUpper ? a.input : a.output;
      if (marked.count(sym)) sym = Symbol::Epsilon();
      out.AddArc(s, a);
    }
  }
  for (Symbol d : r.declared_symbols()) {
    if (!marked.count(d)) out.DeclareSymbol(d);
  }
  return RemoveEpsilons(out);
}

Fst OneLevel(const Fst &input) {
  Fst r = RemoveEpsilons(input);
  Fst out;
  for (StateId s = 1; s < r.NumStates(); ++s) out.AddState();
  out.SetInitial(r.initial());
  for (StateId s = 0; s < r.NumStates(); ++s) {
    out.SetFinal(s, r.IsFinal(s));
    for (const Arc &a : r.Arcs(s)) {
      if (a.input.is_pair() || a.output.is_pair()) {
        throw Error(ErrorCode::kMalformedAlphabet,
                    "1-level conversion of a relation that already holds "
                    "pair atoms");
      }
      Symbol p = Symbol::Pair(a.input, a.output);
      out.AddArc(s, p, p, a.next);
    }
  }
  return out;
}

Fst TwoLevel(const Fst &a) {
  Fst out;
  for (StateId s = 1; s < a.NumStates(); ++s) out.AddState();
  out.SetInitial(a.initial());
  for (StateId s = 0; s < a.NumStates(); ++s) {
    out.SetFinal(s, a.IsFinal(s));
    for (const Arc &arc : a.Arcs(s)) {
      if (!arc.input.is_pair() || arc.input != arc.output) {
        throw Error(ErrorCode::kMalformedAlphabet,
                    "2-level conversion needs pair atoms on every arc");
      }
      out.AddArc(s, arc.input.upper(), arc.input.lower(), arc.next);
    }
  }
  return RemoveEpsilons(out);
}

Fst IdentityOf(const Fst &automaton) {
  if (!automaton.IsAutomaton()) {
    throw Error(ErrorCode::kNotAutomaton, "identity of a proper relation");
  }
  return automaton;
}

std::optional<StateId> FindInputNondeterminism(const Fst &t) {
  std::vector<Symbol> inputs;
  for (StateId s = 0; s < t.NumStates(); ++s) {
    auto arcs = t.Arcs(s);
    inputs.clear();
    bool has_eps = false;
    for (const Arc &a : arcs) {
      has_eps = has_eps || a.input.is_epsilon();
      inputs.push_back(a.input);
    }
    if (has_eps && arcs.size() > 1) return s;
    std::sort(inputs.begin(), inputs.end());
    if (std::adjacent_find(inputs.begin(), inputs.end()) != inputs.end()) {
      return s;
    }
  }
  return std::nullopt;
}

}  // namespace hmmfst
