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

#include "hmmfst/apply.h"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "hmmfst/error.h"
#include "hmmfst/fst_ops.h"

namespace hmmfst {

Matcher::Matcher(Fst fst) : fst_(std::move(fst)) {
  const StateId n = fst_.NumStates();
  offsets_.assign(n + 1, 0);
  arcs_.reserve(fst_.NumArcs());
  bool all_classes = true;
  bool eps_input = false;
  std::uint32_t max_class = 0;
  for (StateId s = 0; s < n; ++s) {
    offsets_[s] = arcs_.size();
    auto arcs = fst_.Arcs(s);
    arcs_.insert(arcs_.end(), arcs.begin(), arcs.end());
    for (const Arc &a : arcs) {
      eps_input = eps_input || a.input.is_epsilon();
      if (a.input.kind() != SymbolKind::kClass) {
        all_classes = false;
      } else {
        max_class = std::max(max_class, a.input.id());
      }
    }
  }
  offsets_[n] = arcs_.size();
  for (StateId s = 0; s < n; ++s) {
    std::sort(arcs_.begin() + offsets_[s], arcs_.begin() + offsets_[s + 1],
              [](const Arc &x, const Arc &y) { return x.input < y.input; });
  }
  // The state walk consumes one symbol per step, so epsilon inputs always
  // take the search path.
  deterministic_ = !eps_input && IsInputDeterministic(fst_);
  if (deterministic_ && all_classes) {
    num_classes_ = static_cast<std::size_t>(max_class) + 1;
    class_table_.assign(static_cast<std::size_t>(n) * num_classes_, -1);
    for (StateId s = 0; s < n; ++s) {
      for (std::size_t i = offsets_[s]; i < offsets_[s + 1]; ++i) {
        class_table_[s * num_classes_ + arcs_[i].input.id()] =
            static_cast<std::int32_t>(i);
      }
    }
  }
}

std::vector<Symbol> Matcher::ApplyDeterministic(std::span<const Symbol> input,
                                                ApplyStats *stats) const {
  std::vector<Symbol> out;
  out.reserve(input.size());
  StateId s = fst_.initial();
  std::size_t visited = 1;
  for (std::size_t pos = 0; pos < input.size(); ++pos) {
    const Symbol x = input[pos];
    const Arc *arc = nullptr;
    if (!class_table_.empty()) {
      if (x.kind() == SymbolKind::kClass && x.id() < num_classes_) {
        std::int32_t i = class_table_[s * num_classes_ + x.id()];
        if (i >= 0) arc = &arcs_[i];
      }
    } else {
      auto first = arcs_.begin() + offsets_[s];
      auto last = arcs_.begin() + offsets_[s + 1];
      auto it = std::lower_bound(
          first, last, x,
          [](const Arc &a, Symbol sym) { return a.input < sym; });
      if (it != last && it->input == x) arc = &*it;
    }
    if (arc == nullptr) {
      throw Error(ErrorCode::kNoPath,
                  "no transition at input position " + std::to_string(pos));
    }
    if (!arc->output.is_epsilon()) out.push_back(arc->output);
    s = arc->next;
    ++visited;
  }
  if (!fst_.IsFinal(s)) {
    throw Error(ErrorCode::kNoPath, "input ends in a non-final state");
  }
  if (stats != nullptr) {
    stats->states_visited = visited;
    stats->fast_path = true;
  }
  return out;
}

// Memoized search over (state, input position). Each solved entry records
// the arc of the first accepting continuation; a second accepting
// continuation with a different output makes the input ambiguous.
class Matcher::Search {
 public:
  Search(const Matcher &m, std::span<const Symbol> input)
      : m_(m), input_(input) {}

  static constexpr std::int64_t kStop = -1;

  bool Solve(StateId s, std::size_t pos) {
    const std::uint64_t key = Key(s, pos);
    auto found = memo_.find(key);
    if (found != memo_.end()) return found->second.status == kSolved;
    memo_.emplace(key, Entry{kInProgress, 0});
    ++visited_;

    bool solved = false;
    std::int64_t choice = 0;
    if (pos == input_.size() && m_.fst_.IsFinal(s)) {
      solved = true;
      choice = kStop;
    }
    const std::size_t begin = m_.offsets_[s], end = m_.offsets_[s + 1];
    for (std::size_t i = begin; i < end; ++i) {
      const Arc &arc = m_.arcs_[i];
      std::size_t next_pos;
      if (arc.input.is_epsilon()) {
        next_pos = pos;
      } else if (pos < input_.size() && arc.input == input_[pos]) {
        next_pos = pos + 1;
      } else {
        continue;
      }
      if (!Solve(arc.next, next_pos)) continue;
      if (!solved) {
        solved = true;
        choice = static_cast<std::int64_t>(i);
        continue;
      }
      // Second accepting continuation: outputs must agree.
      std::vector<Symbol> first, second;
      AppendChoice(pos, choice, &first);
      if (!arc.output.is_epsilon()) second.push_back(arc.output);
      Collect(arc.next, next_pos, &second);
      if (first != second) {
        throw Error(ErrorCode::kAmbiguous,
                    "two accepting paths with different outputs");
      }
    }
    memo_[key] = Entry{solved ? kSolved : kFailed, choice};
    return solved;
  }

  void Collect(StateId s, std::size_t pos, std::vector<Symbol> *out) const {
    while (true) {
      const Entry &e = memo_.at(Key(s, pos));
      if (e.choice == kStop) return;
      const Arc &arc = m_.arcs_[e.choice];
      if (!arc.output.is_epsilon()) out->push_back(arc.output);
      if (!arc.input.is_epsilon()) ++pos;
      s = arc.next;
    }
  }

  std::size_t visited() const { return visited_; }

 private:
  enum Status : std::uint8_t { kInProgress, kSolved, kFailed };
  struct Entry {
    Status status;
    std::int64_t choice;
  };

  std::uint64_t Key(StateId s, std::size_t pos) const {
    return static_cast<std::uint64_t>(pos) *
               static_cast<std::uint64_t>(m_.fst_.NumStates()) +
           static_cast<std::uint64_t>(s);
  }

  void AppendChoice(std::size_t pos, std::int64_t choice,
                    std::vector<Symbol> *out) const {
    if (choice == kStop) return;
    const Arc &arc = m_.arcs_[choice];
    if (!arc.output.is_epsilon()) out->push_back(arc.output);
    Collect(arc.next, arc.input.is_epsilon() ? pos : pos + 1, out);
  }

  const Matcher &m_;
  std::span<const Symbol> input_;
  std::unordered_map<std::uint64_t, Entry> memo_;
  std::size_t visited_ = 0;
};

std::vector<Symbol> Matcher::Apply(std::span<const Symbol> input,
                                   ApplyStats *stats) const {
  if (deterministic_) return ApplyDeterministic(input, stats);
  Search search(*this, input);
  if (!search.Solve(fst_.initial(), 0)) {
    throw Error(ErrorCode::kNoPath, "input is not in the upper language");
  }
  std::vector<Symbol> out;
  search.Collect(fst_.initial(), 0, &out);
  if (stats != nullptr) {
    stats->states_visited = search.visited();
    stats->fast_path = false;
  }
  return out;
}

}  // namespace hmmfst
