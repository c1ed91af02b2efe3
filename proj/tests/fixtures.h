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

#ifndef HMMFST_TESTS_FIXTURES_H_
#define HMMFST_TESTS_FIXTURES_H_

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "hmmfst/hmm.h"

namespace hmmfst::testing {

// Tags DET ADJ NOUN; classes [DET], [ADJ,NOUN], [NOUN]; sentences end in
// [NOUN].
inline HmmParams Toy3Params() {
  Inventory inv;
  TagId det = inv.AddTag("DET");
  TagId adj = inv.AddTag("ADJ");
  TagId noun = inv.AddTag("NOUN");
  ClassId c_det = inv.AddClass("[DET]", {det});
  ClassId c_adjnoun = inv.AddClass("[ADJ,NOUN]", {adj, noun});
  ClassId c_noun = inv.AddClass("[NOUN]", {noun});
  HmmParams p(inv, c_noun);
  auto set_pi = [&](TagId t, double v) { p.set_log_pi(t, std::log(v)); };
  auto set_a = [&](TagId x, TagId y, double v) {
    p.set_log_a(x, y, std::log(v));
  };
  set_pi(det, 0.6);
  set_pi(adj, 0.3);
  set_pi(noun, 0.1);
  set_a(det, det, 0.1);
  set_a(det, adj, 0.5);
  set_a(det, noun, 0.4);
  set_a(adj, det, 0.1);
  set_a(adj, adj, 0.3);
  set_a(adj, noun, 0.6);
  set_a(noun, det, 0.5);
  set_a(noun, adj, 0.1);
  set_a(noun, noun, 0.4);
  p.set_log_b(c_det, det, 0.0);
  p.set_log_b(c_adjnoun, adj, 0.0);
  p.set_log_b(c_adjnoun, noun, std::log(0.4));
  p.set_log_b(c_noun, noun, std::log(0.6));
  p.Validate();
  return p;
}

// Normalized random weights (bounded away from zero).
inline std::vector<double> RandomSimplex(std::mt19937_64 &rng,
                                         std::size_t n) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> w(n);
  double sum = 0;
  for (double &x : w) sum += (x = u(rng));
  for (double &x : w) x /= sum;
  return w;
}

// Random proper model over the given inventory.
inline HmmParams RandomParamsFor(const Inventory &inv, ClassId sentence_end,
                                 std::mt19937_64 &rng) {
  HmmParams p(inv, sentence_end);
  const std::size_t nt = inv.num_tags();
  auto pi = RandomSimplex(rng, nt);
  for (std::size_t t = 0; t < nt; ++t) {
    p.set_log_pi(static_cast<TagId>(t), std::log(pi[t]));
  }
  for (std::size_t x = 0; x < nt; ++x) {
    auto row = RandomSimplex(rng, nt);
    for (std::size_t y = 0; y < nt; ++y) {
      p.set_log_a(static_cast<TagId>(x), static_cast<TagId>(y),
                  std::log(row[y]));
    }
  }
  for (std::size_t t = 0; t < nt; ++t) {
    std::vector<ClassId> members;
    for (std::size_t c = 0; c < inv.num_classes(); ++c) {
      if (inv.ClassHasTag(static_cast<ClassId>(c), static_cast<TagId>(t))) {
        members.push_back(static_cast<ClassId>(c));
      }
    }
    auto w = RandomSimplex(rng, members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      p.set_log_b(members[i], static_cast<TagId>(t), std::log(w[i]));
    }
  }
  p.Validate();
  return p;
}

// The three-class example inventory: c1 = {t11, t12}, c2 = {t21, t22, t23},
// c3 = {t31}. All six tags are distinct.
inline Inventory ThreeClassInventory() {
  Inventory inv;
  for (const char *t : {"t11", "t12", "t21", "t22", "t23", "t31"}) {
    inv.AddTag(t);
  }
  inv.AddClass("c1", {*inv.FindTag("t11"), *inv.FindTag("t12")});
  inv.AddClass("c2", {*inv.FindTag("t21"), *inv.FindTag("t22"),
                      *inv.FindTag("t23")});
  inv.AddClass("c3", {*inv.FindTag("t31")});
  return inv;
}

// Random inventory: `num_tags` tags each with an unambiguous class, plus
// `num_ambiguous` random classes of two or three tags. The last tag's
// class is the sentence end.
inline HmmParams RandomModel(std::mt19937_64 &rng, std::size_t num_tags,
                             std::size_t num_ambiguous) {
  Inventory inv;
  for (std::size_t t = 0; t < num_tags; ++t) {
    inv.AddTag("t" + std::to_string(t));
  }
  for (std::size_t t = 0; t < num_tags; ++t) {
    inv.AddClass("u" + std::to_string(t), {static_cast<TagId>(t)});
  }
  std::uniform_int_distribution<std::size_t> tag(0, num_tags - 2);
  std::size_t added = 0;
  while (added < num_ambiguous) {
    std::vector<TagId> tags;
    std::size_t size = (rng() % 2 == 0 || num_tags < 4) ? 2 : 3;
    while (tags.size() < size) {
      TagId t = static_cast<TagId>(tag(rng));
      if (std::find(tags.begin(), tags.end(), t) == tags.end()) {
        tags.push_back(t);
      }
    }
    if (inv.FindClassByTags(tags)) continue;
    inv.AddClass("a" + std::to_string(added++), tags);
  }
  ClassId end = static_cast<ClassId>(num_tags - 1);
  return RandomParamsFor(inv, end, rng);
}

// Random class sequence whose last class is `end`.
inline std::vector<ClassId> RandomSentence(std::mt19937_64 &rng,
                                           std::size_t num_classes,
                                           ClassId end,
                                           std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::size_t> cls(0, num_classes - 1);
  std::vector<ClassId> out(len(rng) - 1);
  for (auto &c : out) c = static_cast<ClassId>(cls(rng));
  out.push_back(end);
  return out;
}

}  // namespace hmmfst::testing

#endif  // HMMFST_TESTS_FIXTURES_H_
