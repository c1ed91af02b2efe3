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

#ifndef HMMFST_HMM_H_
#define HMMFST_HMM_H_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "hmmfst/inventory.h"

namespace hmmfst {

inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();
inline constexpr char kUnknownClassName[] = "[UNKNOWN]";

// Log scores closer than this count as ties. Every argmax in the library
// resolves ties toward the lowest index, independent of summation order.
inline constexpr double kLogTieTolerance = 1e-9;

// Lowest i whose score is within kLogTieTolerance of the maximum of
// scores[0..n). Returns 0 when every score is kLogZero. Requires n >= 1.
inline std::size_t LowestNearMax(const double *scores, std::size_t n) {
  double best = scores[0];
  for (std::size_t i = 1; i < n; ++i) best = std::max(best, scores[i]);
  if (best == kLogZero) return 0;
  std::size_t i = 0;
  while (scores[i] < best - kLogTieTolerance) ++i;
  return i;
}

// Which factorization of the joint probability to use. Initial and Whole
// share the pi-anchored form; Middle drops pi and starts with b(c1|t1),
// as needed for extended middle subsequences that begin at a barrier.
enum class ProbMode { kWhole, kInitial, kMiddle };

// First-order HMM over ambiguity classes, natural-log domain. `a` is
// indexed (previous tag, tag) and `b` is the class-given-tag probability,
// normalized per tag over classes. Immutable once built; all queries are
// safe to run concurrently.
class HmmParams {
 public:
  // All probabilities start at zero (kLogZero).
  HmmParams(Inventory inventory, ClassId sentence_end);

  const Inventory &inventory() const { return inv_; }
  ClassId sentence_end_class() const { return sentence_end_; }
  TagId sentence_end_tag() const {
    return inv_.Class(sentence_end_).tags.front();
  }
  std::size_t num_tags() const { return inv_.num_tags(); }

  double log_pi(TagId t) const { return pi_[ToIndex(t)]; }
  double log_a(TagId prev, TagId t) const {
    return a_[ToIndex(prev) * num_tags() + ToIndex(t)];
  }
  double log_b(ClassId c, TagId t) const {
    return b_[ToIndex(c) * num_tags() + ToIndex(t)];
  }

  void set_log_pi(TagId t, double v) { pi_[ToIndex(t)] = v; }
  void set_log_a(TagId prev, TagId t, double v) {
    a_[ToIndex(prev) * num_tags() + ToIndex(t)] = v;
  }
  void set_log_b(ClassId c, TagId t, double v) {
    b_[ToIndex(c) * num_tags() + ToIndex(t)] = v;
  }

  // Checks that pi, every row of a, and every tag's b column sum to one,
  // that b is zero outside class membership, that every class has a
  // reachable tag, and that the sentence-end class is unambiguous. Throws
  // Validation.
  void Validate(double tolerance = 1e-9) const;

 private:
  Inventory inv_;
  ClassId sentence_end_;
  std::vector<double> pi_;
  std::vector<double> a_;
  std::vector<double> b_;
};

// log p(C, T) in the given mode. Throws LengthMismatch or TagNotInClass.
double JointLogProb(const HmmParams &params, std::span<const ClassId> classes,
                    std::span<const TagId> tags, ProbMode mode);

// Most probable tag sequence. Ties go to the lowest TagId at every
// backpointer and at the final argmax (see kLogTieTolerance). Throws NoPath
// when every candidate has zero probability, and LengthMismatch on empty
// input.
std::vector<TagId> Viterbi(const HmmParams &params,
                           std::span<const ClassId> classes, ProbMode mode);

// Decomposition of a class sequence at its unambiguous classes: an initial
// part c_a* c_u followed by extended middles c_u c_a* c_u, consecutive
// pieces sharing their boundary class.
struct BarrierSplit {
  std::vector<ClassId> initial;
  std::vector<std::vector<ClassId>> middles;
};

// Throws NoTerminalBarrier if the sequence is empty or ends ambiguous.
BarrierSplit SplitAtBarriers(const Inventory &inv,
                             std::span<const ClassId> classes);

struct TrainingToken {
  std::string word;
  ClassId cls;
  TagId tag;
};
using TrainingSentence = std::vector<TrainingToken>;

struct TrainOptions {
  double smoothing = 0.001;
};

// Adds the [UNKNOWN] class (tags seen on words occurring exactly once)
// unless the inventory already has one. Falls back to every tag when the
// corpus has no hapax words.
ClassId AddUnknownClass(Inventory *inv,
                        const std::vector<TrainingSentence> &corpus);

// Supervised relative-frequency estimation with additive smoothing on pi,
// a and b. b stays exactly zero outside class membership. Rows without
// any mass fall back to uniform. When the inventory has an [UNKNOWN]
// class its emissions are counted from hapax tokens. Throws EmptyCorpus,
// TagNotInClass, or Validation if the result is not a proper model.
HmmParams TrainFromTagged(const Inventory &inv, ClassId sentence_end,
                          const std::vector<TrainingSentence> &corpus,
                          const TrainOptions &options = {});

}  // namespace hmmfst

#endif  // HMMFST_HMM_H_
