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

#ifndef HMMFST_SYNTHETIC_H_
#define HMMFST_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hmmfst/hmm.h"
#include "hmmfst/tagger.h"

namespace hmmfst {

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw, so that
// sampled corpora do not depend on the standard library's distributions.
inline double UniformDouble(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Index drawn from unnormalized nonnegative weights.
std::size_t SampleIndex(std::mt19937_64 &rng,
                        const std::vector<double> &weights);

struct SyntheticConfig {
  // Includes the sentence-end tag SENT. Every tag gets an unambiguous
  // class of its own.
  std::size_t num_tags = 12;
  // Additional classes of 2 or 3 tags, drawn without repetition.
  std::size_t num_ambiguous_classes = 20;
  // Expected share of each row of `a` that goes to SENT.
  double end_probability = 1.0 / 12.0;
  // Emission weight of a tag's own unambiguous class; each ambiguous class
  // containing the tag gets a weight drawn from [0.2, 1.2).
  double unambiguous_weight = 1.0;
};

// Random but reproducible model: peaked pi and transition rows, class
// emissions spread over the classes that contain each tag. Tag names are
// T00, T01, ... and SENT; class names are bracketed tag lists.
HmmParams RandomParams(const SyntheticConfig &config, std::uint64_t seed);

// A word inventory per class. Word forms are syllable stems followed by a
// class-specific two-letter suffix, so a suffix guesser can recover the
// class of unseen forms. The sentence-end class uses punctuation.
class SyntheticLanguage {
 public:
  SyntheticLanguage(const Inventory &inv, ClassId sentence_end,
                    std::size_t words_per_class = 40);

  const Lexicon &lexicon() const { return lexicon_; }
  const std::vector<std::string> &Words(ClassId c) const {
    return words_[ToIndex(c)];
  }
  // Zipf-distributed word of class `c`.
  const std::string &SampleWord(std::mt19937_64 &rng, ClassId c) const;

 private:
  Lexicon lexicon_;
  std::vector<std::vector<std::string>> words_;
  std::vector<double> zipf_;
};

// Samples tag sequences from pi and a, a class per tag from b, and a word
// per class. Every sentence ends with the sentence-end tag; sentences are
// cut at `max_length` tokens by forcing it. Reproducible per seed.
std::vector<TrainingSentence> GenSynthetic(const HmmParams &params,
                                           const SyntheticLanguage &language,
                                           std::size_t sentences,
                                           std::uint64_t seed,
                                           std::size_t max_length = 200);

// Generates sentences until at least `words` tokens are produced.
std::vector<TrainingSentence> GenSyntheticWords(
    const HmmParams &params, const SyntheticLanguage &language,
    std::size_t words, std::uint64_t seed);

}  // namespace hmmfst

#endif  // HMMFST_SYNTHETIC_H_
