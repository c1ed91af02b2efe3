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

#include "hmmfst/synthetic.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "hmmfst/error.h"

namespace hmmfst {
namespace {

constexpr char kConsonants[] = "bdfgklmnprstvz";
constexpr char kVowels[] = "aeiou";
constexpr std::size_t kNumSyllables = 14 * 5;

std::string Stem(std::size_t i) {
  std::string out;
  std::size_t n = i + kNumSyllables;
  while (n > 0) {
    std::size_t syl = n % kNumSyllables;
    out.insert(out.begin(), kVowels[syl % 5]);
    out.insert(out.begin(), kConsonants[syl / 5]);
    n /= kNumSyllables;
  }
  return out;
}

std::string ClassSuffix(std::size_t c) {
  std::string out;
  out += static_cast<char>('a' + (c / 26) % 26);
  out += static_cast<char>('a' + c % 26);
  return out;
}

void SetNormalized(std::vector<double> *w, double total_mass) {
  double sum = 0;
  for (double x : *w) sum += x;
  for (double &x : *w) x = x / sum * total_mass;
}

std::vector<TagId> SentenceTags(const HmmParams &params, std::mt19937_64 &rng,
                                std::size_t max_length) {
  const std::size_t nt = params.num_tags();
  const TagId end = params.sentence_end_tag();
  std::vector<double> w(nt);
  for (std::size_t t = 0; t < nt; ++t) {
    w[t] = std::exp(params.log_pi(static_cast<TagId>(t)));
  }
  std::vector<TagId> tags;
  while (true) {
    TagId t = static_cast<TagId>(SampleIndex(rng, w));
    if (tags.size() + 1 == max_length) t = end;
    tags.push_back(t);
    if (t == end) return tags;
    for (std::size_t u = 0; u < nt; ++u) {
      w[u] = std::exp(params.log_a(t, static_cast<TagId>(u)));
    }
  }
}

}  // namespace

std::size_t SampleIndex(std::mt19937_64 &rng,
                        const std::vector<double> &weights) {
  double total = 0;
  for (double w : weights) total += w;
  double r = UniformDouble(rng) * total;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) continue;
    last_positive = i;
    if (r < weights[i]) return i;
    r -= weights[i];
  }
  return last_positive;
}

HmmParams RandomParams(const SyntheticConfig &config, std::uint64_t seed) {
  const std::size_t nt = config.num_tags;
  if (nt < 3) {
    throw Error(ErrorCode::kValidation, "synthetic model needs >= 3 tags");
  }
  const std::size_t open = nt - 1;
  const std::size_t possible =
      open * (open - 1) / 2 + open * (open - 1) * (open - 2) / 6;
  if (config.num_ambiguous_classes > possible) {
    throw Error(ErrorCode::kValidation, "too many ambiguous classes for " +
                                            std::to_string(nt) + " tags");
  }
  std::mt19937_64 rng(seed);
  Inventory inv;
  for (std::size_t t = 0; t < open; ++t) {
    char name[32];
    std::snprintf(name, sizeof(name), "T%02zu", t);
    inv.AddTag(name);
  }
  const TagId sent = inv.AddTag("SENT");
  for (std::size_t t = 0; t < nt; ++t) {
    std::vector<TagId> tags{static_cast<TagId>(t)};
    inv.AddClass(inv.BracketName(tags), tags);
  }
  std::set<std::vector<TagId>> seen;
  while (seen.size() < config.num_ambiguous_classes) {
    std::size_t size = (open >= 3 && UniformDouble(rng) < 0.3) ? 3 : 2;
    std::set<TagId> pick;
    while (pick.size() < size) {
      pick.insert(static_cast<TagId>(rng() % open));
    }
    std::vector<TagId> tags(pick.begin(), pick.end());
    if (!seen.insert(tags).second) continue;
    inv.AddClass(inv.BracketName(tags), tags);
  }

  const ClassId sent_class = *inv.FindClassByTags({sent});
  HmmParams params(inv, sent_class);
  auto peaked = [&](double floor) {
    double u = floor + UniformDouble(rng);
    return u * u * u * u;
  };

  std::vector<double> w(nt);
  for (std::size_t t = 0; t < open; ++t) w[t] = peaked(0.05);
  w[ToIndex(sent)] = 0;
  SetNormalized(&w, 0.999);
  w[ToIndex(sent)] = 0.001;
  for (std::size_t t = 0; t < nt; ++t) {
    params.set_log_pi(static_cast<TagId>(t), std::log(w[t]));
  }
  for (std::size_t p = 0; p < nt; ++p) {
    for (std::size_t t = 0; t < open; ++t) w[t] = peaked(0.02);
    w[ToIndex(sent)] = 0;
    SetNormalized(&w, 1.0 - config.end_probability);
    w[ToIndex(sent)] = config.end_probability;
    for (std::size_t t = 0; t < nt; ++t) {
      params.set_log_a(static_cast<TagId>(p), static_cast<TagId>(t),
                       std::log(w[t]));
    }
  }
  for (std::size_t t = 0; t < nt; ++t) {
    const TagId tag = static_cast<TagId>(t);
    std::vector<ClassId> members;
    std::vector<double> cw;
    for (std::size_t c = 0; c < inv.num_classes(); ++c) {
      const ClassId cls = static_cast<ClassId>(c);
      if (!inv.ClassHasTag(cls, tag)) continue;
      members.push_back(cls);
      cw.push_back(inv.IsUnambiguous(cls) ? config.unambiguous_weight
                                          : 0.2 + UniformDouble(rng));
    }
    SetNormalized(&cw, 1.0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      params.set_log_b(members[i], tag, std::log(cw[i]));
    }
  }
  params.Validate(1e-9);
  return params;
}

SyntheticLanguage::SyntheticLanguage(const Inventory &inv,
                                     ClassId sentence_end,
                                     std::size_t words_per_class)
    : words_(inv.num_classes()) {
  for (std::size_t c = 0; c < inv.num_classes(); ++c) {
    const ClassId cls = static_cast<ClassId>(c);
    auto &words = words_[c];
    if (cls == sentence_end) {
      words = {".", "!", "?"};
    } else {
      for (std::size_t i = 0; i < words_per_class; ++i) {
        words.push_back(Stem(i) + ClassSuffix(c));
      }
    }
    for (const auto &w : words) lexicon_.Add(w, cls);
  }
  const std::size_t longest = std::max<std::size_t>(words_per_class, 3);
  for (std::size_t r = 0; r < longest; ++r) zipf_.push_back(1.0 / (r + 1));
}

const std::string &SyntheticLanguage::SampleWord(std::mt19937_64 &rng,
                                                 ClassId c) const {
  const auto &words = words_[ToIndex(c)];
  std::vector<double> w(zipf_.begin(), zipf_.begin() + words.size());
  return words[SampleIndex(rng, w)];
}

std::vector<TrainingSentence> GenSynthetic(const HmmParams &params,
                                           const SyntheticLanguage &language,
                                           std::size_t sentences,
                                           std::uint64_t seed,
                                           std::size_t max_length) {
  if (sentences == 0) {
    throw Error(ErrorCode::kValidation, "sentence count must be >= 1");
  }
  const Inventory &inv = params.inventory();
  std::mt19937_64 rng(seed);
  // Class distribution per tag, over all classes.
  std::vector<std::vector<double>> emit(params.num_tags(),
                                        std::vector<double>(inv.num_classes()));
  for (std::size_t t = 0; t < params.num_tags(); ++t) {
    for (std::size_t c = 0; c < inv.num_classes(); ++c) {
      emit[t][c] = std::exp(
          params.log_b(static_cast<ClassId>(c), static_cast<TagId>(t)));
    }
  }
  std::vector<TrainingSentence> corpus;
  corpus.reserve(sentences);
  for (std::size_t s = 0; s < sentences; ++s) {
    TrainingSentence sentence;
    for (TagId t : SentenceTags(params, rng, max_length)) {
      ClassId c = static_cast<ClassId>(SampleIndex(rng, emit[ToIndex(t)]));
      sentence.push_back({language.SampleWord(rng, c), c, t});
    }
    corpus.push_back(std::move(sentence));
  }
  return corpus;
}

std::vector<TrainingSentence> GenSyntheticWords(
    const HmmParams &params, const SyntheticLanguage &language,
    std::size_t words, std::uint64_t seed) {
  std::mt19937_64 seeds(seed);
  std::vector<TrainingSentence> corpus;
  std::size_t total = 0;
  while (total < words) {
    auto one = GenSynthetic(params, language, 1, seeds());
    total += one.front().size();
    corpus.push_back(std::move(one.front()));
  }
  return corpus;
}

}  // namespace hmmfst
