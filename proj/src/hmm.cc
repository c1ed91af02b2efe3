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

#include "hmmfst/hmm.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>

#include "hmmfst/error.h"

namespace hmmfst {

HmmParams::HmmParams(Inventory inventory, ClassId sentence_end)
    : inv_(std::move(inventory)),
      sentence_end_(sentence_end),
      pi_(inv_.num_tags(), kLogZero),
      a_(inv_.num_tags() * inv_.num_tags(), kLogZero),
      b_(inv_.num_classes() * inv_.num_tags(), kLogZero) {
  if (ToIndex(sentence_end) >= inv_.num_classes()) {
    throw Error(ErrorCode::kValidation, "sentence-end class out of range");
  }
}

void HmmParams::Validate(double tolerance) const {
  if (!inv_.IsUnambiguous(sentence_end_)) {
    throw Error(ErrorCode::kValidation,
                "sentence-end class " + inv_.Class(sentence_end_).name +
                    " must contain exactly one tag");
  }
  const std::size_t n = num_tags();
  auto check_sum = [&](double sum, const std::string &what) {
    if (!(std::fabs(sum - 1.0) <= tolerance)) {
      throw Error(ErrorCode::kValidation,
                  what + " sums to " + std::to_string(sum));
    }
  };
  double sum = 0;
  for (std::size_t t = 0; t < n; ++t) sum += std::exp(pi_[t]);
  check_sum(sum, "pi");
  for (std::size_t p = 0; p < n; ++p) {
    sum = 0;
    for (std::size_t t = 0; t < n; ++t) sum += std::exp(a_[p * n + t]);
    check_sum(sum, "transition row " + inv_.TagName(static_cast<TagId>(p)));
  }
  for (std::size_t t = 0; t < n; ++t) {
    sum = 0;
    for (std::size_t c = 0; c < inv_.num_classes(); ++c) {
      double v = b_[c * n + t];
      if (v != kLogZero &&
          !inv_.ClassHasTag(static_cast<ClassId>(c), static_cast<TagId>(t))) {
        throw Error(ErrorCode::kValidation,
                    "b(" + inv_.Class(static_cast<ClassId>(c)).name + "|" +
                        inv_.TagName(static_cast<TagId>(t)) +
                        ") is nonzero for a tag outside the class");
      }
      sum += std::exp(v);
    }
    check_sum(sum, "class distribution of tag " +
                       inv_.TagName(static_cast<TagId>(t)));
  }
  for (std::size_t c = 0; c < inv_.num_classes(); ++c) {
    bool any = false;
    for (TagId t : inv_.Class(static_cast<ClassId>(c)).tags) {
      any = any || log_b(static_cast<ClassId>(c), t) != kLogZero;
    }
    if (!any) {
      throw Error(ErrorCode::kValidation,
                  "class " + inv_.Class(static_cast<ClassId>(c)).name +
                      " has no tag with nonzero probability");
    }
  }
}

double JointLogProb(const HmmParams &params, std::span<const ClassId> classes,
                    std::span<const TagId> tags, ProbMode mode) {
  if (classes.size() != tags.size() || classes.empty()) {
    throw Error(ErrorCode::kLengthMismatch,
                "class and tag sequences must have the same nonzero length");
  }
  const Inventory &inv = params.inventory();
  double lp = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!inv.ClassHasTag(classes[i], tags[i])) {
      throw Error(ErrorCode::kTagNotInClass,
                  inv.TagName(tags[i]) + " is not in " +
                      inv.Class(classes[i]).name);
    }
    if (i == 0) {
      if (mode != ProbMode::kMiddle) lp += params.log_pi(tags[0]);
    } else {
      lp += params.log_a(tags[i - 1], tags[i]);
    }
    lp += params.log_b(classes[i], tags[i]);
  }
  return lp;
}

std::vector<TagId> Viterbi(const HmmParams &params,
                           std::span<const ClassId> classes, ProbMode mode) {
  const std::size_t n = classes.size();
  if (n == 0) {
    throw Error(ErrorCode::kLengthMismatch, "empty class sequence");
  }
  const Inventory &inv = params.inventory();
  // Flat trellis: candidates of position i live in [start[i], start[i+1]).
  std::vector<std::size_t> start(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    start[i + 1] = start[i] + inv.Class(classes[i]).sorted_tags.size();
  }
  std::vector<double> delta(start[n]);
  std::vector<std::size_t> back(start[n], 0);
  std::size_t widest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    widest = std::max(widest, inv.Class(classes[i]).sorted_tags.size());
  }
  std::vector<double> scratch(widest);

  {
    const auto &cand = inv.Class(classes[0]).sorted_tags;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      double init = mode == ProbMode::kMiddle ? 0.0 : params.log_pi(cand[k]);
      delta[k] = init + params.log_b(classes[0], cand[k]);
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    const auto &prev = inv.Class(classes[i - 1]).sorted_tags;
    const auto &cand = inv.Class(classes[i]).sorted_tags;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      for (std::size_t j = 0; j < prev.size(); ++j) {
        scratch[j] = delta[start[i - 1] + j] + params.log_a(prev[j], cand[k]);
      }
      const std::size_t arg = LowestNearMax(scratch.data(), prev.size());
      delta[start[i] + k] = scratch[arg] + params.log_b(classes[i], cand[k]);
      back[start[i] + k] = arg;
    }
  }

  const auto &last = inv.Class(classes[n - 1]).sorted_tags;
  std::size_t arg = LowestNearMax(&delta[start[n - 1]], last.size());
  if (delta[start[n - 1] + arg] == kLogZero) {
    throw Error(ErrorCode::kNoPath, "every tag sequence has zero probability");
  }
  std::vector<TagId> tags(n);
  for (std::size_t i = n; i-- > 0;) {
    tags[i] = inv.Class(classes[i]).sorted_tags[arg];
    arg = back[start[i] + arg];
  }
  return tags;
}

BarrierSplit SplitAtBarriers(const Inventory &inv,
                             std::span<const ClassId> classes) {
  if (classes.empty() || !inv.IsUnambiguous(classes.back())) {
    throw Error(ErrorCode::kNoTerminalBarrier,
                "class sequence must end with an unambiguous class");
  }
  BarrierSplit split;
  std::size_t i = 0;
  while (!inv.IsUnambiguous(classes[i])) ++i;
  split.initial.assign(classes.begin(), classes.begin() + i + 1);
  std::size_t barrier = i;
  for (std::size_t j = i + 1; j < classes.size(); ++j) {
    if (!inv.IsUnambiguous(classes[j])) continue;
    split.middles.emplace_back(classes.begin() + barrier,
                               classes.begin() + j + 1);
    barrier = j;
  }
  return split;
}

ClassId AddUnknownClass(Inventory *inv,
                        const std::vector<TrainingSentence> &corpus) {
  if (auto existing = inv->FindClass(kUnknownClassName)) return *existing;
  std::unordered_map<std::string, std::size_t> freq;
  for (const auto &sentence : corpus) {
    for (const auto &tok : sentence) ++freq[tok.word];
  }
  std::vector<bool> seen(inv->num_tags(), false);
  for (const auto &sentence : corpus) {
    for (const auto &tok : sentence) {
      if (freq[tok.word] == 1) seen[ToIndex(tok.tag)] = true;
    }
  }
  std::vector<TagId> tags;
  for (std::size_t t = 0; t < seen.size(); ++t) {
    if (seen[t]) tags.push_back(static_cast<TagId>(t));
  }
  if (tags.empty()) {
    for (std::size_t t = 0; t < inv->num_tags(); ++t) {
      tags.push_back(static_cast<TagId>(t));
    }
  }
  return inv->AddClass(kUnknownClassName, std::move(tags));
}

HmmParams TrainFromTagged(const Inventory &inv, ClassId sentence_end,
                          const std::vector<TrainingSentence> &corpus,
                          const TrainOptions &options) {
  std::size_t num_tokens = 0;
  for (const auto &s : corpus) num_tokens += s.size();
  if (num_tokens == 0) {
    throw Error(ErrorCode::kEmptyCorpus, "training corpus has no tokens");
  }
  const std::size_t nt = inv.num_tags();
  const std::size_t nc = inv.num_classes();
  const double eps = options.smoothing;
  const std::optional<ClassId> unknown = inv.FindClass(kUnknownClassName);

  std::unordered_map<std::string, std::size_t> freq;
  if (unknown) {
    for (const auto &s : corpus) {
      for (const auto &tok : s) ++freq[tok.word];
    }
  }

  std::vector<double> pi_count(nt, 0), a_count(nt * nt, 0),
      b_count(nc * nt, 0);
  for (const auto &s : corpus) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto &tok = s[i];
      if (!inv.ClassHasTag(tok.cls, tok.tag)) {
        throw Error(ErrorCode::kTagNotInClass,
                    "token '" + tok.word + "' tagged " +
                        inv.TagName(tok.tag) + " outside its class " +
                        inv.Class(tok.cls).name);
      }
      if (i == 0) {
        pi_count[ToIndex(tok.tag)] += 1;
      } else {
        a_count[ToIndex(s[i - 1].tag) * nt + ToIndex(tok.tag)] += 1;
      }
      b_count[ToIndex(tok.cls) * nt + ToIndex(tok.tag)] += 1;
      if (unknown && *unknown != tok.cls && freq[tok.word] == 1 &&
          inv.ClassHasTag(*unknown, tok.tag)) {
        b_count[ToIndex(*unknown) * nt + ToIndex(tok.tag)] += 1;
      }
    }
  }

  HmmParams params(inv, sentence_end);
  // Normalizes `counts[i] + eps` over the entries flagged in `member`;
  // uniform over members when there is no mass at all.
  auto normalize = [eps](std::vector<double> counts,
                         const std::vector<bool> &member) {
    double total = 0;
    std::size_t members = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (!member[i]) continue;
      counts[i] += eps;
      total += counts[i];
      ++members;
    }
    std::vector<double> out(counts.size(), kLogZero);
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (!member[i]) continue;
      if (total > 0) {
        out[i] = counts[i] > 0 ? std::log(counts[i] / total) : kLogZero;
      } else {
        out[i] = -std::log(static_cast<double>(members));
      }
    }
    return out;
  };

  std::vector<bool> all_tags(nt, true);
  auto pi = normalize(pi_count, all_tags);
  for (std::size_t t = 0; t < nt; ++t) {
    params.set_log_pi(static_cast<TagId>(t), pi[t]);
  }
  for (std::size_t p = 0; p < nt; ++p) {
    std::vector<double> row(a_count.begin() + p * nt,
                            a_count.begin() + (p + 1) * nt);
    auto lp = normalize(row, all_tags);
    for (std::size_t t = 0; t < nt; ++t) {
      params.set_log_a(static_cast<TagId>(p), static_cast<TagId>(t), lp[t]);
    }
  }
  for (std::size_t t = 0; t < nt; ++t) {
    std::vector<double> column(nc);
    std::vector<bool> member(nc);
    for (std::size_t c = 0; c < nc; ++c) {
      column[c] = b_count[c * nt + t];
      member[c] = inv.ClassHasTag(static_cast<ClassId>(c),
                                  static_cast<TagId>(t));
    }
    auto lb = normalize(column, member);
    for (std::size_t c = 0; c < nc; ++c) {
      params.set_log_b(static_cast<ClassId>(c), static_cast<TagId>(t), lb[c]);
    }
  }
  params.Validate();
  return params;
}

}  // namespace hmmfst
