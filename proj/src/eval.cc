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

#include "hmmfst/eval.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>

#include "hmmfst/error.h"
#include "hmmfst/ntype.h"
#include "hmmfst/stype.h"

namespace hmmfst {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Format(const char *fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

ClassCorpus ClassesOf(const std::vector<TrainingSentence> &corpus) {
  ClassCorpus out;
  out.reserve(corpus.size());
  for (const auto &s : corpus) {
    std::vector<ClassId> classes;
    classes.reserve(s.size());
    for (const auto &tok : s) classes.push_back(tok.cls);
    out.push_back(std::move(classes));
  }
  return out;
}

TagCorpus TagsOf(const std::vector<TrainingSentence> &corpus) {
  TagCorpus out;
  out.reserve(corpus.size());
  for (const auto &s : corpus) {
    std::vector<TagId> tags;
    tags.reserve(s.size());
    for (const auto &tok : s) tags.push_back(tok.tag);
    out.push_back(std::move(tags));
  }
  return out;
}

double Accuracy(const TagCorpus &predicted, const TagCorpus &reference) {
  if (predicted.size() != reference.size()) {
    throw Error(ErrorCode::kAlignmentMismatch,
                "corpora have " + std::to_string(predicted.size()) + " and " +
                    std::to_string(reference.size()) + " sentences");
  }
  std::size_t total = 0, correct = 0;
  for (std::size_t s = 0; s < predicted.size(); ++s) {
    if (predicted[s].size() != reference[s].size()) {
      throw Error(ErrorCode::kAlignmentMismatch,
                  "sentence " + std::to_string(s + 1) + " differs in length");
    }
    for (std::size_t i = 0; i < predicted[s].size(); ++i) {
      correct += predicted[s][i] == reference[s][i];
    }
    total += predicted[s].size();
  }
  if (total == 0) throw Error(ErrorCode::kEmptyCorpus, "no tokens to score");
  return static_cast<double>(correct) / static_cast<double>(total);
}

TagCorpus TagCorpusWith(const ClassTagger &tagger, const ClassCorpus &corpus) {
  TagCorpus out;
  out.reserve(corpus.size());
  for (const auto &s : corpus) out.push_back(tagger.Tag(s));
  return out;
}

std::vector<BenchmarkResult> Benchmark(std::span<const NamedTagger> taggers,
                                       const ClassCorpus &corpus,
                                       std::size_t runs) {
  runs = std::max<std::size_t>(runs, 3);
  std::size_t words = 0;
  for (const auto &s : corpus) words += s.size();
  std::vector<BenchmarkResult> results;
  for (const auto &named : taggers) {
    const TagCorpus reference = TagCorpusWith(*named.tagger, corpus);
    std::vector<double> times;
    for (std::size_t r = 0; r < runs; ++r) {
      TagCorpus out;
      out.reserve(corpus.size());
      auto start = Clock::now();
      for (const auto &s : corpus) out.push_back(named.tagger->Tag(s));
      times.push_back(SecondsSince(start));
      if (out != reference) {
        throw Error(ErrorCode::kOutputMismatch,
                    named.name + " changed its output between runs");
      }
    }
    std::sort(times.begin(), times.end());
    const double median = times[times.size() / 2];
    results.push_back({named.name, words, median,
                       median > 0 ? static_cast<double>(words) / median : 0});
  }
  return results;
}

SizeReport SizeOf(const Fst &fst) {
  return {static_cast<std::size_t>(fst.NumStates()), fst.NumArcs()};
}

std::vector<EvalReport> RunExperiment(
    const HmmParams &params, const std::vector<TrainingSentence> &train,
    const std::vector<TrainingSentence> &test,
    const ExperimentConfig &config) {
  const Inventory &inv = params.inventory();
  const ClassCorpus test_classes = ClassesOf(test);
  const TagCorpus gold = TagsOf(test);

  struct Built {
    std::string name;
    Fst fst;
    double seconds;
  };
  std::vector<Built> built;
  auto timed = [&](const std::string &name, auto build) {
    auto start = Clock::now();
    Fst fst = build();
    built.push_back({name, std::move(fst), SecondsSince(start)});
  };
  timed("n0", [&] { return BuildN0(params); });
  timed("n1", [&] { return BuildN1(params); });
  timed("s+n1(corpus,F=" + std::to_string(config.min_freq) + ")", [&] {
    auto sets = ExtractSubsequences(inv, ClassesOf(train), config.min_freq);
    return BuildCompletedSType(params, sets, NTypeOrder::kN1);
  });
  if (config.include_enumerated) {
    timed("s+n1(<=" + std::to_string(config.enumerate_length) + ")", [&] {
      auto sets = EnumerateSubsequences(inv, config.enumerate_length);
      return BuildCompletedSType(params, sets, NTypeOrder::kN1);
    });
  }

  HmmTagger hmm(params);
  std::vector<FstTagger> fst_taggers;
  fst_taggers.reserve(built.size());
  for (const auto &b : built) fst_taggers.emplace_back(b.fst);

  std::vector<NamedTagger> named{{"HMM", &hmm}};
  for (std::size_t i = 0; i < built.size(); ++i) {
    named.push_back({built[i].name, &fst_taggers[i]});
  }
  auto speeds = Benchmark(named, test_classes, config.bench_runs);

  const TagCorpus viterbi = TagCorpusWith(hmm, test_classes);
  std::vector<EvalReport> reports;
  for (std::size_t i = 0; i < named.size(); ++i) {
    EvalReport r;
    r.tagger = named[i].name;
    TagCorpus predicted = TagCorpusWith(*named[i].tagger, test_classes);
    r.accuracy = Accuracy(predicted, gold);
    r.agreement_with_hmm = Accuracy(predicted, viterbi);
    r.speed = speeds[i].words_per_second;
    if (i > 0) {
      r.size = SizeOf(built[i - 1].fst);
      r.build_time = built[i - 1].seconds;
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

void WriteReportTable(std::ostream &os, std::span<const EvalReport> reports) {
  std::size_t width = 6;
  for (const auto &r : reports) width = std::max(width, r.tagger.size());
  char line[256];
  std::snprintf(line, sizeof(line), "%-*s %9s %9s %12s %9s %9s %9s\n",
                static_cast<int>(width), "tagger", "accuracy", "agree",
                "words/sec", "states", "arcs", "build_s");
  os << line;
  for (const auto &r : reports) {
    std::string states = r.size ? std::to_string(r.size->states) : "-";
    std::string arcs = r.size ? std::to_string(r.size->arcs) : "-";
    std::string build = r.size ? Format("%.3f", r.build_time) : "-";
    std::snprintf(line, sizeof(line),
                  "%-*s %8.2f%% %8.2f%% %12.0f %9s %9s %9s\n",
                  static_cast<int>(width), r.tagger.c_str(),
                  100 * r.accuracy, 100 * r.agreement_with_hmm, r.speed,
                  states.c_str(), arcs.c_str(), build.c_str());
    os << line;
  }
}

void WriteReportLines(std::ostream &os, std::span<const EvalReport> reports) {
  for (const auto &r : reports) {
    os << "accuracy\t" << r.tagger << '\t' << Format("%.6f", r.accuracy)
       << '\n';
    os << "agreement_with_hmm\t" << r.tagger << '\t'
       << Format("%.6f", r.agreement_with_hmm) << '\n';
    os << "words_per_second\t" << r.tagger << '\t' << Format("%.0f", r.speed)
       << '\n';
    if (r.size) {
      os << "states\t" << r.tagger << '\t' << r.size->states << '\n';
      os << "arcs\t" << r.tagger << '\t' << r.size->arcs << '\n';
      os << "build_seconds\t" << r.tagger << '\t'
         << Format("%.3f", r.build_time) << '\n';
    }
  }
}

}  // namespace hmmfst
