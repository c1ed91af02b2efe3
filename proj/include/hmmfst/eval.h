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

#ifndef HMMFST_EVAL_H_
#define HMMFST_EVAL_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hmmfst/fst.h"
#include "hmmfst/hmm.h"
#include "hmmfst/tagger.h"

namespace hmmfst {

using TagCorpus = std::vector<std::vector<TagId>>;
using ClassCorpus = std::vector<std::vector<ClassId>>;

ClassCorpus ClassesOf(const std::vector<TrainingSentence> &corpus);
TagCorpus TagsOf(const std::vector<TrainingSentence> &corpus);

// Fraction of tokens whose predicted tag equals the reference tag. Every
// token counts, sentence-end tokens included. Throws AlignmentMismatch if
// the corpora differ in sentence count or any sentence length, and
// EmptyCorpus if there are no tokens.
double Accuracy(const TagCorpus &predicted, const TagCorpus &reference);

// Tags every sentence.
TagCorpus TagCorpusWith(const ClassTagger &tagger, const ClassCorpus &corpus);

struct NamedTagger {
  std::string name;
  const ClassTagger *tagger = nullptr;
};

struct BenchmarkResult {
  std::string name;
  std::size_t words = 0;
  double median_seconds = 0;
  double words_per_second = 0;
};

// Times each tagger over the whole class corpus `runs` times (at least
// three) after one untimed reference run, and reports the median.
// Throws OutputMismatch if a timed run differs from the reference run.
std::vector<BenchmarkResult> Benchmark(std::span<const NamedTagger> taggers,
                                       const ClassCorpus &corpus,
                                       std::size_t runs = 3);

struct SizeReport {
  std::size_t states = 0;
  std::size_t arcs = 0;
};
SizeReport SizeOf(const Fst &fst);

struct EvalReport {
  std::string tagger;
  double accuracy = 0;
  double agreement_with_hmm = 0;
  double speed = 0;
  // Absent for the HMM row.
  std::optional<SizeReport> size;
  double build_time = 0;
};

struct ExperimentConfig {
  std::size_t min_freq = 1;
  std::size_t enumerate_length = 2;
  std::size_t bench_runs = 3;
  bool include_enumerated = true;
};

// The five-row accuracy/speed/size table: HMM, n0, n1, s+n1 from the
// training corpus at min_freq, and s+n1 from enumerated subsequences.
// `params` is the model the transducers approximate; accuracy uses the
// test corpus tags and agreement uses Viterbi output under `params`.
std::vector<EvalReport> RunExperiment(
    const HmmParams &params, const std::vector<TrainingSentence> &train,
    const std::vector<TrainingSentence> &test,
    const ExperimentConfig &config = {});

// Aligned text table.
void WriteReportTable(std::ostream &os, std::span<const EvalReport> reports);
// One "metric<TAB>tagger<TAB>value" line per populated cell.
void WriteReportLines(std::ostream &os, std::span<const EvalReport> reports);

}  // namespace hmmfst

#endif  // HMMFST_EVAL_H_
