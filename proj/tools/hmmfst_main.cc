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

// Command-line front end: train, build, tag, eval, bench, gen, inspect.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hmmfst/error.h"
#include "hmmfst/eval.h"
#include "hmmfst/fst_io.h"
#include "hmmfst/fst_ops.h"
#include "hmmfst/hmm_io.h"
#include "hmmfst/ntype.h"
#include "hmmfst/stype.h"
#include "hmmfst/synthetic.h"
#include "hmmfst/tagger.h"

namespace hmmfst {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

std::ifstream OpenIn(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::kIo, "cannot read " + path);
  return is;
}

std::ofstream OpenOut(const std::string &path) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::kIo, "cannot write " + path);
  return os;
}

TabularCorpus ReadTabularFile(const std::string &path) {
  auto is = OpenIn(path);
  return ReadTabular(is);
}

std::vector<TrainingSentence> ReadAnnotatedFile(const std::string &path,
                                                const Inventory &inv) {
  auto is = OpenIn(path);
  return ReadAnnotatedCorpus(is, inv);
}

// Class sequences of a corpus. With a lexicon every word is classified;
// without one the rows must be word<TAB>class<TAB>tag and the class column
// is used. Sentences end after each sentence-end class and at blank lines;
// an unterminated sentence gets a sentence-end class appended.
ClassCorpus CorpusClasses(const TabularCorpus &corpus,
                          const HmmParams &params, const Lexicon *lexicon,
                          const Guesser *guesser) {
  const Inventory &inv = params.inventory();
  const ClassId end = params.sentence_end_class();
  const auto unknown = inv.FindClass(kUnknownClassName);
  ClassCorpus out;
  for (const auto &rows : corpus) {
    std::vector<ClassId> sentence;
    for (const auto &row : rows) {
      std::optional<ClassId> cls;
      if (lexicon == nullptr) {
        if (row.size() != 3) {
          throw Error(ErrorCode::kValidation,
                      "corpus rows lack a class column; pass --lexicon");
        }
        cls = inv.FindClass(row[1]);
        if (!cls) {
          throw Error(ErrorCode::kValidation, "unknown class " + row[1]);
        }
      } else {
        cls = lexicon->Find(row[0]);
        if (!cls && guesser != nullptr) cls = guesser->Find(row[0]);
        if (!cls) cls = unknown;
        if (!cls) {
          throw Error(ErrorCode::kValidation, "cannot classify " + row[0]);
        }
      }
      sentence.push_back(*cls);
      if (*cls == end) out.push_back(std::move(sentence)), sentence.clear();
    }
    if (!sentence.empty()) {
      sentence.push_back(end);
      out.push_back(std::move(sentence));
    }
  }
  return out;
}

struct TrainArgs {
  std::string corpus, params_out, lexicon_out, guesser_out, sent_end;
  double smoothing = 0.001;
};

int RunTrain(const TrainArgs &a) {
  TrainOptions options;
  options.smoothing = a.smoothing;
  TrainedTagger trained =
      TrainFromWordTags(ReadTabularFile(a.corpus), a.sent_end, options);
  const Inventory &inv = trained.params.inventory();
  WriteParamsFile(a.params_out, trained.params);
  if (!a.lexicon_out.empty()) {
    WriteLexiconFile(a.lexicon_out, trained.lexicon, inv);
  }
  if (!a.guesser_out.empty()) {
    WriteGuesserFile(a.guesser_out, trained.guesser, inv);
  }
  std::cerr << "tags " << inv.num_tags() << ", classes " << inv.num_classes()
            << ", lexicon " << trained.lexicon.size() << ", guesser "
            << trained.guesser.size() << '\n';
  return kExitOk;
}

struct BuildArgs {
  std::string type, params, out, corpus, lexicon, guesser, dump;
  std::size_t min_freq = 1;
  std::size_t enumerate = 0;
};

int RunBuild(const BuildArgs &a) {
  HmmParams params = ReadParamsFile(a.params);
  const Inventory &inv = params.inventory();
  Fst fst;
  if (a.type == "n0" || a.type == "n1" || a.type == "n2") {
    NTypeOrder order = a.type == "n0"   ? NTypeOrder::kN0
                       : a.type == "n1" ? NTypeOrder::kN1
                                        : NTypeOrder::kN2;
    fst = BuildNType(params, order);
  } else {
    NTypeOrder fallback =
        a.type == "s+n0" ? NTypeOrder::kN0 : NTypeOrder::kN1;
    SubsequenceSets sets;
    if (a.enumerate > 0) {
      sets = EnumerateSubsequences(inv, a.enumerate);
    } else {
      if (a.corpus.empty()) {
        throw Error(ErrorCode::kValidation,
                    "s-type build needs --corpus or --enumerate");
      }
      std::optional<Lexicon> lexicon;
      std::optional<Guesser> guesser;
      if (!a.lexicon.empty()) lexicon = ReadLexiconFile(a.lexicon, inv);
      if (!a.guesser.empty()) guesser = ReadGuesserFile(a.guesser, inv);
      ClassCorpus classes =
          CorpusClasses(ReadTabularFile(a.corpus), params,
                        lexicon ? &*lexicon : nullptr,
                        guesser ? &*guesser : nullptr);
      sets = ExtractSubsequences(inv, classes, a.min_freq);
    }
    if (!a.dump.empty()) {
      std::vector<PairedSubsequence> paired;
      for (const auto &s : sets.initials) {
        paired.push_back(Disambiguate(params, s));
      }
      for (const auto &s : sets.middles) {
        paired.push_back(MarkExtension(Disambiguate(params, s)));
      }
      auto os = OpenOut(a.dump);
      WriteSubsequences(os, paired, inv);
    }
    fst = BuildCompletedSType(params, sets, fallback);
  }
  WriteFstFile(a.out, fst, inv);
  SizeReport size = SizeOf(fst);
  std::cerr << a.type << ": " << size.states << " states, " << size.arcs
            << " arcs\n";
  return kExitOk;
}

struct TagArgs {
  std::string params, model, lexicon, guesser, in = "-", out = "-";
  bool show_classes = false;
};

int RunTag(const TagArgs &a) {
  HmmParams params = ReadParamsFile(a.params);
  const Inventory &inv = params.inventory();
  Lexicon lexicon = ReadLexiconFile(a.lexicon, inv);
  Guesser guesser =
      a.guesser.empty() ? Guesser() : ReadGuesserFile(a.guesser, inv);
  std::unique_ptr<ClassTagger> tagger;
  if (a.model.empty()) {
    tagger = std::make_unique<HmmTagger>(params);
  } else {
    tagger = std::make_unique<FstTagger>(ReadFstFile(a.model, inv));
  }
  StreamContext ctx;
  ctx.tagger = tagger.get();
  ctx.lexicon = &lexicon;
  ctx.guesser = &guesser;
  ctx.unknown = inv.FindClass(kUnknownClassName);
  ctx.sentence_end = params.sentence_end_class();
  ctx.show_classes = a.show_classes;

  std::ifstream in_file;
  std::ofstream out_file;
  std::istream *in = &std::cin;
  std::ostream *out = &std::cout;
  if (a.in != "-") {
    in_file = OpenIn(a.in);
    in = &in_file;
  }
  if (a.out != "-") {
    out_file = OpenOut(a.out);
    out = &out_file;
  }
  StreamStats stats = TagStream(ctx, inv, *in, *out);
  out->flush();
  if (!*out) throw Error(ErrorCode::kIo, "write failed");
  std::cerr << stats.sentences << " sentences, " << stats.words << " words";
  if (stats.warnings > 0) {
    std::cerr << ", " << stats.warnings
              << " unterminated sentence flushed";
  }
  std::cerr << '\n';
  return kExitOk;
}

struct EvalArgs {
  std::string pred, gold, params, train, test, format = "table";
  std::size_t min_freq = 1;
  std::size_t enumerate = 2;
  std::size_t runs = 3;
  bool no_enumerated = false;
};

int RunEval(const EvalArgs &a) {
  if (!a.pred.empty() || !a.gold.empty()) {
    if (a.pred.empty() || a.gold.empty()) {
      throw Error(ErrorCode::kValidation, "--pred and --gold go together");
    }
    TabularCorpus pred = ReadTabularFile(a.pred);
    TabularCorpus gold = ReadTabularFile(a.gold);
    // Tags compared as strings; interned per call so the corpora need no
    // shared inventory.
    Inventory names;
    auto intern = [&](const TabularCorpus &c) {
      TagCorpus out;
      for (const auto &rows : c) {
        std::vector<TagId> tags;
        for (const auto &row : rows) {
          auto t = names.FindTag(row.back());
          tags.push_back(t ? *t : names.AddTag(row.back()));
        }
        out.push_back(std::move(tags));
      }
      return out;
    };
    TagCorpus p = intern(pred);
    TagCorpus g = intern(gold);
    std::printf("accuracy\t%.6f\n", Accuracy(p, g));
    return kExitOk;
  }
  if (a.params.empty() || a.train.empty() || a.test.empty()) {
    throw Error(ErrorCode::kValidation,
                "eval needs --pred/--gold or --params/--train/--test");
  }
  HmmParams params = ReadParamsFile(a.params);
  const Inventory &inv = params.inventory();
  ExperimentConfig config;
  config.min_freq = a.min_freq;
  config.enumerate_length = a.enumerate;
  config.bench_runs = a.runs;
  config.include_enumerated = !a.no_enumerated;
  auto reports = RunExperiment(params, ReadAnnotatedFile(a.train, inv),
                               ReadAnnotatedFile(a.test, inv), config);
  if (a.format == "table" || a.format == "both") {
    WriteReportTable(std::cout, reports);
  }
  if (a.format == "lines" || a.format == "both") {
    WriteReportLines(std::cout, reports);
  }
  return kExitOk;
}

struct BenchArgs {
  std::string params, corpus, lexicon, guesser;
  std::vector<std::string> models;
  std::size_t runs = 3;
};

int RunBench(const BenchArgs &a) {
  HmmParams params = ReadParamsFile(a.params);
  const Inventory &inv = params.inventory();
  std::optional<Lexicon> lexicon;
  std::optional<Guesser> guesser;
  if (!a.lexicon.empty()) lexicon = ReadLexiconFile(a.lexicon, inv);
  if (!a.guesser.empty()) guesser = ReadGuesserFile(a.guesser, inv);
  ClassCorpus corpus =
      CorpusClasses(ReadTabularFile(a.corpus), params,
                    lexicon ? &*lexicon : nullptr,
                    guesser ? &*guesser : nullptr);

  HmmTagger hmm(params);
  std::vector<std::unique_ptr<FstTagger>> owned;
  std::vector<NamedTagger> taggers{{"HMM", &hmm}};
  owned.push_back(std::make_unique<FstTagger>(BuildN0(params)));
  taggers.push_back({"n0", owned.back().get()});
  owned.push_back(std::make_unique<FstTagger>(BuildN1(params)));
  taggers.push_back({"n1", owned.back().get()});
  for (const auto &spec : a.models) {
    auto eq = spec.find('=');
    std::string name = eq == std::string::npos ? spec : spec.substr(0, eq);
    std::string path = eq == std::string::npos ? spec : spec.substr(eq + 1);
    owned.push_back(std::make_unique<FstTagger>(ReadFstFile(path, inv)));
    taggers.push_back({name, owned.back().get()});
  }
  auto results = Benchmark(taggers, corpus, a.runs);
  const double base = results.front().words_per_second;
  std::printf("%-16s %12s %10s %8s\n", "tagger", "words/sec", "median_s",
              "vs HMM");
  for (const auto &r : results) {
    std::printf("%-16s %12.0f %10.4f %7.2fx\n", r.name.c_str(),
                r.words_per_second, r.median_seconds,
                base > 0 ? r.words_per_second / base : 0.0);
  }
  return kExitOk;
}

struct GenArgs {
  std::string params, params_out, lexicon_out, corpus_out;
  std::size_t sentences = 0;
  std::size_t words = 0;
  std::uint64_t seed = 1;
  std::size_t tags = 12;
  std::size_t ambiguous = 20;
  std::size_t words_per_class = 40;
};

int RunGen(const GenArgs &a) {
  std::optional<HmmParams> params;
  if (!a.params.empty()) {
    params = ReadParamsFile(a.params);
  } else {
    SyntheticConfig config;
    config.num_tags = a.tags;
    config.num_ambiguous_classes = a.ambiguous;
    params = RandomParams(config, a.seed);
  }
  const Inventory &inv = params->inventory();
  if (!a.params_out.empty()) WriteParamsFile(a.params_out, *params);
  SyntheticLanguage language(inv, params->sentence_end_class(),
                             a.words_per_class);
  if (!a.lexicon_out.empty()) {
    WriteLexiconFile(a.lexicon_out, language.lexicon(), inv);
  }
  if (!a.corpus_out.empty()) {
    if ((a.sentences == 0) == (a.words == 0)) {
      throw Error(ErrorCode::kValidation,
                  "give exactly one of --sentences and --words");
    }
    auto corpus = a.words > 0
                      ? GenSyntheticWords(*params, language, a.words, a.seed)
                      : GenSynthetic(*params, language, a.sentences, a.seed);
    auto os = OpenOut(a.corpus_out);
    WriteAnnotatedCorpus(os, corpus, inv);
    if (!os) throw Error(ErrorCode::kIo, "write failed for " + a.corpus_out);
  }
  return kExitOk;
}

struct InspectArgs {
  std::string params, fst;
};

int RunInspect(const InspectArgs &a) {
  HmmParams params = ReadParamsFile(a.params);
  const Inventory &inv = params.inventory();
  if (a.fst.empty()) {
    std::printf("tags\t%zu\nclasses\t%zu\nunambiguous\t%zu\nsentence_end\t%s\n",
                inv.num_tags(), inv.num_classes(),
                inv.UnambiguousClasses().size(),
                inv.Class(params.sentence_end_class()).name.c_str());
    return kExitOk;
  }
  Fst fst = ReadFstFile(a.fst, inv);
  SizeReport size = SizeOf(fst);
  std::printf("states\t%zu\narcs\t%zu\n", size.states, size.arcs);
  std::printf("input_alphabet\t%zu\n", fst.InputAlphabet().size());
  std::printf("input_deterministic\t%s\n",
              IsInputDeterministic(fst) ? "yes" : "no");
  std::printf("pair_deterministic\t%s\n",
              IsPairDeterministic(fst) ? "yes" : "no");
  return kExitOk;
}

int Main(int argc, char **argv) {
  CLI::App app{"HMM to finite-state transducer tagging toolkit"};
  app.require_subcommand(1);

  TrainArgs train;
  auto *train_cmd = app.add_subcommand("train", "estimate an HMM tagger");
  train_cmd->add_option("--corpus", train.corpus, "word<TAB>tag corpus")
      ->required();
  train_cmd->add_option("--params-out", train.params_out, "model file")
      ->required();
  train_cmd->add_option("--lexicon-out", train.lexicon_out,
                        "word<TAB>class lexicon");
  train_cmd->add_option("--guesser-out", train.guesser_out,
                        "suffix<TAB>class rules");
  train_cmd->add_option("--sent-end", train.sent_end,
                        "sentence-end tag (default: tag of the last token)");
  train_cmd->add_option("--smoothing", train.smoothing, "additive count")
      ->capture_default_str();

  BuildArgs build;
  auto *build_cmd = app.add_subcommand("build", "build a tagging transducer");
  build_cmd->add_option("--type", build.type)
      ->required()
      ->check(CLI::IsMember({"n0", "n1", "n2", "s+n0", "s+n1"}));
  build_cmd->add_option("--params", build.params, "model file")->required();
  build_cmd->add_option("--out", build.out, "transducer file")->required();
  auto *corpus_opt = build_cmd->add_option(
      "--corpus", build.corpus, "extract subsequences from this corpus");
  auto *enum_opt = build_cmd->add_option("--enumerate", build.enumerate,
                                         "max subsequence length");
  corpus_opt->excludes(enum_opt);
  build_cmd->add_option("--min-freq", build.min_freq,
                        "drop rarer subsequences")
      ->capture_default_str();
  build_cmd->add_option("--lexicon", build.lexicon, "classify corpus words");
  build_cmd->add_option("--guesser", build.guesser, "suffix rules");
  build_cmd->add_option("--dump-subsequences", build.dump,
                        "write the disambiguated subsequences");

  TagArgs tag;
  auto *tag_cmd = app.add_subcommand("tag", "tag a one-token-per-line stream");
  tag_cmd->add_option("--params", tag.params, "model file")->required();
  tag_cmd->add_option("--lexicon", tag.lexicon, "word<TAB>class lexicon")
      ->required();
  tag_cmd->add_option("--guesser", tag.guesser, "suffix rules");
  tag_cmd->add_option("--model", tag.model,
                      "transducer file (default: HMM Viterbi)");
  tag_cmd->add_option("--in", tag.in, "input (- for stdin)")
      ->capture_default_str();
  tag_cmd->add_option("--out", tag.out, "output (- for stdout)")
      ->capture_default_str();
  tag_cmd->add_flag("--show-classes", tag.show_classes,
                    "print the class column");

  EvalArgs eval;
  auto *eval_cmd =
      app.add_subcommand("eval", "accuracy of a tagged file, or full report");
  eval_cmd->add_option("--pred", eval.pred, "tagged file to score");
  eval_cmd->add_option("--gold", eval.gold, "reference tagging");
  eval_cmd->add_option("--params", eval.params, "report: generating model");
  eval_cmd->add_option("--train", eval.train, "report: training corpus");
  eval_cmd->add_option("--test", eval.test, "report: held-out corpus");
  eval_cmd->add_option("--min-freq", eval.min_freq,
                       "report: subsequence frequency floor")
      ->capture_default_str();
  eval_cmd->add_option("--enumerate", eval.enumerate,
                       "report: enumeration length")
      ->capture_default_str();
  eval_cmd->add_flag("--no-enumerated", eval.no_enumerated,
                     "report: skip the enumerated model");
  eval_cmd->add_option("--runs", eval.runs, "report: timing runs")
      ->capture_default_str();
  eval_cmd->add_option("--format", eval.format, "report layout")
      ->capture_default_str()
      ->check(CLI::IsMember({"table", "lines", "both"}));

  BenchArgs bench;
  auto *bench_cmd = app.add_subcommand("bench", "tagging throughput");
  bench_cmd->add_option("--params", bench.params, "model file")->required();
  bench_cmd->add_option("--corpus", bench.corpus, "tabular corpus")->required();
  bench_cmd->add_option("--lexicon", bench.lexicon, "classify corpus words");
  bench_cmd->add_option("--guesser", bench.guesser, "suffix rules");
  bench_cmd->add_option("--model", bench.models, "NAME=FILE, repeatable");
  bench_cmd->add_option("--runs", bench.runs, "timed passes")
      ->capture_default_str();

  GenArgs gen;
  auto *gen_cmd = app.add_subcommand("gen", "synthetic model and corpus");
  gen_cmd->add_option("--params", gen.params, "sample from this model");
  gen_cmd->add_option("--params-out", gen.params_out, "model file");
  gen_cmd->add_option("--lexicon-out", gen.lexicon_out,
                      "word<TAB>class lexicon");
  gen_cmd->add_option("--corpus-out", gen.corpus_out,
                      "word<TAB>class<TAB>tag corpus");
  gen_cmd->add_option("--sentences", gen.sentences, "sentence count");
  gen_cmd->add_option("--words", gen.words, "minimum word count");
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--tags", gen.tags, "tag count including SENT")
      ->capture_default_str();
  gen_cmd->add_option("--ambiguous-classes", gen.ambiguous)
      ->capture_default_str();
  gen_cmd->add_option("--words-per-class", gen.words_per_class)
      ->capture_default_str();

  InspectArgs inspect;
  auto *inspect_cmd = app.add_subcommand("inspect", "summarize a model");
  inspect_cmd->add_option("--params", inspect.params, "model file")->required();
  inspect_cmd->add_option("--fst", inspect.fst, "transducer file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*train_cmd) return RunTrain(train);
    if (*build_cmd) return RunBuild(build);
    if (*tag_cmd) return RunTag(tag);
    if (*eval_cmd) return RunEval(eval);
    if (*bench_cmd) return RunBench(bench);
    if (*gen_cmd) return RunGen(gen);
    if (*inspect_cmd) return RunInspect(inspect);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kIo ? kExitIo : kExitValidation;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace
}  // namespace hmmfst

int main(int argc, char **argv) { return hmmfst::Main(argc, argv); }
