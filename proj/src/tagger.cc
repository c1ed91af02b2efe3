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

#include "hmmfst/tagger.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "hmmfst/error.h"

namespace hmmfst {
namespace {

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == '\t') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

bool IsBlank(const std::string &line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Reads "key<TAB>class-name" lines into `add`.
template <typename AddFn>
void ReadClassTable(std::istream &is, const Inventory &inv, const char *what,
                    AddFn add) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    auto fields = SplitTabs(line);
    if (fields.size() != 2 || fields[0].empty()) {
      throw Error(ErrorCode::kValidation, std::string(what) + " line " +
                                              std::to_string(line_no) +
                                              ": expected key<TAB>class");
    }
    auto cls = inv.FindClass(fields[1]);
    if (!cls) {
      throw Error(ErrorCode::kValidation,
                  std::string(what) + " line " + std::to_string(line_no) +
                      ": unknown class '" + fields[1] + "'");
    }
    add(fields[0], *cls);
  }
}

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

}  // namespace

void Lexicon::Add(const std::string &word, ClassId cls) {
  auto [it, inserted] = entries_.emplace(word, cls);
  if (!inserted && it->second != cls) {
    throw Error(ErrorCode::kValidation,
                "word '" + word + "' mapped to two classes");
  }
}

std::optional<ClassId> Lexicon::Find(std::string_view word) const {
  auto it = entries_.find(std::string(word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::string, ClassId>> Lexicon::Entries() const {
  std::vector<std::pair<std::string, ClassId>> out(entries_.begin(),
                                                   entries_.end());
  std::sort(out.begin(), out.end());
  return out;
}

void Guesser::Add(const std::string &suffix, ClassId cls) {
  if (suffix.empty()) {
    throw Error(ErrorCode::kValidation, "empty guesser suffix");
  }
  if (!rules_.emplace(suffix, cls).second) {
    throw Error(ErrorCode::kValidation,
                "guesser suffix '" + suffix + "' listed twice");
  }
  max_len_ = std::max(max_len_, suffix.size());
}

std::optional<ClassId> Guesser::Find(std::string_view word) const {
  for (std::size_t len = std::min(max_len_, word.size()); len > 0; --len) {
    auto it = rules_.find(std::string(word.substr(word.size() - len)));
    if (it != rules_.end()) return it->second;
  }
  return std::nullopt;
}

Guesser Guesser::Compile(const Lexicon &lexicon, std::size_t max_len,
                         std::size_t min_support) {
  struct Stat {
    ClassId cls;
    std::size_t support = 0;
    bool consistent = true;
  };
  std::map<std::string, Stat> stats;
  for (const auto &[word, cls] : lexicon.Entries()) {
    for (std::size_t len = 1; len <= max_len && len < word.size(); ++len) {
      auto [it, inserted] =
          stats.try_emplace(word.substr(word.size() - len), Stat{cls});
      Stat &s = it->second;
      if (s.cls != cls) s.consistent = false;
      ++s.support;
    }
  }
  Guesser guesser;
  for (const auto &[suffix, s] : stats) {
    if (s.consistent && s.support >= min_support) guesser.Add(suffix, s.cls);
  }
  return guesser;
}

ClassId Classify(const Lexicon &lexicon, const Guesser &guesser,
                 ClassId unknown, std::string_view word) {
  if (auto c = lexicon.Find(word)) return *c;
  if (auto c = guesser.Find(word)) return *c;
  return unknown;
}

void WriteLexicon(std::ostream &os, const Lexicon &lexicon,
                  const Inventory &inv) {
  for (const auto &[word, cls] : lexicon.Entries()) {
    os << word << '\t' << inv.Class(cls).name << '\n';
  }
}

Lexicon ReadLexicon(std::istream &is, const Inventory &inv) {
  Lexicon lexicon;
  ReadClassTable(is, inv, "lexicon", [&](const std::string &w, ClassId c) {
    lexicon.Add(w, c);
  });
  return lexicon;
}

void WriteGuesser(std::ostream &os, const Guesser &guesser,
                  const Inventory &inv) {
  for (const auto &[suffix, cls] : guesser.rules()) {
    os << suffix << '\t' << inv.Class(cls).name << '\n';
  }
}

Guesser ReadGuesser(std::istream &is, const Inventory &inv) {
  Guesser guesser;
  ReadClassTable(is, inv, "guesser", [&](const std::string &s, ClassId c) {
    guesser.Add(s, c);
  });
  return guesser;
}

void WriteLexiconFile(const std::string &path, const Lexicon &lexicon,
                      const Inventory &inv) {
  auto os = OpenOut(path);
  WriteLexicon(os, lexicon, inv);
  if (!os) throw Error(ErrorCode::kIo, "write failed for " + path);
}

Lexicon ReadLexiconFile(const std::string &path, const Inventory &inv) {
  auto is = OpenIn(path);
  return ReadLexicon(is, inv);
}

void WriteGuesserFile(const std::string &path, const Guesser &guesser,
                      const Inventory &inv) {
  auto os = OpenOut(path);
  WriteGuesser(os, guesser, inv);
  if (!os) throw Error(ErrorCode::kIo, "write failed for " + path);
}

Guesser ReadGuesserFile(const std::string &path, const Inventory &inv) {
  auto is = OpenIn(path);
  return ReadGuesser(is, inv);
}

std::vector<TagId> HmmTagger::Tag(std::span<const ClassId> classes) const {
  return Viterbi(params_, classes, ProbMode::kWhole);
}

std::vector<TagId> FstTagger::Tag(std::span<const ClassId> classes) const {
  std::vector<Symbol> input;
  input.reserve(classes.size());
  for (ClassId c : classes) input.push_back(Symbol::Class(c));
  std::vector<Symbol> output = matcher_.Apply(input);
  if (output.size() != classes.size()) {
    throw Error(ErrorCode::kValidation,
                "transducer output length differs from input length");
  }
  std::vector<TagId> tags;
  tags.reserve(output.size());
  for (Symbol s : output) {
    if (s.kind() != SymbolKind::kTag) {
      throw Error(ErrorCode::kValidation, "transducer emitted a non-tag");
    }
    tags.push_back(s.tag_id());
  }
  return tags;
}

std::vector<TaggedWord> TagSentence(const ClassTagger &tagger,
                                    std::span<const ClassId> classes,
                                    std::span<const std::string> words) {
  if (classes.size() != words.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "sentence has different numbers of words and classes");
  }
  std::vector<TagId> tags = tagger.Tag(classes);
  std::vector<TaggedWord> out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    out.push_back({words[i], classes[i], tags[i]});
  }
  return out;
}

StreamStats TagStream(const StreamContext &ctx, const Inventory &inv,
                      std::istream &in, std::ostream &out) {
  StreamStats stats;
  std::vector<std::string> words;
  std::vector<ClassId> classes;

  auto flush = [&](bool synthetic_end) {
    std::vector<TaggedWord> tagged;
    try {
      if (synthetic_end) {
        classes.push_back(ctx.sentence_end);
        words.emplace_back();
      }
      tagged = TagSentence(*ctx.tagger, classes, words);
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kNoPath) throw;
      throw Error(ErrorCode::kNoPath, "sentence " +
                                          std::to_string(stats.sentences + 1) +
                                          ": " + e.what());
    }
    if (synthetic_end) tagged.pop_back();
    for (const auto &w : tagged) {
      out << w.word << '\t';
      if (ctx.show_classes) out << inv.Class(w.cls).name << '\t';
      out << inv.TagName(w.tag) << '\n';
    }
    out << '\n';
    if (!out) throw Error(ErrorCode::kIo, "write failed");
    ++stats.sentences;
    stats.words += tagged.size();
    words.clear();
    classes.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (IsBlank(line)) continue;
    std::string word = SplitTabs(line).front();
    ClassId cls;
    if (ctx.unknown) {
      cls = Classify(*ctx.lexicon, *ctx.guesser, *ctx.unknown, word);
    } else if (auto known = ctx.lexicon->Find(word)) {
      cls = *known;
    } else if (auto guessed = ctx.guesser->Find(word)) {
      cls = *guessed;
    } else {
      throw Error(ErrorCode::kValidation,
                  "unknown word '" + word + "' and no [UNKNOWN] class");
    }
    words.push_back(std::move(word));
    classes.push_back(cls);
    if (cls == ctx.sentence_end) flush(false);
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed");
  if (!words.empty()) {
    flush(true);
    ++stats.warnings;
  }
  return stats;
}

TabularCorpus ReadTabular(std::istream &is) {
  TabularCorpus corpus;
  std::vector<std::vector<std::string>> sentence;
  std::string line;
  while (std::getline(is, line)) {
    if (IsBlank(line)) {
      if (!sentence.empty()) corpus.push_back(std::move(sentence));
      sentence.clear();
      continue;
    }
    sentence.push_back(SplitTabs(line));
  }
  if (is.bad()) throw Error(ErrorCode::kIo, "read failed");
  if (!sentence.empty()) corpus.push_back(std::move(sentence));
  return corpus;
}

void WriteAnnotatedCorpus(std::ostream &os,
                          const std::vector<TrainingSentence> &corpus,
                          const Inventory &inv) {
  for (const auto &sentence : corpus) {
    for (const auto &tok : sentence) {
      os << tok.word << '\t' << inv.Class(tok.cls).name << '\t'
         << inv.TagName(tok.tag) << '\n';
    }
    os << '\n';
  }
}

std::vector<TrainingSentence> ReadAnnotatedCorpus(std::istream &is,
                                                  const Inventory &inv) {
  std::vector<TrainingSentence> corpus;
  for (const auto &rows : ReadTabular(is)) {
    TrainingSentence sentence;
    for (const auto &row : rows) {
      if (row.size() != 3) {
        throw Error(ErrorCode::kValidation,
                    "expected word<TAB>class<TAB>tag, got " +
                        std::to_string(row.size()) + " columns");
      }
      auto cls = inv.FindClass(row[1]);
      auto tag = inv.FindTag(row[2]);
      if (!cls || !tag) {
        throw Error(ErrorCode::kValidation,
                    "unknown class or tag in '" + row[0] + "' row");
      }
      if (!inv.ClassHasTag(*cls, *tag)) {
        throw Error(ErrorCode::kValidation,
                    "tag " + row[2] + " is not in class " + row[1]);
      }
      sentence.push_back({row[0], *cls, *tag});
    }
    corpus.push_back(std::move(sentence));
  }
  return corpus;
}

TrainedTagger TrainFromWordTags(const TabularCorpus &corpus,
                                const std::string &sentence_end_tag,
                                const TrainOptions &options) {
  Inventory inv;
  std::vector<std::vector<std::pair<std::string, TagId>>> sentences;
  std::map<std::string, std::set<TagId>> word_tags;
  std::string end_name = sentence_end_tag;
  if (end_name.empty() && !corpus.empty()) {
    const auto &row = corpus.back().back();
    if (row.size() < 2) {
      throw Error(ErrorCode::kValidation, "expected word<TAB>tag rows");
    }
    end_name = row.back();
  }
  for (const auto &rows : corpus) {
    std::vector<std::pair<std::string, TagId>> sentence;
    for (const auto &row : rows) {
      if (row.size() < 2 || row.size() > 3) {
        throw Error(ErrorCode::kValidation, "expected word<TAB>tag rows");
      }
      auto tag = inv.FindTag(row.back());
      if (!tag) tag = inv.AddTag(row.back());
      sentence.emplace_back(row.front(), *tag);
      word_tags[row.front()].insert(*tag);
      if (row.back() == end_name) {
        sentences.push_back(std::move(sentence));
        sentence.clear();
      }
    }
    if (!sentence.empty()) sentences.push_back(std::move(sentence));
  }
  if (sentences.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "training corpus has no tokens");
  }
  auto end_tag = inv.FindTag(end_name);
  if (!end_tag) {
    throw Error(ErrorCode::kValidation,
                "sentence-end tag " + end_name + " does not occur");
  }

  std::map<std::string, ClassId> word_class;
  for (const auto &[word, tags] : word_tags) {
    std::vector<TagId> sorted(tags.begin(), tags.end());
    auto cls = inv.FindClassByTags(sorted);
    if (!cls) cls = inv.AddClass(inv.BracketName(sorted), sorted);
    word_class[word] = *cls;
  }
  auto sentence_end = inv.FindClassByTags({*end_tag});
  if (!sentence_end) {
    throw Error(ErrorCode::kValidation,
                "no word is tagged only " + end_name);
  }

  std::vector<TrainingSentence> training;
  training.reserve(sentences.size());
  for (const auto &sentence : sentences) {
    TrainingSentence out;
    for (const auto &[word, tag] : sentence) {
      out.push_back({word, word_class[word], tag});
    }
    training.push_back(std::move(out));
  }
  AddUnknownClass(&inv, training);

  Lexicon lexicon;
  for (const auto &[word, cls] : word_class) lexicon.Add(word, cls);
  Guesser guesser = Guesser::Compile(lexicon);
  HmmParams params = TrainFromTagged(inv, *sentence_end, training, options);
  return TrainedTagger{std::move(params), std::move(lexicon),
                       std::move(guesser)};
}

}  // namespace hmmfst
