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

#ifndef HMMFST_TAGGER_H_
#define HMMFST_TAGGER_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hmmfst/apply.h"
#include "hmmfst/fst.h"
#include "hmmfst/hmm.h"

namespace hmmfst {

// Word form to ambiguity class. Each known form has exactly one class.
class Lexicon {
 public:
  // Throws Validation if `word` is already mapped to a different class.
  void Add(const std::string &word, ClassId cls);
  std::optional<ClassId> Find(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }
  // Entries in word order.
  std::vector<std::pair<std::string, ClassId>> Entries() const;

 private:
  std::unordered_map<std::string, ClassId> entries_;
};

// Longest-suffix class guesser for words missing from the lexicon.
class Guesser {
 public:
  // Throws Validation on an empty suffix or a suffix mapped twice.
  void Add(const std::string &suffix, ClassId cls);
  // Class of the longest stored suffix of `word`, if any.
  std::optional<ClassId> Find(std::string_view word) const;
  std::size_t size() const { return rules_.size(); }
  std::size_t max_suffix_length() const { return max_len_; }
  const std::map<std::string, ClassId> &rules() const { return rules_; }

  // Keeps every suffix of length 1..max_len (shorter than the word itself)
  // whose lexicon words all share one class and number at least
  // `min_support`.
  static Guesser Compile(const Lexicon &lexicon, std::size_t max_len = 5,
                         std::size_t min_support = 2);

 private:
  std::map<std::string, ClassId> rules_;
  std::size_t max_len_ = 0;
};

// Lexicon hit, else longest guesser suffix, else `unknown`.
ClassId Classify(const Lexicon &lexicon, const Guesser &guesser,
                 ClassId unknown, std::string_view word);

// "word<TAB>class-name" / "suffix<TAB>class-name" per line. Readers throw
// Validation on malformed lines or unknown classes; the file variants
// throw IoError when the file cannot be opened.
void WriteLexicon(std::ostream &os, const Lexicon &lexicon,
                  const Inventory &inv);
Lexicon ReadLexicon(std::istream &is, const Inventory &inv);
void WriteGuesser(std::ostream &os, const Guesser &guesser,
                  const Inventory &inv);
Guesser ReadGuesser(std::istream &is, const Inventory &inv);
void WriteLexiconFile(const std::string &path, const Lexicon &lexicon,
                      const Inventory &inv);
Lexicon ReadLexiconFile(const std::string &path, const Inventory &inv);
void WriteGuesserFile(const std::string &path, const Guesser &guesser,
                      const Inventory &inv);
Guesser ReadGuesserFile(const std::string &path, const Inventory &inv);

// Maps a class sequence to a tag sequence of the same length.
class ClassTagger {
 public:
  virtual ~ClassTagger() = default;
  virtual std::vector<TagId> Tag(std::span<const ClassId> classes) const = 0;
};

// Exact Viterbi decoding.
class HmmTagger : public ClassTagger {
 public:
  explicit HmmTagger(const HmmParams &params) : params_(params) {}
  std::vector<TagId> Tag(std::span<const ClassId> classes) const override;

 private:
  const HmmParams &params_;
};

// Application of a class:tag transducer. Throws NoPath for a class
// sequence outside its upper language and Validation if an output is not
// a tag or the output length differs from the input length.
class FstTagger : public ClassTagger {
 public:
  explicit FstTagger(Fst fst) : matcher_(std::move(fst)) {}
  std::vector<TagId> Tag(std::span<const ClassId> classes) const override;
  const Matcher &matcher() const { return matcher_; }

 private:
  Matcher matcher_;
};

struct TaggedWord {
  std::string word;
  ClassId cls;
  TagId tag;
};

// Tags one buffered sentence and zips the result with its words. Throws
// LengthMismatch if `words` and `classes` differ in length.
std::vector<TaggedWord> TagSentence(const ClassTagger &tagger,
                                    std::span<const ClassId> classes,
                                    std::span<const std::string> words);

struct StreamContext {
  const ClassTagger *tagger = nullptr;
  const Lexicon *lexicon = nullptr;
  const Guesser *guesser = nullptr;
  // Class of words missing from lexicon and guesser. Without one, such a
  // word raises Validation.
  std::optional<ClassId> unknown;
  ClassId sentence_end{};
  bool show_classes = false;
};

struct StreamStats {
  std::size_t sentences = 0;
  std::size_t words = 0;
  // Unterminated trailing sentences flushed with a synthetic end token.
  std::size_t warnings = 0;
};

// Reads one token per line (blank lines are ignored), buffers words until
// one classifies to the sentence-end class, and writes each tagged
// sentence as "word<TAB>tag" (or "word<TAB>class<TAB>tag") lines followed
// by a blank line. A trailing unterminated buffer is tagged with a
// synthetic end token that is not written. NoPath is rethrown with the
// 1-based sentence index in its message; IoError on a failed write.
StreamStats TagStream(const StreamContext &ctx, const Inventory &inv,
                      std::istream &in, std::ostream &out);

// Tab-separated rows grouped into sentences at blank lines.
using TabularCorpus = std::vector<std::vector<std::vector<std::string>>>;
TabularCorpus ReadTabular(std::istream &is);

// "word<TAB>class<TAB>tag" rows, one blank line after each sentence.
void WriteAnnotatedCorpus(std::ostream &os,
                          const std::vector<TrainingSentence> &corpus,
                          const Inventory &inv);
// Reads the three-column form. Throws Validation on unknown names,
// wrong column counts, or a tag outside its class.
std::vector<TrainingSentence> ReadAnnotatedCorpus(std::istream &is,
                                                  const Inventory &inv);

struct TrainedTagger {
  HmmParams params;
  Lexicon lexicon;
  Guesser guesser;
};

// Builds the class inventory from the tags observed per word form in a
// "word<TAB>tag" corpus (a three-column corpus contributes its first and
// last columns), adds the [UNKNOWN] class, compiles the guesser and
// trains the HMM. Sentences end at blank lines and after every token
// tagged `sentence_end_tag`; when that is empty, the tag of the final
// token is used. Throws EmptyCorpus or Validation.
TrainedTagger TrainFromWordTags(const TabularCorpus &corpus,
                                const std::string &sentence_end_tag = "",
                                const TrainOptions &options = {});

}  // namespace hmmfst

#endif  // HMMFST_TAGGER_H_
