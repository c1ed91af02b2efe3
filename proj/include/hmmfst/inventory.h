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

#ifndef HMMFST_INVENTORY_H_
#define HMMFST_INVENTORY_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hmmfst/symbol.h"

namespace hmmfst {

// An ambiguity class: the set of tags a word form can bear. `tags` keeps
// the declared order; `sorted_tags` is the same set in TagId order.
struct AmbiguityClass {
  std::string name;
  std::vector<TagId> tags;
  std::vector<TagId> sorted_tags;

  bool unambiguous() const { return tags.size() == 1; }
};

// Interned tag and class names. Ids are dense and follow declaration
// order. Distinct classes may share tags.
class Inventory {
 public:
  // Throws Validation on a duplicate name.
  TagId AddTag(const std::string &name);
  // Throws Validation on a duplicate name, an empty or repeated tag list,
  // or an unknown tag.
  ClassId AddClass(const std::string &name, std::vector<TagId> tags);

  std::size_t num_tags() const { return tag_names_.size(); }
  std::size_t num_classes() const { return classes_.size(); }

  const std::string &TagName(TagId t) const { return tag_names_[ToIndex(t)]; }
  const AmbiguityClass &Class(ClassId c) const {
    return classes_[ToIndex(c)];
  }
  bool IsUnambiguous(ClassId c) const { return Class(c).unambiguous(); }
  bool ClassHasTag(ClassId c, TagId t) const;

  std::optional<TagId> FindTag(std::string_view name) const;
  std::optional<ClassId> FindClass(std::string_view name) const;
  // First class whose tag set equals `tags` (any order).
  std::optional<ClassId> FindClassByTags(std::vector<TagId> tags) const;

  std::vector<ClassId> UnambiguousClasses() const;
  std::vector<ClassId> AmbiguousClasses() const;

  // "[T1,T2,...]" in the given order.
  std::string BracketName(std::span<const TagId> tags) const;

  bool operator==(const Inventory &other) const;

 private:
  std::vector<std::string> tag_names_;
  std::vector<AmbiguityClass> classes_;
  std::unordered_map<std::string, TagId> tag_index_;
  std::unordered_map<std::string, ClassId> class_index_;
};

}  // namespace hmmfst

#endif  // HMMFST_INVENTORY_H_
