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

#include "hmmfst/inventory.h"

#include <algorithm>

#include "hmmfst/error.h"

namespace hmmfst {

TagId Inventory::AddTag(const std::string &name) {
  if (name.empty() || tag_index_.count(name)) {
    throw Error(ErrorCode::kValidation,
                "duplicate or empty tag '" + name + "'");
  }
  TagId id = static_cast<TagId>(tag_names_.size());
  tag_names_.push_back(name);
  tag_index_.emplace(name, id);
  return id;
}

ClassId Inventory::AddClass(const std::string &name, std::vector<TagId> tags) {
  if (name.empty() || class_index_.count(name)) {
    throw Error(ErrorCode::kValidation,
                "duplicate or empty class '" + name + "'");
  }
  if (tags.empty()) {
    throw Error(ErrorCode::kValidation, "class " + name + " has no tags");
  }
  std::vector<TagId> sorted = tags;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kValidation, "class " + name + " repeats a tag");
  }
  if (ToIndex(sorted.back()) >= tag_names_.size()) {
    throw Error(ErrorCode::kValidation,
                "class " + name + " references an unknown tag");
  }
  ClassId id = static_cast<ClassId>(classes_.size());
  classes_.push_back(AmbiguityClass{name, std::move(tags), std::move(sorted)});
  class_index_.emplace(name, id);
  return id;
}

bool Inventory::ClassHasTag(ClassId c, TagId t) const {
  const auto &sorted = Class(c).sorted_tags;
  return std::binary_search(sorted.begin(), sorted.end(), t);
}

std::optional<TagId> Inventory::FindTag(std::string_view name) const {
  auto it = tag_index_.find(std::string(name));
  if (it == tag_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ClassId> Inventory::FindClass(std::string_view name) const {
  auto it = class_index_.find(std::string(name));
  if (it == class_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ClassId> Inventory::FindClassByTags(
    std::vector<TagId> tags) const {
  std::sort(tags.begin(), tags.end());
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].sorted_tags == tags) return static_cast<ClassId>(i);
  }
  return std::nullopt;
}

std::vector<ClassId> Inventory::UnambiguousClasses() const {
  std::vector<ClassId> out;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].unambiguous()) out.push_back(static_cast<ClassId>(i));
  }
  return out;
}

std::vector<ClassId> Inventory::AmbiguousClasses() const {
  std::vector<ClassId> out;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (!classes_[i].unambiguous()) out.push_back(static_cast<ClassId>(i));
  }
  return out;
}

std::string Inventory::BracketName(std::span<const TagId> tags) const {
  std::string out = "[";
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (i > 0) out += ',';
    out += TagName(tags[i]);
  }
  out += ']';
  return out;
}

bool Inventory::operator==(const Inventory &other) const {
  if (tag_names_ != other.tag_names_) return false;
  if (classes_.size() != other.classes_.size()) return false;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].name != other.classes_[i].name ||
        classes_[i].tags != other.classes_[i].tags) {
      return false;
    }
  }
  return true;
}

}  // namespace hmmfst
