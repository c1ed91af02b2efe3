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

#ifndef HMMFST_SYMBOL_H_
#define HMMFST_SYMBOL_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace hmmfst {

// Dense indices into the tag and class inventories.
enum class TagId : std::uint32_t {};
enum class ClassId : std::uint32_t {};

constexpr std::size_t ToIndex(TagId t) { return static_cast<std::size_t>(t); }
constexpr std::size_t ToIndex(ClassId c) {
  return static_cast<std::size_t>(c);
}

enum class SymbolKind : std::uint8_t {
  kEpsilon = 0,
  kClass = 1,
  kMarkedClass = 2,
  kTag = 3,
  kMarkedTag = 4,
  kOther = 5,
  kPair = 6,
};

// An alphabet member. Atomic symbols pack (kind, id) into 32 bits; a pair
// atom stores its two atomic components side by side and sets the top bit,
// so pairs never nest. Marked variants are distinct kinds, not decorated
// names. The packed code gives a total order with epsilon smallest.
class Symbol {
 public:
  constexpr Symbol() = default;

  static constexpr Symbol Epsilon() { return Symbol(); }
  static constexpr Symbol Class(ClassId c) {
    return Atom(SymbolKind::kClass, static_cast<std::uint32_t>(c));
  }
  static constexpr Symbol MarkedClass(ClassId c) {
    return Atom(SymbolKind::kMarkedClass, static_cast<std::uint32_t>(c));
  }
  static constexpr Symbol Tag(TagId t) {
    return Atom(SymbolKind::kTag, static_cast<std::uint32_t>(t));
  }
  static constexpr Symbol MarkedTag(TagId t) {
    return Atom(SymbolKind::kMarkedTag, static_cast<std::uint32_t>(t));
  }
  static constexpr Symbol Other() { return Atom(SymbolKind::kOther, 0); }
  // Throws MalformedAlphabet if a component is itself a pair or both are
  // epsilon.
  static Symbol Pair(Symbol upper, Symbol lower);

  constexpr SymbolKind kind() const {
    if (code_ >> 63) return SymbolKind::kPair;
    return static_cast<SymbolKind>(code_ >> kIdBits);
  }
  // Id of an atomic symbol (class or tag index).
  constexpr std::uint32_t id() const {
    return static_cast<std::uint32_t>(code_ & kIdMask);
  }
  constexpr ClassId class_id() const { return static_cast<ClassId>(id()); }
  constexpr TagId tag_id() const { return static_cast<TagId>(id()); }

  // Components of a pair atom.
  constexpr Symbol upper() const {
    return Symbol((code_ >> 32) & 0x7fffffffULL);
  }
  constexpr Symbol lower() const { return Symbol(code_ & 0xffffffffULL); }

  constexpr bool is_epsilon() const { return code_ == 0; }
  constexpr bool is_pair() const { return kind() == SymbolKind::kPair; }
  constexpr bool is_marked() const {
    return kind() == SymbolKind::kMarkedClass ||
           kind() == SymbolKind::kMarkedTag;
  }

  // Marked <-> unmarked variant of a class or tag symbol; other symbols are
  // returned unchanged.
  Symbol Marked() const;
  Symbol Unmarked() const;

  constexpr std::uint64_t code() const { return code_; }

  friend constexpr auto operator<=>(Symbol, Symbol) = default;

 private:
  static constexpr int kIdBits = 29;
  static constexpr std::uint64_t kIdMask = (1ULL << kIdBits) - 1;

  constexpr explicit Symbol(std::uint64_t code) : code_(code) {}
  static constexpr Symbol Atom(SymbolKind kind, std::uint32_t id) {
    return Symbol((static_cast<std::uint64_t>(kind) << kIdBits) |
                  (id & kIdMask));
  }

  std::uint64_t code_ = 0;
};

struct SymbolHash {
  std::size_t operator()(Symbol s) const {
    std::uint64_t x = s.code() * 0x9e3779b97f4a7c15ULL;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};

}  // namespace hmmfst

template <>
struct std::hash<hmmfst::Symbol> : hmmfst::SymbolHash {};

#endif  // HMMFST_SYMBOL_H_
