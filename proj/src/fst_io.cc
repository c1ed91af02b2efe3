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

#include "hmmfst/fst_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "hmmfst/error.h"

namespace hmmfst {
namespace {

constexpr std::string_view kEpsilon = "_eps_";
constexpr std::string_view kOther = "_other_";

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

ClassId ParseClassName(std::string_view name, const Inventory &inv) {
  auto c = inv.FindClass(name);
  if (!c) {
    throw Error(ErrorCode::kValidation,
                "unknown class '" + std::string(name) + "'");
  }
  return *c;
}

TagId ParseTagName(std::string_view name, const Inventory &inv) {
  auto t = inv.FindTag(name);
  if (!t) {
    throw Error(ErrorCode::kValidation,
                "unknown tag '" + std::string(name) + "'");
  }
  return *t;
}

Symbol ParseAtom(std::string_view text, const Inventory &inv) {
  if (text == kEpsilon) return Symbol::Epsilon();
  if (text == kOther) return Symbol::Other();
  if (StartsWith(text, "mc:")) {
    return Symbol::MarkedClass(ParseClassName(text.substr(3), inv));
  }
  if (StartsWith(text, "c:")) {
    return Symbol::Class(ParseClassName(text.substr(2), inv));
  }
  if (StartsWith(text, "mt:")) {
    return Symbol::MarkedTag(ParseTagName(text.substr(3), inv));
  }
  if (StartsWith(text, "t:")) {
    return Symbol::Tag(ParseTagName(text.substr(2), inv));
  }
  throw Error(ErrorCode::kValidation,
              "malformed symbol '" + std::string(text) + "'");
}

}  // namespace

std::string SymbolToString(Symbol s, const Inventory &inv) {
  switch (s.kind()) {
    case SymbolKind::kEpsilon: return std::string(kEpsilon);
    case SymbolKind::kOther: return std::string(kOther);
    case SymbolKind::kClass: return "c:" + inv.Class(s.class_id()).name;
    case SymbolKind::kMarkedClass:
      return "mc:" + inv.Class(s.class_id()).name;
    case SymbolKind::kTag: return "t:" + inv.TagName(s.tag_id());
    case SymbolKind::kMarkedTag: return "mt:" + inv.TagName(s.tag_id());
    case SymbolKind::kPair:
      return "p:" + SymbolToString(s.upper(), inv) + "|" +
             SymbolToString(s.lower(), inv);
  }
  return "?";
}

Symbol ParseSymbol(std::string_view text, const Inventory &inv) {
  if (StartsWith(text, "p:")) {
    std::string_view body = text.substr(2);
    auto bar = body.find('|');
    if (bar == std::string_view::npos) {
      throw Error(ErrorCode::kValidation,
                  "pair symbol without '|': " + std::string(text));
    }
    return Symbol::Pair(ParseAtom(body.substr(0, bar), inv),
                        ParseAtom(body.substr(bar + 1), inv));
  }
  return ParseAtom(text, inv);
}

void WriteFst(std::ostream &os, const Fst &fst, const Inventory &inv) {
  os << "FST " << fst.NumStates() << ' ' << fst.NumArcs() << ' '
     << fst.initial() << '\n';
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    if (fst.IsFinal(s)) os << "F " << s << '\n';
  }
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    for (const Arc &a : fst.Arcs(s)) {
      os << "A " << s << ' ' << SymbolToString(a.input, inv) << ' '
         << SymbolToString(a.output, inv) << ' ' << a.next << '\n';
    }
  }
}

Fst ReadFst(std::istream &is, const Inventory &inv) {
  std::string line;
  if (!std::getline(is, line)) {
    throw Error(ErrorCode::kValidation, "empty transducer file");
  }
  std::istringstream header(line);
  std::string tag;
  long long num_states = -1, num_arcs = -1, initial = -1;
  header >> tag >> num_states >> num_arcs >> initial;
  if (tag != "FST" || !header || num_states < 1 || num_arcs < 0 ||
      initial < 0 || initial >= num_states) {
    throw Error(ErrorCode::kValidation, "bad header: " + line);
  }
  Fst fst;
  for (long long i = 1; i < num_states; ++i) fst.AddState();
  fst.SetInitial(static_cast<StateId>(initial));
  long long arcs_read = 0;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream in(line);
    std::string kind;
    in >> kind;
    if (kind == "F") {
      long long s = -1;
      in >> s;
      if (!in || s < 0 || s >= num_states) {
        throw Error(ErrorCode::kValidation,
                    "bad final line " + std::to_string(line_no));
      }
      fst.SetFinal(static_cast<StateId>(s));
    } else if (kind == "A") {
      long long src = -1, dst = -1;
      std::string isym, osym;
      in >> src >> isym >> osym >> dst;
      if (!in) {
        throw Error(ErrorCode::kValidation,
                    "bad arc line " + std::to_string(line_no));
      }
      fst.AddArc(static_cast<StateId>(src), ParseSymbol(isym, inv),
                 ParseSymbol(osym, inv), static_cast<StateId>(dst));
      ++arcs_read;
    } else {
      throw Error(ErrorCode::kValidation,
                  "unexpected line " + std::to_string(line_no) + ": " + line);
    }
  }
  if (arcs_read != num_arcs) {
    throw Error(ErrorCode::kValidation, "arc count does not match header");
  }
  return fst;
}

void WriteFstFile(const std::string &path, const Fst &fst,
                  const Inventory &inv) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::kIo, "cannot write " + path);
  WriteFst(os, fst, inv);
  if (!os) throw Error(ErrorCode::kIo, "write failed for " + path);
}

Fst ReadFstFile(const std::string &path, const Inventory &inv) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::kIo, "cannot read " + path);
  return ReadFst(is, inv);
}

}  // namespace hmmfst
