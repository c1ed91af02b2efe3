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

#ifndef HMMFST_FST_IO_H_
#define HMMFST_FST_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>

#include "hmmfst/fst.h"
#include "hmmfst/inventory.h"

namespace hmmfst {

// Text dump:
//   FST <#states> <#arcs> <initial>
//   F <state>                        one per final state
//   A <src> <in> <out> <dst>         one per arc
// Symbols print as c:<class>, mc:<class>, t:<tag>, mt:<tag>,
// p:<upper>|<lower>, _eps_ and _other_.
std::string SymbolToString(Symbol s, const Inventory &inv);
// Throws Validation on an unknown name or malformed token.
Symbol ParseSymbol(std::string_view text, const Inventory &inv);

void WriteFst(std::ostream &os, const Fst &fst, const Inventory &inv);
Fst ReadFst(std::istream &is, const Inventory &inv);

// File wrappers; throw IoError when the file cannot be opened.
void WriteFstFile(const std::string &path, const Fst &fst,
                  const Inventory &inv);
Fst ReadFstFile(const std::string &path, const Inventory &inv);

}  // namespace hmmfst

#endif  // HMMFST_FST_IO_H_
