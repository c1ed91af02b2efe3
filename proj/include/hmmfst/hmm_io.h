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

#ifndef HMMFST_HMM_IO_H_
#define HMMFST_HMM_IO_H_

#include <iosfwd>
#include <string>

#include "hmmfst/hmm.h"

namespace hmmfst {

// Line-oriented parameter file:
//   TAGS t1 t2 ...
//   CLASS <name> = t_i,t_j,...
//   SENT_END <class name>
//   PI <tag> <p>
//   A <prev tag> <tag> <p>
//   B <class> <tag> <p>
// Probabilities are plain decimals; omitted entries are zero. Lines
// starting with '#' are comments. Reading validates the model.
void WriteParams(std::ostream &os, const HmmParams &params);
HmmParams ReadParams(std::istream &is);

void WriteParamsFile(const std::string &path, const HmmParams &params);
HmmParams ReadParamsFile(const std::string &path);

}  // namespace hmmfst

#endif  // HMMFST_HMM_IO_H_
