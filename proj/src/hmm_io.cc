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

#include "hmmfst/hmm_io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "hmmfst/error.h"

namespace hmmfst {
namespace {

std::string FormatProb(double log_p) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", std::exp(log_p));
  return buf;
}

double ParseProb(const std::string &text, std::size_t line_no) {
  std::size_t used = 0;
  double p = 0;
  try {
    p = std::stod(text, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used != text.size() || !(p >= 0.0) || p > 1.0 + 1e-12) {
    throw Error(ErrorCode::kValidation, "line " + std::to_string(line_no) +
                                            ": bad probability '" + text +
                                            "'");
  }
  return p > 0 ? std::log(p) : kLogZero;
}

std::vector<std::string> SplitComma(const std::string &s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

void WriteParams(std::ostream &os, const HmmParams &params) {
  const Inventory &inv = params.inventory();
  os << "TAGS";
  for (std::size_t t = 0; t < inv.num_tags(); ++t) {
    os << ' ' << inv.TagName(static_cast<TagId>(t));
  }
  os << '\n';
  for (std::size_t c = 0; c < inv.num_classes(); ++c) {
    const auto &cls = inv.Class(static_cast<ClassId>(c));
    os << "CLASS " << cls.name << " = ";
    for (std::size_t i = 0; i < cls.tags.size(); ++i) {
      if (i > 0) os << ',';
      os << inv.TagName(cls.tags[i]);
    }
    os << '\n';
  }
  os << "SENT_END " << inv.Class(params.sentence_end_class()).name << '\n';
  for (std::size_t t = 0; t < inv.num_tags(); ++t) {
    TagId tag = static_cast<TagId>(t);
    if (params.log_pi(tag) == kLogZero) continue;
    os << "PI " << inv.TagName(tag) << ' ' << FormatProb(params.log_pi(tag))
       << '\n';
  }
  for (std::size_t p = 0; p < inv.num_tags(); ++p) {
    for (std::size_t t = 0; t < inv.num_tags(); ++t) {
      double v = params.log_a(static_cast<TagId>(p), static_cast<TagId>(t));
      if (v == kLogZero) continue;
      os << "A " << inv.TagName(static_cast<TagId>(p)) << ' '
         << inv.TagName(static_cast<TagId>(t)) << ' ' << FormatProb(v)
         << '\n';
    }
  }
  for (std::size_t c = 0; c < inv.num_classes(); ++c) {
    const auto &cls = inv.Class(static_cast<ClassId>(c));
    for (TagId t : cls.tags) {
      double v = params.log_b(static_cast<ClassId>(c), t);
      if (v == kLogZero) continue;
      os << "B " << cls.name << ' ' << inv.TagName(t) << ' ' << FormatProb(v)
         << '\n';
    }
  }
}

HmmParams ReadParams(std::istream &is) {
  Inventory inv;
  std::optional<std::string> sent_end_name;
  struct Entry {
    char kind;
    std::string first, second;
    double log_p;
    std::size_t line_no;
  };
  std::vector<Entry> entries;
  bool have_tags = false;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string &msg) {
    throw Error(ErrorCode::kValidation,
                "line " + std::to_string(line_no) + ": " + msg);
  };
  auto tag_of = [&](const std::string &name) {
    auto t = inv.FindTag(name);
    if (!t) fail("unknown tag '" + name + "'");
    return *t;
  };

  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream in(line);
    std::string key;
    if (!(in >> key) || key[0] == '#') continue;
    if (key == "TAGS") {
      if (have_tags) fail("repeated TAGS line");
      have_tags = true;
      std::string t;
      while (in >> t) inv.AddTag(t);
    } else if (key == "CLASS") {
      std::string name, eq, list, extra;
      in >> name >> eq >> list;
      if (!in || eq != "=" || (in >> extra)) fail("malformed CLASS line");
      std::vector<TagId> tags;
      for (const auto &t : SplitComma(list)) tags.push_back(tag_of(t));
      inv.AddClass(name, std::move(tags));
    } else if (key == "SENT_END") {
      std::string name;
      if (!(in >> name)) fail("malformed SENT_END line");
      sent_end_name = name;
    } else if (key == "PI") {
      std::string t, p;
      if (!(in >> t >> p)) fail("malformed PI line");
      entries.push_back({'P', t, "", ParseProb(p, line_no), line_no});
    } else if (key == "A" || key == "B") {
      std::string x, y, p;
      if (!(in >> x >> y >> p)) fail("malformed " + key + " line");
      entries.push_back({key[0], x, y, ParseProb(p, line_no), line_no});
    } else {
      fail("unknown record '" + key + "'");
    }
  }
  if (!have_tags) {
    throw Error(ErrorCode::kValidation, "parameter file has no TAGS line");
  }
  if (!sent_end_name) {
    throw Error(ErrorCode::kValidation, "parameter file has no SENT_END");
  }
  auto sent_end = inv.FindClass(*sent_end_name);
  if (!sent_end) {
    throw Error(ErrorCode::kValidation,
                "unknown sentence-end class " + *sent_end_name);
  }
  HmmParams params(inv, *sent_end);
  for (const auto &e : entries) {
    line_no = e.line_no;
    if (e.kind == 'P') {
      params.set_log_pi(tag_of(e.first), e.log_p);
    } else if (e.kind == 'A') {
      params.set_log_a(tag_of(e.first), tag_of(e.second), e.log_p);
    } else {
      auto c = inv.FindClass(e.first);
      if (!c) fail("unknown class '" + e.first + "'");
      TagId t = tag_of(e.second);
      if (!inv.ClassHasTag(*c, t)) fail("tag outside its class");
      params.set_log_b(*c, t, e.log_p);
    }
  }
  params.Validate();
  return params;
}

void WriteParamsFile(const std::string &path, const HmmParams &params) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::kIo, "cannot write " + path);
  WriteParams(os, params);
  if (!os) throw Error(ErrorCode::kIo, "write failed for " + path);
}

HmmParams ReadParamsFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::kIo, "cannot read " + path);
  return ReadParams(is);
}

}  // namespace hmmfst
