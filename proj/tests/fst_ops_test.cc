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

#include "hmmfst/fst_ops.h"

#include <initializer_list>
#include <vector>

#include "algebra_check.h"
#include "gtest/gtest.h"
#include "hmmfst/error.h"
#include "oracle.h"

namespace hmmfst {
namespace {

using oracle::LanguageOf;
using oracle::PairLanguage;
using oracle::PairString;
using oracle::PairStrings;
using oracle::Relation;
using oracle::RelationOf;
using oracle::String;

const Symbol kX = Symbol::Class(ClassId{0});
const Symbol kY = Symbol::Class(ClassId{1});
const Symbol kZ = Symbol::Class(ClassId{2});
const Symbol kEps = Symbol::Epsilon();

// One chain of arcs per pair string, all sharing the initial state.
Fst FromPairs(std::initializer_list<PairString> strings) {
  Fst fst;
  for (const PairString &p : strings) {
    StateId s = fst.initial();
    for (const auto &[in, out] : p) {
      StateId t = fst.AddState();
      fst.AddArc(s, in, out, t);
      s = t;
    }
    fst.SetFinal(s);
  }
  return fst;
}

// Automaton accepting the given strings.
Fst FromStrings(std::initializer_list<String> strings) {
  Fst fst;
  for (const String &w : strings) {
    StateId s = fst.initial();
    for (Symbol x : w) {
      StateId t = fst.AddState();
      fst.AddArc(s, x, x, t);
      s = t;
    }
    fst.SetFinal(s);
  }
  return fst;
}

Fst EmptyLanguage() { return Fst(); }

TEST(UnionTest, Examples) {
  Fst xy = FromPairs({{{kX, kY}}});
  EXPECT_EQ(PairStrings(Union(xy, EmptyLanguage()), 4),
            PairStrings(xy, 4));
  Fst xz = FromPairs({{{kX, kZ}}});
  EXPECT_EQ(PairStrings(Union(xy, xz), 1),
            (PairLanguage{{{kX, kY}}, {{kX, kZ}}}));
  EXPECT_EQ(PairStrings(Union(xy, xy), 4), PairStrings(xy, 4));
}

TEST(ConcatTest, Examples) {
  Fst x = FromStrings({{kX}});
  Fst y = FromStrings({{kY}});
  EXPECT_EQ(LanguageOf(Concat(x, y), 4), (std::set<String>{{kX, kY}}));
  EXPECT_TRUE(LanguageOf(Concat(x, EmptyLanguage()), 4).empty());
  Fst x_xy = FromStrings({{kX}, {kX, kY}});
  EXPECT_EQ(LanguageOf(Concat(x_xy, y), 3),
            (std::set<String>{{kX, kY}, {kX, kY, kY}}));
}

TEST(KleeneStarTest, Examples) {
  auto star = LanguageOf(KleeneStar(FromStrings({{kX}})), 2);
  EXPECT_TRUE(star.count({}));
  EXPECT_TRUE(star.count({kX}));
  EXPECT_TRUE(star.count({kX, kX}));
  EXPECT_EQ(LanguageOf(KleeneStar(EmptyLanguage()), 3),
            (std::set<String>{{}}));
  Relation r = RelationOf(KleeneStar(FromPairs({{{kX, kY}}})), 2);
  EXPECT_TRUE(r.count({{kX, kX}, {kY, kY}}));
}

TEST(CrossPairTest, Examples) {
  const Symbol c_det = Symbol::Class(ClassId{0});
  const Symbol c_adjnoun = Symbol::Class(ClassId{1});
  const Symbol t_det = Symbol::Tag(TagId{0});
  const Symbol t_adj = Symbol::Tag(TagId{1});
  std::vector<Symbol> classes{c_det, c_adjnoun};
  std::vector<Symbol> tags{t_det, t_adj};
  EXPECT_EQ(PairStrings(CrossPair(classes, tags), 4),
            (PairLanguage{{{c_det, t_det}, {c_adjnoun, t_adj}}}));

  std::vector<Symbol> one{kX};
  Fst single = CrossPair(one, one);
  EXPECT_EQ(single.NumStates(), 2);
  EXPECT_EQ(single.NumArcs(), 1u);

  std::vector<Symbol> three{kX, kY, kZ};
  EXPECT_EQ(CrossPair(three, three).NumStates(), 4);

  std::vector<Symbol> two{kX, kY};
  try {
    CrossPair(three, two);
    FAIL() << "unequal lengths accepted";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(ComposeTest, Examples) {
  Fst xy = FromPairs({{{kX, kY}}});
  Fst yz = FromPairs({{{kY, kZ}}});
  EXPECT_EQ(RelationOf(Compose(xy, yz), 3), (Relation{{{kX}, {kZ}}}));

  Fst r = FromPairs({{{kX, kY}, {kY, kZ}}, {{kZ, kEps}}});
  Fst id = IdentityOf(FromStrings({{kX}, {kY}, {kZ}}));
  Fst id_star = KleeneStar(id);
  EXPECT_EQ(RelationOf(Compose(r, id_star), 4), RelationOf(r, 4));

  // Deleting m from x m x.
  const Symbol m = Symbol::MarkedClass(ClassId{0});
  Fst path = IdentityOf(FromStrings({{kX, m, kX}}));
  Fst del = KleeneStar(Union(FromPairs({{{m, kEps}}}),
                             FromPairs({{{kX, kX}}})));
  EXPECT_EQ(RelationOf(Compose(path, del), 3),
            (Relation{{{kX, m, kX}, {kX, kX}}}));
}

TEST(ComposeTest, EpsilonSidesDoNotDuplicatePaths) {
  Fst r = FromPairs({{{kX, kEps}, {kEps, kY}}});
  Fst q = FromPairs({{{kEps, kZ}, {kY, kY}}});
  Fst c = Compose(r, q);
  Relation expected{{{kX}, {kZ, kY}}};
  EXPECT_EQ(RelationOf(c, 4), expected);
  // Exactly one accepting path per relation member.
  EXPECT_EQ(PairStrings(Connect(c), 6).size(), 1u);
}

TEST(DeterminizePairsTest, Examples) {
  Fst parallel;
  StateId f1 = parallel.AddState();
  StateId f2 = parallel.AddState();
  parallel.AddArc(0, kX, kY, f1);
  parallel.AddArc(0, kX, kY, f2);
  parallel.SetFinal(f1);
  parallel.SetFinal(f2);
  Fst det = DeterminizePairs(parallel);
  EXPECT_EQ(det.NumArcs(), 1u);
  EXPECT_EQ(PairStrings(det, 2), PairStrings(parallel, 2));

  const Symbol a = Symbol::Class(ClassId{3});
  Fst shared = FromPairs({{{kX, kY}, {a, kZ}}, {{kX, kY}, {a, kX}}});
  Fst d = DeterminizePairs(shared);
  EXPECT_TRUE(IsPairDeterministic(d));
  EXPECT_FALSE(IsPairDeterministic(shared));
  EXPECT_EQ(PairStrings(d, 3), PairStrings(shared, 3));
  EXPECT_EQ(d.Arcs(d.initial()).size(), 1u);
  EXPECT_EQ(d.Arcs(d.Arcs(d.initial())[0].next).size(), 2u);

  Fst again = DeterminizePairs(d);
  EXPECT_LE(again.NumStates(), d.NumStates());
  EXPECT_EQ(PairStrings(again, 3), PairStrings(d, 3));
}

TEST(MinimizeTest, Examples) {
  Fst two_finals;
  StateId f1 = two_finals.AddState();
  StateId f2 = two_finals.AddState();
  two_finals.AddArc(0, kX, kX, f1);
  two_finals.AddArc(0, kY, kY, f2);
  two_finals.SetFinal(f1);
  two_finals.SetFinal(f2);
  Fst min = Minimize(two_finals);
  EXPECT_EQ(min.NumStates(), 2);
  EXPECT_EQ(LanguageOf(min, 4), LanguageOf(two_finals, 4));
  EXPECT_FALSE(oracle::HasEquivalentStates(min));

  Fst again = Minimize(min);
  EXPECT_EQ(again.NumStates(), min.NumStates());
  EXPECT_EQ(again.NumArcs(), min.NumArcs());

  Fst nondet = FromPairs({{{kX, kY}}, {{kX, kY}, {kX, kZ}}});
  try {
    Minimize(nondet);
    FAIL() << "nondeterministic input accepted";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotDeterministic);
  }
}

TEST(ProjectTest, Examples) {
  Fst xy = FromPairs({{{kX, kY}}});
  EXPECT_EQ(PairStrings(Project(xy, Side::kUpper), 2),
            (PairLanguage{{{kX, kX}}}));
  EXPECT_EQ(PairStrings(Project(xy, Side::kLower), 2),
            (PairLanguage{{{kY, kY}}}));
  Fst zx = FromPairs({{{kZ, kEps}, {kY, kX}}});
  EXPECT_EQ(LanguageOf(Project(Union(xy, zx), Side::kLower), 3),
            (std::set<String>{{kY}, {kX}}));
  EXPECT_TRUE(Project(zx, Side::kUpper).IsAutomaton());
}

TEST(DifferenceTest, Examples) {
  EXPECT_EQ(LanguageOf(Difference(FromStrings({{kX}, {kY}}),
                                  FromStrings({{kY}})),
                       3),
            (std::set<String>{{kX}}));
  Fst a = FromStrings({{kX, kY}, {kZ}});
  EXPECT_EQ(LanguageOf(Difference(a, EmptyLanguage()), 3), LanguageOf(a, 3));
  Fst x_star = KleeneStar(FromStrings({{kX}}));
  EXPECT_EQ(LanguageOf(Difference(FromStrings({{kX}, {kX, kX}, {kX, kY}}),
                                  x_star),
                       3),
            (std::set<String>{{kX, kY}}));
  try {
    Difference(FromPairs({{{kX, kY}}}), a);
    FAIL() << "relation accepted";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAutomaton);
  }
}

TEST(NotContainsFactorTest, Examples) {
  const Symbol p = kX, q = kY, m = kZ;
  std::vector<Symbol> factor{q, m};
  Fst nf = NotContainsFactor(factor, {p, q, m});
  auto lang = LanguageOf(nf, 3);
  EXPECT_TRUE(lang.count({p, q}));
  EXPECT_TRUE(lang.count({m, p}));
  EXPECT_FALSE(lang.count({q, m}));
  EXPECT_FALSE(lang.count({p, q, m}));
  EXPECT_TRUE(lang.count({}));
  EXPECT_TRUE(lang.count({q}));
}

TEST(DeleteMarkedTest, Examples) {
  const Symbol c_det0 = Symbol::MarkedClass(ClassId{0});
  const Symbol c_adjnoun = Symbol::Class(ClassId{1});
  const Symbol t_det0 = Symbol::MarkedTag(TagId{0});
  const Symbol t_adj = Symbol::Tag(TagId{1});
  Fst path = FromPairs({{{c_det0, t_det0}, {c_adjnoun, t_adj}}});
  Fst upper = DeleteMarked(path, Side::kUpper, {c_det0, t_det0});
  EXPECT_EQ(RelationOf(upper, 3),
            (Relation{{{c_adjnoun}, {t_det0, t_adj}}}));
  Fst both = DeleteMarked(upper, Side::kLower, {c_det0, t_det0});
  EXPECT_EQ(RelationOf(both, 3), (Relation{{{c_adjnoun}, {t_adj}}}));

  Fst plain = FromPairs({{{kX, kY}, {kZ, kZ}}});
  EXPECT_EQ(RelationOf(DeleteMarked(plain, Side::kUpper, {c_det0}), 3),
            RelationOf(plain, 3));
}

TEST(OneLevelTest, Examples) {
  Fst ab = FromPairs({{{kX, kY}}});
  const Symbol atom = Symbol::Pair(kX, kY);
  EXPECT_EQ(PairStrings(OneLevel(ab), 2), (PairLanguage{{{atom, atom}}}));
  Fst r = FromPairs({{{kX, kY}, {kEps, kZ}}, {{kZ, kZ}}});
  EXPECT_EQ(PairStrings(TwoLevel(OneLevel(r)), 3), PairStrings(r, 3));
  const Symbol aa = Symbol::Pair(kX, kX);
  EXPECT_EQ(PairStrings(OneLevel(FromStrings({{kX}})), 2),
            (PairLanguage{{{aa, aa}}}));

  try {
    OneLevel(OneLevel(ab));
    FAIL() << "pair atoms accepted";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedAlphabet);
  }
  EXPECT_THROW(TwoLevel(ab), Error);
}

TEST(InputDeterminismTest, Examples) {
  Fst branch = FromPairs({{{kX, kY}}, {{kX, kZ}}});
  EXPECT_FALSE(IsInputDeterministic(branch));
  EXPECT_EQ(FindInputNondeterminism(branch), branch.initial());
  EXPECT_TRUE(IsInputDeterministic(Fst()));
  EXPECT_TRUE(IsInputDeterministic(FromPairs({{{kX, kY}}, {{kY, kY}}})));
  Fst eps = FromPairs({{{kEps, kY}}, {{kX, kY}}});
  EXPECT_FALSE(IsInputDeterministic(eps));
}

TEST(RemoveEpsilonsTest, DropsSilentArcs) {
  Fst fst = FromPairs({{{kX, kY}}});
  StateId extra = fst.AddState();
  fst.AddArc(1, kEps, kEps, extra);
  fst.AddArc(extra, kZ, kZ, 1);
  Fst clean = RemoveEpsilons(fst);
  EXPECT_FALSE(clean.HasEpsilonPairs());
  EXPECT_EQ(RelationOf(clean, 4), RelationOf(fst, 4));
}

TEST(AlgebraPropertyTest, RandomOperandsMatchOracles) {
  const auto failures = testing::CheckAlgebra(/*seed=*/11, /*pairs=*/40,
                                              /*max_len=*/5);
  for (const auto &f : failures) ADD_FAILURE() << f;
}

}  // namespace
}  // namespace hmmfst
