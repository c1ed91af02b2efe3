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

#include "hmmfst/hmm.h"

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "fixtures.h"
#include "gtest/gtest.h"
#include "hmmfst/error.h"
#include "hmmfst/hmm_io.h"
#include "oracle.h"

namespace hmmfst {
namespace {

class Toy3Test : public ::testing::Test {
 protected:
  void SetUp() override {
    const Inventory &inv = params_.inventory();
    det_ = *inv.FindTag("DET");
    adj_ = *inv.FindTag("ADJ");
    noun_ = *inv.FindTag("NOUN");
    c_det_ = *inv.FindClass("[DET]");
    c_an_ = *inv.FindClass("[ADJ,NOUN]");
    c_noun_ = *inv.FindClass("[NOUN]");
  }

  HmmParams params_ = testing::Toy3Params();
  TagId det_{}, adj_{}, noun_{};
  ClassId c_det_{}, c_an_{}, c_noun_{};
};

TEST_F(Toy3Test, ViterbiThreeWords) {
  std::vector<ClassId> c{c_det_, c_an_, c_noun_};
  std::vector<TagId> best = Viterbi(params_, c, ProbMode::kWhole);
  EXPECT_EQ(best, (std::vector<TagId>{det_, adj_, noun_}));
  EXPECT_NEAR(std::exp(JointLogProb(params_, c, best, ProbMode::kWhole)),
              0.108, 1e-12);
}

TEST_F(Toy3Test, ViterbiFourWords) {
  std::vector<ClassId> c{c_det_, c_an_, c_an_, c_noun_};
  std::vector<TagId> best = Viterbi(params_, c, ProbMode::kWhole);
  EXPECT_EQ(best, (std::vector<TagId>{det_, adj_, adj_, noun_}));
  EXPECT_NEAR(std::exp(JointLogProb(params_, c, best, ProbMode::kWhole)),
              0.0324, 1e-12);
}

TEST_F(Toy3Test, ViterbiLooksAhead) {
  std::vector<ClassId> c{c_noun_, c_an_, c_an_, c_noun_};
  std::vector<TagId> best = Viterbi(params_, c, ProbMode::kWhole);
  EXPECT_EQ(best, (std::vector<TagId>{noun_, adj_, adj_, noun_}));
  EXPECT_NEAR(std::exp(JointLogProb(params_, c, best, ProbMode::kWhole)),
              0.000648, 1e-12);
}

TEST_F(Toy3Test, MiddleModeDropsPi) {
  std::vector<ClassId> c{c_det_, c_an_, c_noun_};
  std::vector<TagId> t{det_, adj_, noun_};
  EXPECT_NEAR(JointLogProb(params_, c, t, ProbMode::kWhole) -
                  JointLogProb(params_, c, t, ProbMode::kMiddle),
              std::log(0.6), 1e-12);
  EXPECT_DOUBLE_EQ(JointLogProb(params_, c, t, ProbMode::kInitial),
                   JointLogProb(params_, c, t, ProbMode::kWhole));
}

TEST_F(Toy3Test, JointLogProbErrors) {
  std::vector<ClassId> c{c_det_, c_noun_};
  std::vector<TagId> one{det_};
  std::vector<TagId> bad{det_, adj_};
  try {
    JointLogProb(params_, c, one, ProbMode::kWhole);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
  try {
    JointLogProb(params_, c, bad, ProbMode::kWhole);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kTagNotInClass);
  }
  try {
    Viterbi(params_, std::vector<ClassId>{}, ProbMode::kWhole);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST_F(Toy3Test, ViterbiNoPath) {
  HmmParams p = params_;
  p.set_log_a(det_, noun_, kLogZero);
  p.set_log_a(det_, adj_, kLogZero);
  p.set_log_a(det_, det_, 0.0);
  try {
    Viterbi(p, std::vector<ClassId>{c_det_, c_noun_}, ProbMode::kWhole);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoPath);
  }
}

TEST_F(Toy3Test, ValidateRejectsImproperModels) {
  HmmParams bad_pi = params_;
  bad_pi.set_log_pi(det_, std::log(0.5));
  EXPECT_THROW(bad_pi.Validate(), Error);

  HmmParams outside = params_;
  outside.set_log_b(c_det_, noun_, std::log(0.1));
  EXPECT_THROW(outside.Validate(), Error);

  HmmParams ambiguous_end(params_.inventory(), c_an_);
  try {
    ambiguous_end.Validate();
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidation);
  }
  EXPECT_NO_THROW(params_.Validate());
}

TEST(ViterbiTest, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(3);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    HmmParams p = testing::RandomModel(rng, 5, 6);
    for (int k = 0; k < 10; ++k) {
      auto classes =
          testing::RandomSentence(rng, p.inventory().num_classes(),
                                  p.sentence_end_class(), 6);
      for (ProbMode mode : {ProbMode::kWhole, ProbMode::kMiddle}) {
        const bool with_pi = mode == ProbMode::kWhole;
        auto brute = oracle::EnumerateViterbi(p, classes, with_pi);
        auto best = Viterbi(p, classes, mode);
        EXPECT_NEAR(JointLogProb(p, classes, best, mode),
                    std::log(brute.best_prob), 1e-9);
        // The argmax is only unique when the runner-up is clearly worse.
        if (brute.second_prob < brute.best_prob * (1 - 1e-6)) {
          EXPECT_EQ(best, brute.best);
          ++compared;
        }
      }
    }
  }
  EXPECT_GT(compared, 700);
}

TEST(ViterbiTest, TiesGoToLowestTag) {
  Inventory inv;
  TagId a = inv.AddTag("A");
  TagId b = inv.AddTag("B");
  ClassId ab = inv.AddClass("[A,B]", {a, b});
  ClassId ca = inv.AddClass("[A]", {a});
  ClassId cb = inv.AddClass("[B]", {b});
  HmmParams p(inv, ca);
  for (TagId x : {a, b}) {
    p.set_log_pi(x, std::log(0.5));
    for (TagId y : {a, b}) p.set_log_a(x, y, std::log(0.5));
  }
  p.set_log_b(ab, a, std::log(0.5));
  p.set_log_b(ca, a, std::log(0.5));
  p.set_log_b(ab, b, std::log(0.5));
  p.set_log_b(cb, b, std::log(0.5));
  p.Validate();
  EXPECT_EQ(Viterbi(p, std::vector<ClassId>{ab, ab, ca}, ProbMode::kWhole),
            (std::vector<TagId>{a, a, a}));
  EXPECT_EQ(LowestNearMax(std::vector<double>{kLogZero, kLogZero}.data(), 2),
            0u);
  std::vector<double> near{-1.0, -0.5, -0.5 - 1e-12};
  EXPECT_EQ(LowestNearMax(near.data(), near.size()), 1u);
}

TEST(SplitAtBarriersTest, InitialAndExtendedMiddles) {
  HmmParams p = testing::Toy3Params();
  const Inventory &inv = p.inventory();
  ClassId d = *inv.FindClass("[DET]");
  ClassId an = *inv.FindClass("[ADJ,NOUN]");
  ClassId n = *inv.FindClass("[NOUN]");
  std::vector<ClassId> c{an, an, d, an, n, d, n};
  BarrierSplit split = SplitAtBarriers(inv, c);
  EXPECT_EQ(split.initial, (std::vector<ClassId>{an, an, d}));
  ASSERT_EQ(split.middles.size(), 3u);
  EXPECT_EQ(split.middles[0], (std::vector<ClassId>{d, an, n}));
  EXPECT_EQ(split.middles[1], (std::vector<ClassId>{n, d}));
  EXPECT_EQ(split.middles[2], (std::vector<ClassId>{d, n}));

  BarrierSplit single = SplitAtBarriers(inv, std::vector<ClassId>{n});
  EXPECT_EQ(single.initial, std::vector<ClassId>{n});
  EXPECT_TRUE(single.middles.empty());

  for (const std::vector<ClassId> &bad :
       {std::vector<ClassId>{}, std::vector<ClassId>{d, an}}) {
    try {
      SplitAtBarriers(inv, bad);
      FAIL();
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::kNoTerminalBarrier);
    }
  }
}

TEST(SplitAtBarriersTest, PiecesReassemble) {
  std::mt19937_64 rng(5);
  HmmParams p = testing::RandomModel(rng, 6, 8);
  for (int k = 0; k < 200; ++k) {
    auto c = testing::RandomSentence(rng, p.inventory().num_classes(),
                                     p.sentence_end_class(), 12);
    BarrierSplit split = SplitAtBarriers(p.inventory(), c);
    std::vector<ClassId> joined = split.initial;
    for (const auto &m : split.middles) {
      ASSERT_GE(m.size(), 2u);
      EXPECT_EQ(m.front(), joined.back());
      joined.insert(joined.end(), m.begin() + 1, m.end());
    }
    EXPECT_EQ(joined, c);
  }
}

class TrainingTest : public ::testing::Test {
 protected:
  void SetUp() override {
    det_ = inv_.AddTag("DET");
    adj_ = inv_.AddTag("ADJ");
    noun_ = inv_.AddTag("NOUN");
    c_det_ = inv_.AddClass("[DET]", {det_});
    c_an_ = inv_.AddClass("[ADJ,NOUN]", {adj_, noun_});
    c_noun_ = inv_.AddClass("[NOUN]", {noun_});
    corpus_ = {
        {{"the", c_det_, det_}, {"old", c_an_, adj_}, {"man", c_noun_, noun_}},
        {{"old", c_an_, noun_}, {"man", c_noun_, noun_}},
    };
  }

  double P(double log_p) const { return std::exp(log_p); }

  Inventory inv_;
  TagId det_{}, adj_{}, noun_{};
  ClassId c_det_{}, c_an_{}, c_noun_{};
  std::vector<TrainingSentence> corpus_;
};

TEST_F(TrainingTest, RelativeFrequencies) {
  HmmParams p = TrainFromTagged(inv_, c_noun_, corpus_, {.smoothing = 0});
  EXPECT_NEAR(P(p.log_pi(det_)), 0.5, 1e-12);
  EXPECT_NEAR(P(p.log_pi(noun_)), 0.5, 1e-12);
  EXPECT_EQ(p.log_pi(adj_), kLogZero);
  EXPECT_NEAR(P(p.log_a(det_, adj_)), 1.0, 1e-12);
  EXPECT_NEAR(P(p.log_a(adj_, noun_)), 1.0, 1e-12);
  EXPECT_NEAR(P(p.log_a(noun_, noun_)), 1.0, 1e-12);
  EXPECT_NEAR(P(p.log_b(c_noun_, noun_)), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(P(p.log_b(c_an_, noun_)), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(P(p.log_b(c_an_, adj_)), 1.0, 1e-12);
  EXPECT_EQ(p.log_b(c_det_, noun_), kLogZero);
}

TEST_F(TrainingTest, SmoothingKeepsMembershipZeros) {
  HmmParams p = TrainFromTagged(inv_, c_noun_, corpus_, {.smoothing = 0.5});
  // pi counts 1, 0, 1 plus 0.5 each.
  EXPECT_NEAR(P(p.log_pi(adj_)), 0.5 / 3.5, 1e-12);
  // NOUN emissions: [ADJ,NOUN] 1, [NOUN] 2, plus 0.5 each.
  EXPECT_NEAR(P(p.log_b(c_an_, noun_)), 1.5 / 4.0, 1e-12);
  EXPECT_EQ(p.log_b(c_det_, noun_), kLogZero);
  EXPECT_EQ(p.log_b(c_noun_, adj_), kLogZero);
}

TEST_F(TrainingTest, UnknownClassFromHapaxes) {
  Inventory inv = inv_;
  ClassId unk = AddUnknownClass(&inv, corpus_);
  // "the" is the only hapax.
  EXPECT_EQ(inv.Class(unk).tags, std::vector<TagId>{det_});
  EXPECT_EQ(AddUnknownClass(&inv, corpus_), unk);
  HmmParams p = TrainFromTagged(inv, c_noun_, corpus_, {.smoothing = 0});
  EXPECT_NEAR(P(p.log_b(unk, det_)), 0.5, 1e-12);
  EXPECT_NEAR(P(p.log_b(c_det_, det_)), 0.5, 1e-12);
}

TEST_F(TrainingTest, Errors) {
  try {
    TrainFromTagged(inv_, c_noun_, {});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCorpus);
  }
  std::vector<TrainingSentence> wrong{{{"the", c_det_, noun_}}};
  try {
    TrainFromTagged(inv_, c_noun_, wrong);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kTagNotInClass);
  }
}

TEST(ParamsIoTest, RoundTripWithinTolerance) {
  std::mt19937_64 rng(9);
  HmmParams p = testing::RandomModel(rng, 7, 9);
  std::stringstream ss;
  WriteParams(ss, p);
  HmmParams back = ReadParams(ss);
  const Inventory &inv = p.inventory();
  ASSERT_TRUE(back.inventory() == inv);
  EXPECT_EQ(back.sentence_end_class(), p.sentence_end_class());
  for (std::size_t x = 0; x < inv.num_tags(); ++x) {
    TagId tx = static_cast<TagId>(x);
    EXPECT_NEAR(back.log_pi(tx), p.log_pi(tx), 1e-12);
    for (std::size_t y = 0; y < inv.num_tags(); ++y) {
      TagId ty = static_cast<TagId>(y);
      EXPECT_NEAR(back.log_a(tx, ty), p.log_a(tx, ty), 1e-12);
    }
    for (std::size_t c = 0; c < inv.num_classes(); ++c) {
      ClassId cc = static_cast<ClassId>(c);
      if (p.log_b(cc, tx) == kLogZero) {
        EXPECT_EQ(back.log_b(cc, tx), kLogZero);
      } else {
        EXPECT_NEAR(back.log_b(cc, tx), p.log_b(cc, tx), 1e-12);
      }
    }
  }
}

TEST(ParamsIoTest, RejectsBrokenInput) {
  std::istringstream empty("");
  EXPECT_THROW(ReadParams(empty), Error);
  std::stringstream ss;
  WriteParams(ss, testing::Toy3Params());
  std::string text = ss.str();
  std::istringstream truncated(text.substr(0, text.size() / 2));
  EXPECT_THROW(ReadParams(truncated), Error);
  try {
    ReadParamsFile("/nonexistent/params.txt");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

}  // namespace
}  // namespace hmmfst
