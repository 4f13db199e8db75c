// Copyright 2026 The framecensus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "framecensus/frames.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "framecensus/errors.h"
#include "framecensus/numtheory.h"
#include "oracles.h"

namespace framecensus {
namespace {

IndexSubset S(int n, std::vector<int> elements) { return IndexSubset(n, std::move(elements)); }

TEST(IndexSubset, Validation) {
  EXPECT_THROW(S(8, {}), UsageError);
  EXPECT_THROW(S(8, {2, 1}), UsageError);
  EXPECT_THROW(S(8, {1, 8}), UsageError);
  EXPECT_THROW(S(8, {1, 1}), UsageError);
  const std::vector<int> raw{9, -1, 2};
  EXPECT_EQ(IndexSubset::FromResidues(8, raw), S(8, {1, 2, 7}));
  const std::vector<int> dup{1, 9};
  EXPECT_THROW(IndexSubset::FromResidues(8, dup), UsageError);
  EXPECT_EQ(S(8, {1, 2, 5}).ToString(), "{1,2,5}");
  EXPECT_EQ(S(8, {1, 2, 5}).Image(AffineMap{8, 3, 0}), S(8, {3, 6, 7}));
}

TEST(BuildFrame, Examples) {
  FrameMatrix ones = BuildFrame(S(5, {0}));
  EXPECT_EQ(ones.rows(), 1);
  for (int g = 0; g < 5; ++g) EXPECT_EQ(ones.exponent(0, g), 0);

  FrameMatrix roots = BuildFrame(S(4, {1}));
  for (int g = 0; g < 4; ++g) EXPECT_EQ(roots.exponent(0, g), g);

  FrameMatrix f = BuildFrame(S(8, {1, 2, 5}));
  ASSERT_EQ(f.rows(), 3);
  for (int g = 0; g < 8; ++g) {
    EXPECT_EQ(f.Column(g), (std::vector<int>{g, 2 * g % 8, 5 * g % 8}));
  }
}

TEST(AngleVector, KnownValue) {
  AngleVector c = ComputeAngleVector(S(8, {1, 2, 5}));
  EXPECT_TRUE(ValueEquals(c.values[4], RootSum::Integer(8, -1)));
  EXPECT_TRUE(ValueEquals(c.values[0], RootSum::Integer(8, 3)));
  EXPECT_TRUE(ValueEquals(GramEntry(c, 5, 1), RootSum::Integer(8, -1)));
}

TEST(AngleVector, MatchesFloatingPoint) {
  oracle::ForEachSubset(9, 3, [&](const oracle::Subset& j) {
    AngleVector c = ComputeAngleVector(S(9, j));
    for (int k = 0; k < 9; ++k) {
      EXPECT_LT(std::abs(c.values[k].ToComplex() - oracle::Angle(9, j, k)), 1e-9);
    }
  });
}

TEST(Flags, RealAndLifted) {
  EXPECT_TRUE(IsReal(S(8, {1, 7})));
  EXPECT_FALSE(IsReal(S(8, {1, 2, 5})));
  EXPECT_TRUE(IsReal(S(7, {0, 2, 5})));
  EXPECT_TRUE(IsReal(S(13, {0, 1, 12})));
  EXPECT_TRUE(IsLifted(S(8, {0, 1, 3})));
  EXPECT_FALSE(IsLifted(S(8, {1, 2, 5})));
}

TEST(VerifyTight, Examples) {
  EXPECT_TRUE(VerifyTight(S(4, {1})));
  EXPECT_TRUE(VerifyTight(S(8, {1, 2, 5})));
  EXPECT_TRUE(VerifyTight(S(6, {0, 2, 4})));
}

TEST(FrameProperties, ExhaustiveSmall) {
  for (int n = 1; n <= 10; ++n) {
    for (int d = 1; d <= std::min(n, 3); ++d) {
      oracle::ForEachSubset(n, d, [&](const oracle::Subset& elements) {
        IndexSubset j = S(n, elements);
        AngleVector c = ComputeAngleVector(j);
        RootSum energy(n), total(n);
        bool self_conjugate = true;
        for (int k = 0; k < n; ++k) {
          energy += c.values[k] * c.values[k].Conjugate();
          total += c.values[k];
          EXPECT_TRUE(ValueEquals(c.values[ModN(n - k, n)], c.values[k].Conjugate()));
          self_conjugate = self_conjugate && ValueEquals(c.values[k], c.values[k].Conjugate());
        }
        EXPECT_TRUE(ValueEquals(energy, RootSum::Integer(n, n * d)));
        EXPECT_TRUE(ValueEquals(total, RootSum::Integer(n, j.Contains(0) ? n : 0)));
        EXPECT_EQ(IsReal(j), self_conjugate) << j.ToString();
        EXPECT_EQ(HasDistinctVectors(BuildFrame(j)), oracle::Generates(n, elements))
            << n << " " << j.ToString();
        EXPECT_TRUE(VerifyTight(j));
      });
    }
  }
}

TEST(FrameProperties, GramIsCirculant) {
  AngleVector c = ComputeAngleVector(S(10, {1, 3, 4}));
  for (int a = 0; a < 10; ++a) {
    for (int b = 0; b < 10; ++b) {
      for (int shift = 0; shift < 10; ++shift) {
        EXPECT_TRUE(ValueEquals(GramEntry(c, (a + shift) % 10, (b + shift) % 10),
                                GramEntry(c, a, b)));
      }
    }
  }
}

}  // namespace
}  // namespace framecensus
