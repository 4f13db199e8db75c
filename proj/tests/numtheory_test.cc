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

#include "framecensus/numtheory.h"

#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "framecensus/errors.h"
#include "oracles.h"

namespace framecensus {
namespace {

using Orbits = std::vector<std::vector<int>>;

TEST(Arithmetic, Basics) {
  EXPECT_EQ(EulerPhi(8), 4);
  EXPECT_EQ(EulerPhi(1), 1);
  EXPECT_EQ(EulerPhi(36), 12);
  EXPECT_EQ(Divisors(8), (std::vector<int>{1, 2, 4, 8}));
  EXPECT_EQ(Divisors(1), (std::vector<int>{1}));
  EXPECT_EQ(Moebius(12), 0);
  EXPECT_EQ(Moebius(6), 1);
  EXPECT_EQ(Moebius(30), -1);
  EXPECT_EQ(Moebius(1), 1);
  EXPECT_EQ(Omega(8), 1);
  EXPECT_EQ(Omega(30), 3);
  EXPECT_EQ(PrimeFactors(12), (std::vector<int>{2, 3}));
  EXPECT_TRUE(IsPrime(101));
  EXPECT_FALSE(IsPrime(1));
  EXPECT_FALSE(IsPrime(91));
  EXPECT_THROW(EulerPhi(0), UsageError);
}

TEST(Arithmetic, AgreesWithDefinitions) {
  for (int n = 1; n <= 300; ++n) {
    int phi = 0;
    for (int a = 1; a <= n; ++a) phi += std::gcd(a, n) == 1;
    EXPECT_EQ(EulerPhi(n), phi) << n;
    int mobius_sum = 0;
    for (int d : Divisors(n)) mobius_sum += Moebius(d);
    EXPECT_EQ(mobius_sum, n == 1 ? 1 : 0) << n;
  }
}

TEST(Units, Listing) {
  EXPECT_EQ(Units(8), (std::vector<int>{1, 3, 5, 7}));
  EXPECT_EQ(Units(1), (std::vector<int>{1}));
  for (int p : {2, 3, 5, 7, 11, 13}) {
    std::vector<int> all(p - 1);
    std::iota(all.begin(), all.end(), 1);
    EXPECT_EQ(Units(p), all);
  }
  EXPECT_TRUE(IsUnit(7, 8));
  EXPECT_FALSE(IsUnit(6, 8));
  EXPECT_EQ(MultiplicativeOrder(3, 7), 6);
  EXPECT_THROW(MultiplicativeOrder(2, 8), UsageError);
}

TEST(Orbits, MultiplicationByThreeModEight) {
  EXPECT_EQ(MultOrbits(8, 3).orbits, (Orbits{{0}, {1, 3}, {2, 6}, {4}, {5, 7}}));
}

TEST(Orbits, Identity) {
  for (int n = 1; n <= 12; ++n) {
    auto orbits = MultOrbits(n, 1).orbits;
    EXPECT_EQ(static_cast<int>(orbits.size()), n);
    for (const auto& o : orbits) EXPECT_EQ(o.size(), 1u);
  }
}

TEST(Orbits, PrimitiveRoot) {
  EXPECT_EQ(MultOrbits(7, 3).orbits.size(), 2u);
  EXPECT_EQ(MultOrbits(13, 2).orbits[1].size(), 12u);
}

TEST(Orbits, Translations) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(AffineOrbits(n, 1, 1).orbits.size(), 1u);
    EXPECT_EQ(AffineOrbits(n, 1, 0).orbits.size(), static_cast<std::size_t>(n));
  }
}

TEST(Orbits, AffineThreeXPlusOneModEight) {
  EXPECT_EQ(AffineOrbits(8, 3, 1).orbits, (Orbits{{0, 1, 4, 5}, {2, 7, 6, 3}}));
}

TEST(Orbits, RejectNonUnit) {
  EXPECT_THROW(MultOrbits(8, 2), UsageError);
  EXPECT_THROW(AffineOrbits(8, 4, 1), UsageError);
}

TEST(Orbits, PartitionAndCycleProperties) {
  for (int n = 1; n <= 30; ++n) {
    for (int a : Units(n)) {
      for (int b = 0; b < n; ++b) {
        const auto decomposition = AffineOrbits(n, a, b);
        std::vector<int> seen(n, 0);
        std::size_t total = 0;
        for (const auto& orbit : decomposition.orbits) {
          total += orbit.size();
          int x = orbit.front();
          for (std::size_t step = 0; step < orbit.size(); ++step) {
            ASSERT_EQ(x, orbit[step]);
            ++seen[x];
            x = decomposition.map(x);
          }
          EXPECT_EQ(x, orbit.front());
        }
        EXPECT_EQ(total, static_cast<std::size_t>(n));
        for (int count : seen) EXPECT_EQ(count, 1);
      }
    }
  }
}

TEST(SubsetGenerates, Examples) {
  const std::vector<int> j{1, 2, 5}, evens{2, 4, 6}, zero{0};
  EXPECT_TRUE(SubsetGenerates(8, j));
  EXPECT_FALSE(SubsetGenerates(8, evens));
  EXPECT_FALSE(SubsetGenerates(7, zero));
  EXPECT_TRUE(SubsetGenerates(1, zero));
  for (int p : {5, 7, 11}) {
    oracle::ForEachSubset(p, 2, [&](const oracle::Subset& s) {
      EXPECT_TRUE(SubsetGenerates(p, s));
    });
  }
}

TEST(SubsetGenerates, AgreesWithSubgroupClosure) {
  for (int n = 1; n <= 30; ++n) {
    for (int d = 1; d <= std::min(n, 4); ++d) {
      if (n > 24 && d == 4) continue;  // keep the sweep fast
      oracle::ForEachSubset(n, d, [&](const oracle::Subset& s) {
        ASSERT_EQ(SubsetGenerates(n, s), oracle::Generates(n, s)) << n;
      });
    }
  }
}

}  // namespace
}  // namespace framecensus
