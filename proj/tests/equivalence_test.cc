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

#include "framecensus/equivalence.h"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "framecensus/errors.h"
#include "framecensus/numtheory.h"
#include "oracles.h"

namespace framecensus {
namespace {

IndexSubset S(int n, std::vector<int> elements) { return IndexSubset(n, std::move(elements)); }

std::vector<IndexSubset> Generating(int n, int d) {
  std::vector<IndexSubset> out;
  oracle::ForEachSubset(n, d, [&](const oracle::Subset& s) {
    if (oracle::Generates(n, s)) out.push_back(S(n, s));
  });
  return out;
}

TEST(MultCanonical, Examples) {
  EXPECT_EQ(MultCanonical(S(8, {5, 7})).subset, S(8, {1, 3}));
  CanonicalForm zero = MultCanonical(S(7, {0}));
  EXPECT_EQ(zero.subset, S(7, {0}));
  EXPECT_EQ(zero.witness.multiplier, 1);
  CanonicalForm c = MultCanonical(S(8, {3, 6, 7}));
  EXPECT_EQ(c.subset, S(8, {1, 2, 5}));
  EXPECT_EQ(S(8, {3, 6, 7}).Image(c.witness), c.subset);
  EXPECT_TRUE(IsMultCanonical(S(8, {1, 2, 5})));
  EXPECT_FALSE(IsMultCanonical(S(8, {3, 6, 7})));
}

TEST(MultEquivalent, Examples) {
  EXPECT_TRUE(MultEquivalent(S(8, {1, 2, 5}), S(8, {3, 6, 7})));
  EXPECT_FALSE(MultEquivalent(S(8, {1, 2, 5}), S(8, {1, 5, 6})));
  EXPECT_TRUE(MultEquivalent(S(8, {1, 2, 5}), S(8, {1, 2, 5})));
  EXPECT_EQ(FindMultWitness(S(8, {1, 2, 5}), S(8, {3, 6, 7})), 3);
  EXPECT_EQ(FindMultWitness(S(8, {1, 2, 5}), S(8, {1, 5, 6})), std::nullopt);
}

TEST(MultEquivalent, OrbitSizesMatchEnumeration) {
  for (int n = 1; n <= 24; ++n) {
    const int d = std::min(n, 3);
    for (const auto& j : Generating(n, d)) {
      std::set<oracle::Subset> orbit;
      for (int a : oracle::UnitsOf(n)) orbit.insert(oracle::Affine(j.elements(), n, a, 0));
      EXPECT_EQ(MultOrbitSize(j), static_cast<int>(orbit.size()));
      EXPECT_EQ(EulerPhi(n) % MultOrbitSize(j), 0);
      EXPECT_EQ(MultCanonical(j).subset.elements(), *orbit.begin());
    }
  }
}

TEST(AffineCanonical, Examples) {
  for (int j = 0; j < 9; ++j) EXPECT_EQ(AffineCanonical(S(9, {j})).subset, S(9, {0}));
  EXPECT_EQ(AffineCanonical(S(8, {1, 2, 5})).subset, S(8, {0, 1, 4}));
  for (int a : Units(8)) {
    for (int b = 0; b < 8; ++b) {
      IndexSubset image = S(8, {1, 2, 5}).Image(AffineMap{8, a, b});
      CanonicalForm c = AffineCanonical(image);
      EXPECT_EQ(c.subset, S(8, {0, 1, 4}));
      EXPECT_EQ(image.Image(c.witness), c.subset);
    }
  }
}

TEST(AffineCanonical, MatchesBruteForceMinimum) {
  for (int n = 2; n <= 12; ++n) {
    oracle::ForEachSubset(n, 3 <= n ? 3 : n, [&](const oracle::Subset& s) {
      oracle::Subset best = s;
      for (int a : oracle::UnitsOf(n)) {
        for (int b = 0; b < n; ++b) best = std::min(best, oracle::Affine(s, n, a, b));
      }
      EXPECT_EQ(AffineCanonical(S(n, s)).subset.elements(), best);
    });
  }
  EXPECT_TRUE(AffineEquivalent(S(8, {1, 2, 5}), S(8, {0, 1, 4})));
  auto map = FindAffineWitness(S(8, {1, 2, 5}), S(8, {0, 1, 4}));
  ASSERT_TRUE(map.has_value());
  EXPECT_EQ(S(8, {1, 2, 5}).Image(*map), S(8, {0, 1, 4}));
}

TEST(AngleInvariant, Examples) {
  EXPECT_EQ(AngleInvariant(S(8, {1, 2, 5})), AngleInvariant(S(8, {1, 5, 6})));
  EXPECT_NE(AngleInvariant(S(8, {1, 3})), AngleInvariant(S(8, {1, 5})));
  for (int n : {8, 9, 12}) {
    for (const auto& j : Generating(n, 3)) {
      for (int a : Units(n)) {
        EXPECT_EQ(AngleInvariant(j), AngleInvariant(j.Image(AffineMap{n, a, 0})));
      }
    }
  }
}

TEST(Unitary, Examples) {
  auto witness = UnitarilyEquivalent(S(8, {1, 2, 5}), S(8, {1, 5, 6}));
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(witness->permutation[0], 0);
  EXPECT_TRUE(CheckUnitaryWitness(S(8, {1, 2, 5}), S(8, {1, 5, 6}), *witness));
  EXPECT_FALSE(UnitarilyEquivalent(S(8, {1, 3}), S(8, {1, 5})).has_value());

  UnitarySearchStats stats;
  EXPECT_FALSE(UnitarilyEquivalent(S(8, {1, 3}), S(8, {1, 5}), {}, &stats).has_value());
  EXPECT_TRUE(stats.rejected_by_fingerprint);

  for (const auto& j : Generating(12, 3)) {
    for (int a : Units(12)) {
      IndexSubset k = j.Image(AffineMap{12, a, 0});
      auto w = UnitarilyEquivalent(j, k);
      ASSERT_TRUE(w.has_value()) << j.ToString() << " " << k.ToString();
      EXPECT_TRUE(CheckUnitaryWitness(j, k, *w));
    }
  }
}

TEST(Unitary, WitnessCycleString) {
  EXPECT_EQ((UnitaryWitness{{0, 1, 2}}.CycleString()), "()");
  EXPECT_EQ((UnitaryWitness{{0, 5, 3, 6, 4, 1, 2, 7}}.CycleString()), "(1 5)(2 3 6)");
}

TEST(Unitary, Preconditions) {
  EXPECT_THROW(UnitarilyEquivalent(S(8, {1, 2}), S(8, {1, 2, 5})), UsageError);
  EXPECT_THROW(UnitarilyEquivalent(S(8, {2, 4}), S(8, {1, 2})), UsageError);
  EXPECT_THROW(UnitarilyEquivalent(S(8, {1, 2}), S(9, {1, 2})), UsageError);
}

TEST(Unitary, BudgetExhaustionIsReported) {
  UnitarySearchOptions tiny{1};
  try {
    UnitarilyEquivalent(S(8, {1, 2, 5}), S(8, {1, 5, 6}), tiny);
    FAIL() << "expected SearchBudgetExceeded";
  } catch (const SearchBudgetExceeded& e) {
    EXPECT_EQ(e.budget(), 1u);
    EXPECT_GT(e.nodes(), 1u);
  }
}

// Symmetry, filter soundness and agreement with an exhaustive
// floating-point search over all reindexings.
TEST(Unitary, AgreesWithExhaustiveSearch) {
  for (int n = 2; n <= 9; ++n) {
    for (int d = 2; d <= 3 && d <= n; ++d) {
      const auto subsets = Generating(n, d);
      for (std::size_t x = 0; x < subsets.size(); ++x) {
        for (std::size_t y = x; y < subsets.size(); ++y) {
          const auto& j = subsets[x];
          const auto& k = subsets[y];
          auto forward = UnitarilyEquivalent(j, k);
          auto backward = UnitarilyEquivalent(k, j);
          ASSERT_EQ(forward.has_value(), backward.has_value());
          if (AngleInvariant(j) != AngleInvariant(k)) {
            ASSERT_FALSE(forward.has_value());
          }
          if (MultEquivalent(j, k)) {
            ASSERT_TRUE(forward.has_value());
          }
          if (n <= 8) {
            ASSERT_EQ(forward.has_value(),
                      oracle::UnitarilyEquivalent(n, j.elements(), k.elements()))
                << j.ToString() << " " << k.ToString();
          }
          if (forward) {
            ASSERT_TRUE(CheckUnitaryWitness(j, k, *forward));
          }
        }
      }
    }
  }
}

TEST(Unitary, SymmetricUpToTwelve) {
  for (int n = 10; n <= 12; ++n) {
    const auto subsets = Generating(n, 3);
    for (std::size_t x = 0; x < subsets.size(); x += 3) {
      for (std::size_t y = x + 1; y < subsets.size(); y += 5) {
        ASSERT_EQ(UnitarilyEquivalent(subsets[x], subsets[y]).has_value(),
                  UnitarilyEquivalent(subsets[y], subsets[x]).has_value());
      }
    }
  }
}

TEST(Exceptional, Examples) {
  EXPECT_TRUE(IsExceptionalPair(S(8, {1, 2, 5}), S(8, {1, 5, 6})));
  EXPECT_FALSE(IsExceptionalPair(S(8, {1, 2, 5}), S(8, {3, 6, 7})));
}

TEST(Exceptional, NoneForPrimeModulus) {
  for (int p : {5, 7, 11, 13}) {
    for (int d : {2, 3}) {
      const auto subsets = Generating(p, d);
      for (std::size_t x = 0; x < subsets.size(); ++x) {
        for (std::size_t y = x + 1; y < subsets.size(); ++y) {
          ASSERT_FALSE(IsExceptionalPair(subsets[x], subsets[y]))
              << subsets[x].ToString() << " " << subsets[y].ToString();
        }
      }
    }
  }
}

TEST(Exceptional, NoneInDimensionTwo) {
  for (int n = 2; n <= 16; ++n) {
    const auto subsets = Generating(n, 2);
    for (std::size_t x = 0; x < subsets.size(); ++x) {
      for (std::size_t y = x + 1; y < subsets.size(); ++y) {
        ASSERT_EQ(UnitarilyEquivalent(subsets[x], subsets[y]).has_value(),
                  MultEquivalent(subsets[x], subsets[y]));
      }
    }
  }
}

}  // namespace
}  // namespace framecensus
