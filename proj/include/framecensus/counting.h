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

#ifndef FRAMECENSUS_COUNTING_H_
#define FRAMECENSUS_COUNTING_H_

#include <map>
#include <utility>

#include "framecensus/bigint.h"
#include "framecensus/equivalence.h"

namespace framecensus {

// d-element subsets of Z_n generating Z_n: sum_{m|n} mu(m) C(n/m, d).
BigInt CountGeneratingSubsets(int n, int d);

// Hall's Eulerian function: d-tuples generating Z_n,
// n^d prod_{p|n} (1 - p^-d).
BigInt HallEulerian(int n, int d);

// Generating d-subsets of Z_n that are unions of cycles of x -> a*x.
BigInt FixCountMult(int n, int a, int d);

// d-subsets of Z_n (generating or not) that are unions of cycles of
// x -> a*x + b.
BigInt FixCountAffine(int n, int a, int b, int d);

// |Fix(g)| for every element g of the acting group. Multiplicative tables are
// keyed by (a, 0); affine tables by (a, b).
struct FixCountTable {
  int modulus = 1;
  int dimension = 1;
  EquivalenceKind kind = EquivalenceKind::kMultiplicative;
  std::map<std::pair<int, int>, BigInt> entries;

  BigInt Total() const;
  std::size_t group_order() const { return entries.size(); }
};

FixCountTable MultFixTable(int n, int d);
FixCountTable AffineFixTable(int n, int d);

// Burnside: total / |group|. Throws InternalError if the division is inexact.
BigInt OrbitCount(const FixCountTable& table);

// m_{n,d}: generating d-subsets up to multiplication by units.
BigInt BurnsideM(int n, int d);
// p_{n,d}: d-subsets up to the affine group x -> a*x + b.
BigInt BurnsideP(int n, int d);

// Closed forms for prime n = p. Throw UsageError if p is not prime.
BigInt PrimeUnlifted(int p, int d);
BigInt PrimeLifted(int p, int d);
// Real frames; needs p odd and d > 1.
BigInt PrimeReal(int p, int d);

// a_{n,d} = n^d prod_{p|n}(1 - p^-d) / (d! phi(n)), never rounded.
ExactRational AsymptoticA(int n, int d);

}  // namespace framecensus

#endif  // FRAMECENSUS_COUNTING_H_
