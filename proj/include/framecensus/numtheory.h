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

#ifndef FRAMECENSUS_NUMTHEORY_H_
#define FRAMECENSUS_NUMTHEORY_H_

#include <cstdint>
#include <span>
#include <vector>

namespace framecensus {

// Residues are plain ints; n stays desk-scale throughout the library.
int EulerPhi(int n);
int Moebius(int n);
std::vector<int> Divisors(int n);
std::vector<int> PrimeFactors(int n);
// Number of distinct prime factors.
int Omega(int n);
bool IsPrime(int n);

// Reduce any integer into [0, n).
inline int ModN(std::int64_t value, int n) {
  std::int64_t r = value % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// Units of Z_n in increasing order. Z_1 has the single unit 1, which acts as
// the identity on Z_1 = {0}.
std::vector<int> Units(int n);
bool IsUnit(int a, int n);
// Multiplicative order of a unit a modulo n.
int MultiplicativeOrder(int a, int n);

// The map x -> a*x + b on Z_n.
struct AffineMap {
  int modulus = 1;
  int multiplier = 1;
  int shift = 0;

  int operator()(int x) const {
    return ModN(static_cast<std::int64_t>(multiplier) * x + shift, modulus);
  }
};

// Cycle decomposition of an affine map. Each cycle starts at its smallest
// element; cycles are sorted by that element.
struct OrbitDecomposition {
  int modulus = 1;
  AffineMap map;
  std::vector<std::vector<int>> orbits;
};

// Cycles of x -> a*x. Throws UsageError if a is not a unit mod n.
OrbitDecomposition MultOrbits(int n, int a);
// Cycles of x -> a*x + b. Throws UsageError if a is not a unit mod n.
OrbitDecomposition AffineOrbits(int n, int a, int b);

// True iff the residues generate Z_n, i.e. gcd(J, n) == 1.
bool SubsetGenerates(int n, std::span<const int> residues);

}  // namespace framecensus

#endif  // FRAMECENSUS_NUMTHEORY_H_
