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

#include "framecensus/counting.h"

#include <numeric>
#include <string>
#include <vector>

#include "framecensus/errors.h"
#include "framecensus/numtheory.h"

namespace framecensus {
namespace {

void RequireRange(int n, int d, const char* what) {
  if (n < 1 || d < 1 || d > n) {
    throw UsageError(std::string(what) + ": need 1 <= d <= n, got n=" +
                     std::to_string(n) + " d=" + std::to_string(d));
  }
}

void RequireUnit(int n, int a) {
  if (n < 1 || !IsUnit(a, n)) {
    throw UsageError(std::to_string(a) + " is not a unit mod " +
                     std::to_string(n));
  }
}

void RequirePrime(int p) {
  if (!IsPrime(p)) throw UsageError(std::to_string(p) + " is not prime");
}

std::vector<int> SquarefreeDivisors(int n) {
  std::vector<int> out;
  for (int m : Divisors(n)) {
    if (Moebius(m) != 0) out.push_back(m);
  }
  return out;
}

// Coefficient of x^d in prod over cycles (1 + x^{|cycle|}), restricted to
// the cycles accepted by `keep`. Truncated at degree d.
template <typename Keep>
BigInt UnionsOfCycles(const OrbitDecomposition& cycles, int d, Keep keep) {
  if (d < 0) return 0;
  std::vector<BigInt> poly(d + 1);
  poly[0] = 1;
  for (const auto& cycle : cycles.orbits) {
    if (!keep(cycle)) continue;
    const int s = static_cast<int>(cycle.size());
    for (int i = d; i >= s; --i) poly[i] += poly[i - s];
  }
  return poly[d];
}

BigInt DivideExactly(const BigInt& total, const BigInt& divisor,
                     const std::string& what) {
  if (total % divisor != 0) {
    throw InternalError(what + ": " + ToDecimal(total) +
                        " is not divisible by " + ToDecimal(divisor));
  }
  return total / divisor;
}

// (1/(p-1)) sum_{j | gcd(p-1, d)} C((p-1)/j, d/j) phi(j), valid for d >= 1.
BigInt UnliftedFormula(int p, int d) {
  const int order = p - 1;
  BigInt sum = 0;
  for (int j : Divisors(std::gcd(order, d))) {
    sum += Binomial(order / j, d / j) * EulerPhi(j);
  }
  return DivideExactly(sum, order, "unlifted prime count");
}

}  // namespace

BigInt CountGeneratingSubsets(int n, int d) {
  RequireRange(n, d, "CountGeneratingSubsets");
  BigInt total = 0;
  for (int m : SquarefreeDivisors(n)) {
    total += Moebius(m) * Binomial(n / m, d);
  }
  return total;
}

BigInt HallEulerian(int n, int d) {
  if (n < 1 || d < 1) throw UsageError("HallEulerian: need n, d >= 1");
  BigInt total = 0;
  for (int m : SquarefreeDivisors(n)) {
    total += Moebius(m) * Power(BigInt(n / m), d);
  }
  return total;
}

BigInt FixCountMult(int n, int a, int d) {
  RequireRange(n, d, "FixCountMult");
  RequireUnit(n, a);
  const OrbitDecomposition cycles = MultOrbits(n, a);
  // Inclusion-exclusion over the subgroups mZ_n for squarefree m | n. A cycle
  // of x -> a*x keeps gcd(x, n), so it lies in mZ_n iff m divides its start.
  BigInt total = 0;
  for (int m : SquarefreeDivisors(n)) {
    total += Moebius(m) * UnionsOfCycles(cycles, d, [m](const auto& cycle) {
               return cycle.front() % m == 0;
             });
  }
  return total;
}

BigInt FixCountAffine(int n, int a, int b, int d) {
  RequireRange(n, d, "FixCountAffine");
  RequireUnit(n, a);
  return UnionsOfCycles(AffineOrbits(n, a, b), d,
                        [](const auto&) { return true; });
}

BigInt FixCountTable::Total() const {
  BigInt total = 0;
  for (const auto& [element, count] : entries) total += count;
  return total;
}

FixCountTable MultFixTable(int n, int d) {
  RequireRange(n, d, "MultFixTable");
  FixCountTable table{n, d, EquivalenceKind::kMultiplicative, {}};
  for (int a : Units(n)) table.entries[{a, 0}] = FixCountMult(n, a, d);
  return table;
}

FixCountTable AffineFixTable(int n, int d) {
  RequireRange(n, d, "AffineFixTable");
  FixCountTable table{n, d, EquivalenceKind::kAffine, {}};
  for (int a : Units(n)) {
    for (int b = 0; b < n; ++b) {
      table.entries[{a, b}] = FixCountAffine(n, a, b, d);
    }
  }
  return table;
}

BigInt OrbitCount(const FixCountTable& table) {
  return DivideExactly(
      table.Total(), BigInt(static_cast<unsigned long>(table.group_order())),
      "Burnside sum for n=" + std::to_string(table.modulus) +
          " d=" + std::to_string(table.dimension));
}

BigInt BurnsideM(int n, int d) { return OrbitCount(MultFixTable(n, d)); }

BigInt BurnsideP(int n, int d) { return OrbitCount(AffineFixTable(n, d)); }

BigInt PrimeUnlifted(int p, int d) {
  RequirePrime(p);
  if (d < 1) throw UsageError("PrimeUnlifted: d must be >= 1");
  return UnliftedFormula(p, d);
}

BigInt PrimeLifted(int p, int d) {
  RequirePrime(p);
  if (d < 1) throw UsageError("PrimeLifted: d must be >= 1");
  if (d == 1) return 0;
  return UnliftedFormula(p, d - 1);
}

BigInt PrimeReal(int p, int d) {
  RequirePrime(p);
  if (p == 2) throw UsageError("PrimeReal: p must be odd");
  if (d < 2) throw UsageError("PrimeReal: d must be > 1");
  // Odd d: the real sets contain 0 and the rest is a real set of size d-1.
  const int even = d % 2 == 0 ? d : d - 1;
  const int order = p - 1;
  BigInt sum = 0;
  for (int j : Divisors(std::gcd(order, even))) {
    if (j % 2 == 0) sum += Binomial(order / j, even / j) * EulerPhi(j);
  }
  for (int j : Divisors(std::gcd(order, even / 2))) {
    if (j % 2 == 1) {
      sum += Binomial(order / (2 * j), even / (2 * j)) * EulerPhi(j);
    }
  }
  return DivideExactly(sum, order, "real prime count");
}

ExactRational AsymptoticA(int n, int d) {
  if (n < 1 || d < 1) throw UsageError("AsymptoticA: need n, d >= 1");
  return ExactRational(HallEulerian(n, d), Factorial(d) * EulerPhi(n));
}

}  // namespace framecensus
