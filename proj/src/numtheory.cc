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

#include <algorithm>
#include <numeric>
#include <string>

#include "framecensus/errors.h"

namespace framecensus {
namespace {

void RequirePositive(int n, const char* what) {
  if (n < 1) {
    throw UsageError(std::string(what) + ": n must be >= 1, got " +
                     std::to_string(n));
  }
}

}  // namespace

std::vector<int> PrimeFactors(int n) {
  RequirePositive(n, "PrimeFactors");
  std::vector<int> primes;
  for (int p = 2; static_cast<std::int64_t>(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

int EulerPhi(int n) {
  RequirePositive(n, "EulerPhi");
  int result = n;
  for (int p : PrimeFactors(n)) result = result / p * (p - 1);
  return result;
}

int Moebius(int n) {
  RequirePositive(n, "Moebius");
  int sign = 1;
  for (int p : PrimeFactors(n)) {
    if ((n / p) % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

std::vector<int> Divisors(int n) {
  RequirePositive(n, "Divisors");
  std::vector<int> small, large;
  for (int d = 1; static_cast<std::int64_t>(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int Omega(int n) { return static_cast<int>(PrimeFactors(n).size()); }

bool IsPrime(int n) {
  if (n < 2) return false;
  const std::vector<int> primes = PrimeFactors(n);
  return primes.size() == 1 && primes[0] == n;
}

std::vector<int> Units(int n) {
  RequirePositive(n, "Units");
  if (n == 1) return {1};
  std::vector<int> units;
  for (int a = 1; a < n; ++a) {
    if (std::gcd(a, n) == 1) units.push_back(a);
  }
  return units;
}

bool IsUnit(int a, int n) {
  RequirePositive(n, "IsUnit");
  return std::gcd(ModN(a, n), n) == 1;
}

int MultiplicativeOrder(int a, int n) {
  if (!IsUnit(a, n)) {
    throw UsageError(std::to_string(a) + " is not a unit mod " +
                     std::to_string(n));
  }
  a = ModN(a, n);
  int order = 1;
  for (int x = a % n; x != 1 % n; x = ModN(static_cast<std::int64_t>(x) * a, n)) {
    ++order;
  }
  return order;
}

OrbitDecomposition AffineOrbits(int n, int a, int b) {
  RequirePositive(n, "AffineOrbits");
  if (!IsUnit(a, n)) {
    throw UsageError(std::to_string(a) + " is not a unit mod " +
                     std::to_string(n));
  }
  OrbitDecomposition decomposition;
  decomposition.modulus = n;
  decomposition.map = AffineMap{n, ModN(a, n), ModN(b, n)};
  std::vector<char> seen(n, 0);
  // Scanning x upward means each cycle is discovered at its minimum.
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<int> cycle;
    for (int y = x; !seen[y]; y = decomposition.map(y)) {
      seen[y] = 1;
      cycle.push_back(y);
    }
    decomposition.orbits.push_back(std::move(cycle));
  }
  return decomposition;
}

OrbitDecomposition MultOrbits(int n, int a) { return AffineOrbits(n, a, 0); }

bool SubsetGenerates(int n, std::span<const int> residues) {
  RequirePositive(n, "SubsetGenerates");
  int g = n;
  for (int r : residues) g = std::gcd(g, ModN(r, n));
  return g == 1;
}

}  // namespace framecensus
