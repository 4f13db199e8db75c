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

#ifndef FRAMECENSUS_VERIFICATION_H_
#define FRAMECENSUS_VERIFICATION_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "framecensus/bigint.h"
#include "framecensus/counting.h"
#include "framecensus/equivalence.h"

namespace framecensus {

struct VerifyOptions {
  int max_n = 12;
  int max_d = 3;
  std::uint64_t node_budget = kDefaultNodeBudget;
  int workers = 1;
  // Applied to every multiplicative fix table before its orbit count is
  // taken. Used to check that a corrupted table is caught.
  std::function<void(FixCountTable&)> tamper;
};

struct VerifyCheck {
  std::string name;  // e.g. "burnside_m(n=8,d=2)"
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

// Cross-checks every counting formula against direct enumeration, the fix
// bounds, the prime closed forms, exact frame identities, census sanity and
// a handful of fixed known values, for 1 <= n <= max_n, 1 <= d <= max_d.
VerifyReport RunVerification(const VerifyOptions& options);

// Orbit counts by explicit orbit walking over bitmasks (n <= 64).
BigInt NaiveMultOrbitCount(int n, int d);    // generating subsets, Z_n^*
BigInt NaiveAffineOrbitCount(int n, int d);  // all subsets, affine group

}  // namespace framecensus

#endif  // FRAMECENSUS_VERIFICATION_H_
