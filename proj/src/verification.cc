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

#include "framecensus/verification.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include "framecensus/census.h"
#include "framecensus/cyclotomic.h"
#include "framecensus/errors.h"
#include "framecensus/frames.h"
#include "framecensus/numtheory.h"

namespace framecensus {
namespace {

using Mask = std::uint64_t;

Mask MaskOf(const std::vector<int>& elements) {
  Mask mask = 0;
  for (int e : elements) mask |= Mask{1} << e;
  return mask;
}

Mask ImageMask(Mask mask, int n, int a, int b) {
  Mask out = 0;
  for (int j = 0; j < n; ++j) {
    if (mask >> j & 1) out |= Mask{1} << ModN(std::int64_t{a} * j + b, n);
  }
  return out;
}

// Calls visit(elements) for every d-subset of Z_n in lexicographic order.
template <typename Visit>
void ForEachSubset(int n, int d, Visit visit) {
  if (d < 0 || d > n) return;
  std::vector<int> combo(d);
  std::iota(combo.begin(), combo.end(), 0);
  while (true) {
    visit(combo);
    int i = d - 1;
    while (i >= 0 && combo[i] == n - d + i) --i;
    if (i < 0) return;
    ++combo[i];
    for (int k = i + 1; k < d; ++k) combo[k] = combo[k - 1] + 1;
  }
}

BigInt NaiveOrbitCount(int n, int d, bool affine, bool generating_only) {
  if (n < 1 || n > 64) throw UsageError("naive orbit counts need 1 <= n <= 64");
  const std::vector<int> units = Units(n);
  std::unordered_set<Mask> seen;
  std::uint64_t orbits = 0;
  ForEachSubset(n, d, [&](const std::vector<int>& elements) {
    if (generating_only && !SubsetGenerates(n, elements)) return;
    const Mask mask = MaskOf(elements);
    if (seen.contains(mask)) return;
    ++orbits;
    for (int a : units) {
      for (int b = 0; b < (affine ? n : 1); ++b) seen.insert(ImageMask(mask, n, a, b));
    }
  });
  return BigInt(static_cast<unsigned long>(orbits));
}

class Battery {
 public:
  explicit Battery(const VerifyOptions& options) : options_(options) {}

  VerifyReport Run() {
    for (int n = 1; n <= options_.max_n; ++n) {
      for (int d = 1; d <= std::min(options_.max_d, n); ++d) RunCase(n, d);
    }
    KnownValues();
    return std::move(report_);
  }

 private:
  static std::string Case(const std::string& what, int n, int d) {
    return what + "(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
  }

  void Record(std::string name, bool passed, std::string detail = {}) {
    report_.checks.push_back({std::move(name), passed, std::move(detail)});
  }

  void Expect(std::string name, const BigInt& expected, const BigInt& actual) {
    const bool ok = expected == actual;
    Record(std::move(name), ok,
           ok ? std::string() : "expected " + ToDecimal(expected) + ", got " + ToDecimal(actual));
  }

  // Runs `body`, turning any exception into a failed check.
  template <typename Body>
  void Guard(const std::string& name, Body body) {
    try {
      body();
    } catch (const std::exception& e) {
      Record(name, false, e.what());
    }
  }

  BigInt CheckedM(int n, int d) {
    FixCountTable table = MultFixTable(n, d);
    if (options_.tamper) options_.tamper(table);
    return OrbitCount(table);
  }

  void RunCase(int n, int d) {
    const std::string m_name = Case("burnside_m", n, d);
    Guard(m_name, [&] { Expect(m_name, NaiveMultOrbitCount(n, d), CheckedM(n, d)); });

    const std::string p_name = Case("burnside_p", n, d);
    Guard(p_name, [&] { Expect(p_name, NaiveAffineOrbitCount(n, d), BurnsideP(n, d)); });

    const std::string gen_name = Case("generating_count", n, d);
    Guard(gen_name, [&] {
      std::uint64_t naive = 0;
      ForEachSubset(n, d, [&](const std::vector<int>& e) { naive += SubsetGenerates(n, e); });
      Expect(gen_name, BigInt(static_cast<unsigned long>(naive)), CountGeneratingSubsets(n, d));
    });

    if (std::pow(double(n), double(d)) <= 1e6) {
      const std::string hall_name = Case("hall_eulerian", n, d);
      Guard(hall_name, [&] { Expect(hall_name, NaiveHall(n, d), HallEulerian(n, d)); });
    }

    FixBounds(n, d);
    if (IsPrime(n) && d >= 2 && d <= n - 1) PrimeForms(n, d);
    FrameIdentities(n, d);
    if (d >= 2) CensusSanity(n, d);
  }

  static BigInt NaiveHall(int n, int d) {
    std::vector<int> tuple(d, 0);
    std::uint64_t count = 0;
    while (true) {
      count += SubsetGenerates(n, tuple);
      int i = d - 1;
      while (i >= 0 && tuple[i] == n - 1) tuple[i--] = 0;
      if (i < 0) break;
      ++tuple[i];
    }
    return BigInt(static_cast<unsigned long>(count));
  }

  void FixBounds(int n, int d) {
    const std::string name = Case("fix_bound", n, d);
    Guard(name, [&] {
      for (int a : Units(n)) {
        if (a == 1 % n) continue;
        const BigInt fix = FixCountMult(n, a, d);
        const bool involution = ModN(std::int64_t{a} * a, n) == 1 % n;
        BigInt bound = Power(BigInt(n), d - 1);
        if (!involution) bound = d >= 2 ? Power(BigInt(n), d - 2) : BigInt(0);
        if (!involution && d == 2) bound = 0;
        if (fix > bound) {
          Record(name, false, "a=" + std::to_string(a) + " fixes " + ToDecimal(fix) +
                                  " > " + ToDecimal(bound));
          return;
        }
      }
      Record(name, true);
    });
  }

  void PrimeForms(int p, int d) {
    const std::string total = Case("prime_total", p, d);
    Guard(total, [&] { Expect(total, BurnsideM(p, d), PrimeUnlifted(p, d) + PrimeLifted(p, d)); });
    if (p == 2) return;
    const std::string real = Case("prime_real", p, d);
    Guard(real, [&] {
      std::uint64_t naive = 0;
      for (const auto& rep : EnumerateMultClasses(p, d, options_.workers)) naive += IsReal(rep);
      Expect(real, BigInt(static_cast<unsigned long>(naive)), PrimeReal(p, d));
    });
  }

  void FrameIdentities(int n, int d) {
    const std::string name = Case("frame_identities", n, d);
    Guard(name, [&] {
      constexpr std::size_t kSample = 200;
      std::vector<std::vector<int>> subsets;
      ForEachSubset(n, d, [&](const std::vector<int>& e) { subsets.push_back(e); });
      if (subsets.size() > kSample) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 1000 + d);
        std::shuffle(subsets.begin(), subsets.end(), rng);
        subsets.resize(kSample);
      }
      for (const auto& elements : subsets) {
        IndexSubset subset(n, elements);
        std::string failure = FrameIdentityFailure(subset);
        if (!failure.empty()) {
          Record(name, false, subset.ToString() + ": " + failure);
          return;
        }
      }
      Record(name, true);
    });
  }

  static std::string FrameIdentityFailure(const IndexSubset& subset) {
    const int n = subset.modulus();
    const int d = subset.size();
    if (!VerifyTight(subset)) return "not tight";
    const AngleVector angles = ComputeAngleVector(subset);
    RootSum energy = RootSum::Integer(n, 0);
    RootSum total = RootSum::Integer(n, 0);
    for (int k = 0; k < n; ++k) {
      const RootSum& c = angles.values[k];
      energy += c * c.Conjugate();
      total += c;
      if (!ValueEquals(angles.values[ModN(-k, n)], c.Conjugate())) {
        return "conjugate symmetry fails at k=" + std::to_string(k);
      }
    }
    if (!ValueEquals(energy, RootSum::Integer(n, std::int64_t{n} * d))) return "Parseval fails";
    if (!ValueEquals(total, RootSum::Integer(n, subset.Contains(0) ? n : 0))) {
      return "character sum fails";
    }
    return {};
  }

  void CensusSanity(int n, int d) {
    const std::string name = Case("census", n, d);
    Guard(name, [&] {
      CensusOptions census_options{options_.node_budget, options_.workers};
      const CensusReport report = RunCensus(n, d, census_options);
      std::vector<std::string> problems = ValidateReport(report);
      if (!report.unresolved_pairs.empty()) problems.push_back("unresolved pairs remain");
      if ((IsPrime(n) || d == 2) && !report.exceptional_pairs.empty()) {
        problems.push_back("unexpected exceptional merge");
      }
      for (const auto& pair : report.exceptional_pairs) {
        if (MultEquivalent(pair.first, pair.second) ||
            !CheckUnitaryWitness(pair.first, pair.second, pair.witness)) {
          problems.push_back("bad witness for " + pair.first.ToString() + " " +
                             pair.second.ToString());
        }
      }
      std::string detail;
      for (const auto& p : problems) detail += (detail.empty() ? "" : "; ") + p;
      Record(name, problems.empty(), detail);
    });
  }

  void KnownValues() {
    if (options_.max_n < 8 || options_.max_d < 2) return;
    Guard("known_m(n=8,d=2)", [&] { Expect("known_m(n=8,d=2)", 7, CheckedM(8, 2)); });
    Guard("known_generating(n=8,d=2)",
          [&] { Expect("known_generating(n=8,d=2)", 22, CountGeneratingSubsets(8, 2)); });
    Guard("known_fix(n=8,d=2)", [&] {
      for (int a : {3, 5, 7}) {
        if (FixCountMult(8, a, 2) != 2) {
          Record("known_fix(n=8,d=2)", false, "Fix(" + std::to_string(a) + ") != 2");
          return;
        }
      }
      Record("known_fix(n=8,d=2)", true);
    });
    Guard("known_a(n=8,d=2)", [&] {
      const bool ok = AsymptoticA(8, 2) == ExactRational(6, 1);
      Record("known_a(n=8,d=2)", ok, ok ? "" : "got " + AsymptoticA(8, 2).ToString());
    });
    if (options_.max_d < 3) return;
    Guard("known_m(n=8,d=3)", [&] { Expect("known_m(n=8,d=3)", 17, CheckedM(8, 3)); });
    Guard("known_h(n=8,d=3)", [&] {
      CensusOptions census_options{options_.node_budget, options_.workers};
      Expect("known_h(n=8,d=3)", 16, RunCensus(8, 3, census_options).h_max);
    });
  }

  const VerifyOptions& options_;
  VerifyReport report_;
};

}  // namespace

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) { return !c.passed; }));
}

VerifyReport RunVerification(const VerifyOptions& options) {
  if (options.max_n < 1 || options.max_d < 1) {
    throw UsageError("verification bounds must be positive");
  }
  if (options.max_n > 64) throw UsageError("verification supports max_n <= 64");
  return Battery(options).Run();
}

BigInt NaiveMultOrbitCount(int n, int d) { return NaiveOrbitCount(n, d, false, true); }

BigInt NaiveAffineOrbitCount(int n, int d) { return NaiveOrbitCount(n, d, true, false); }

}  // namespace framecensus
