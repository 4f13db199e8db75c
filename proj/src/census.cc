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

#include "framecensus/census.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "framecensus/counting.h"
#include "framecensus/errors.h"
#include "framecensus/numtheory.h"

namespace framecensus {
namespace {

// Runs body(i) for i in [0, count) on up to `workers` threads. Each index
// writes only its own output slot, so results do not depend on scheduling.
template <typename Body>
void ParallelFor(std::size_t count, int workers, Body body) {
  const std::size_t threads =
      std::min<std::size_t>(std::max(workers, 1), std::max<std::size_t>(count, 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& thread : pool) thread.join();
  if (failure) std::rethrow_exception(failure);
}

// Canonical d-subsets of Z_n whose least element is `first`.
std::vector<IndexSubset> ClassesWithFirst(int n, int d, int first) {
  std::vector<IndexSubset> out;
  std::vector<int> combo(d);
  combo[0] = first;
  for (int i = 1; i < d; ++i) combo[i] = first + i;
  if (combo[d - 1] >= n) return out;
  while (true) {
    if (SubsetGenerates(n, combo)) {
      IndexSubset subset(n, combo);
      if (IsMultCanonical(subset)) out.push_back(std::move(subset));
    }
    int i = d - 1;
    while (i >= 1 && combo[i] == n - d + i) --i;
    if (i < 1) break;
    ++combo[i];
    for (int k = i + 1; k < d; ++k) combo[k] = combo[k - 1] + 1;
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Join(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  // Dense ids in order of first appearance.
  std::vector<int> Labels(int* count) {
    std::vector<int> labels(parent_.size());
    std::map<std::size_t, int> ids;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      auto [it, inserted] = ids.try_emplace(Find(i), static_cast<int>(ids.size()));
      labels[i] = it->second;
    }
    *count = static_cast<int>(ids.size());
    return labels;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<IndexSubset> EnumerateMultClasses(int n, int d, int workers) {
  if (n < 1) throw UsageError("modulus must be positive");
  if (d < 1 || d > n) throw UsageError("dimension must satisfy 1 <= d <= n");
  const int firsts = n - d + 1;
  std::vector<std::vector<IndexSubset>> parts(firsts);
  ParallelFor(firsts, workers,
              [&](std::size_t i) { parts[i] = ClassesWithFirst(n, d, static_cast<int>(i)); });
  std::vector<IndexSubset> out;
  for (auto& part : parts) {
    for (auto& subset : part) out.push_back(std::move(subset));
  }
  return out;
}

MergeResult MergeUnitary(const std::vector<IndexSubset>& reps,
                         const CensusOptions& options) {
  MergeResult result;
  const std::size_t count = reps.size();
  std::vector<std::optional<GramProfile>> profiles(count);
  ParallelFor(count, options.workers,
              [&](std::size_t i) { profiles[i].emplace(reps[i]); });

  std::map<AngleFingerprint, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < count; ++i) {
    buckets[profiles[i]->fingerprint()].push_back(i);
  }

  struct Job {
    std::size_t a;
    std::size_t b;
  };
  std::vector<Job> jobs;
  for (const auto& [fingerprint, members] : buckets) {
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        jobs.push_back({members[x], members[y]});
      }
    }
  }

  enum class Outcome { kInequivalent, kEquivalent, kUnresolved };
  struct JobResult {
    Outcome outcome = Outcome::kInequivalent;
    std::optional<UnitaryWitness> witness;
    std::uint64_t nodes = 0;
  };
  std::vector<JobResult> outcomes(jobs.size());
  UnitarySearchOptions search{options.node_budget};
  ParallelFor(jobs.size(), options.workers, [&](std::size_t i) {
    JobResult& out = outcomes[i];
    UnitarySearchStats stats;
    try {
      out.witness = FindUnitaryWitness(*profiles[jobs[i].a], *profiles[jobs[i].b],
                                       search, &stats);
      out.outcome = out.witness ? Outcome::kEquivalent : Outcome::kInequivalent;
      out.nodes = stats.nodes;
    } catch (const SearchBudgetExceeded& e) {
      out.outcome = Outcome::kUnresolved;
      out.nodes = e.nodes();
    }
  });

  UnionFind resolved(count);
  UnionFind optimistic(count);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Job& job = jobs[i];
    const JobResult& out = outcomes[i];
    result.search_nodes += out.nodes;
    if (out.outcome == Outcome::kEquivalent) {
      resolved.Join(job.a, job.b);
      optimistic.Join(job.a, job.b);
      result.exceptional_pairs.push_back({reps[job.a], reps[job.b], *out.witness,
                                          profiles[job.a]->fingerprint()});
    } else if (out.outcome == Outcome::kUnresolved) {
      optimistic.Join(job.a, job.b);
      result.unresolved_pairs.push_back({reps[job.a], reps[job.b]});
    }
  }
  result.component = resolved.Labels(&result.resolved_components);
  optimistic.Labels(&result.optimistic_components);

  auto pair_less = [](const auto& x, const auto& y) {
    return std::tie(x.first, x.second) < std::tie(y.first, y.second);
  };
  std::sort(result.exceptional_pairs.begin(), result.exceptional_pairs.end(),
            pair_less);
  std::sort(result.unresolved_pairs.begin(), result.unresolved_pairs.end(),
            pair_less);
  return result;
}

std::vector<IndexSubset> CensusReport::MergedWith(std::size_t index) const {
  std::vector<IndexSubset> out;
  if (index >= classes.size()) throw UsageError("class index out of range");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i != index && classes[i].component == classes[index].component) {
      out.push_back(classes[i].representative);
    }
  }
  return out;
}

CensusReport RunCensus(int n, int d, const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CensusReport report;
  report.n = n;
  report.d = d;

  std::vector<IndexSubset> reps = EnumerateMultClasses(n, d, options.workers);
  report.m = BigInt(static_cast<unsigned long>(reps.size()));
  const BigInt expected = BurnsideM(n, d);
  if (report.m != expected) {
    throw InternalError("enumeration found " + ToDecimal(report.m) +
                        " classes but the orbit count is " + ToDecimal(expected));
  }

  MergeResult merge = MergeUnitary(reps, options);
  report.h_max = merge.resolved_components;
  report.h_min = merge.optimistic_components;
  report.a = AsymptoticA(n, d);

  std::vector<int> orbit_sizes(reps.size());
  ParallelFor(reps.size(), options.workers,
              [&](std::size_t i) { orbit_sizes[i] = MultOrbitSize(reps[i]); });
  report.classes.reserve(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    report.classes.push_back({reps[i], orbit_sizes[i], IsReal(reps[i]),
                              IsLifted(reps[i]), merge.component[i]});
  }
  report.exceptional_pairs = std::move(merge.exceptional_pairs);
  report.unresolved_pairs = std::move(merge.unresolved_pairs);

  report.metadata.node_budget = options.node_budget;
  report.metadata.search_nodes = merge.search_nodes;
  report.metadata.workers = std::max(options.workers, 1);
  report.metadata.elapsed_us =
      std::chrono::duration_cast<std::chrono::microseconds>(
          std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::string CensusSummary(const CensusReport& report) {
  std::ostringstream out;
  out << "n=" << report.n << " d=" << report.d << " m=" << ToDecimal(report.m);
  if (report.h_exact()) {
    out << " h=" << ToDecimal(report.h_max);
  } else {
    out << " h=[" << ToDecimal(report.h_min) << "," << ToDecimal(report.h_max) << "]";
  }
  out << " a=" << report.a.ToString()
      << " exceptional=" << report.exceptional_pairs.size();
  if (!report.unresolved_pairs.empty()) {
    out << " unresolved=" << report.unresolved_pairs.size();
  }
  return out.str();
}

std::vector<std::string> ValidateReport(const CensusReport& report) {
  std::vector<std::string> problems;
  auto fail = [&](std::string message) { problems.push_back(std::move(message)); };
  if (report.n < 1) fail("n must be positive");
  if (report.d < 1 || report.d > report.n) fail("d must satisfy 1 <= d <= n");
  if (report.m != BigInt(static_cast<unsigned long>(report.classes.size()))) {
    fail("m does not match the number of classes");
  }
  if (report.h_min > report.h_max) fail("h_min exceeds h_max");
  if (report.h_max > report.m) fail("h exceeds m");
  if (report.h_min < 1 && !report.classes.empty()) fail("h must be positive");

  std::set<int> components;
  std::set<IndexSubset> reps;
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const ClassRecord& record = report.classes[i];
    const std::string where = "classes[" + std::to_string(i) + "]";
    if (record.representative.modulus() != report.n ||
        record.representative.size() != report.d) {
      fail(where + " has the wrong shape");
      continue;
    }
    if (!reps.insert(record.representative).second) fail(where + " is repeated");
    if (record.orbit_size < 1) fail(where + " has a non-positive orbit size");
    if (record.component < 0) fail(where + " has a negative component");
    components.insert(record.component);
  }
  if (!report.classes.empty() &&
      report.h_max != BigInt(static_cast<unsigned long>(components.size()))) {
    fail("h does not match the number of components");
  }
  for (const auto& pair : report.exceptional_pairs) {
    if (!reps.contains(pair.first) || !reps.contains(pair.second)) {
      fail("exceptional pair " + pair.first.ToString() + " " +
           pair.second.ToString() + " names an unknown class");
    }
  }
  for (const auto& pair : report.unresolved_pairs) {
    if (!reps.contains(pair.first) || !reps.contains(pair.second)) {
      fail("unresolved pair " + pair.first.ToString() + " " +
           pair.second.ToString() + " names an unknown class");
    }
  }
  return problems;
}

}  // namespace framecensus
