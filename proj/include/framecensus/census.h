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

#ifndef FRAMECENSUS_CENSUS_H_
#define FRAMECENSUS_CENSUS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "framecensus/bigint.h"
#include "framecensus/equivalence.h"
#include "framecensus/frames.h"

namespace framecensus {

struct CensusOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  int workers = 1;
};

// One representative per Z_n^*-orbit of generating d-subsets of Z_n, each
// the lexicographic minimum of its orbit, in lexicographic order. The output
// does not depend on `workers`.
std::vector<IndexSubset> EnumerateMultClasses(int n, int d, int workers = 1);

// A unitary equivalence between two multiplicatively inequivalent classes.
struct ExceptionalPair {
  IndexSubset first;
  IndexSubset second;
  UnitaryWitness witness;        // reindexing carrying first onto second
  AngleFingerprint fingerprint;  // shared by both, kept for audit

  friend bool operator==(const ExceptionalPair&,
                         const ExceptionalPair&) = default;
};

// A pair whose unitary test ran out of budget; undecided.
struct UnresolvedPair {
  IndexSubset first;
  IndexSubset second;

  friend bool operator==(const UnresolvedPair&,
                         const UnresolvedPair&) = default;
};

struct MergeResult {
  // component[i] for reps[i]; ids are assigned in order of first appearance.
  std::vector<int> component;
  int resolved_components = 0;    // merges from found witnesses only
  int optimistic_components = 0;  // additionally merging unresolved pairs
  std::vector<ExceptionalPair> exceptional_pairs;  // sorted
  std::vector<UnresolvedPair> unresolved_pairs;    // sorted
  std::uint64_t search_nodes = 0;
};

// Buckets the representatives by angle fingerprint and runs the unitary test
// on every pair inside a bucket, joining classes with union-find. Budget
// exhaustion marks the pair unresolved instead of guessing.
MergeResult MergeUnitary(const std::vector<IndexSubset>& reps,
                         const CensusOptions& options = {});

struct ClassRecord {
  IndexSubset representative;
  int orbit_size = 0;
  bool real = false;
  bool lifted = false;
  int component = 0;

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

struct CensusMetadata {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t search_nodes = 0;
  int workers = 1;
  std::int64_t elapsed_us = 0;

  friend bool operator==(const CensusMetadata&,
                         const CensusMetadata&) = default;
};

struct CensusReport {
  int n = 1;
  int d = 1;
  BigInt m;
  // h is an interval only when some pair stayed unresolved.
  BigInt h_min;
  BigInt h_max;
  ExactRational a;
  std::vector<ClassRecord> classes;
  std::vector<ExceptionalPair> exceptional_pairs;
  std::vector<UnresolvedPair> unresolved_pairs;
  CensusMetadata metadata;

  bool h_exact() const { return h_min == h_max; }
  // Other representatives in the same unitary class as classes[index].
  std::vector<IndexSubset> MergedWith(std::size_t index) const;

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

// Throws InternalError if the enumeration disagrees with the Burnside count.
CensusReport RunCensus(int n, int d, const CensusOptions& options = {});

// "n=8 d=3 m=17 h=16 a=20/1 exceptional=1", plus " unresolved=k" when h is
// an interval (printed as h=[min,max]).
std::string CensusSummary(const CensusReport& report);

// Structural invariants; returns one message per violation.
std::vector<std::string> ValidateReport(const CensusReport& report);

}  // namespace framecensus

#endif  // FRAMECENSUS_CENSUS_H_
