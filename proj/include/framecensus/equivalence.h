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

#ifndef FRAMECENSUS_EQUIVALENCE_H_
#define FRAMECENSUS_EQUIVALENCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "framecensus/bigint.h"
#include "framecensus/frames.h"
#include "framecensus/numtheory.h"

namespace framecensus {

enum class EquivalenceKind { kMultiplicative, kAffine };

// Lexicographically least member of the orbit of a subset, with the group
// element carrying the input onto it (shift is always 0 for kMultiplicative).
struct CanonicalForm {
  IndexSubset subset;
  EquivalenceKind kind;
  AffineMap witness;
};

CanonicalForm MultCanonical(const IndexSubset& subset);
// Cheaper than comparing against MultCanonical(): stops at the first unit
// that produces a smaller image.
bool IsMultCanonical(const IndexSubset& subset);
bool MultEquivalent(const IndexSubset& j, const IndexSubset& k);
// Some unit a with k = a*j, if one exists.
std::optional<int> FindMultWitness(const IndexSubset& j, const IndexSubset& k);
// Size of the Z_n^* orbit of the subset.
int MultOrbitSize(const IndexSubset& subset);

CanonicalForm AffineCanonical(const IndexSubset& subset);
bool AffineEquivalent(const IndexSubset& j, const IndexSubset& k);
std::optional<AffineMap> FindAffineWitness(const IndexSubset& j,
                                           const IndexSubset& k);

// A RootSum value reduced modulo Phi_n (see RootSum::CanonicalResidue).
using Residue = std::vector<BigInt>;

// Sorted multiset {c_J(k) : k in Z_n} of reduced values. Unitarily
// equivalent frames share all inner products, so unequal fingerprints
// certify inequivalence.
struct AngleFingerprint {
  int modulus = 1;
  std::vector<Residue> values;

  friend bool operator==(const AngleFingerprint&,
                         const AngleFingerprint&) = default;
  friend bool operator<(const AngleFingerprint& a, const AngleFingerprint& b) {
    if (a.modulus != b.modulus) return a.modulus < b.modulus;
    return a.values < b.values;
  }
};

AngleFingerprint AngleInvariant(const IndexSubset& subset);

// Reduced circulant Gram data of one subset, computed once and reused across
// many equivalence tests.
class GramProfile {
 public:
  explicit GramProfile(IndexSubset subset);

  const IndexSubset& subset() const { return subset_; }
  int modulus() const { return subset_.modulus(); }
  // residues()[k] is c_J(k) reduced modulo Phi_n.
  const std::vector<Residue>& residues() const { return residues_; }
  const AngleFingerprint& fingerprint() const { return fingerprint_; }

 private:
  IndexSubset subset_;
  std::vector<Residue> residues_;
  AngleFingerprint fingerprint_;
};

// Reindexing sigma of Z_n with sigma(0) = 0 and
// c_J(a - b) == c_K(sigma(a) - sigma(b)) for all a, b.
struct UnitaryWitness {
  std::vector<int> permutation;

  // Disjoint-cycle notation, fixed points omitted: "(1 5)(2 6 3)" or "()".
  std::string CycleString() const;
  friend bool operator==(const UnitaryWitness&, const UnitaryWitness&) = default;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct UnitarySearchOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct UnitarySearchStats {
  std::uint64_t nodes = 0;
  bool rejected_by_fingerprint = false;
};

// Decides unitary equivalence (up to reindexing) of the frames of two
// generating subsets of equal size by matching their circulant Gram data.
// Returns nullopt when inequivalent. Throws SearchBudgetExceeded when the
// backtracking visits more than options.node_budget nodes, and UsageError
// when a precondition fails.
std::optional<UnitaryWitness> UnitarilyEquivalent(
    const IndexSubset& j, const IndexSubset& k,
    const UnitarySearchOptions& options = {},
    UnitarySearchStats* stats = nullptr);

std::optional<UnitaryWitness> FindUnitaryWitness(
    const GramProfile& j, const GramProfile& k,
    const UnitarySearchOptions& options = {},
    UnitarySearchStats* stats = nullptr);

// Exact check of the witness condition over all pairs (a, b).
bool CheckUnitaryWitness(const IndexSubset& j, const IndexSubset& k,
                         const UnitaryWitness& witness);

// Unitarily equivalent but not multiplicatively equivalent.
bool IsExceptionalPair(const IndexSubset& j, const IndexSubset& k,
                       const UnitarySearchOptions& options = {});

}  // namespace framecensus

#endif  // FRAMECENSUS_EQUIVALENCE_H_
