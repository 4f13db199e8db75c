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

#include <algorithm>
#include <map>

#include "framecensus/errors.h"

namespace framecensus {
namespace {

void RequireSameShape(const IndexSubset& j, const IndexSubset& k) {
  if (j.modulus() != k.modulus()) {
    throw UsageError("subsets live in different groups: Z_" +
                     std::to_string(j.modulus()) + " vs Z_" +
                     std::to_string(k.modulus()));
  }
  if (j.size() != k.size()) {
    throw UsageError("subsets have different sizes: " +
                     std::to_string(j.size()) + " vs " +
                     std::to_string(k.size()));
  }
}

void RequireGenerating(const IndexSubset& s) {
  if (!SubsetGenerates(s.modulus(), s.elements())) {
    throw UsageError(s.ToString() + " does not generate Z_" +
                     std::to_string(s.modulus()));
  }
}

// Backtracking over reindexings sigma with sigma(0) = 0. Each unassigned
// index keeps the list of images still consistent with every assignment made
// so far; the index with the fewest candidates is branched on next.
class WitnessSearch {
 public:
  WitnessSearch(std::vector<int> source_values, std::vector<int> target_values,
                std::uint64_t budget)
      : n_(static_cast<int>(source_values.size())),
        source_(std::move(source_values)),
        target_(std::move(target_values)),
        budget_(budget),
        sigma_(n_, -1) {}

  std::optional<std::vector<int>> Run() {
    sigma_[0] = 0;
    std::vector<std::vector<int>> domains(n_);
    for (int k = 1; k < n_; ++k) {
      for (int m = 1; m < n_; ++m) {
        if (target_[m] == source_[k]) domains[k].push_back(m);
      }
      if (domains[k].empty()) return std::nullopt;
    }
    if (Search(domains, n_ - 1)) return sigma_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool Search(const std::vector<std::vector<int>>& domains, int remaining) {
    if (remaining == 0) return true;
    int pick = -1;
    for (int k = 1; k < n_; ++k) {
      if (sigma_[k] >= 0) continue;
      if (pick < 0 || domains[k].size() < domains[pick].size()) pick = k;
    }
    for (int image : domains[pick]) {
      if (++nodes_ > budget_) throw SearchBudgetExceeded(budget_, nodes_);
      std::vector<std::vector<int>> next(n_);
      bool consistent = true;
      for (int k = 1; k < n_ && consistent; ++k) {
        if (sigma_[k] >= 0 || k == pick) continue;
        const int wanted = source_[ModN(k - pick, n_)];
        for (int m : domains[k]) {
          if (m != image && target_[ModN(m - image, n_)] == wanted) {
            next[k].push_back(m);
          }
        }
        consistent = !next[k].empty();
      }
      if (!consistent) continue;
      sigma_[pick] = image;
      if (Search(next, remaining - 1)) return true;
      sigma_[pick] = -1;
    }
    return false;
  }

  int n_;
  std::vector<int> source_;
  std::vector<int> target_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> sigma_;
};

}  // namespace

CanonicalForm MultCanonical(const IndexSubset& subset) {
  const int n = subset.modulus();
  CanonicalForm best{subset, EquivalenceKind::kMultiplicative,
                     AffineMap{n, 1 % n, 0}};
  for (int a : Units(n)) {
    AffineMap map{n, a, 0};
    IndexSubset image = subset.Image(map);
    if (image < best.subset) best = {std::move(image), best.kind, map};
  }
  return best;
}

bool IsMultCanonical(const IndexSubset& subset) {
  const int n = subset.modulus();
  const auto& elements = subset.elements();
  std::vector<int> image(elements.size());
  for (int a : Units(n)) {
    if (a == 1) continue;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      image[i] = ModN(static_cast<std::int64_t>(a) * elements[i], n);
    }
    std::sort(image.begin(), image.end());
    if (image < elements) return false;
  }
  return true;
}

bool MultEquivalent(const IndexSubset& j, const IndexSubset& k) {
  RequireSameShape(j, k);
  return MultCanonical(j).subset == MultCanonical(k).subset;
}

std::optional<int> FindMultWitness(const IndexSubset& j, const IndexSubset& k) {
  RequireSameShape(j, k);
  const int n = j.modulus();
  for (int a : Units(n)) {
    if (j.Image(AffineMap{n, a, 0}) == k) return a;
  }
  return std::nullopt;
}

int MultOrbitSize(const IndexSubset& subset) {
  const int n = subset.modulus();
  int stabilizer = 0;
  for (int a : Units(n)) {
    if (subset.Image(AffineMap{n, a, 0}) == subset) ++stabilizer;
  }
  return static_cast<int>(Units(n).size()) / stabilizer;
}

CanonicalForm AffineCanonical(const IndexSubset& subset) {
  const int n = subset.modulus();
  CanonicalForm best{subset, EquivalenceKind::kAffine, AffineMap{n, 1 % n, 0}};
  // The minimum contains 0, so only shifts sending some a*j to 0 compete.
  for (int a : Units(n)) {
    for (int j : subset.elements()) {
      AffineMap map{n, a, ModN(-static_cast<std::int64_t>(a) * j, n)};
      IndexSubset image = subset.Image(map);
      if (image < best.subset) best = {std::move(image), best.kind, map};
    }
  }
  return best;
}

bool AffineEquivalent(const IndexSubset& j, const IndexSubset& k) {
  RequireSameShape(j, k);
  return AffineCanonical(j).subset == AffineCanonical(k).subset;
}

std::optional<AffineMap> FindAffineWitness(const IndexSubset& j,
                                           const IndexSubset& k) {
  RequireSameShape(j, k);
  const int n = j.modulus();
  for (int a : Units(n)) {
    for (int b = 0; b < n; ++b) {
      AffineMap map{n, a, b};
      if (j.Image(map) == k) return map;
    }
  }
  return std::nullopt;
}

GramProfile::GramProfile(IndexSubset subset) : subset_(std::move(subset)) {
  AngleVector angles = ComputeAngleVector(subset_);
  residues_.reserve(angles.values.size());
  for (const RootSum& value : angles.values) {
    residues_.push_back(value.CanonicalResidue());
  }
  fingerprint_.modulus = subset_.modulus();
  fingerprint_.values = residues_;
  std::sort(fingerprint_.values.begin(), fingerprint_.values.end());
}

AngleFingerprint AngleInvariant(const IndexSubset& subset) {
  return GramProfile(subset).fingerprint();
}

std::string UnitaryWitness::CycleString() const {
  const int n = static_cast<int>(permutation.size());
  std::vector<char> seen(n, 0);
  std::string out;
  for (int start = 0; start < n; ++start) {
    if (seen[start] || permutation[start] == start) continue;
    out += "(";
    for (int x = start; !seen[x]; x = permutation[x]) {
      seen[x] = 1;
      if (x != start) out += " ";
      out += std::to_string(x);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::optional<UnitaryWitness> FindUnitaryWitness(
    const GramProfile& j, const GramProfile& k,
    const UnitarySearchOptions& options, UnitarySearchStats* stats) {
  RequireSameShape(j.subset(), k.subset());
  RequireGenerating(j.subset());
  RequireGenerating(k.subset());
  UnitarySearchStats local;
  UnitarySearchStats& st = stats ? *stats : local;
  st = {};
  if (!(j.fingerprint() == k.fingerprint())) {
    st.rejected_by_fingerprint = true;
    return std::nullopt;
  }
  // Map reduced values to small ids so the search compares ints.
  std::map<Residue, int> ids;
  auto to_ids = [&ids](const std::vector<Residue>& residues) {
    std::vector<int> out;
    out.reserve(residues.size());
    for (const Residue& r : residues) {
      out.push_back(ids.emplace(r, static_cast<int>(ids.size())).first->second);
    }
    return out;
  };
  std::vector<int> source = to_ids(j.residues());
  std::vector<int> target = to_ids(k.residues());
  WitnessSearch search(std::move(source), std::move(target),
                       options.node_budget);
  std::optional<std::vector<int>> sigma;
  try {
    sigma = search.Run();
  } catch (const SearchBudgetExceeded&) {
    st.nodes = search.nodes();
    throw;
  }
  st.nodes = search.nodes();
  if (!sigma) return std::nullopt;
  return UnitaryWitness{std::move(*sigma)};
}

std::optional<UnitaryWitness> UnitarilyEquivalent(
    const IndexSubset& j, const IndexSubset& k,
    const UnitarySearchOptions& options, UnitarySearchStats* stats) {
  RequireSameShape(j, k);
  return FindUnitaryWitness(GramProfile(j), GramProfile(k), options, stats);
}

bool CheckUnitaryWitness(const IndexSubset& j, const IndexSubset& k,
                         const UnitaryWitness& witness) {
  RequireSameShape(j, k);
  const int n = j.modulus();
  const auto& sigma = witness.permutation;
  if (static_cast<int>(sigma.size()) != n || sigma[0] != 0) return false;
  std::vector<char> hit(n, 0);
  for (int x : sigma) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  const AngleVector cj = ComputeAngleVector(j);
  const AngleVector ck = ComputeAngleVector(k);
  // c_J(a - b) == c_K(sigma a - sigma b); memoize on the difference pair.
  std::map<std::pair<int, int>, bool> checked;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const std::pair<int, int> key{ModN(a - b, n), ModN(sigma[a] - sigma[b], n)};
      auto it = checked.find(key);
      if (it == checked.end()) {
        it = checked
                 .emplace(key, ValueEquals(cj.values[key.first],
                                           ck.values[key.second]))
                 .first;
      }
      if (!it->second) return false;
    }
  }
  return true;
}

bool IsExceptionalPair(const IndexSubset& j, const IndexSubset& k,
                       const UnitarySearchOptions& options) {
  RequireSameShape(j, k);
  RequireGenerating(j);
  RequireGenerating(k);
  if (MultEquivalent(j, k)) return false;
  return UnitarilyEquivalent(j, k, options).has_value();
}

}  // namespace framecensus
