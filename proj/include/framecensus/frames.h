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

#ifndef FRAMECENSUS_FRAMES_H_
#define FRAMECENSUS_FRAMES_H_

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "framecensus/cyclotomic.h"
#include "framecensus/numtheory.h"

namespace framecensus {

// A d-element subset J of Z_n, stored sorted. It selects d rows of the n x n
// Fourier matrix; the resulting frame has one vector per element of Z_n.
class IndexSubset {
 public:
  // `elements` must be strictly increasing residues in [0, n), nonempty.
  IndexSubset(int modulus, std::vector<int> elements);

  // Reduces mod n and sorts. Duplicates after reduction are rejected.
  static IndexSubset FromResidues(int modulus, std::span<const int> residues);

  int modulus() const { return modulus_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const { return elements_; }
  bool Contains(int residue) const;

  // Sorted image under x -> a*x + b. The caller guarantees the map is a
  // bijection of Z_n.
  IndexSubset Image(const AffineMap& map) const;

  std::string ToString() const;  // "{1,2,5}"

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;
  // Lexicographic on (modulus, elements).
  friend auto operator<=>(const IndexSubset&, const IndexSubset&) = default;

 private:
  int modulus_;
  std::vector<int> elements_;
};

// Exponent table of the frame: entry (j, g) is J[j]*g mod n, standing for
// w^{J[j] g}. Column g is the frame vector v_g.
struct FrameMatrix {
  int modulus = 1;
  std::vector<int> subset;
  std::vector<int> exponents;  // row-major, subset.size() x modulus

  int rows() const { return static_cast<int>(subset.size()); }
  int exponent(int row, int column) const {
    return exponents[static_cast<std::size_t>(row) * modulus + column];
  }
  std::vector<int> Column(int column) const;
};

// c_J(k) = sum_{j in J} w^{kj} for k in Z_n. The Gram matrix of the frame is
// circulant: <v_a, v_b> = c_J(a - b).
struct AngleVector {
  int modulus = 1;
  std::vector<RootSum> values;
};

FrameMatrix BuildFrame(const IndexSubset& subset);
AngleVector ComputeAngleVector(const IndexSubset& subset);
RootSum GramEntry(const AngleVector& angles, int a, int b);

// J == -J.
bool IsReal(const IndexSubset& subset);
// 0 in J.
bool IsLifted(const IndexSubset& subset);
// Checks V V^* == n I exactly in Z[w].
bool VerifyTight(const IndexSubset& subset);
// The n columns are pairwise distinct.
bool HasDistinctVectors(const FrameMatrix& frame);

}  // namespace framecensus

#endif  // FRAMECENSUS_FRAMES_H_
