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

#include "framecensus/frames.h"

#include <algorithm>
#include <set>

#include "framecensus/errors.h"

namespace framecensus {

IndexSubset::IndexSubset(int modulus, std::vector<int> elements)
    : modulus_(modulus), elements_(std::move(elements)) {
  if (modulus_ < 1) throw UsageError("IndexSubset: modulus must be >= 1");
  if (elements_.empty()) throw UsageError("IndexSubset: subset is empty");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 0 || elements_[i] >= modulus_) {
      throw UsageError("IndexSubset: residue " + std::to_string(elements_[i]) +
                       " outside [0, " + std::to_string(modulus_) + ")");
    }
    if (i > 0 && elements_[i] <= elements_[i - 1]) {
      throw UsageError("IndexSubset: elements must be strictly increasing");
    }
  }
}

IndexSubset IndexSubset::FromResidues(int modulus,
                                      std::span<const int> residues) {
  if (modulus < 1) throw UsageError("IndexSubset: modulus must be >= 1");
  std::vector<int> reduced;
  reduced.reserve(residues.size());
  for (int r : residues) reduced.push_back(ModN(r, modulus));
  std::sort(reduced.begin(), reduced.end());
  if (std::adjacent_find(reduced.begin(), reduced.end()) != reduced.end()) {
    throw UsageError("IndexSubset: duplicate residue mod " +
                     std::to_string(modulus));
  }
  return IndexSubset(modulus, std::move(reduced));
}

bool IndexSubset::Contains(int residue) const {
  return std::binary_search(elements_.begin(), elements_.end(),
                            ModN(residue, modulus_));
}

IndexSubset IndexSubset::Image(const AffineMap& map) const {
  std::vector<int> image;
  image.reserve(elements_.size());
  for (int x : elements_) image.push_back(map(x));
  std::sort(image.begin(), image.end());
  return IndexSubset(modulus_, std::move(image));
}

std::string IndexSubset::ToString() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(elements_[i]);
  }
  return s + "}";
}

std::vector<int> FrameMatrix::Column(int column) const {
  std::vector<int> v(rows());
  for (int j = 0; j < rows(); ++j) v[j] = exponent(j, column);
  return v;
}

FrameMatrix BuildFrame(const IndexSubset& subset) {
  FrameMatrix frame;
  frame.modulus = subset.modulus();
  frame.subset = subset.elements();
  const int n = frame.modulus;
  frame.exponents.resize(static_cast<std::size_t>(subset.size()) * n);
  for (int j = 0; j < subset.size(); ++j) {
    for (int g = 0; g < n; ++g) {
      frame.exponents[static_cast<std::size_t>(j) * n + g] =
          ModN(static_cast<std::int64_t>(subset.elements()[j]) * g, n);
    }
  }
  return frame;
}

AngleVector ComputeAngleVector(const IndexSubset& subset) {
  const int n = subset.modulus();
  AngleVector angles;
  angles.modulus = n;
  angles.values.reserve(n);
  std::vector<std::int64_t> exponents(subset.size());
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < subset.size(); ++j) {
      exponents[j] = static_cast<std::int64_t>(k) * subset.elements()[j];
    }
    angles.values.push_back(RootSum::FromExponents(n, exponents));
  }
  return angles;
}

RootSum GramEntry(const AngleVector& angles, int a, int b) {
  return angles.values[ModN(static_cast<std::int64_t>(a) - b, angles.modulus)];
}

bool IsReal(const IndexSubset& subset) {
  for (int j : subset.elements()) {
    if (!subset.Contains(-j)) return false;
  }
  return true;
}

bool IsLifted(const IndexSubset& subset) { return subset.Contains(0); }

bool VerifyTight(const IndexSubset& subset) {
  const int n = subset.modulus();
  const auto& J = subset.elements();
  std::vector<std::int64_t> exponents(n);
  // Row inner product <row_i, row_l> = sum_g w^{(J_i - J_l) g}.
  for (int i = 0; i < subset.size(); ++i) {
    for (int l = 0; l < subset.size(); ++l) {
      for (int g = 0; g < n; ++g) {
        exponents[g] = static_cast<std::int64_t>(J[i] - J[l]) * g;
      }
      RootSum entry = RootSum::FromExponents(n, exponents);
      if (i == l) entry -= RootSum::Integer(n, n);
      if (!entry.IsZero()) return false;
    }
  }
  return true;
}

bool HasDistinctVectors(const FrameMatrix& frame) {
  std::set<std::vector<int>> seen;
  for (int g = 0; g < frame.modulus; ++g) {
    if (!seen.insert(frame.Column(g)).second) return false;
  }
  return true;
}

}  // namespace framecensus
