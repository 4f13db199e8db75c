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

#ifndef FRAMECENSUS_CYCLOTOMIC_H_
#define FRAMECENSUS_CYCLOTOMIC_H_

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "framecensus/bigint.h"

namespace framecensus {

// Dense polynomial over Z. coefficients()[i] multiplies x^i. Always
// normalized: the leading coefficient is nonzero and the zero polynomial has
// no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  // x^n - 1.
  static IntPolynomial XPowerMinusOne(int n);

  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const BigInt& leading() const { return coefficients_.back(); }

  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

 private:
  std::vector<BigInt> coefficients_;
};

// Quotient and remainder of `dividend` by a monic `divisor`. Exact over Z.
std::pair<IntPolynomial, IntPolynomial> DivideByMonic(
    const IntPolynomial& dividend, const IntPolynomial& divisor);

// The n-th cyclotomic polynomial, built as (x^n - 1) / prod_{d | n, d < n}
// Phi_d. Results are memoized process-wide; the returned reference stays
// valid for the life of the process.
const IntPolynomial& CyclotomicPolynomial(int n);

// An element of the group ring Z[Z_n]: coeffs()[k] is the multiplicity of
// w^k with w = exp(2 pi i / n). Several coefficient vectors describe the same
// complex number; use ValueEquals() or IsZero() to compare values.
// operator== compares coefficient vectors.
class RootSum {
 public:
  explicit RootSum(int order);

  static RootSum FromExponents(int order, std::span<const std::int64_t> exponents);
  static RootSum Integer(int order, const BigInt& value);
  static RootSum Root(int order, std::int64_t exponent);

  int order() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  RootSum operator-() const;
  RootSum& operator+=(const RootSum& other);
  RootSum& operator-=(const RootSum& other);
  friend RootSum operator+(RootSum a, const RootSum& b) { return a += b; }
  friend RootSum operator-(RootSum a, const RootSum& b) { return a -= b; }
  // Cyclic convolution, i.e. multiplication in Z[x]/(x^n - 1).
  friend RootSum operator*(const RootSum& a, const RootSum& b);

  // w^k -> w^{-k}.
  RootSum Conjugate() const;

  // Exact: Phi_n divides the coefficient polynomial.
  bool IsZero() const;

  // Remainder of the coefficient polynomial modulo Phi_n, padded to phi(n)
  // entries. Two RootSums are equal as complex numbers iff their residues
  // are equal.
  std::vector<BigInt> CanonicalResidue() const;

  // Double-precision evaluation. Diagnostics only.
  std::complex<double> ToComplex() const;

  friend bool operator==(const RootSum& a, const RootSum& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<BigInt> coeffs_;
};

bool ValueEquals(const RootSum& a, const RootSum& b);

}  // namespace framecensus

#endif  // FRAMECENSUS_CYCLOTOMIC_H_
