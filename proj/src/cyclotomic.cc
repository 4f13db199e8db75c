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

#include "framecensus/cyclotomic.h"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "framecensus/errors.h"

namespace framecensus {
namespace {

void Normalize(std::vector<BigInt>& coefficients) {
  while (!coefficients.empty() && coefficients.back() == 0) {
    coefficients.pop_back();
  }
}

void RequireSameOrder(const RootSum& a, const RootSum& b) {
  if (a.order() != b.order()) {
    throw UsageError("RootSum order mismatch: " + std::to_string(a.order()) +
                     " vs " + std::to_string(b.order()));
  }
}

std::int64_t Mod(std::int64_t value, std::int64_t n) {
  std::int64_t r = value % n;
  return r < 0 ? r + n : r;
}

IntPolynomial ComputeCyclotomic(int n) {
  IntPolynomial product(std::vector<BigInt>{1});
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) product = product * CyclotomicPolynomial(d);
  }
  auto [quotient, remainder] =
      DivideByMonic(IntPolynomial::XPowerMinusOne(n), product);
  if (!remainder.is_zero()) {
    throw InternalError("x^n - 1 not divisible by proper cyclotomic factors");
  }
  return quotient;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  Normalize(coefficients_);
}

IntPolynomial IntPolynomial::XPowerMinusOne(int n) {
  if (n < 1) throw UsageError("x^n - 1 needs n >= 1");
  std::vector<BigInt> c(n + 1);
  c[0] = -1;
  c[n] = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<BigInt> c(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, IntPolynomial> DivideByMonic(
    const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (divisor.is_zero() || divisor.leading() != 1) {
    throw UsageError("DivideByMonic: divisor must be monic");
  }
  const int dd = divisor.degree();
  std::vector<BigInt> rem = dividend.coefficients();
  if (static_cast<int>(rem.size()) <= dd) {
    return {IntPolynomial(), IntPolynomial(std::move(rem))};
  }
  std::vector<BigInt> quot(rem.size() - dd);
  const auto& dc = divisor.coefficients();
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i] == 0) continue;
    BigInt q = rem[i];
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) {
      if (dc[j] != 0) rem[i - dd + j] -= q * dc[j];
    }
  }
  rem.resize(dd);
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

const IntPolynomial& CyclotomicPolynomial(int n) {
  if (n < 1) throw UsageError("CyclotomicPolynomial: n must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const IntPolynomial>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  // Computed unlocked: the recursion re-enters this function. A concurrent
  // fill for the same n produces the same polynomial and the first one wins.
  auto computed = std::make_unique<const IntPolynomial>(
      n == 1 ? IntPolynomial(std::vector<BigInt>{-1, 1}) : ComputeCyclotomic(n));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(computed));
  return *it->second;
}

RootSum::RootSum(int order) {
  if (order < 1) throw UsageError("RootSum order must be >= 1");
  coeffs_.resize(order);
}

RootSum RootSum::FromExponents(int order,
                               std::span<const std::int64_t> exponents) {
  RootSum s(order);
  for (std::int64_t e : exponents) ++s.coeffs_[Mod(e, order)];
  return s;
}

RootSum RootSum::Integer(int order, const BigInt& value) {
  RootSum s(order);
  s.coeffs_[0] = value;
  return s;
}

RootSum RootSum::Root(int order, std::int64_t exponent) {
  RootSum s(order);
  s.coeffs_[Mod(exponent, order)] = 1;
  return s;
}

RootSum RootSum::operator-() const {
  RootSum s(order());
  for (int k = 0; k < order(); ++k) s.coeffs_[k] = -coeffs_[k];
  return s;
}

RootSum& RootSum::operator+=(const RootSum& other) {
  RequireSameOrder(*this, other);
  for (int k = 0; k < order(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

RootSum& RootSum::operator-=(const RootSum& other) {
  RequireSameOrder(*this, other);
  for (int k = 0; k < order(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

RootSum operator*(const RootSum& a, const RootSum& b) {
  RequireSameOrder(a, b);
  const int n = a.order();
  RootSum c(n);
  for (int i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      int k = i + j;
      if (k >= n) k -= n;
      c.coeffs_[k] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return c;
}

RootSum RootSum::Conjugate() const {
  const int n = order();
  RootSum s(n);
  for (int k = 0; k < n; ++k) s.coeffs_[(n - k) % n] = coeffs_[k];
  return s;
}

std::vector<BigInt> RootSum::CanonicalResidue() const {
  const IntPolynomial& phi = CyclotomicPolynomial(order());
  auto [quotient, remainder] = DivideByMonic(IntPolynomial(coeffs_), phi);
  std::vector<BigInt> residue = remainder.coefficients();
  residue.resize(phi.degree());
  return residue;
}

bool RootSum::IsZero() const {
  bool all_zero = true;
  for (const BigInt& c : coeffs_) {
    if (c != 0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) return true;
  const IntPolynomial& phi = CyclotomicPolynomial(order());
  return DivideByMonic(IntPolynomial(coeffs_), phi).second.is_zero();
}

std::complex<double> RootSum::ToComplex() const {
  const int n = order();
  double re = 0.0;
  double im = 0.0;
  for (int k = 0; k < n; ++k) {
    if (coeffs_[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * k / n;
    const double c = coeffs_[k].get_d();
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {re, im};
}

bool ValueEquals(const RootSum& a, const RootSum& b) { return (a - b).IsZero(); }

}  // namespace framecensus
