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

#ifndef FRAMECENSUS_BIGINT_H_
#define FRAMECENSUS_BIGINT_H_

#include <gmpxx.h>

#include <string>

namespace framecensus {

using BigInt = mpz_class;

inline BigInt Binomial(unsigned long n, unsigned long k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

inline BigInt Factorial(unsigned long n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

inline BigInt Power(const BigInt& base, unsigned long exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

inline std::string ToDecimal(const BigInt& value) { return value.get_str(10); }

// Exact rational with a positive denominator, always in lowest terms.
class ExactRational {
 public:
  ExactRational() : numerator_(0), denominator_(1) {}
  ExactRational(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const { return numerator_; }
  const BigInt& denominator() const { return denominator_; }
  bool is_integer() const { return denominator_ == 1; }
  double ToDouble() const;
  std::string ToString() const;  // "num/den"

  friend bool operator==(const ExactRational& lhs, const ExactRational& rhs) {
    return lhs.numerator_ == rhs.numerator_ &&
           lhs.denominator_ == rhs.denominator_;
  }

 private:
  BigInt numerator_;
  BigInt denominator_;
};

}  // namespace framecensus

#endif  // FRAMECENSUS_BIGINT_H_
