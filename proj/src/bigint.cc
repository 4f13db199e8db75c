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

#include "framecensus/bigint.h"

#include "framecensus/errors.h"

namespace framecensus {

ExactRational::ExactRational(BigInt numerator, BigInt denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_ == 0) throw UsageError("ExactRational: zero denominator");
  if (denominator_ < 0) {
    numerator_ = -numerator_;
    denominator_ = -denominator_;
  }
  BigInt g = gcd(numerator_, denominator_);
  if (g > 1) {
    numerator_ /= g;
    denominator_ /= g;
  }
}

double ExactRational::ToDouble() const {
  mpq_class q(numerator_, denominator_);
  return q.get_d();
}

std::string ExactRational::ToString() const {
  return ToDecimal(numerator_) + "/" + ToDecimal(denominator_);
}

}  // namespace framecensus
