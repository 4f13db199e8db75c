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

#ifndef FRAMECENSUS_ERRORS_H_
#define FRAMECENSUS_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace framecensus {

// Caller violated a precondition (bad modulus, non-unit multiplier, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed. Seeing one of these is a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The unitary-equivalence backtracking ran out of its node budget. This is
// not a negative answer.
class SearchBudgetExceeded : public std::runtime_error {
 public:
  SearchBudgetExceeded(std::uint64_t budget, std::uint64_t nodes)
      : std::runtime_error("search exceeded budget of " +
                           std::to_string(budget) + " nodes"),
        budget_(budget),
        nodes_(nodes) {}

  std::uint64_t budget() const { return budget_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t budget_;
  std::uint64_t nodes_;
};

// Malformed catalog input. `field()` names the offending JSON path.
class CatalogParseError : public std::runtime_error {
 public:
  CatalogParseError(std::string field, const std::string& what)
      : std::runtime_error("catalog field '" + field + "': " + what),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace framecensus

#endif  // FRAMECENSUS_ERRORS_H_
