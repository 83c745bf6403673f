/*
 * Copyright 2026 The sdcodes Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SDC_ERROR_HPP_
#define SDC_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sdc {

enum class ErrorKind {
  kInvalidArgument,
  kParse,
  kNotAUnit,
  kNoSolution,
  kUseOtherConstruction,
  kBudgetExceeded,
  kWitnessInvalid,
  kNotSelfDual,
  kExhausted,
  kFreeRankTooSmall,
  kLengthTooSmall,
  kNotPositiveDefinite,
  kFixtureValidationFailed,
  kSizeLimit,
};

std::string_view to_string(ErrorKind kind);

// All domain failures surface as Error; `kind` carries the structured cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by enumeration when |C| exceeds the caller's budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t cardinality, std::uint64_t budget)
      : Error(ErrorKind::kBudgetExceeded,
              "code has " + std::to_string(cardinality) + " codewords, budget is " +
                  std::to_string(budget)),
        cardinality_(cardinality) {}

  // Exact |C|; saturates at UINT64_MAX for codes beyond 64 bits.
  std::uint64_t cardinality() const noexcept { return cardinality_; }

 private:
  std::uint64_t cardinality_;
};

}  // namespace sdc

#endif  // SDC_ERROR_HPP_
