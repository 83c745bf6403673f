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

// Exact weight distributions by full message-space enumeration.

#ifndef SDC_ENUMERATE_HPP_
#define SDC_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sdc/code.hpp"

namespace sdc {

enum class WeightKind { kHamming, kEuclidean };

struct WeightEnumerator {
  std::vector<std::uint64_t> counts;  // A_0 .. A_max
  WeightKind kind = WeightKind::kHamming;

  std::uint64_t total() const;
  // Smallest nonzero index with a nonzero count; nullopt for the zero code.
  std::optional<std::size_t> min_nonzero() const;
  std::uint64_t at(std::size_t w) const { return w < counts.size() ? counts[w] : 0; }

  bool operator==(const WeightEnumerator&) const = default;
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 33;

struct EnumOptions {
  std::uint64_t budget = kDefaultBudget;
  // 0 = std::thread::hardware_concurrency().
  unsigned jobs = 0;
  // Called with (work done, total work) as tasks finish; may run on any worker.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

unsigned hamming_weight(const Ring& ring, std::span<const Elem> v);
// Sum of min(c, N - c)^2 over coordinates, N = p^m. Requires r == 1.
std::uint64_t euclidean_weight(const Ring& ring, std::span<const Elem> v);

// Exact enumerator. Gray-code traversal of the standard-form message space,
// one row addition per codeword; over fields only one codeword per
// projective point is visited for the Hamming kind.
// Throws BudgetExceeded when |C| > options.budget.
WeightEnumerator weight_enumerator(const Code& code, WeightKind kind = WeightKind::kHamming,
                                   const EnumOptions& options = {});

struct MinWeight {
  std::uint64_t weight = 0;
  Vec witness;
};

// Minimum nonzero weight and the first codeword attaining it in traversal
// order. Free Hamming codes over Z_{p^m} are answered on Res(C) and the
// witness lifted as p^(m-1) times a residue codeword. Throws
// Error(kInvalidArgument) for the zero code.
MinWeight min_weight(const Code& code, WeightKind kind = WeightKind::kHamming, const EnumOptions& options = {});

// First nonzero codeword of Hamming weight < bound in traversal order;
// nullopt when d(C) >= bound. Stops early, so cheap for bad codes.
std::optional<Vec> find_codeword_below(const Code& code, unsigned bound, const EnumOptions& options = {});

// Hamming counts A_0 .. A_max_weight. Free codes over Z_{p^2} are split by
// residue class: a codeword congruent to a residue word c mod p has c's
// support plus p times a coset of Tor(C) elsewhere, so only residue words
// of weight <= max_weight need their fibres enumerated. Other codes fall
// back to the full enumerator.
WeightEnumerator low_weight_enumerator(const Code& code, unsigned max_weight, const EnumOptions& options = {});
bool low_weight_uses_residue_split(const Code& code);

// Number of distinct self-dual codes of length n over GF(7):
// 2 * prod_{i=1}^{(n-2)/2} (7^i + 1).
boost::multiprecision::cpp_int mass_formula_gf7(unsigned n);

std::string format_enumerator(const WeightEnumerator& we, char sep = ' ');

}  // namespace sdc

#endif  // SDC_ENUMERATE_HPP_
