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

// Building-up construction of self-dual codes, its coset-based variant and
// the converse reduction.

#ifndef SDC_BUILDUP_HPP_
#define SDC_BUILDUP_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "sdc/code.hpp"

namespace sdc {

// (alpha, beta, x1, x2) extending a self-dual code of length 2n to 2n + 4.
struct BuildUpWitness {
  Elem alpha;
  Elem beta;
  Vec x1;
  Vec x2;
};

// y_i = (-s_i, -t_i, -alpha s_i - beta t_i, -beta s_i + alpha t_i) with
// s_i = x1 . r_i and t_i = x2 . r_i for generator row r_i.
Vec witness_row_prefix(const Ring& ring, const BuildUpWitness& w, std::span<const Elem> row);

// Throws Error(kWitnessInvalid) naming the first failed constraint.
void validate_witness(const Ring& ring, const BuildUpWitness& w, std::size_t length);

// Rows (1,0,0,0 | x1), (0,1,0,0 | x2), then (y_i | r_i) for every row r_i of
// c0's generator matrix, in order and without re-standardizing.
// Throws Error(kNotSelfDual) or Error(kWitnessInvalid).
Code buildup(const Code& c0, const BuildUpWitness& w);

enum class WitnessStrategy { kRandom, kExhaustive };

// Stream of witnesses for codes of a given length over `ring`, all sharing
// the (alpha, beta) pair given at construction.
//
// Random: x1 uniform except one coordinate solved by search over R so that
// x1 . x1 = -1; x2 uniform except a unit-paired coordinate fixed by the
// linear constraint x1 . x2 = 0 and one more searched for x2 . x2 = -1.
// Needs |R| <= 2^16. Exhaustive: all valid (x1, x2) in lexicographic order;
// needs |R|^(2n) <= 2^24 where 2n is the length. x2 is scanned in full
// for every valid x1, so a complete stream costs about |R|^(4n) steps.
class WitnessSearch {
 public:
  WitnessSearch(std::shared_ptr<const Ring> ring, std::size_t length, Elem alpha, Elem beta,
                WitnessStrategy strategy, std::uint64_t seed = 0);

  // nullopt once the exhaustive stream is done. Random streams throw
  // Error(kExhausted) when no valid x1 exists after many attempts.
  std::optional<BuildUpWitness> next();

 private:
  std::optional<Vec> random_x1();
  std::optional<Vec> random_x2(const Vec& x1);
  bool advance(Vec& v);

  std::shared_ptr<const Ring> ring_;
  std::size_t length_;
  Elem alpha_;
  Elem beta_;
  WitnessStrategy strategy_;
  std::mt19937_64 rng_;
  std::vector<Elem> elems_;
  Elem minus_one_;
  // Exhaustive cursor.
  bool started_ = false;
  bool done_ = false;
  Vec x1_;
  Vec x2_;
};

// Modified construction: C1 from rows (s_i, t_i, alpha s_i + beta t_i,
// beta s_i - alpha t_i | r_i); every self-orthogonal x1' in C1-perp of the
// form (1,0,0,0 | *) paired with an orthogonal x2' of the form (0,1,0,0 | *)
// gives C1 + <x1', x2'>. Distinct codes are returned in reduced row echelon
// form, sorted. Fields only; throws Error(kSizeLimit) when the coset space
// to scan exceeds 2^20 vectors.
std::vector<Code> modified_buildup(const Code& c0, std::span<const std::pair<Elem, Elem>> st, const Elem& alpha,
                                   const Elem& beta);

// Reduced row echelon form over a field, original column order. Equal
// matrices iff equal row spaces.
Matrix rref(const Ring& field, const Matrix& gen);

struct ReductionCertificate {
  std::vector<std::size_t> perm;  // buildup(reduced, witness) spans permute_columns(c, perm)
  BuildUpWitness witness;
  Code reduced;
  // Unit counts of the two combined rows; the chain-ring argument needs >= 2.
  unsigned v1_units = 0;
  unsigned v2_units = 0;
};

// Converse construction. The input is standardized so that its first four
// pivot columns carry I_4; rows 3 and 4 are folded into rows 1 and 2 with
// (alpha, beta) from solve_alpha_beta and the four pivot columns dropped.
// Throws Error(kLengthTooSmall) for length < 8, Error(kNotSelfDual), and
// Error(kFreeRankTooSmall) when fewer than four free rows exist.
ReductionCertificate reduce(const Code& c);

}  // namespace sdc

#endif  // SDC_BUILDUP_HPP_
