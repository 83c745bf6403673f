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

// Construction A lattices from self-dual codes over Z_m and exact short
// vector statistics.

#ifndef SDC_LATTICE_HPP_
#define SDC_LATTICE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "sdc/code.hpp"
#include "sdc/enumerate.hpp"

namespace sdc {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Lattice spanned by the rows of `basis` scaled by 1/sqrt(scale): the norm
// of integer combination v is |v|^2 / scale.
struct Lattice {
  IntMatrix basis;
  std::int64_t scale = 1;
};

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool operator==(const Fraction&) const = default;
};
Fraction make_fraction(std::int64_t num, std::int64_t den);
std::string format_fraction(const Fraction& f);

// {x in Z^n : x mod m in C} / sqrt(m). The basis is the integer lift of the
// standard-form rows completed by m e_j on non-pivot columns. Requires a
// self-dual code over Z_m (or GF(p)); throws Error(kNotSelfDual).
Lattice construction_a(const Code& code);

struct LatticeReport {
  std::size_t dimension = 0;
  IntMatrix gram_scaled;  // scale * Gram, integral
  std::int64_t scale = 1;
  bool unimodular = false;  // det(Gram) == 1, exact
  Fraction min_norm;
  std::uint64_t kissing = 0;
  // (norm, count) for norms mu, mu + 1, ... (theta_depth entries).
  std::vector<std::pair<Fraction, std::uint64_t>> theta_prefix;
  std::uint64_t nodes = 0;  // enumeration tree size
};

// Exact det(scale * Gram) / scale^n == 1 via fraction-free elimination.
bool is_unimodular(const Lattice& lattice);

// LLL-reduces a copy of the basis, then finds the minimum and counts short
// vectors by Fincke-Pohst enumeration with exact integer norms.
// Throws Error(kNotPositiveDefinite) for dependent bases.
LatticeReport lattice_report(const Lattice& lattice, unsigned theta_depth = 1);

// LLL reduction (delta = 0.99) of an integer basis, in place.
void lll_reduce(IntMatrix& basis);

// Exact minimum Euclidean weight over Z_m.
std::uint64_t min_euclidean_weight(const Code& code, const EnumOptions& options = {});

}  // namespace sdc

#endif  // SDC_LATTICE_HPP_
