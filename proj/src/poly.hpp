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

// Dense polynomials over Z_N, constant term first. Internal to ring.cpp.

#ifndef SDC_SRC_POLY_HPP_
#define SDC_SRC_POLY_HPP_

#include <cstdint>
#include <vector>

namespace sdc::poly {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a);
Poly add(const Poly& a, const Poly& b, std::uint64_t n);
Poly sub(const Poly& a, const Poly& b, std::uint64_t n);
Poly mul(const Poly& a, const Poly& b, std::uint64_t n);
Poly scale(const Poly& a, std::uint64_t s, std::uint64_t n);
// Remainder by a monic divisor.
Poly mod_monic(Poly a, const Poly& f, std::uint64_t n);
// Quotient and remainder by a monic divisor.
std::pair<Poly, Poly> divmod_monic(Poly a, const Poly& f, std::uint64_t n);
// x^e mod f over Z_N.
Poly powmod_x(std::uint64_t e, const Poly& f, std::uint64_t n);

// Field-only helpers (n prime).
Poly make_monic(const Poly& a, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
// Returns (g, s, t) with s a + t b = g monic.
struct Bezout {
  Poly g, s, t;
};
Bezout ext_gcd(const Poly& a, const Poly& b, std::uint64_t p);
bool is_irreducible(const Poly& f, std::uint64_t p);

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t n);

}  // namespace sdc::poly

#endif  // SDC_SRC_POLY_HPP_
