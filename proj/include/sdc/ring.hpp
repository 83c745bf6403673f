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

// Exact arithmetic over GF(p^r), Z_{p^m} and the Galois rings GR(p^m, r).
//
// Every ring handled here is a finite chain ring whose maximal ideal is
// generated by gamma = p, so all three kinds share one representation: an
// element is a vector of r coefficients in [0, p^m) in the monomial basis of
// a monic modulus polynomial f(x) whose reduction mod p is irreducible.

#ifndef SDC_RING_HPP_
#define SDC_RING_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sdc {

inline constexpr std::size_t kMaxDegree = 8;
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

enum class RingKind { kField, kZpm, kGaloisRing };

struct RingSpec {
  RingKind kind = RingKind::kField;
  std::uint64_t p = 2;
  unsigned m = 1;
  unsigned r = 1;
  // Monic modulus, constant term first, length r + 1. Empty iff r == 1.
  std::vector<std::uint64_t> modulus_poly;

  bool operator==(const RingSpec&) const = default;
};

// Parses `gf <p> [<r> [coeffs]]`, `z <p> <m>` or `gr <p> <m> <r> [coeffs]`.
// Coefficients are constant term first; the leading 1 may be omitted. The
// result is normalized: m == 1 is a field, r == 1 with m > 1 is Z_{p^m}.
RingSpec parse_ring_spec(std::string_view text);
std::string format_ring_spec(const RingSpec& spec);

struct Elem {
  std::array<std::uint32_t, kMaxDegree> c{};

  auto operator<=>(const Elem&) const = default;
};

class Ring {
 public:
  // Validates the spec (primality, bounds, irreducibility) and fills in the
  // default modulus polynomial when r > 1 and none was given.
  explicit Ring(RingSpec spec);

  const RingSpec& spec() const noexcept { return spec_; }
  RingKind kind() const noexcept { return spec_.kind; }
  std::uint64_t characteristic_prime() const noexcept { return spec_.p; }
  unsigned nilpotency() const noexcept { return spec_.m; }
  unsigned degree() const noexcept { return spec_.r; }
  // p^m, the modulus of every coefficient.
  std::uint64_t modulus() const noexcept { return modulus_; }
  // p^(m r); saturates at UINT64_MAX.
  std::uint64_t size() const noexcept { return size_; }
  bool is_field() const noexcept { return spec_.m == 1; }

  Elem zero() const { return Elem{}; }
  Elem one() const { return from_int(1); }
  Elem from_int(std::int64_t v) const;
  // Constant term as an integer in [0, p^m); only meaningful when r == 1.
  std::uint64_t to_int(const Elem& a) const { return a.c[0]; }
  Elem from_coeffs(std::span<const std::int64_t> coeffs) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  // Throws Error(kNotAUnit) on non-units.
  Elem inv(const Elem& a) const;
  bool is_unit(const Elem& a) const;
  bool is_zero(const Elem& a) const { return a == Elem{}; }

  // Largest v with a in <p^v>; m for zero.
  unsigned valuation(const Elem& a) const;
  Elem gamma_pow(unsigned v) const;
  // Returns w with p^v * w == a. Requires valuation(a) >= v; the
  // representative chosen is the coefficientwise quotient.
  Elem div_gamma_pow(const Elem& a, unsigned v) const;

  // Reduction onto the residue field GF(p^r) (coefficients mod p).
  Ring residue_field() const;
  Elem reduce_to_residue(const Elem& a) const;
  // Canonical lift of a residue-field element (coefficients copied).
  Elem lift_from_residue(const Elem& a) const;

  // Canonical ordering: index = sum c_i (p^m)^i.
  std::uint64_t index(const Elem& a) const;
  Elem from_index(std::uint64_t idx) const;
  std::vector<Elem> enumerate_all() const;

  std::string format(const Elem& a) const;

 private:
  std::uint64_t reduce(std::uint64_t v) const { return v % modulus_; }

  RingSpec spec_;
  std::uint64_t modulus_ = 2;
  std::uint64_t size_ = 2;
};

struct ChainRingSpec {
  RingSpec base;
  Elem gamma;
  unsigned nilpotency_e = 1;
};

ChainRingSpec chain_ring(const Ring& ring);

// Minimal monic irreducible of degree r over GF(p), smallest by the integer
// sum c_i p^i; constant term first, leading 1 included.
std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned r);
// Lifts a monic irreducible over GF(p) to the basic irreducible over
// Z_{p^m} dividing x^(p^r - 1) - 1.
std::vector<std::uint64_t> hensel_lift_modulus(std::uint64_t p, unsigned m,
                                               std::span<const std::uint64_t> f);
bool is_prime(std::uint64_t n);

// Units (alpha, beta) with alpha^2 + beta^2 + 1 == 0.
struct AlphaBeta {
  Elem alpha;
  Elem beta;
};

// Smallest pair (alpha first) over GF(q), q == 3 mod 4. Throws
// Error(kNoSolution) for q == 1 mod 4; use solve_c_field there.
AlphaBeta solve_alpha_beta_field(const Ring& field);
// Smallest c with c^2 == -1 over GF(q), q == 1 mod 4.
Elem solve_c_field(const Ring& field);
// Lifts the GF(p) pair to Z_{p^m} one p-adic digit at a time, keeping beta.
std::pair<std::uint64_t, std::uint64_t> hensel_lift_alpha_beta(std::uint64_t p, unsigned m);
// Dispatches on the ring kind; rings with p == 1 mod 4 throw
// Error(kUseOtherConstruction).
AlphaBeta solve_alpha_beta(const Ring& ring);

}  // namespace sdc

#endif  // SDC_RING_HPP_
