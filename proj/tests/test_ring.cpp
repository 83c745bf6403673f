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

#include <set>

#include "doctest.h"
#include "sdc/error.hpp"
#include "sdc/ring.hpp"

using sdc::Elem;
using sdc::ErrorKind;
using sdc::Ring;

namespace {

Ring ring(std::string_view text) { return Ring(sdc::parse_ring_spec(text)); }

bool throws_kind(auto&& fn, ErrorKind kind) {
  try {
    fn();
  } catch (const sdc::Error& e) {
    return e.kind() == kind;
  }
  return false;
}

// x^2 + y^2 + 1 == 0 checked in plain integers.
bool sum_of_squares_ok(std::uint64_t x, std::uint64_t y, std::uint64_t n) {
  return (x % n * (x % n) + y % n * (y % n) + 1) % n == 0;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("ring spec parsing normalizes kinds") {
  auto f = sdc::parse_ring_spec("gf 3");
  CHECK(f.kind == sdc::RingKind::kField);
  auto z = sdc::parse_ring_spec("z 3 2");
  CHECK(z.kind == sdc::RingKind::kZpm);
  CHECK(z.m == 2);
  auto z1 = sdc::parse_ring_spec("z 7 1");
  CHECK(z1.kind == sdc::RingKind::kField);
  auto g = sdc::parse_ring_spec("gr 3 2 2");
  CHECK(g.kind == sdc::RingKind::kGaloisRing);
  CHECK(sdc::parse_ring_spec(sdc::format_ring_spec(Ring(g).spec())) == Ring(g).spec());
  CHECK(throws_kind([] { Ring(sdc::parse_ring_spec("gf 4")); }, ErrorKind::kInvalidArgument));
  CHECK(throws_kind([] { sdc::parse_ring_spec("q 3"); }, ErrorKind::kParse));
}

TEST_CASE("small ring examples") {
  Ring f3 = ring("gf 3");
  CHECK(f3.to_int(f3.inv(f3.from_int(2))) == 2);
  Ring z9 = ring("z 3 2");
  CHECK_FALSE(z9.is_unit(z9.from_int(3)));
  CHECK(z9.is_unit(z9.from_int(4)));
  CHECK(z9.to_int(z9.inv(z9.from_int(4))) == 7);
  CHECK(throws_kind([&] { z9.inv(z9.from_int(6)); }, ErrorKind::kNotAUnit));
  CHECK(z9.to_int(z9.from_int(-2)) == 7);
  CHECK(z9.valuation(z9.from_int(3)) == 1);
  CHECK(z9.valuation(z9.zero()) == 2);
}

TEST_CASE("ring axioms hold exhaustively on small rings") {
  for (auto text : {"gf 3", "gf 7", "z 3 2", "z 3 3", "gf 3 2", "gr 3 2 2", "gf 2 3", "z 5 2"}) {
    CAPTURE(text);
    Ring R = ring(text);
    const auto all = R.enumerate_all();
    REQUIRE(all.size() == R.size());
    REQUIRE(R.size() <= 81);
    std::set<Elem> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const auto& a : all) {
      CHECK(R.from_index(R.index(a)) == a);
      CHECK(R.is_zero(R.add(a, R.neg(a))));
      // Unit status agrees with exhaustive inverse search.
      bool has_inverse = false;
      for (const auto& b : all) has_inverse |= R.mul(a, b) == R.one();
      CHECK(R.is_unit(a) == has_inverse);
      if (has_inverse) CHECK(R.mul(a, R.inv(a)) == R.one());
      for (const auto& b : all) {
        CHECK(R.add(a, b) == R.add(b, a));
        CHECK(R.mul(a, b) == R.mul(b, a));
        CHECK(R.sub(R.add(a, b), b) == a);
      }
    }
    // Associativity and distributivity on a strided sample of triples.
    for (std::size_t i = 0; i < all.size(); i += 3) {
      for (std::size_t j = 1; j < all.size(); j += 5) {
        for (std::size_t k = 2; k < all.size(); k += 7) {
          const auto &a = all[i], &b = all[j], &c = all[k];
          CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
          CHECK(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)));
          CHECK(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("Galois ring residue is the field GF(p^r)") {
  for (auto text : {"gr 3 2 2", "gr 3 3 2", "gr 7 2 2", "gr 3 2 3"}) {
    CAPTURE(text);
    Ring R = ring(text);
    Ring F = R.residue_field();
    CHECK(F.is_field());
    CHECK(F.size() == ipow(R.characteristic_prime(), R.degree()));
    const std::uint64_t order = F.size() - 1;
    std::uint64_t seed = 12345;
    for (int trial = 0; trial < 50; ++trial) {
      seed = seed * 6364136223846793005ull + 1442695040888963407ull;
      Elem a = R.from_index((seed >> 16) % R.size());
      if (!R.is_unit(a)) continue;
      Elem res = R.reduce_to_residue(a);
      CHECK(F.pow(res, order) == F.one());
      // Units of GR(p^m, r) have order dividing (p^r - 1) p^(r(m-1)).
      CHECK(R.pow(a, order * ipow(R.characteristic_prime(), R.degree() * (R.nilpotency() - 1))) == R.one());
    }
    // The modulus divides x^(p^r - 1) - 1, so x has order dividing p^r - 1.
    Elem x{};
    x.c[1] = 1;
    CHECK(R.pow(x, order) == R.one());
  }
}

TEST_CASE("chain ring data") {
  Ring z27 = ring("z 3 3");
  auto cr = sdc::chain_ring(z27);
  CHECK(cr.nilpotency_e == 3);
  CHECK(z27.is_zero(z27.pow(cr.gamma, 3)));
  CHECK_FALSE(z27.is_zero(z27.pow(cr.gamma, 2)));
}

TEST_CASE("alpha beta over fields") {
  Ring f3 = ring("gf 3");
  auto ab3 = sdc::solve_alpha_beta_field(f3);
  CHECK(f3.to_int(ab3.alpha) == 1);
  CHECK(f3.to_int(ab3.beta) == 1);
  Ring f7 = ring("gf 7");
  auto ab7 = sdc::solve_alpha_beta_field(f7);
  CHECK(f7.to_int(ab7.alpha) == 2);
  CHECK(f7.to_int(ab7.beta) == 3);
  Ring f11 = ring("gf 11");
  auto ab11 = sdc::solve_alpha_beta_field(f11);
  CHECK(f11.is_unit(ab11.alpha));
  CHECK(f11.is_unit(ab11.beta));
  CHECK(sum_of_squares_ok(f11.to_int(ab11.alpha), f11.to_int(ab11.beta), 11));
  // Lexicographically smallest: no earlier pair works.
  for (std::uint64_t a = 1; a <= f11.to_int(ab11.alpha); ++a) {
    for (std::uint64_t b = 1; b < 11; ++b) {
      if (a == f11.to_int(ab11.alpha) && b >= f11.to_int(ab11.beta)) break;
      CHECK_FALSE(sum_of_squares_ok(a, b, 11));
    }
  }
  Ring f27 = ring("gf 3 3");
  auto ab27 = sdc::solve_alpha_beta_field(f27);
  CHECK(f27.is_zero(f27.add(f27.add(f27.mul(ab27.alpha, ab27.alpha), f27.mul(ab27.beta, ab27.beta)), f27.one())));
  CHECK(throws_kind([] { sdc::solve_alpha_beta_field(Ring(sdc::parse_ring_spec("gf 3 2"))); }, ErrorKind::kNoSolution));
  Ring f5 = ring("gf 5");
  CHECK(throws_kind([&] { sdc::solve_alpha_beta_field(f5); }, ErrorKind::kNoSolution));
  Elem c = sdc::solve_c_field(f5);
  CHECK(f5.mul(c, c) == f5.neg(f5.one()));
}

TEST_CASE("Hensel lift of alpha beta") {
  auto [x2, y2] = sdc::hensel_lift_alpha_beta(3, 2);
  CHECK(x2 == 4);
  CHECK(y2 == 1);
  auto [x1, y1] = sdc::hensel_lift_alpha_beta(3, 1);
  CHECK(x1 == 1);
  CHECK(y1 == 1);
  // Alternative pair used in the Z_9 experiments.
  CHECK(sum_of_squares_ok(2, 2, 9));
  for (std::uint64_t p : {3, 7, 11, 19}) {
    Ring F(sdc::parse_ring_spec("gf " + std::to_string(p)));
    const auto base = sdc::solve_alpha_beta_field(F);
    for (unsigned m = 1; m <= 5; ++m) {
      CAPTURE(p);
      CAPTURE(m);
      const std::uint64_t n = ipow(p, m);
      auto [x, y] = sdc::hensel_lift_alpha_beta(p, m);
      CHECK(x < n);
      CHECK(y < n);
      CHECK(sum_of_squares_ok(x, y, n));
      CHECK(x % p == F.to_int(base.alpha));
      CHECK(y == F.to_int(base.beta));
      CHECK(x % p != 0);
    }
  }
}

TEST_CASE("solve_alpha_beta dispatch") {
  Ring z49 = ring("z 7 2");
  auto ab = sdc::solve_alpha_beta(z49);
  CHECK(sum_of_squares_ok(z49.to_int(ab.alpha), z49.to_int(ab.beta), 49));
  CHECK(z49.to_int(ab.alpha) % 7 == 2);
  CHECK(z49.to_int(ab.beta) == 3);

  Ring gr = ring("gr 3 2 2");
  auto abg = sdc::solve_alpha_beta(gr);
  const Elem lhs = gr.add(gr.add(gr.mul(abg.alpha, abg.alpha), gr.mul(abg.beta, abg.beta)), gr.one());
  CHECK(gr.is_zero(lhs));
  CHECK(abg.alpha == gr.from_int(4));
  CHECK(abg.beta == gr.from_int(1));
  // The constant pair (2, 2) also satisfies the equation inside GR(9, 2).
  const Elem two = gr.from_int(2);
  CHECK(gr.is_zero(gr.add(gr.add(gr.mul(two, two), gr.mul(two, two)), gr.one())));

  Ring f3 = ring("gf 3");
  CHECK(f3.to_int(sdc::solve_alpha_beta(f3).alpha) == 1);
  Ring z25 = ring("z 5 2");
  CHECK(throws_kind([&] { sdc::solve_alpha_beta(z25); }, ErrorKind::kUseOtherConstruction));
}

TEST_CASE("default modulus is a basic irreducible") {
  auto f = sdc::smallest_irreducible(3, 2);
  CHECK(f == std::vector<std::uint64_t>{1, 0, 1});  // x^2 + 1
  auto lifted = sdc::hensel_lift_modulus(3, 2, f);
  REQUIRE(lifted.size() == 3);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(lifted[i] % 3 == f[i]);
}
