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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sdc/enumerate.hpp"
#include "sdc/error.hpp"

using sdc::Code;
using sdc::make_matrix;
using sdc::make_ring;
using sdc::WeightKind;

namespace {

Code code_of(std::string_view ring, std::size_t n, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  auto R = make_ring(ring);
  return Code(R, make_matrix(*R, n, rows));
}

Code g2() {
  return code_of("z 3 2", 8,
                 {{1, 0, 0, 0, 1, 3, 5, 0}, {0, 1, 0, 0, 3, 8, 0, 4}, {7, 7, 1, 0, 1, 0, 2, 2}, {5, 0, 1, 1, 0, 1, 2, 7}});
}

Code random_code(std::string_view ring, std::size_t k, std::size_t n, std::mt19937_64& rng) {
  auto R = make_ring(ring);
  sdc::Matrix g(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = R->from_index(rng() % R->size());
  }
  return Code(R, g);
}

}  // namespace

TEST_CASE("W2 of the length-8 Z9 code") {
  auto we = sdc::weight_enumerator(g2());
  CHECK(we.counts == std::vector<std::uint64_t>{1, 0, 0, 16, 48, 240, 1072, 2688, 2496});
  CHECK(we.total() == 6561);
  CHECK(we.min_nonzero() == 3u);
}

TEST_CASE("zero code and degenerate generators") {
  auto R = make_ring("gf 3");
  Code zero(R, sdc::Matrix(0, 5));
  auto we = sdc::weight_enumerator(zero);
  CHECK(we.counts == std::vector<std::uint64_t>{1, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(sdc::min_weight(zero), sdc::Error);

  auto rep = code_of("gf 3", 2, {{1, 1}, {2, 2}});
  auto mw = sdc::min_weight(rep);
  CHECK(mw.weight == 2);
  CHECK(mw.witness == sdc::make_vector(*R, {1, 1}));
}

TEST_CASE("Z9 seed minimum weights") {
  auto c1 = code_of("z 3 2", 4, {{1, 0, 2, 2}, {0, 1, 2, -2}});
  auto mw = sdc::min_weight(c1);
  CHECK(mw.weight == 3);
  CHECK(sdc::contains(c1, mw.witness));
  CHECK(sdc::hamming_weight(c1.ring(), mw.witness) == 3);

  auto euc = sdc::weight_enumerator(c1, WeightKind::kEuclidean);
  CHECK(euc.counts == oracle::euclidean_counts(c1));
  CHECK(euc.total() == 81);
  auto me = sdc::min_weight(c1, WeightKind::kEuclidean);
  CHECK(me.weight == euc.min_nonzero().value());
  CHECK(sdc::euclidean_weight(c1.ring(), me.witness) == me.weight);
  CHECK(sdc::contains(c1, me.witness));
}

TEST_CASE("Gray enumeration matches the span oracle") {
  std::mt19937_64 rng(2024);
  struct Case {
    const char* ring;
    std::size_t k, n;
  };
  // Every case has |C| <= 3^8.
  for (const Case& cs : {Case{"gf 3", 4, 8}, Case{"gf 3", 8, 10}, Case{"gf 7", 3, 9}, Case{"z 3 2", 4, 7},
                         Case{"z 3 3", 2, 6}, Case{"gr 3 2 2", 2, 5}, Case{"gf 3 2", 4, 6}, Case{"gf 5", 3, 20},
                         Case{"z 3 2", 3, 70}, Case{"gf 3", 6, 40}}) {
    for (int trial = 0; trial < 3; ++trial) {
      CAPTURE(cs.ring);
      CAPTURE(cs.n);
      Code c = random_code(cs.ring, cs.k, cs.n, rng);
      if (trial == 2) {
        // Force a non-free code over rings by scaling a row by p.
        sdc::Matrix g = c.gen();
        for (std::size_t j = 0; j < g.cols(); ++j) {
          g(0, j) = c.ring().mul(c.ring().gamma_pow(c.ring().is_field() ? 0 : 1), g(0, j));
        }
        c = Code(c.ring_ptr(), g);
      }
      REQUIRE(c.cardinality() <= 6561);
      const auto expect = oracle::hamming_counts(c);
      for (unsigned jobs : {1u, 3u}) {
        sdc::EnumOptions opt;
        opt.jobs = jobs;
        CHECK(sdc::weight_enumerator(c, WeightKind::kHamming, opt).counts == expect);
      }
      if (c.ring().degree() == 1) {
        CHECK(sdc::weight_enumerator(c, WeightKind::kEuclidean).counts == oracle::euclidean_counts(c));
      }
      std::size_t d = 0;
      for (std::size_t w = 1; w < expect.size() && d == 0; ++w) {
        if (expect[w]) d = w;
      }
      if (d == 0) continue;
      auto mw = sdc::min_weight(c);
      CHECK(mw.weight == d);
      CHECK(sdc::contains(c, mw.witness));
      CHECK(sdc::hamming_weight(c.ring(), mw.witness) == d);
      CHECK_FALSE(sdc::find_codeword_below(c, static_cast<unsigned>(d)).has_value());
      auto below = sdc::find_codeword_below(c, static_cast<unsigned>(d + 1));
      REQUIRE(below.has_value());
      CHECK(sdc::hamming_weight(c.ring(), *below) == d);
    }
  }
}

TEST_CASE("MacWilliams identity for self-dual ternary codes") {
  std::vector<Code> codes{
      code_of("gf 3", 4, {{1, 0, 1, 1}, {0, 1, 1, 2}}),
      // Extended ternary Golay code [12,6,6].
      code_of("gf 3", 12,
              {{1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
               {0, 1, 0, 0, 0, 0, 1, 0, 1, 2, 2, 1},
               {0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 2, 2},
               {0, 0, 0, 1, 0, 0, 1, 2, 1, 0, 1, 2},
               {0, 0, 0, 0, 1, 0, 1, 2, 2, 1, 0, 1},
               {0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 0}}),
  };
  for (const auto& c : codes) {
    REQUIRE(sdc::is_self_dual(c));
    auto we = sdc::weight_enumerator(c);
    auto mw = oracle::macwilliams(we.counts, 3);
    for (std::size_t i = 0; i < we.counts.size(); ++i) CHECK(mw[i] == static_cast<std::int64_t>(we.counts[i]));
  }
  CHECK(sdc::min_weight(codes[1]).weight == 6);
  CHECK(sdc::weight_enumerator(codes[1]).at(6) == 264);
}

TEST_CASE("budget is enforced with the exact cardinality") {
  auto c = g2();
  sdc::EnumOptions opt;
  opt.budget = 1000;
  try {
    sdc::weight_enumerator(c, WeightKind::kHamming, opt);
    FAIL("expected BudgetExceeded");
  } catch (const sdc::BudgetExceeded& e) {
    CHECK(e.cardinality() == 6561);
    CHECK(e.kind() == sdc::ErrorKind::kBudgetExceeded);
  }
}

TEST_CASE("free Z9 codes: residue split and residue minimum weight") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t k = 2 + trial % 3, n = 5 + trial % 4;
    auto R = make_ring("z 3 2");
    // [I | random] is free.
    sdc::Matrix g(k, n);
    for (std::size_t i = 0; i < k; ++i) {
      g(i, i) = R->one();
      for (std::size_t j = k; j < n; ++j) g(i, j) = R->from_index(rng() % 9);
    }
    Code c(R, g);
    REQUIRE(c.is_free());
    REQUIRE(sdc::low_weight_uses_residue_split(c));
    const auto full = oracle::hamming_counts(c);
    for (unsigned wmax : {2u, 4u, static_cast<unsigned>(n)}) {
      auto low = sdc::low_weight_enumerator(c, wmax);
      std::vector<std::uint64_t> expect(full.begin(), full.begin() + std::min<std::size_t>(wmax, n) + 1);
      CHECK(low.counts == expect);
    }
    auto mw = sdc::min_weight(c);
    CHECK(mw.weight == sdc::min_weight(sdc::residue_code(c)).weight);
    CHECK(sdc::contains(c, mw.witness));
    CHECK(sdc::hamming_weight(c.ring(), mw.witness) == mw.weight);
  }
  auto low = sdc::low_weight_enumerator(g2(), 6);
  CHECK(low.counts == std::vector<std::uint64_t>{1, 0, 0, 16, 48, 240, 1072});
}

TEST_CASE("mass formula") {
  using boost::multiprecision::cpp_int;
  CHECK(sdc::mass_formula_gf7(2) == 2);
  CHECK(sdc::mass_formula_gf7(4) == 16);
  const cpp_int n16 = sdc::mass_formula_gf7(16);
  CHECK(n16 == cpp_int("1076505395791458181120000"));
  cpp_int denom = cpp_int(1) << 16;
  for (int i = 2; i <= 16; ++i) denom *= i;
  const cpp_int ceil = (n16 + denom - 1) / denom;
  CHECK(ceil == 785086);
  CHECK(n16 < cpp_int(785087) * denom);
  CHECK_THROWS_AS(sdc::mass_formula_gf7(5), sdc::Error);
}
