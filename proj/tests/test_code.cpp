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
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "sdc/code.hpp"
#include "sdc/error.hpp"

using sdc::Code;
using sdc::make_matrix;
using sdc::make_ring;

namespace {

Code code_of(std::string_view ring, std::size_t n, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  auto R = make_ring(ring);
  return Code(R, make_matrix(*R, n, rows));
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

TEST_CASE("standardize examples") {
  auto f = code_of("gf 3", 2, {{0, 1}, {1, 0}});
  const auto& sf = f.standard_form();
  CHECK(sf.gen == make_matrix(f.ring(), 2, {{1, 0}, {0, 1}}));
  CHECK(sf.perm == std::vector<std::size_t>{0, 1});

  auto c1 = code_of("z 3 2", 4, {{1, 0, 2, 2}, {0, 1, 2, -2}});
  CHECK(c1.standard_form().block_sizes == std::vector<std::size_t>{2, 0});
  CHECK(c1.standard_form().gen == c1.gen());
  CHECK(c1.gen()(1, 3) == c1.ring().from_int(7));

  auto t = code_of("z 3 2", 4, {{3, 3, 0, 0}});
  CHECK(t.standard_form().block_sizes == std::vector<std::size_t>{0, 1});
  CHECK(t.cardinality() == 3);
  CHECK(t.standard_form().gen == make_matrix(t.ring(), 4, {{3, 3, 0, 0}}));
}

TEST_CASE("standard form preserves the row space") {
  std::mt19937_64 rng(7);
  for (auto ring : {"gf 3", "gf 7", "z 3 2", "z 3 3", "gr 3 2 2", "gf 3 2"}) {
    for (int trial = 0; trial < 6; ++trial) {
      CAPTURE(ring);
      Code c = random_code(ring, 1 + trial % 3, 4, rng);
      if (c.ring().size() > 9 && c.gen().rows() > 2) continue;
      const auto sf = c.standard_form();
      Code s(c.ring_ptr(), sf.gen_original);
      CHECK(oracle::span(c) == oracle::span(s));
      CHECK(oracle::span(c).size() == c.cardinality());
      // Permuted form is block upper-triangular with gamma^level pivots.
      for (std::size_t i = 0; i < sf.gen.rows(); ++i) {
        CHECK(sf.gen(i, i) == c.ring().gamma_pow(sf.row_level[i]));
        for (std::size_t j = 0; j < i; ++j) CHECK(c.ring().is_zero(sf.gen(i, j)));
        if (i > 0) CHECK(sf.row_level[i] >= sf.row_level[i - 1]);
      }
    }
  }
}

TEST_CASE("self-duality examples") {
  sdc::InnerProductReport rep;
  CHECK(sdc::is_self_dual(code_of("z 3 2", 4, {{1, 0, 2, 2}, {0, 1, 2, -2}}), &rep));
  CHECK(rep.is_zero());
  CHECK_FALSE(sdc::is_self_dual(code_of("gf 3", 4, {{1, 0, 0, 0}})));
  CHECK(sdc::is_self_dual(code_of("gf 3", 4, {{1, 0, 1, 1}, {0, 1, 1, 2}})));
  // Self-orthogonal but too small.
  auto half = code_of("gf 3", 4, {{1, 0, 1, 1}});
  CHECK(sdc::is_self_orthogonal(half));
  CHECK_FALSE(sdc::is_self_dual(half));
  // Non-free self-dual code over Z_9: 3 Z_9^2.
  CHECK(sdc::is_self_dual(code_of("z 3 2", 2, {{3, 0}, {0, 3}})));
}

TEST_CASE("dual examples") {
  auto full = code_of("gf 3", 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(sdc::dual(full).cardinality() == 1);
  auto t = code_of("z 3 2", 2, {{3, 0}, {0, 3}});
  auto td = sdc::dual(t);
  CHECK(sdc::same_row_space(td, t));
  auto c1 = code_of("z 3 2", 4, {{1, 0, 2, 2}, {0, 1, 2, -2}});
  CHECK(sdc::same_row_space(sdc::dual(c1), c1));
}

TEST_CASE("dual of dual and cardinality product") {
  std::mt19937_64 rng(11);
  for (auto ring : {"gf 3", "gf 7", "z 3 2", "z 3 3", "gr 3 2 2", "gf 3 2", "z 5 2"}) {
    for (int trial = 0; trial < 8; ++trial) {
      CAPTURE(ring);
      const std::size_t n = 3 + trial % 3;
      Code c = random_code(ring, 1 + trial % n, n, rng);
      Code d = sdc::dual(c);
      CHECK(d.log_p_cardinality() + c.log_p_cardinality() ==
            n * c.ring().nilpotency() * c.ring().degree());
      for (std::size_t i = 0; i < d.gen().rows(); ++i) {
        for (std::size_t j = 0; j < c.gen().rows(); ++j) {
          CHECK(c.ring().is_zero(sdc::dot(c.ring(), d.gen().row(i), c.gen().row(j))));
        }
      }
      CHECK(sdc::same_row_space(sdc::dual(d), c));
    }
  }
}

TEST_CASE("membership agrees with the span oracle") {
  std::mt19937_64 rng(5);
  for (auto ring : {"z 3 2", "gf 3", "gr 3 2 2"}) {
    Code c = random_code(ring, 2, 3, rng);
    if (c.ring().size() > 9) c = Code(c.ring_ptr(), make_matrix(c.ring(), 3, {{3, 0, 0, 0, 6, 0}}));
    const auto members = oracle::span(c);
    const auto all = c.ring().enumerate_all();
    for (const auto& a : all) {
      for (const auto& b : all) {
        for (const auto& e : all) {
          sdc::Vec v{a, b, e};
          CHECK(sdc::contains(c, v) == (members.count(v) == 1));
        }
      }
    }
  }
}

TEST_CASE("residue and torsion of the Z9 seed") {
  auto c1 = code_of("z 3 2", 4, {{1, 0, 2, 2}, {0, 1, 2, -2}});
  auto res = sdc::residue_code(c1);
  auto tor = sdc::torsion_code(c1);
  CHECK(res.ring().is_field());
  CHECK(res.gen() == make_matrix(res.ring(), 4, {{1, 0, 2, 2}, {0, 1, 2, 1}}));
  CHECK(sdc::is_self_dual(res));
  CHECK(sdc::same_row_space(res, tor));

  // Non-free: C = <(1,1,1), 3(0,1,2)> has Res = <(1,1,1)>, Tor = <(1,1,1),(0,1,2)>.
  auto nf = code_of("z 3 2", 3, {{1, 1, 1}, {0, 3, 6}});
  CHECK(sdc::residue_code(nf).cardinality() == 3);
  CHECK(sdc::torsion_code(nf).cardinality() == 9);
}

TEST_CASE("code file round trip and negatives") {
  auto c = sdc::parse_code("z 3 2\nk 2 n 4\n1 0 2 2\n0 1 2 -2\n");
  CHECK(c.gen()(1, 3) == c.ring().from_int(7));
  const std::string text = sdc::format_code(c);
  CHECK(text == "z 3 2\nk 2 n 4\n1 0 2 2\n0 1 2 7\n");
  CHECK(sdc::format_code(sdc::parse_code(text)) == text);

  auto g = sdc::parse_code("gr 3 2 2\nk 1 n 2\n1 0 0 1\n");
  CHECK(sdc::format_code(sdc::parse_code(sdc::format_code(g))) == sdc::format_code(g));
  CHECK_THROWS_AS(sdc::parse_code("z 3 2\nk 2 n 4\n1 0 2\n"), sdc::Error);
  CHECK_THROWS_AS(sdc::parse_code("z 3 2\nk 1 n 2\n1 x\n"), sdc::Error);
}
