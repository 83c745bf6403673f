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

#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "sdc/error.hpp"
#include "sdc/lattice.hpp"
#include "sdc/search.hpp"

using sdc::Code;
using sdc::Fraction;

namespace {

// Minimum Euclidean weight straight from the span oracle.
std::uint64_t oracle_min_euclidean(const Code& c) {
  const auto counts = oracle::euclidean_counts(c);
  for (std::size_t w = 1; w < counts.size(); ++w) {
    if (counts[w]) return w;
  }
  return 0;
}

Fraction expected_mu(std::uint64_t d_e, std::int64_t m) {
  const Fraction a = sdc::make_fraction(static_cast<std::int64_t>(d_e), m);
  // min(d_E / m, m)
  return a.num <= m * a.den ? a : Fraction{m, 1};
}

}  // namespace

TEST_CASE("fractions") {
  CHECK(sdc::make_fraction(18, 9) == Fraction{2, 1});
  CHECK(sdc::make_fraction(6, 9) == Fraction{2, 3});
  CHECK(sdc::format_fraction({2, 1}) == "2");
  CHECK(sdc::format_fraction({5, 3}) == "5/3");
}

TEST_CASE("identity lattice") {
  sdc::Lattice id{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 1};
  CHECK(sdc::is_unimodular(id));
  const auto rep = sdc::lattice_report(id, 2);
  CHECK(rep.dimension == 4);
  CHECK(rep.min_norm == Fraction{1, 1});
  CHECK(rep.kissing == 8);
  REQUIRE(rep.theta_prefix.size() == 2);
  // Norm 2: vectors +-e_i +- e_j.
  CHECK(rep.theta_prefix[1].first == Fraction{2, 1});
  CHECK(rep.theta_prefix[1].second == 24);
}

TEST_CASE("scaled and skewed bases") {
  // A2 inside Z^3, scaled to minimum 1.
  sdc::Lattice a2{{{1, -1, 0}, {0, 1, -1}}, 2};
  const auto rep = sdc::lattice_report(a2);
  CHECK(rep.min_norm == Fraction{1, 1});
  CHECK(rep.kissing == 6);
  CHECK_FALSE(sdc::is_unimodular(a2));
}

TEST_CASE("dependent bases are rejected") {
  sdc::Lattice bad{{{1, 2}, {2, 4}}, 1};
  try {
    sdc::lattice_report(bad);
    FAIL("no error");
  } catch (const sdc::Error& e) {
    CHECK(e.kind() == sdc::ErrorKind::kNotPositiveDefinite);
  }
}

TEST_CASE("construction A needs a self-dual code") {
  auto R = sdc::make_ring("z 3 2");
  const Code c(R, sdc::make_matrix(*R, 4, {{1, 0, 0, 0}}));
  try {
    sdc::construction_a(c);
    FAIL("no error");
  } catch (const sdc::Error& e) {
    CHECK(e.kind() == sdc::ErrorKind::kNotSelfDual);
  }
}

TEST_CASE("construction A of the length-4 Z9 code") {
  const Code c1 = sdc::fixture_code("C1");
  const auto lat = sdc::construction_a(c1);
  CHECK(lat.scale == 9);
  CHECK(lat.basis.size() == 4);
  CHECK(sdc::is_unimodular(lat));
  const auto d_e = oracle_min_euclidean(c1);
  CHECK(sdc::min_euclidean_weight(c1) == d_e);
  const auto rep = sdc::lattice_report(lat);
  CHECK(rep.unimodular);
  CHECK(rep.min_norm == expected_mu(d_e, 9));
  CHECK(rep.kissing % 2 == 0);
}

TEST_CASE("unimodular for every self-dual fixture") {
  for (const auto& name : sdc::fixture_names()) {
    CAPTURE(name);
    CHECK(sdc::is_unimodular(sdc::construction_a(sdc::fixture_code(name))));
  }
}

TEST_CASE("minimum norm agrees with the Euclidean weight formula") {
  for (const char* name : {"C1", "G2", "G3", "G4"}) {
    CAPTURE(name);
    const Code c = sdc::fixture_code(name);
    const auto d_e = sdc::min_euclidean_weight(c);
    const auto rep = sdc::lattice_report(sdc::construction_a(c));
    CHECK(rep.min_norm == expected_mu(d_e, 9));
    CHECK(rep.kissing % 2 == 0);
    CHECK(rep.kissing > 0);
  }
  const auto g3 = sdc::lattice_report(sdc::construction_a(sdc::fixture_code("G3")));
  CHECK(g3.min_norm == Fraction{2, 1});
}

TEST_CASE("Euclidean minimum against the span oracle") {
  for (const char* name : {"C1", "G2"}) {
    CAPTURE(name);
    const Code c = sdc::fixture_code(name);
    CHECK(sdc::min_euclidean_weight(c) == oracle_min_euclidean(c));
  }
}

TEST_CASE("minimum norm clamps at m") {
  // Over Z3 every nonzero coordinate has Euclidean weight 1, so the
  // [24,12,9] symmetry code has d_E = 9 = m^2 and mu = m.
  const Code s11 = sdc::fixture_code("S11");
  CHECK(sdc::min_euclidean_weight(s11) == 9);
  const auto rep = sdc::lattice_report(sdc::construction_a(s11));
  CHECK(rep.min_norm == Fraction{3, 1});
  CHECK(rep.min_norm == expected_mu(9, 3));
  // The 48 vectors +-3 e_i are among the minimal ones.
  CHECK(rep.kissing >= 48);
  CHECK(rep.kissing % 2 == 0);
}

TEST_CASE("LLL keeps the lattice and shortens the basis") {
  sdc::IntMatrix b{{1, 0, 0}, {17, 1, 0}, {40, 23, 1}};
  sdc::IntMatrix r = b;
  sdc::lll_reduce(r);
  auto norm = [](const std::vector<std::int64_t>& v) {
    return std::inner_product(v.begin(), v.end(), v.begin(), std::int64_t{0});
  };
  std::int64_t before = 0, after = 0;
  for (const auto& v : b) before = std::max(before, norm(v));
  for (const auto& v : r) after = std::max(after, norm(v));
  CHECK(after < before);
  CHECK(sdc::is_unimodular({r, 1}));
}
