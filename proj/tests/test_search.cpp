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
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "sdc/error.hpp"
#include "sdc/search.hpp"

using sdc::Code;

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

}  // namespace

TEST_CASE("fixture catalog validates") {
  const auto names = sdc::fixture_names();
  CHECK(names == std::vector<std::string>{"C1", "G2", "G3", "G4", "G5", "C28", "S11", "C11", "C20"});
  for (const auto& name : names) {
    CAPTURE(name);
    const auto& f = sdc::fixture(name);
    CHECK(f.code.length() == f.n);
    CHECK(sdc::is_self_dual(f.code));
    CHECK_FALSE(f.note.empty());
  }
  CHECK(sdc::fixture("C28").d == 9);
  CHECK(sdc::fixture("G5").n == 20);
  CHECK(sdc::fixture("G5").d == 6);
  CHECK(sdc::fixture("S11").n == 24);
  CHECK(sdc::fixture("S11").d == 9);
  CHECK(sdc::fixture("C20").d == 9);
  CHECK(sdc::fixture("C11").d == 6);
  try {
    sdc::fixture("nope");
    FAIL("no error");
  } catch (const sdc::Error& e) {
    CHECK(e.kind() == sdc::ErrorKind::kInvalidArgument);
  }
}

TEST_CASE("small fixtures against the span oracle") {
  const auto c1 = oracle::hamming_counts(sdc::fixture_code("C1"));
  CHECK(c1 == std::vector<std::uint64_t>{1, 0, 0, 32, 48});
  const auto g2 = oracle::hamming_counts(sdc::fixture_code("G2"));
  CHECK(g2 == std::vector<std::uint64_t>{1, 0, 0, 16, 48, 240, 1072, 2688, 2496});
}

TEST_CASE("catalog hash is stable") {
  CHECK(sdc::catalog_hash() == sdc::catalog_hash());
  CHECK(sdc::catalog_hash() != 0);
}

TEST_CASE("residue and torsion agree on free Z9 fixtures") {
  for (const char* name : {"C1", "G2", "G3", "G4", "G5"}) {
    CAPTURE(name);
    const Code c = sdc::fixture_code(name);
    REQUIRE(c.is_free());
    const Code res = sdc::residue_code(c);
    CHECK(sdc::same_row_space(res, sdc::torsion_code(c)));
    CHECK(sdc::is_self_dual(res));
    const auto d_res = sdc::weight_enumerator(res).min_nonzero();
    REQUIRE(d_res.has_value());
    if (c.length() <= 16) {
      // Full enumeration over Z9, no residue shortcut.
      CHECK(sdc::weight_enumerator(c).min_nonzero() == d_res);
    } else {
      CHECK(*d_res == sdc::fixture(name).d);
    }
  }
}

TEST_CASE("table data shape") {
  const std::vector<std::size_t> rows{20, 20, 20, 10, 8, 20, 10, 3};
  REQUIRE(sdc::tables().size() == 8);
  for (int id = 1; id <= 8; ++id) {
    CAPTURE(id);
    const auto& t = sdc::table(id);
    CHECK(t.id == id);
    CHECK(t.rows.size() == rows[id - 1]);
    CHECK(sdc::fixture_code(t.seed).length() > 0);
  }
  CHECK(sdc::table(4).long_running);
  CHECK(sdc::table(5).mu == sdc::Fraction{2, 1});
  CHECK(sdc::table(8).mu == sdc::Fraction{3, 1});
}

TEST_CASE("table rows round-trip through zero padding") {
  for (const auto& t : sdc::tables()) {
    const Code seed = sdc::fixture_code(t.seed);
    for (const auto& row : t.rows) {
      CAPTURE(t.id);
      CAPTURE(row.no);
      const auto w = sdc::table_witness(t, row);
      CHECK(w.x1.size() == seed.length());
      CHECK(w.x2.size() == seed.length());
      CHECK(sdc::printed_digits(t, w.x1, seed.ring(), true) == join(row.x1));
      CHECK(sdc::printed_digits(t, w.x2, seed.ring(), false) == join(row.x2));
      const bool printed_typo = t.id == 7 && row.no == 2;
      if (printed_typo) {
        CHECK_THROWS_AS(sdc::validate_witness(seed.ring(), w, seed.length()), sdc::Error);
      } else {
        CHECK_NOTHROW(sdc::validate_witness(seed.ring(), w, seed.length()));
      }
    }
  }
}

TEST_CASE("table reproduction spot checks") {
  const auto t5 = sdc::reproduce_table(5, 1, 1);
  REQUIRE(t5.rows.size() == 1);
  CHECK(t5.pass());
  bool saw_a6 = false;
  for (const auto& c : t5.rows[0].checks) {
    if (c.name == "A6") {
      saw_a6 = true;
      CHECK(c.expected == "516");
    }
  }
  CHECK(saw_a6);

  const auto t3 = sdc::reproduce_table(3, 1, 1);
  CHECK(t3.pass());
  const auto t1 = sdc::reproduce_table(1, 1, 2);
  CHECK(t1.pass());
}

TEST_CASE("row errors are recorded, not thrown") {
  const auto t7 = sdc::reproduce_table(7, 2, 2, {.lattice = false});
  REQUIRE(t7.rows.size() == 1);
  CHECK_FALSE(t7.pass());
  CHECK(t7.rows[0].error.find("x1 . x2") != std::string::npos);
  CHECK_THROWS_AS(sdc::reproduce_table(7, 0, 3), sdc::Error);
  CHECK_THROWS_AS(sdc::reproduce_table(9, 1, 1), sdc::Error);
}

TEST_CASE("fingerprints ignore coordinate order") {
  const Code g2 = sdc::fixture_code("G2");
  std::vector<std::size_t> perm{7, 6, 5, 4, 3, 2, 1, 0};
  const auto a = sdc::fingerprint(g2);
  const auto b = sdc::fingerprint(sdc::permute_columns(g2, perm));
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(a.euclidean.has_value());
  CHECK_FALSE(a == sdc::fingerprint(sdc::fixture_code("C1")));
}

TEST_CASE("discovery over Z9") {
  sdc::DiscoverOptions opt;
  opt.rng_seed = 5;
  opt.trials = 40;
  opt.min_d = 3;
  const auto a = sdc::discover(sdc::fixture_code("C1"), opt);
  CHECK(a.trials == 40);
  CHECK(a.codes.size() + a.rejected_distance + a.rejected_duplicate == a.trials);
  CHECK_FALSE(a.codes.empty());
  std::set<std::uint64_t> hashes;
  for (const auto& d : a.codes) {
    CHECK(sdc::is_self_dual(d.code));
    CHECK(d.d >= 3);
    CHECK(d.code.length() == 8);
    hashes.insert(d.fp.hash());
  }
  CHECK(hashes.size() == a.codes.size());

  const auto b = sdc::discover(sdc::fixture_code("C1"), opt);
  REQUIRE(a.codes.size() == b.codes.size());
  for (std::size_t i = 0; i < a.codes.size(); ++i) {
    CHECK(sdc::manifest_line("c" + std::to_string(i), a.codes[i]) ==
          sdc::manifest_line("c" + std::to_string(i), b.codes[i]));
  }

  opt.max_codes = 1;
  CHECK(sdc::discover(sdc::fixture_code("C1"), opt).codes.size() == 1);
}

TEST_CASE("manifest line format") {
  sdc::DiscoverOptions opt;
  opt.trials = 1;
  const auto r = sdc::discover(sdc::fixture_code("C1"), opt);
  REQUIRE(r.codes.size() == 1);
  const auto line = sdc::manifest_line("x.code", r.codes[0]);
  std::istringstream is(line);
  std::string file, hash;
  std::size_t n = 0, k = 0, d = 0;
  is >> file >> n >> k >> d >> hash;
  CHECK(file == "x.code");
  CHECK(n == 8);
  CHECK(k == 4);
  CHECK(d == r.codes[0].d);
  CHECK(hash.size() == 16);
}
