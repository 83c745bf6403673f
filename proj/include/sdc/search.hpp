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

// Fixture catalog, table reproduction drivers and randomized discovery.

#ifndef SDC_SEARCH_HPP_
#define SDC_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/buildup.hpp"
#include "sdc/code.hpp"
#include "sdc/enumerate.hpp"
#include "sdc/lattice.hpp"

namespace sdc {

struct Fixture {
  std::string name;
  std::string note;
  Code code;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;  // Hamming minimum distance
};

// Names: C1, G2, G3, G4, G5, C28, S11, C11, C20.
std::vector<std::string> fixture_names();
// Builds the named fixture and checks self-duality and (n, k, d) on first
// use; throws Error(kFixtureValidationFailed) naming the failed check.
const Fixture& fixture(std::string_view name);
// Same code without validation.
Code fixture_code(std::string_view name);
// FNV-1a over every fixture's code file text.
std::uint64_t catalog_hash();

// Symmetry code S(11) generator [I_12 | C] over GF(3).
Code pless_symmetry_code_11();
// [I_k | B]: B has alpha in the corner, beta along the first row, gamma down
// the first column and the circulant of `row` (row i shifted right by i).
Code bordered_circulant(std::shared_ptr<const Ring> ring, std::int64_t alpha, std::int64_t beta, std::int64_t gamma,
                        std::span<const std::int64_t> row);

struct TableRow {
  int no = 0;
  std::vector<std::int64_t> x1;  // printed entries only
  std::vector<std::int64_t> x2;
  std::vector<std::uint64_t> weights;  // printed A_i values, see TableSpec
  std::optional<std::uint64_t> tau;
  std::optional<std::uint64_t> aut;  // metadata, never computed
};

struct TableSpec {
  int id = 0;
  std::string title;
  std::string seed;  // fixture name
  std::int64_t alpha = 1;
  std::int64_t beta = 1;
  std::size_t x1_zeros = 0;
  std::size_t x2_zeros = 0;
  std::size_t min_distance = 0;  // 0: implied by the first printed A_i
  std::size_t first_weight = 0;  // index of weights[0]
  std::optional<Fraction> mu;
  bool long_running = false;
  std::vector<TableRow> rows;
};

const std::vector<TableSpec>& tables();
const TableSpec& table(int id);
// Zero-padded witness vectors for a row.
BuildUpWitness table_witness(const TableSpec& spec, const TableRow& row);
// The printed digit string of x1 or x2 recovered from a padded vector.
std::string printed_digits(const TableSpec& spec, std::span<const Elem> padded, const Ring& ring, bool first);

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct RowReport {
  int no = 0;
  std::optional<Code> code;
  std::vector<Check> checks;
  // Computed values with no printed counterpart, e.g. tau in dimension 24.
  std::vector<std::pair<std::string, std::string>> info;
  std::string error;  // set when the row could not be evaluated
  bool pass() const;
};

struct TableReport {
  int id = 0;
  std::vector<RowReport> rows;
  bool pass() const;
};

struct ReproduceOptions {
  EnumOptions enumeration;
  bool lattice = true;  // compute mu/tau where the table lists them
  // Called after each row, e.g. to stream results.
  std::function<void(const RowReport&)> on_row;
};

// Rows are 1-based and inclusive; row errors are recorded, never thrown.
TableReport reproduce_table(int id, int first_row, int last_row, const ReproduceOptions& options = {});

struct Fingerprint {
  WeightEnumerator hamming;
  std::optional<WeightEnumerator> euclidean;  // rings only
  std::size_t length = 0;
  std::uint64_t log_p_cardinality = 0;

  std::uint64_t hash() const;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Code& code, const EnumOptions& options = {});

struct DiscoverOptions {
  std::uint64_t rng_seed = 1;
  std::uint64_t trials = 100;
  std::size_t min_d = 1;
  std::size_t max_codes = SIZE_MAX;
  EnumOptions enumeration;
};

struct Discovered {
  Code code;
  std::size_t d = 0;
  Fingerprint fp;
  std::uint64_t trial = 0;
};

struct DiscoverResult {
  std::vector<Discovered> codes;
  std::uint64_t trials = 0;
  std::uint64_t rejected_distance = 0;
  std::uint64_t rejected_duplicate = 0;
};

// Random witnesses from the seed code; keeps codes with d >= min_d and a
// fingerprint not seen before. Deterministic in rng_seed.
DiscoverResult discover(const Code& seed, const DiscoverOptions& options);

// One line per code: file n k d hash.
std::string manifest_line(const std::string& file, const Discovered& code);

}  // namespace sdc

#endif  // SDC_SEARCH_HPP_
