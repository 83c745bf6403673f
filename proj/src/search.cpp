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

#include "sdc/search.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "sdc/error.hpp"

namespace sdc {

namespace {

// Generator matrices exactly as printed, row-major.
// G2: 4 x 8
constexpr std::int64_t kG2[] = {
    1, 0, 0, 0, 1, 3, 5, 0,
    0, 1, 0, 0, 3, 8, 0, 4,
    7, 7, 1, 0, 1, 0, 2, 2,
    5, 0, 1, 1, 0, 1, 2, 7,
};
// G3: 6 x 12
constexpr std::int64_t kG3[] = {
    1, 0, 0, 0, 0, 0, 4, 5, 1, 1, 1, 0,
    0, 1, 0, 0, 0, 0, 2, 2, 2, 7, 0, 1,
    0, 4, 8, 1, 1, 0, 0, 0, 1, 3, 5, 0,
    7, 6, 8, 2, 0, 1, 0, 0, 3, 8, 0, 4,
    2, 3, 1, 7, 7, 7, 1, 0, 1, 0, 2, 2,
    6, 0, 3, 3, 5, 0, 1, 1, 0, 1, 2, 7,
};
// G4: 8 x 16
constexpr std::int64_t kG4[] = {
    1, 0, 0, 0, 0, 0, 0, 0, 4, 4, 1, 1, 1, 0, 0, 0,
    0, 1, 0, 0, 0, 0, 0, 0, 7, 2, 7, 2, 0, 1, 0, 0,
    8, 6, 1, 4, 1, 0, 0, 0, 0, 0, 4, 5, 1, 1, 1, 0,
    3, 2, 1, 2, 0, 1, 0, 0, 0, 0, 2, 2, 2, 7, 0, 1,
    4, 8, 6, 1, 0, 4, 8, 1, 1, 0, 0, 0, 1, 3, 5, 0,
    2, 8, 2, 6, 7, 6, 8, 2, 0, 1, 0, 0, 3, 8, 0, 4,
    5, 2, 5, 6, 2, 3, 1, 7, 7, 7, 1, 0, 1, 0, 2, 2,
    5, 0, 1, 1, 6, 0, 3, 3, 5, 0, 1, 1, 0, 1, 2, 7,
};
// G5: 10 x 20
constexpr std::int64_t kG5[] = {
    1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 4, 4, 1, 1, 1, 1, 1, 0, 0,
    0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 6, 6, 2, 3, 1, 1, 1, 1, 0, 0,
    4, 4, 7, 0, 1, 0, 0, 0, 0, 0, 0, 0, 4, 4, 1, 1, 1, 0, 0, 0,
    5, 6, 4, 7, 0, 1, 0, 0, 0, 0, 0, 0, 7, 2, 7, 2, 0, 1, 0, 0,
    7, 7, 1, 0, 8, 6, 1, 4, 1, 0, 0, 0, 0, 0, 4, 5, 1, 1, 1, 0,
    5, 5, 2, 0, 3, 2, 1, 2, 0, 1, 0, 0, 0, 0, 2, 2, 2, 7, 0, 1,
    1, 3, 8, 5, 4, 8, 6, 1, 0, 4, 8, 1, 1, 0, 0, 0, 1, 3, 5, 0,
    2, 7, 0, 8, 2, 8, 2, 6, 7, 6, 8, 2, 0, 1, 0, 0, 3, 8, 0, 4,
    3, 5, 7, 5, 5, 2, 5, 6, 2, 3, 1, 7, 7, 7, 1, 0, 1, 0, 2, 2,
    7, 5, 6, 4, 5, 0, 1, 1, 6, 0, 3, 3, 5, 0, 1, 1, 0, 1, 2, 7,
};
// C28: 14 x 28
constexpr std::int64_t kC28[] = {
    1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1, 2, 1, 2, 1, 2, 1, 0, 0, 0, 0, 0, 0,
    0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 2, 2, 1, 0, 2, 1, 0, 0, 0, 0,
    2, 2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 1, 2, 1, 1, 1, 2, 2, 2, 1, 2,
    0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 1, 2, 1, 1, 1, 2, 2, 2, 1,
    2, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1, 2, 0, 1, 2, 1, 1, 1, 2, 2, 2,
    1, 2, 0, 2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 2, 2, 1, 2, 0, 1, 2, 1, 1, 1, 2, 2,
    0, 1, 1, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 2, 2, 2, 1, 2, 0, 1, 2, 1, 1, 1, 2,
    2, 0, 2, 2, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 2, 2, 2, 2, 1, 2, 0, 1, 2, 1, 1, 1,
    2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2, 1, 2, 2, 2, 1, 2, 0, 1, 2, 1, 1,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 1, 1, 2, 2, 2, 1, 2, 0, 1, 2, 1,
    1, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 1, 1, 1, 2, 2, 2, 1, 2, 0, 1, 2,
    0, 2, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 2, 1, 1, 1, 2, 2, 2, 1, 2, 0, 1,
    1, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1, 2, 1, 1, 1, 2, 2, 2, 1, 2, 0,
};

constexpr std::int64_t kC1[] = {1, 0, 2, 2, 0, 1, 2, -2};

Code from_flat(std::string_view ring, std::size_t cols, std::span<const std::int64_t> flat) {
  auto R = make_ring(ring);
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 0; i < flat.size(); i += cols) rows.emplace_back(flat.begin() + i, flat.begin() + i + cols);
  return Code(R, make_matrix(*R, cols, rows));
}

struct FixtureDef {
  const char* name;
  const char* note;
  std::size_t n, k, d;
  Code (*build)();
};

const FixtureDef kFixtureDefs[] = {
    {"C1", "Z9 seed {(1,0,2,2),(0,1,2,-2)}", 4, 2, 3, [] { return from_flat("z 3 2", 4, kC1); }},
    {"G2", "Z9 length 8, printed", 8, 4, 3, [] { return from_flat("z 3 2", 8, kG2); }},
    {"G3", "Z9 length 12, printed", 12, 6, 6, [] { return from_flat("z 3 2", 12, kG3); }},
    {"G4", "Z9 length 16, printed", 16, 8, 6, [] { return from_flat("z 3 2", 16, kG4); }},
    {"G5", "Z9 length 20, printed", 20, 10, 6, [] { return from_flat("z 3 2", 20, kG5); }},
    {"C28", "ternary [28,14,9], printed", 28, 14, 9, [] { return from_flat("gf 3", 28, kC28); }},
    {"S11", "ternary symmetry code [24,12,9]", 24, 12, 9, [] { return pless_symmetry_code_11(); }},
    {"C11", "GF(7) bordered circulant, alpha 0, beta = gamma = 2, row (2,5,5,2,0)", 12, 6, 6,
     [] {
       const std::int64_t row[] = {2, 5, 5, 2, 0};
       return bordered_circulant(make_ring("gf 7"), 0, 2, 2, row);
     }},
    {"C20", "GF(7) bordered circulant, alpha 2, beta = gamma = 1, row (4,6,3,6,6,1,4,3,0)", 20, 10, 9,
     [] {
       const std::int64_t row[] = {4, 6, 3, 6, 6, 1, 4, 3, 0};
       return bordered_circulant(make_ring("gf 7"), 2, 1, 1, row);
     }},
};

const FixtureDef& fixture_def(std::string_view name) {
  for (const auto& f : kFixtureDefs) {
    if (name == f.name) return f;
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown fixture '" + std::string(name) + "'");
}

Fixture validate(const FixtureDef& def) {
  Fixture f{def.name, def.note, def.build(), def.n, def.k, def.d};
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::kFixtureValidationFailed, f.name + ": " + what);
  };
  if (f.code.length() != f.n) fail("length " + std::to_string(f.code.length()));
  if (f.code.standard_form().gen.rows() != f.k) fail("rank " + std::to_string(f.code.standard_form().gen.rows()));
  if (!is_self_dual(f.code)) fail("not self-dual");
  const auto d = min_weight(f.code).weight;
  if (d != f.d) fail("minimum distance " + std::to_string(d) + ", expected " + std::to_string(f.d));
  return f;
}

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

struct RawRow {
  int no;
  const char* x1;
  const char* x2;
  std::vector<std::uint64_t> weights;
  std::uint64_t tau;
  std::uint64_t aut;
};

const RawRow kTable1[] = {
    {1, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "0 1 2 2 2 2 1 0 2 1 0 0 0 0", {}, 0, 2},
    {2, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "1 0 2 1 1 1 1 0 2 1 0 0 0 0", {}, 0, 2},
    {3, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "2 2 1 0 1 1 2 0 2 1 0 0 0 0", {}, 0, 2},
    {4, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "1 2 1 0 2 1 2 0 2 1 0 0 0 0", {}, 0, 2},
    {5, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "2 0 0 2 2 2 1 1 2 1 0 0 0 0", {}, 0, 2},
    {6, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "2 0 1 1 1 0 1 1 2 1 0 0 0 0", {}, 0, 2},
    {7, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "2 0 2 1 1 0 1 2 2 1 0 0 0 0", {}, 0, 2},
    {8, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "2 0 1 1 2 0 1 2 2 1 0 0 0 0", {}, 0, 4},
    {9, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "0 1 1 1 2 0 1 2 2 1 0 0 0 0", {}, 0, 2},
    {10, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "1 0 2 1 2 0 1 2 2 1 0 0 0 0", {}, 0, 2},
    {11, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "1 0 0 1 1 1 2 2 2 1 0 0 0 0", {}, 0, 4},
    {12, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "1 2 0 0 2 1 2 2 2 1 0 0 0 0", {}, 0, 2},
    {13, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "0 1 1 2 2 2 0 1 1 1 0 0 0 0", {}, 0, 2},
    {14, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "1 0 2 2 2 2 0 1 1 1 0 0 0 0", {}, 0, 2},
    {15, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "0 1 2 2 2 0 1 2 1 1 0 0 0 0", {}, 0, 2},
    {16, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "1 2 1 0 2 1 2 0 1 1 0 0 0 0", {}, 0, 2},
    {17, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "2 1 1 0 2 2 1 0 0 2 1 0 0 0", {}, 0, 2},
    {18, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "2 2 2 0 2 2 1 0 0 2 1 0 0 0", {}, 0, 4},
    {19, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "1 1 2 0 2 2 1 0 0 2 1 0 0 0", {}, 0, 4},
    {20, "2 1 2 1 2 1 2 1 0 0 0 0 0 0", "0 0 1 0 2 2 1 2 2 2 0 1 0 0", {}, 0, 8},
};
const RawRow kTable2[] = {
    {1, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "1 2 1 1 2 1 0 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {2, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "1 1 1 2 2 1 0 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {3, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "2 2 1 2 2 1 0 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {4, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "2 2 1 1 1 1 0 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {5, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "1 1 1 1 1 1 0 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {6, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "1 2 2 1 1 1 0 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {7, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "2 2 2 2 1 1 0 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {8, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "1 1 2 1 1 2 0 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {9, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "2 2 2 1 1 2 0 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {10, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "1 1 2 2 2 2 0 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {11, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "2 2 2 2 2 2 0 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {12, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "1 1 1 1 2 2 0 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {13, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "2 2 1 1 2 2 0 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {14, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "1 2 2 1 2 2 0 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {15, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "1 1 2 1 0 2 1 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {16, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "2 2 2 1 0 2 1 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {17, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "0 1 2 1 1 2 1 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {18, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "1 1 0 1 2 2 1 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {19, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "0 1 1 1 2 2 1 0 2 1 0 0 0 0 0 0", {}, 0, 0},
    {20, "2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0", "0 1 2 2 2 2 1 0 2 1 0 0 0 0 0 0", {}, 0, 0},
};
const RawRow kTable3[] = {
    {1, "2 1 2 6 1 6 1 0", "1 2 1 1 6 5 1 0", {696, 3432}, 0, 24},
    {2, "1 2 2 6 1 6 1 0", "4 5 6 4 4 6 1 0", {720, 3360}, 0, 24},
    {3, "5 1 5 6 1 6 1 0", "4 5 1 3 6 1 3 0", {636, 3780}, 0, 12},
    {4, "5 1 5 1 1 6 1 0", "6 3 3 6 1 2 3 0", {564, 3996}, 0, 6},
    {5, "6 5 5 1 1 6 1 0", "3 4 1 2 4 1 1 0", {540, 4068}, 0, 12},
    {6, "5 2 1 1 1 6 1 0", "2 1 2 1 5 2 3 0", {588, 3924}, 0, 12},
    {7, "1 6 2 2 1 6 1 0", "3 2 1 5 1 2 2 0", {612, 3804}, 0, 6},
    {8, "4 2 3 3 1 6 1 0", "3 3 5 3 3 5 2 0", {576, 3936}, 0, 12},
    {9, "5 3 3 3 1 6 1 0", "4 1 4 5 1 3 1 0", {588, 3876}, 0, 12},
    {10, "3 2 4 3 1 6 1 0", "5 5 2 4 1 5 1 0", {552, 4104}, 0, 12},
    {11, "2 3 4 3 1 6 1 0", "4 4 5 4 4 2 2 0", {624, 3744}, 0, 12},
    {12, "5 4 4 3 1 6 1 0", "3 6 2 6 3 1 3 0", {612, 3852}, 0, 12},
    {13, "5 3 4 4 1 6 1 0", "5 5 5 3 5 1 1 0", {576, 3936}, 0, 48},
    {14, "1 5 1 5 1 6 1 0", "3 1 1 2 4 3 1 0", {480, 4320}, 0, 24},
    {15, "2 6 1 5 1 6 1 0", "5 3 1 1 1 3 3 0", {672, 3552}, 0, 24},
    {16, "3 4 4 5 1 6 1 0", "5 2 5 3 6 2 1 0", {528, 4128}, 0, 48},
    {17, "2 1 6 5 1 6 1 0", "6 2 5 2 3 2 1 0", {672, 3552}, 0, 12},
    {18, "5 2 3 5 2 6 1 0", "1 4 4 5 1 4 1 0", {660, 3708}, 0, 12},
    {19, "2 2 4 5 2 6 1 0", "2 1 2 1 2 5 3 0", {564, 4092}, 0, 6},
    {20, "6 6 6 5 2 6 1 0", "1 3 1 4 6 2 3 0", {600, 3912}, 0, 6},
};
const RawRow kTable4[] = {
    {1, "2 6 2 3 2 1 6 1 6 1 0 0", "4 4 3 5 3 2 1 1 6 1 0 0", {948, 8496, 65520, 425484}, 0, 0},
    {2, "2 2 5 1 3 1 6 1 6 1 0 0", "3 5 4 4 6 4 2 1 6 1 0 0", {894, 8802, 64572, 427236}, 0, 0},
    {3, "6 4 4 1 4 1 6 1 6 1 0 0", "3 6 2 6 1 2 2 1 6 1 0 0", {936, 8436, 65580, 427704}, 0, 0},
    {4, "2 6 2 3 5 1 6 1 6 1 0 0", "5 3 3 4 4 2 1 1 6 1 0 0", {882, 8592, 65544, 427086}, 0, 0},
    {5, "5 6 5 4 5 1 6 1 6 1 0 0", "2 1 3 5 1 5 1 1 6 1 0 0", {774, 8706, 66204, 426204}, 0, 0},
    {6, "1 4 2 2 1 2 6 1 6 1 0 0", "3 3 5 6 3 4 2 1 6 1 0 0", {948, 8466, 65520, 426306}, 0, 0},
    {7, "4 5 3 4 4 2 6 1 6 1 0 0", "1 3 5 1 2 1 2 1 6 1 0 0", {936, 8982, 63516, 426750}, 0, 0},
    {8, "1 6 4 6 4 3 6 1 6 1 0 0", "2 1 6 3 2 6 2 1 6 1 0 0", {966, 8502, 65148, 426792}, 0, 0},
    {9, "1 3 3 1 1 3 6 1 6 1 0 0", "5 2 2 3 2 4 2 1 6 1 0 0", {966, 8700, 64500, 425730}, 0, 0},
    {10, "4 6 1 6 3 4 6 1 6 1 0 0", "5 1 6 3 6 2 2 1 6 1 0 0", {846, 8796, 65448, 424134}, 0, 0},
};
const RawRow kTable5[] = {
    {1, "4 5 1 1 1 0", "2 2 2 7 0 1", {516}, 0, 0},
    {2, "4 5 1 1 1 0", "8 6 5 4 1 1", {552}, 0, 0},
    {3, "4 5 1 1 1 0", "5 3 2 7 1 1", {444}, 0, 0},
    {4, "4 5 1 1 1 0", "8 3 8 7 1 1", {480}, 0, 0},
    {5, "4 5 1 1 1 0", "2 5 5 4 3 1", {588}, 0, 0},
    {6, "4 5 1 1 1 0", "2 2 8 6 4 1", {408}, 0, 0},
    {7, "4 5 1 1 1 0", "3 5 5 5 7 1", {624}, 0, 0},
    {8, "5 5 1 1 1 0", "0 8 7 2 5 8", {660}, 0, 0},
};
const RawRow kTable6[] = {
    {1, "4 4 1 1 1 0 0 0", "7 2 7 2 0 1 0 0", {266}, 0, 0},
    {2, "4 4 1 1 1 0 0 0", "7 4 8 2 0 1 0 0", {278}, 0, 0},
    {3, "4 4 1 1 1 0 0 0", "1 8 5 4 0 1 0 0", {248}, 0, 0},
    {4, "4 4 1 1 1 0 0 0", "4 8 1 5 0 1 0 0", {254}, 0, 0},
    {5, "4 4 1 1 1 0 0 0", "1 8 4 5 0 1 0 0", {260}, 0, 0},
    {6, "4 4 1 1 1 0 0 0", "1 1 5 5 0 1 0 0", {284}, 0, 0},
    {7, "4 4 1 1 1 0 0 0", "7 4 2 8 0 1 0 0", {296}, 0, 0},
    {8, "4 4 1 1 1 0 0 0", "1 5 4 8 0 1 0 0", {338}, 0, 0},
    {9, "4 4 1 1 1 0 0 0", "8 1 2 6 1 1 0 0", {272}, 0, 0},
    {10, "4 4 1 1 1 0 0 0", "7 5 3 1 2 1 0 0", {242}, 0, 0},
    {11, "4 4 1 1 1 0 0 0", "8 2 1 1 3 1 0 0", {302}, 0, 0},
    {12, "4 4 1 1 1 0 0 0", "2 8 1 1 3 1 0 0", {290}, 0, 0},
    {13, "4 4 1 1 1 0 0 0", "2 2 4 1 6 1 0 0", {326}, 0, 0},
    {14, "4 4 1 1 1 0 0 0", "1 7 2 5 6 1 0 0", {230}, 0, 0},
    {15, "4 4 1 1 1 0 0 0", "5 4 7 2 0 2 0 0", {308}, 0, 0},
    {16, "4 4 1 1 1 0 0 0", "8 7 8 4 0 2 0 0", {314}, 0, 0},
    {17, "4 4 1 1 1 0 0 0", "1 8 4 3 2 2 0 0", {320}, 0, 0},
    {18, "4 4 1 1 1 0 0 0", "7 2 4 0 5 2 0 0", {332}, 0, 0},
    {19, "4 4 1 1 1 0 0 0", "4 1 2 8 6 2 0 0", {344}, 0, 0},
    {20, "4 4 1 1 1 0 0 0", "7 2 3 7 8 7 0 0", {236}, 0, 0},
};
const RawRow kTable7[] = {
    {1, "4 4 4 1 1 1 1 1 0 0", "6 6 2 3 1 1 1 1 0 0", {138, 138}, 152, 0},
    {2, "4 4 4 1 1 1 1 1 0 0", "4 4 4 1 1 1 1 1 0 0", {138, 60}, 152, 0},
    {3, "4 4 4 1 1 1 1 1 0 0", "2 5 2 5 1 1 1 1 0 0", {138, 132}, 152, 0},
    {4, "4 4 4 1 1 1 1 1 0 0", "8 5 5 5 1 1 1 1 0 0", {138, 36}, 120, 0},
    {5, "4 4 4 1 1 1 1 1 0 0", "5 8 5 5 1 1 1 1 0 0", {138, 90}, 120, 0},
    {6, "4 4 4 1 1 1 1 1 0 0", "5 5 8 5 1 1 1 1 0 0", {132, 48}, 120, 0},
    {7, "4 4 4 1 1 1 1 1 0 0", "6 2 3 6 1 1 1 1 0 0", {144, 36}, 120, 0},
    {8, "4 4 4 1 1 1 1 1 0 0", "5 7 2 2 2 1 1 1 0 0", {120, 30}, 152, 0},
    {9, "4 4 4 1 1 1 1 1 0 0", "2 6 6 1 3 1 1 1 0 0", {126, 42}, 184, 0},
    {10, "4 4 4 1 1 1 1 1 0 0", "6 5 4 6 3 1 1 1 0 0", {126, 36}, 120, 0},
};
const RawRow kTable8[] = {
    {1, "4 3 2 1 1 1 1 1 1 0 0 0", "7 7 1 4 7 2 6 1 1 0 0 0", {48}, 0, 0},
    {2, "4 3 2 1 1 1 1 1 1 0 0 0", "2 1 2 4 7 2 6 1 1 0 0 0", {40}, 0, 0},
    {3, "4 3 2 1 1 1 1 1 1 0 0 0", "4 7 6 2 2 1 7 1 1 0 0 0", {32}, 0, 0},
};

std::vector<std::int64_t> digits(const char* s) {
  std::vector<std::int64_t> out;
  std::istringstream in(s);
  for (std::int64_t v; in >> v;) out.push_back(v);
  return out;
}

template <std::size_t N>
std::vector<TableRow> rows_of(const RawRow (&raw)[N]) {
  std::vector<TableRow> out;
  for (const auto& r : raw) {
    TableRow row{r.no, digits(r.x1), digits(r.x2), r.weights, std::nullopt, std::nullopt};
    if (r.tau) row.tau = r.tau;
    if (r.aut) row.aut = r.aut;
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<TableSpec> build_tables() {
  std::vector<TableSpec> t;
  auto add = [&](int id, std::string title, std::string seed, std::int64_t a, std::int64_t b, std::size_t z1,
                 std::size_t z2, std::size_t d, std::size_t first, std::optional<Fraction> mu, bool long_running,
                 std::vector<TableRow> rows) {
    t.push_back(TableSpec{id, std::move(title), std::move(seed), a, b, z1, z2, d, first, mu, long_running,
                          std::move(rows)});
  };
  add(1, "ternary [28,14,9] from S(11)", "S11", 1, 1, 10, 10, 9, 0, std::nullopt, false, rows_of(kTable1));
  add(2, "ternary [32,16,9] from C28", "C28", 1, 1, 12, 12, 9, 0, std::nullopt, false, rows_of(kTable2));
  add(3, "GF(7) [16,8,7] from C11", "C11", 2, 3, 4, 4, 7, 7, std::nullopt, false, rows_of(kTable3));
  add(4, "GF(7) [24,12,9] from C20", "C20", 2, 3, 8, 8, 9, 9, std::nullopt, true, rows_of(kTable4));
  add(5, "Z9 length 12 from G2", "G2", 2, 2, 2, 2, 6, 6, Fraction{2, 1}, false, rows_of(kTable5));
  add(6, "Z9 length 16 from G3", "G3", 2, 2, 4, 4, 6, 6, Fraction{2, 1}, false, rows_of(kTable6));
  add(7, "Z9 length 20 from G4", "G4", 2, 2, 6, 6, 6, 6, Fraction{2, 1}, false, rows_of(kTable7));
  add(8, "Z9 length 24 from G5", "G5", 2, 2, 8, 8, 6, 6, Fraction{3, 1}, false, rows_of(kTable8));
  return t;
}

Vec pad(const Ring& ring, std::size_t zeros, const std::vector<std::int64_t>& tail) {
  Vec v(zeros, ring.zero());
  for (auto x : tail) v.push_back(ring.from_int(x));
  return v;
}

Check make_check(std::string name, const std::string& expected, const std::string& computed) {
  return Check{std::move(name), expected, computed, expected == computed};
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : kFixtureDefs) out.emplace_back(f.name);
  return out;
}

const Fixture& fixture(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, Fixture, std::less<>> cache;
  const FixtureDef& def = fixture_def(name);
  std::lock_guard lock(mu);
  auto it = cache.find(def.name);
  if (it == cache.end()) it = cache.emplace(def.name, validate(def)).first;
  return it->second;
}

Code fixture_code(std::string_view name) { return fixture_def(name).build(); }

std::uint64_t catalog_hash() {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& f : kFixtureDefs) {
    h = fnv1a(f.name, h);
    h = fnv1a(format_code(f.build()), h);
  }
  return h;
}

Code pless_symmetry_code_11() {
  constexpr int q = 11;
  auto R = make_ring("gf 3");
  auto chi = [](int a) {
    a = ((a % q) + q) % q;
    if (a == 0) return 0;
    for (int x = 1; x < q; ++x) {
      if (x * x % q == a) return 1;
    }
    return -1;
  };
  Matrix g(q + 1, 2 * (q + 1));
  for (int i = 0; i <= q; ++i) {
    g(i, i) = R->one();
    for (int j = 0; j <= q; ++j) {
      int c;
      if (i == 0) {
        c = j == 0 ? 0 : 1;
      } else if (j == 0) {
        c = -1;
      } else {
        c = chi((j - 1) - (i - 1));
      }
      g(i, q + 1 + j) = R->from_int(c);
    }
  }
  return Code(R, std::move(g));
}

Code bordered_circulant(std::shared_ptr<const Ring> ring, std::int64_t alpha, std::int64_t beta, std::int64_t gamma,
                        std::span<const std::int64_t> row) {
  const std::size_t c = row.size();
  const std::size_t k = c + 1;
  Matrix g(k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) g(i, i) = ring->one();
  g(0, k) = ring->from_int(alpha);
  for (std::size_t j = 0; j < c; ++j) g(0, k + 1 + j) = ring->from_int(beta);
  for (std::size_t i = 0; i < c; ++i) {
    g(1 + i, k) = ring->from_int(gamma);
    for (std::size_t j = 0; j < c; ++j) g(1 + i, k + 1 + (j + i) % c) = ring->from_int(row[j]);
  }
  return Code(std::move(ring), std::move(g));
}

const std::vector<TableSpec>& tables() {
  static const std::vector<TableSpec> t = build_tables();
  return t;
}

const TableSpec& table(int id) {
  for (const auto& t : tables()) {
    if (t.id == id) return t;
  }
  throw Error(ErrorKind::kInvalidArgument, "no table " + std::to_string(id) + " (valid: 1..8)");
}

BuildUpWitness table_witness(const TableSpec& spec, const TableRow& row) {
  const Code seed = fixture_code(spec.seed);
  const Ring& R = seed.ring();
  BuildUpWitness w{R.from_int(spec.alpha), R.from_int(spec.beta), pad(R, spec.x1_zeros, row.x1),
                   pad(R, spec.x2_zeros, row.x2)};
  if (w.x1.size() != seed.length() || w.x2.size() != seed.length()) {
    throw Error(ErrorKind::kInvalidArgument, "table " + std::to_string(spec.id) + " row " + std::to_string(row.no) +
                                                 ": padded witness does not match seed length");
  }
  return w;
}

std::string printed_digits(const TableSpec& spec, std::span<const Elem> padded, const Ring& ring, bool first) {
  const std::size_t zeros = first ? spec.x1_zeros : spec.x2_zeros;
  std::string out;
  for (std::size_t i = zeros; i < padded.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += std::to_string(ring.to_int(padded[i]));
  }
  return out;
}

bool RowReport::pass() const {
  if (!error.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool TableReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowReport& r) { return r.pass(); });
}

TableReport reproduce_table(int id, int first_row, int last_row, const ReproduceOptions& options) {
  const TableSpec& spec = table(id);
  const int count = static_cast<int>(spec.rows.size());
  if (first_row < 1 || last_row > count || first_row > last_row) {
    throw Error(ErrorKind::kInvalidArgument, "rows must lie in 1.." + std::to_string(count));
  }
  TableReport report{id, {}};
  const Code seed = fixture(spec.seed).code;
  for (int no = first_row; no <= last_row; ++no) {
    const TableRow& row = spec.rows[no - 1];
    RowReport rr;
    rr.no = row.no;
    try {
      const Code code = buildup(seed, table_witness(spec, row));
      rr.code = code;
      rr.checks.push_back(make_check("self-dual", "true", is_self_dual(code) ? "true" : "false"));
      if (!row.weights.empty()) {
        const std::size_t top = spec.first_weight + row.weights.size() - 1;
        const auto we = low_weight_enumerator(code, static_cast<unsigned>(top), options.enumeration);
        std::size_t d = 0;
        for (std::size_t w = 1; w <= top && d == 0; ++w) {
          if (we.at(w)) d = w;
        }
        rr.checks.push_back(make_check("d", std::to_string(spec.min_distance), d ? std::to_string(d) : ">" + std::to_string(top)));
        for (std::size_t i = 0; i < row.weights.size(); ++i) {
          const std::size_t w = spec.first_weight + i;
          rr.checks.push_back(make_check("A" + std::to_string(w), std::to_string(row.weights[i]), std::to_string(we.at(w))));
        }
      } else {
        const auto mw = min_weight(code, WeightKind::kHamming, options.enumeration);
        rr.checks.push_back(make_check("d", std::to_string(spec.min_distance), std::to_string(mw.weight)));
      }
      if (spec.mu && options.lattice) {
        const Lattice lat = construction_a(code);
        const LatticeReport lr = lattice_report(lat, 1);
        rr.checks.push_back(make_check("det", "1", lr.unimodular ? "1" : "!=1"));
        rr.checks.push_back(make_check("mu", format_fraction(*spec.mu), format_fraction(lr.min_norm)));
        if (row.tau) {
          rr.checks.push_back(make_check("tau", std::to_string(*row.tau), std::to_string(lr.kissing)));
        } else {
          rr.info.emplace_back("tau", std::to_string(lr.kissing));
        }
      }
      if (row.aut) rr.info.emplace_back("aut(printed)", std::to_string(*row.aut));
    } catch (const Error& e) {
      rr.error = e.what();
    }
    if (options.on_row) options.on_row(rr);
    report.rows.push_back(std::move(rr));
  }
  return report;
}

std::uint64_t Fingerprint::hash() const {
  std::string s = std::to_string(length) + ":" + std::to_string(log_p_cardinality) + ":" + format_enumerator(hamming, ',');
  if (euclidean) s += "|" + format_enumerator(*euclidean, ',');
  return fnv1a(s);
}

Fingerprint fingerprint(const Code& code, const EnumOptions& options) {
  Fingerprint fp;
  fp.hamming = weight_enumerator(code, WeightKind::kHamming, options);
  if (!code.ring().is_field() && code.ring().degree() == 1) {
    fp.euclidean = weight_enumerator(code, WeightKind::kEuclidean, options);
  }
  fp.length = code.length();
  fp.log_p_cardinality = code.log_p_cardinality();
  return fp;
}

DiscoverResult discover(const Code& seed, const DiscoverOptions& options) {
  if (!is_self_dual(seed)) throw Error(ErrorKind::kNotSelfDual, "seed code is not self-dual");
  const auto ab = solve_alpha_beta(seed.ring());
  WitnessSearch search(seed.ring_ptr(), seed.length(), ab.alpha, ab.beta, WitnessStrategy::kRandom,
                       options.rng_seed);
  DiscoverResult out;
  using Key = std::tuple<std::size_t, std::uint64_t, std::vector<std::uint64_t>, std::vector<std::uint64_t>>;
  std::set<Key> seen;
  for (std::uint64_t trial = 0; trial < options.trials && out.codes.size() < options.max_codes; ++trial) {
    ++out.trials;
    const auto w = search.next();
    Code code = buildup(seed, *w);
    if (options.min_d > 1 && find_codeword_below(code, static_cast<unsigned>(options.min_d), options.enumeration)) {
      ++out.rejected_distance;
      continue;
    }
    Fingerprint fp = fingerprint(code, options.enumeration);
    Key key{fp.length, fp.log_p_cardinality, fp.hamming.counts,
            fp.euclidean ? fp.euclidean->counts : std::vector<std::uint64_t>{}};
    if (!seen.insert(std::move(key)).second) {
      ++out.rejected_duplicate;
      continue;
    }
    const std::size_t d = fp.hamming.min_nonzero().value_or(0);
    out.codes.push_back(Discovered{std::move(code), d, std::move(fp), trial});
  }
  return out;
}

std::string manifest_line(const std::string& file, const Discovered& code) {
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(code.fp.hash()));
  return file + " " + std::to_string(code.code.length()) + " " +
         std::to_string(code.code.standard_form().gen.rows()) + " " + std::to_string(code.d) + " " + hash;
}

}  // namespace sdc
