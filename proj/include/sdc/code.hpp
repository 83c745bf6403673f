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

// Linear codes over the rings of ring.hpp, given by generator matrices.

#ifndef SDC_CODE_HPP_
#define SDC_CODE_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sdc/ring.hpp"

namespace sdc {

using Vec = std::vector<Elem>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void append_row(std::span<const Elem> v);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void truncate_rows(std::size_t rows);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

// Builds a matrix from signed integers; negative entries are canonicalized.
// For r > 1 each row lists n * r coefficients, element by element.
Matrix make_matrix(const Ring& ring, std::size_t cols,
                   std::initializer_list<std::initializer_list<std::int64_t>> rows);
Matrix make_matrix(const Ring& ring, std::size_t cols, const std::vector<std::vector<std::int64_t>>& rows);
Vec make_vector(const Ring& ring, std::span<const std::int64_t> coeffs);
Vec make_vector(const Ring& ring, std::initializer_list<std::int64_t> coeffs);

Elem dot(const Ring& ring, std::span<const Elem> a, std::span<const Elem> b);
// a += s * b
void axpy(const Ring& ring, std::span<Elem> a, const Elem& s, std::span<const Elem> b);

// Generator matrix in the chain-ring block form
//
//   [ I        A01      A02    ... ]
//   [ 0   gamma I   gamma A12  ... ]
//   [ 0        0  gamma^2 I    ... ]
//
// after a column permutation. Fields are the single-block case (I | A).
struct StandardForm {
  Matrix gen;                        // permuted coordinates
  std::vector<std::size_t> perm;     // column j of gen is original column perm[j]
  std::vector<unsigned> row_level;   // gamma exponent of each row's pivot
  std::vector<std::size_t> block_sizes;  // k_0 .. k_{e-1}
  Matrix gen_original;               // same rows, original column order
};

StandardForm standardize(const Ring& ring, const Matrix& gen);

class Code {
 public:
  Code(std::shared_ptr<const Ring> ring, Matrix gen);

  const Ring& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const Ring>& ring_ptr() const noexcept { return ring_; }
  std::size_t length() const noexcept { return gen_.cols(); }
  const Matrix& gen() const noexcept { return gen_; }
  const StandardForm& standard_form() const noexcept { return std_; }

  std::size_t free_rank() const { return std_.block_sizes.empty() ? 0 : std_.block_sizes[0]; }
  bool is_free() const { return free_rank() == std_.gen.rows(); }
  // log_p |C| = sum_i r (e - i) k_i.
  std::uint64_t log_p_cardinality() const;
  // |C|, saturating at UINT64_MAX.
  std::uint64_t cardinality() const;

 private:
  std::shared_ptr<const Ring> ring_;
  Matrix gen_;
  StandardForm std_;
};

std::shared_ptr<const Ring> make_ring(std::string_view spec_text);

struct InnerProductReport {
  Matrix gram;  // G G^T
  bool is_zero() const;
};

InnerProductReport inner_products(const Code& code);
bool is_self_orthogonal(const Code& code);
// G G^T == 0 and |C|^2 == |R|^n.
bool is_self_dual(const Code& code, InnerProductReport* report = nullptr);

Code dual(const Code& code);
bool contains(const Code& code, std::span<const Elem> v);
bool same_row_space(const Code& a, const Code& b);
// Column j of the result is column perm[j] of the input.
Code permute_columns(const Code& code, std::span<const std::size_t> perm);

// Rows of the free block reduced mod p, over the residue field.
Code residue_code(const Code& code);
// {v mod p : p^(m-1) v in C}, over the residue field.
Code torsion_code(const Code& code);

// Text format: ring spec line, `k <rows> n <cols>`, then k rows of n*r
// integers. Negative integers are canonicalized on input.
Code read_code(std::istream& in);
Code parse_code(std::string_view text);
void write_code(std::ostream& out, const Code& code);
std::string format_code(const Code& code);
std::string format_vector(const Ring& ring, std::span<const Elem> v, char sep = ' ');

}  // namespace sdc

#endif  // SDC_CODE_HPP_
