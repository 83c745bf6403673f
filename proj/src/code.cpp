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

#include "sdc/code.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "sdc/error.hpp"

namespace sdc {

void Matrix::append_row(std::span<const Elem> v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw Error(ErrorKind::kInvalidArgument, "row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void Matrix::truncate_rows(std::size_t rows) {
  if (rows >= rows_) return;
  rows_ = rows;
  data_.resize(rows_ * cols_);
}

Vec make_vector(const Ring& ring, std::span<const std::int64_t> coeffs) {
  const unsigned r = ring.degree();
  if (coeffs.size() % r != 0) throw Error(ErrorKind::kInvalidArgument, "coefficient count not a multiple of r");
  Vec v(coeffs.size() / r);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ring.from_coeffs(coeffs.subspan(i * r, r));
  return v;
}

Vec make_vector(const Ring& ring, std::initializer_list<std::int64_t> coeffs) {
  return make_vector(ring, std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

Matrix make_matrix(const Ring& ring, std::size_t cols, const std::vector<std::vector<std::int64_t>>& rows) {
  Matrix m(0, cols);
  for (const auto& row : rows) {
    Vec v = make_vector(ring, row);
    if (v.size() != cols) throw Error(ErrorKind::kInvalidArgument, "row length mismatch");
    m.append_row(v);
  }
  return m;
}

Matrix make_matrix(const Ring& ring, std::size_t cols,
                   std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> tmp;
  for (const auto& r : rows) tmp.emplace_back(r);
  return make_matrix(ring, cols, tmp);
}

Elem dot(const Ring& ring, std::span<const Elem> a, std::span<const Elem> b) {
  Elem acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc = ring.add(acc, ring.mul(a[i], b[i]));
  return acc;
}

void axpy(const Ring& ring, std::span<Elem> a, const Elem& s, std::span<const Elem> b) {
  if (ring.is_zero(s)) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = ring.add(a[i], ring.mul(s, b[i]));
}

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
  unsigned val;
};

// Smallest valuation in the trailing submatrix; ties go to the leftmost
// column, then the topmost row.
Pivot find_pivot(const Ring& ring, const Matrix& m, std::size_t t) {
  Pivot best{t, t, ring.nilpotency()};
  for (std::size_t j = t; j < m.cols(); ++j) {
    for (std::size_t i = t; i < m.rows(); ++i) {
      const unsigned v = ring.valuation(m(i, j));
      if (v < best.val) {
        best = {i, j, v};
        if (v == 0) return best;
      }
    }
  }
  return best;
}

void scale_row(const Ring& ring, std::span<Elem> row, const Elem& s) {
  for (auto& x : row) x = ring.mul(x, s);
}

}  // namespace

StandardForm standardize(const Ring& ring, const Matrix& gen) {
  Matrix m = gen;
  const std::size_t n = m.cols();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<unsigned> level;
  const Elem minus_one = ring.neg(ring.one());

  std::size_t t = 0;
  while (t < m.rows() && t < n) {
    const Pivot pv = find_pivot(ring, m, t);
    if (pv.val >= ring.nilpotency()) break;
    m.swap_rows(pv.row, t);
    m.swap_cols(pv.col, t);
    std::swap(perm[pv.col], perm[t]);
    const Elem u = ring.div_gamma_pow(m(t, t), pv.val);
    scale_row(ring, m.row(t), ring.inv(u));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == t) continue;
      if (i < t && level[i] != pv.val) continue;
      const Elem c = m(i, t);
      if (ring.is_zero(c)) continue;
      const Elem w = ring.div_gamma_pow(c, pv.val);
      axpy(ring, m.row(i), ring.mul(w, minus_one), m.row(t));
    }
    level.push_back(pv.val);
    ++t;
  }
  m.truncate_rows(t);

  StandardForm sf;
  sf.block_sizes.assign(ring.nilpotency(), 0);
  for (unsigned v : level) ++sf.block_sizes[v];
  sf.gen_original = Matrix(m.rows(), n);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) sf.gen_original(i, perm[j]) = m(i, j);
  }
  sf.gen = std::move(m);
  sf.perm = std::move(perm);
  sf.row_level = std::move(level);
  return sf;
}

Code::Code(std::shared_ptr<const Ring> ring, Matrix gen)
    : ring_(std::move(ring)), gen_(std::move(gen)), std_(standardize(*ring_, gen_)) {}

std::uint64_t Code::log_p_cardinality() const {
  std::uint64_t total = 0;
  for (unsigned v : std_.row_level) total += std::uint64_t{ring_->degree()} * (ring_->nilpotency() - v);
  return total;
}

std::uint64_t Code::cardinality() const {
  const std::uint64_t p = ring_->characteristic_prime();
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < log_p_cardinality(); ++i) {
    if (out > ~std::uint64_t{0} / p) return ~std::uint64_t{0};
    out *= p;
  }
  return out;
}

std::shared_ptr<const Ring> make_ring(std::string_view spec_text) {
  return std::make_shared<const Ring>(parse_ring_spec(spec_text));
}

bool InnerProductReport::is_zero() const {
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (const auto& e : gram.row(i)) {
      if (e != Elem{}) return false;
    }
  }
  return true;
}

InnerProductReport inner_products(const Code& code) {
  const auto& g = code.gen();
  InnerProductReport rep{Matrix(g.rows(), g.rows())};
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = i; j < g.rows(); ++j) {
      rep.gram(i, j) = rep.gram(j, i) = dot(code.ring(), g.row(i), g.row(j));
    }
  }
  return rep;
}

bool is_self_orthogonal(const Code& code) { return inner_products(code).is_zero(); }

bool is_self_dual(const Code& code, InnerProductReport* report) {
  InnerProductReport rep = inner_products(code);
  const bool orth = rep.is_zero();
  if (report) *report = std::move(rep);
  const auto& ring = code.ring();
  const std::uint64_t full = std::uint64_t{ring.nilpotency()} * ring.degree() * code.length();
  return orth && 2 * code.log_p_cardinality() == full;
}

Code dual(const Code& code) {
  const Ring& ring = code.ring();
  const std::size_t n = code.length();
  const unsigned e = ring.nilpotency();
  Matrix a = code.standard_form().gen_original;
  Matrix q(n, n);
  for (std::size_t i = 0; i < n; ++i) q(i, i) = ring.one();
  const Elem minus_one = ring.neg(ring.one());

  // Diagonalize P A Q = diag(gamma^v_i); the kernel of A is Q applied to
  // the kernel of the diagonal.
  std::vector<unsigned> diag;
  std::size_t t = 0;
  while (t < a.rows() && t < n) {
    const Pivot pv = find_pivot(ring, a, t);
    if (pv.val >= e) break;
    a.swap_rows(pv.row, t);
    a.swap_cols(pv.col, t);
    q.swap_cols(pv.col, t);
    const Elem u = ring.div_gamma_pow(a(t, t), pv.val);
    scale_row(ring, a.row(t), ring.inv(u));
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
      if (ring.is_zero(a(i, t))) continue;
      const Elem w = ring.mul(ring.div_gamma_pow(a(i, t), pv.val), minus_one);
      axpy(ring, a.row(i), w, a.row(t));
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (ring.is_zero(a(t, j))) continue;
      const Elem w = ring.mul(ring.div_gamma_pow(a(t, j), pv.val), minus_one);
      for (std::size_t i = 0; i < a.rows(); ++i) a(i, j) = ring.add(a(i, j), ring.mul(w, a(i, t)));
      for (std::size_t i = 0; i < n; ++i) q(i, j) = ring.add(q(i, j), ring.mul(w, q(i, t)));
    }
    diag.push_back(pv.val);
    ++t;
  }

  Matrix out(0, n);
  Vec col(n);
  for (std::size_t j = 0; j < n; ++j) {
    Elem s = ring.one();
    if (j < diag.size()) {
      if (diag[j] == 0) continue;
      s = ring.gamma_pow(e - diag[j]);
    }
    for (std::size_t i = 0; i < n; ++i) col[i] = ring.mul(s, q(i, j));
    out.append_row(col);
  }
  if (out.rows() == 0) out = Matrix(0, n);
  return Code(code.ring_ptr(), std::move(out));
}

bool contains(const Code& code, std::span<const Elem> v) {
  const Ring& ring = code.ring();
  const auto& sf = code.standard_form();
  if (v.size() != code.length()) return false;
  Vec x(v.begin(), v.end());
  const Elem minus_one = ring.neg(ring.one());
  for (std::size_t j = 0; j < sf.gen.rows(); ++j) {
    const Elem c = x[sf.perm[j]];
    if (ring.is_zero(c)) continue;
    if (ring.valuation(c) < sf.row_level[j]) return false;
    const Elem w = ring.div_gamma_pow(c, sf.row_level[j]);
    axpy(ring, x, ring.mul(w, minus_one), sf.gen_original.row(j));
  }
  return std::all_of(x.begin(), x.end(), [&](const Elem& z) { return ring.is_zero(z); });
}

bool same_row_space(const Code& a, const Code& b) {
  if (a.length() != b.length() || a.ring().spec() != b.ring().spec()) return false;
  if (a.log_p_cardinality() != b.log_p_cardinality()) return false;
  const auto& ga = a.standard_form().gen_original;
  for (std::size_t i = 0; i < ga.rows(); ++i) {
    if (!contains(b, ga.row(i))) return false;
  }
  return true;
}

Code permute_columns(const Code& code, std::span<const std::size_t> perm) {
  const auto& g = code.gen();
  if (perm.size() != g.cols()) throw Error(ErrorKind::kInvalidArgument, "permutation length mismatch");
  Matrix out(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) = g(i, perm[j]);
  }
  return Code(code.ring_ptr(), std::move(out));
}

namespace {

Code reduce_rows(const Code& code, bool all_levels) {
  const Ring& ring = code.ring();
  auto field = std::make_shared<const Ring>(ring.residue_field());
  const auto& sf = code.standard_form();
  Matrix out(0, code.length());
  Vec v(code.length());
  for (std::size_t i = 0; i < sf.gen_original.rows(); ++i) {
    const unsigned lvl = sf.row_level[i];
    if (lvl > 0 && !all_levels) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      v[j] = ring.reduce_to_residue(ring.div_gamma_pow(sf.gen_original(i, j), lvl));
    }
    out.append_row(v);
  }
  return Code(std::move(field), std::move(out));
}

}  // namespace

Code residue_code(const Code& code) { return reduce_rows(code, false); }

Code torsion_code(const Code& code) { return reduce_rows(code, true); }

Code read_code(std::istream& in) {
  std::string line;
  while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
  }
  if (!in && line.empty()) throw Error(ErrorKind::kParse, "missing ring spec line");
  auto ring = make_ring(line);
  std::string kw_k, kw_n;
  long long k = -1, n = -1;
  if (!(in >> kw_k >> k >> kw_n >> n) || kw_k != "k" || kw_n != "n" || k < 0 || n < 0) {
    throw Error(ErrorKind::kParse, "expected `k <rows> n <cols>`");
  }
  const std::size_t r = ring->degree();
  std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(k));
  for (auto& row : rows) {
    row.resize(static_cast<std::size_t>(n) * r);
    for (auto& x : row) {
      if (!(in >> x)) throw Error(ErrorKind::kParse, "truncated generator matrix");
    }
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::kParse, "trailing data after generator matrix");
  Matrix g = make_matrix(*ring, static_cast<std::size_t>(n), rows);
  return Code(std::move(ring), std::move(g));
}

Code parse_code(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_code(in);
}

std::string format_vector(const Ring& ring, std::span<const Elem> v, char sep) {
  std::string s;
  bool first = true;
  for (const auto& e : v) {
    for (unsigned i = 0; i < ring.degree(); ++i) {
      if (!first) s += sep;
      s += std::to_string(e.c[i]);
      first = false;
    }
  }
  return s;
}

void write_code(std::ostream& out, const Code& code) {
  out << format_ring_spec(code.ring().spec()) << '\n';
  out << "k " << code.gen().rows() << " n " << code.length() << '\n';
  for (std::size_t i = 0; i < code.gen().rows(); ++i) out << format_vector(code.ring(), code.gen().row(i)) << '\n';
}

std::string format_code(const Code& code) {
  std::ostringstream out;
  write_code(out, code);
  return out.str();
}

}  // namespace sdc
