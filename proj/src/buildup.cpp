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

#include "sdc/buildup.hpp"

#include <map>
#include <set>

#include "sdc/error.hpp"

namespace sdc {

namespace {

constexpr std::uint64_t kRandomElemLimit = std::uint64_t{1} << 16;
constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 24;
constexpr std::uint64_t kCosetLimit = std::uint64_t{1} << 20;
constexpr int kRandomAttempts = 1000;

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

std::vector<std::uint32_t> flat_key(const Matrix& m) {
  std::vector<std::uint32_t> key{static_cast<std::uint32_t>(m.rows())};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& e : m.row(i)) key.insert(key.end(), e.c.begin(), e.c.end());
  }
  return key;
}

// Canonical representative of v + span(rows) for rows in reduced echelon form.
Vec reduce_mod(const Ring& ring, const Matrix& echelon, const std::vector<std::size_t>& pivots, Vec v) {
  for (std::size_t i = 0; i < echelon.rows(); ++i) {
    const Elem c = v[pivots[i]];
    if (!ring.is_zero(c)) axpy(ring, v, ring.neg(c), echelon.row(i));
  }
  return v;
}

std::vector<std::size_t> pivot_columns(const Ring& ring, const Matrix& echelon) {
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < echelon.rows(); ++i) {
    std::size_t j = 0;
    while (ring.is_zero(echelon(i, j))) ++j;
    piv.push_back(j);
  }
  return piv;
}

// Affine set {base + sum b_j kernel_j} with the given prefix, or nothing
// when no codeword carries that prefix.
struct PrefixSpace {
  std::optional<Vec> base;
  Matrix kernel;
};

PrefixSpace prefix_space(const Ring& ring, const Matrix& gen, std::span<const Elem> prefix) {
  Matrix m = gen;
  const std::size_t width = prefix.size();
  std::vector<std::size_t> pivot_of_col(width, SIZE_MAX);
  std::size_t t = 0;
  for (std::size_t j = 0; j < width && t < m.rows(); ++j) {
    std::size_t r = t;
    while (r < m.rows() && ring.is_zero(m(r, j))) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(r, t);
    const Elem inv = ring.inv(m(t, j));
    for (auto& e : m.row(t)) e = ring.mul(e, inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != t && !ring.is_zero(m(i, j))) axpy(ring, m.row(i), ring.neg(m(i, j)), m.row(t));
    }
    pivot_of_col[j] = t++;
  }
  PrefixSpace out;
  out.kernel = Matrix(0, m.cols());
  for (std::size_t i = t; i < m.rows(); ++i) out.kernel.append_row(m.row(i));
  Vec base(m.cols(), ring.zero());
  for (std::size_t j = 0; j < width; ++j) {
    if (pivot_of_col[j] == SIZE_MAX) continue;
    axpy(ring, base, prefix[j], m.row(pivot_of_col[j]));
  }
  for (std::size_t j = 0; j < width; ++j) {
    if (base[j] != prefix[j]) return out;
  }
  out.base = std::move(base);
  return out;
}

// Every self-orthogonal vector of the affine space, reduced modulo C1.
std::vector<Vec> self_orthogonal_reps(const Ring& ring, const PrefixSpace& space, const Matrix& c1_echelon,
                                      const std::vector<std::size_t>& c1_pivots) {
  std::vector<Vec> reps;
  if (!space.base) return reps;
  const auto elems = ring.enumerate_all();
  const std::size_t k = space.kernel.rows();
  if (checked_pow(ring.size(), k, kCosetLimit) > kCosetLimit) {
    throw Error(ErrorKind::kSizeLimit, "coset space |R|^" + std::to_string(k) + " exceeds 2^20");
  }
  std::set<Vec> seen;
  std::vector<std::size_t> digits(k, 0);
  for (;;) {
    Vec v = *space.base;
    for (std::size_t i = 0; i < k; ++i) {
      if (digits[i]) axpy(ring, v, elems[digits[i]], space.kernel.row(i));
    }
    if (ring.is_zero(dot(ring, v, v))) {
      Vec rep = reduce_mod(ring, c1_echelon, c1_pivots, std::move(v));
      if (seen.insert(rep).second) reps.push_back(std::move(rep));
    }
    std::size_t i = 0;
    while (i < k && ++digits[i] == elems.size()) digits[i++] = 0;
    if (i == k) break;
  }
  return reps;
}

void require_self_dual(const Code& c0) {
  if (!is_self_dual(c0)) throw Error(ErrorKind::kNotSelfDual, "seed code is not self-dual");
}

unsigned unit_count(const Ring& ring, std::span<const Elem> v) {
  unsigned n = 0;
  for (const auto& e : v) n += ring.is_unit(e);
  return n;
}

}  // namespace

Vec witness_row_prefix(const Ring& ring, const BuildUpWitness& w, std::span<const Elem> row) {
  const Elem s = dot(ring, w.x1, row);
  const Elem t = dot(ring, w.x2, row);
  const Elem as = ring.mul(w.alpha, s), bt = ring.mul(w.beta, t);
  const Elem bs = ring.mul(w.beta, s), at = ring.mul(w.alpha, t);
  return {ring.neg(s), ring.neg(t), ring.neg(ring.add(as, bt)), ring.sub(at, bs)};
}

void validate_witness(const Ring& ring, const BuildUpWitness& w, std::size_t length) {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::kWitnessInvalid, what); };
  if (!ring.is_unit(w.alpha) || !ring.is_unit(w.beta)) fail("alpha and beta must be units");
  const Elem ab = ring.add(ring.add(ring.mul(w.alpha, w.alpha), ring.mul(w.beta, w.beta)), ring.one());
  if (!ring.is_zero(ab)) fail("alpha^2 + beta^2 + 1 != 0");
  if (w.x1.size() != length || w.x2.size() != length) {
    fail("x1 and x2 must have length " + std::to_string(length));
  }
  const Elem minus_one = ring.neg(ring.one());
  if (dot(ring, w.x1, w.x1) != minus_one) fail("x1 . x1 != -1");
  if (dot(ring, w.x2, w.x2) != minus_one) fail("x2 . x2 != -1");
  if (!ring.is_zero(dot(ring, w.x1, w.x2))) fail("x1 . x2 != 0");
}

Code buildup(const Code& c0, const BuildUpWitness& w) {
  const Ring& ring = c0.ring();
  require_self_dual(c0);
  validate_witness(ring, w, c0.length());
  const std::size_t n = c0.length();
  Matrix g(0, n + 4);
  Vec row(n + 4, ring.zero());
  row[0] = ring.one();
  std::copy(w.x1.begin(), w.x1.end(), row.begin() + 4);
  g.append_row(row);
  std::fill(row.begin(), row.end(), ring.zero());
  row[1] = ring.one();
  std::copy(w.x2.begin(), w.x2.end(), row.begin() + 4);
  g.append_row(row);
  for (std::size_t i = 0; i < c0.gen().rows(); ++i) {
    const auto r = c0.gen().row(i);
    const Vec y = witness_row_prefix(ring, w, r);
    std::copy(y.begin(), y.end(), row.begin());
    std::copy(r.begin(), r.end(), row.begin() + 4);
    g.append_row(row);
  }
  return Code(c0.ring_ptr(), std::move(g));
}

WitnessSearch::WitnessSearch(std::shared_ptr<const Ring> ring, std::size_t length, Elem alpha, Elem beta,
                             WitnessStrategy strategy, std::uint64_t seed)
    : ring_(std::move(ring)), length_(length), alpha_(alpha), beta_(beta), strategy_(strategy), rng_(seed) {
  if (length_ < 2) throw Error(ErrorKind::kInvalidArgument, "witness length must be at least 2");
  if (strategy_ == WitnessStrategy::kRandom && ring_->size() > kRandomElemLimit) {
    throw Error(ErrorKind::kSizeLimit, "random witness search needs |R| <= 2^16");
  }
  if (strategy_ == WitnessStrategy::kExhaustive &&
      checked_pow(ring_->size(), length_, kExhaustiveLimit) > kExhaustiveLimit) {
    throw Error(ErrorKind::kSizeLimit, "exhaustive witness search needs |R|^(2n) <= 2^24 at length 2n");
  }
  elems_ = ring_->enumerate_all();
  minus_one_ = ring_->neg(ring_->one());
}

std::optional<Vec> WitnessSearch::random_x1() {
  const Ring& R = *ring_;
  Vec x(length_);
  for (auto& e : x) e = elems_[rng_() % elems_.size()];
  Elem partial = R.zero();
  for (std::size_t i = 0; i + 1 < length_; ++i) partial = R.add(partial, R.mul(x[i], x[i]));
  const std::size_t start = rng_() % elems_.size();
  for (std::size_t s = 0; s < elems_.size(); ++s) {
    const Elem& v = elems_[(start + s) % elems_.size()];
    if (R.add(partial, R.mul(v, v)) == minus_one_) {
      x.back() = v;
      return x;
    }
  }
  return std::nullopt;
}

std::optional<Vec> WitnessSearch::random_x2(const Vec& x1) {
  const Ring& R = *ring_;
  std::size_t j = length_;
  for (std::size_t i = length_; i-- > 0;) {
    if (R.is_unit(x1[i])) {
      j = i;
      break;
    }
  }
  if (j == length_) return std::nullopt;
  const std::size_t k = j == length_ - 1 ? length_ - 2 : length_ - 1;
  Vec x(length_);
  for (auto& e : x) e = elems_[rng_() % elems_.size()];
  const Elem inv = R.inv(x1[j]);
  // x1 . x2 = 0 fixes x2_j once x2_k is chosen.
  Elem rest = R.zero();
  for (std::size_t i = 0; i < length_; ++i) {
    if (i != j && i != k) rest = R.add(rest, R.mul(x1[i], x[i]));
  }
  const std::size_t start = rng_() % elems_.size();
  for (std::size_t s = 0; s < elems_.size(); ++s) {
    x[k] = elems_[(start + s) % elems_.size()];
    x[j] = R.neg(R.mul(R.add(rest, R.mul(x1[k], x[k])), inv));
    if (dot(R, x, x) == minus_one_) return x;
  }
  return std::nullopt;
}

bool WitnessSearch::advance(Vec& v) {
  for (std::size_t i = v.size(); i-- > 0;) {
    const std::uint64_t idx = ring_->index(v[i]) + 1;
    if (idx < elems_.size()) {
      v[i] = elems_[idx];
      return true;
    }
    v[i] = elems_[0];
  }
  return false;
}

std::optional<BuildUpWitness> WitnessSearch::next() {
  const Ring& R = *ring_;
  if (strategy_ == WitnessStrategy::kRandom) {
    for (int attempt = 0; attempt < kRandomAttempts; ++attempt) {
      auto x1 = random_x1();
      if (!x1) continue;
      for (int a2 = 0; a2 < 16; ++a2) {
        if (auto x2 = random_x2(*x1)) return BuildUpWitness{alpha_, beta_, std::move(*x1), std::move(*x2)};
      }
    }
    throw Error(ErrorKind::kExhausted, "no witness found after repeated random attempts");
  }
  if (done_) return std::nullopt;
  auto x1_ok = [&] { return dot(R, x1_, x1_) == minus_one_; };
  auto x2_ok = [&] { return dot(R, x2_, x2_) == minus_one_ && R.is_zero(dot(R, x1_, x2_)); };
  auto next_x1 = [&] {
    do {
      if (!advance(x1_)) return false;
    } while (!x1_ok());
    return true;
  };
  if (!started_) {
    started_ = true;
    x1_.assign(length_, R.zero());
    x2_.assign(length_, R.zero());
    if (!x1_ok() && !next_x1()) {
      done_ = true;
      return std::nullopt;
    }
    if (x2_ok()) return BuildUpWitness{alpha_, beta_, x1_, x2_};
  }
  for (;;) {
    if (!advance(x2_) && !next_x1()) {
      done_ = true;
      return std::nullopt;
    }
    if (x2_ok()) return BuildUpWitness{alpha_, beta_, x1_, x2_};
  }
}

Matrix rref(const Ring& field, const Matrix& gen) {
  if (!field.is_field()) throw Error(ErrorKind::kInvalidArgument, "rref needs a field");
  Matrix m = gen;
  std::size_t t = 0;
  for (std::size_t j = 0; j < m.cols() && t < m.rows(); ++j) {
    std::size_t r = t;
    while (r < m.rows() && field.is_zero(m(r, j))) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(r, t);
    const Elem inv = field.inv(m(t, j));
    for (auto& e : m.row(t)) e = field.mul(e, inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != t && !field.is_zero(m(i, j))) axpy(field, m.row(i), field.neg(m(i, j)), m.row(t));
    }
    ++t;
  }
  m.truncate_rows(t);
  return m;
}

std::vector<Code> modified_buildup(const Code& c0, std::span<const std::pair<Elem, Elem>> st, const Elem& alpha,
                                   const Elem& beta) {
  const Ring& ring = c0.ring();
  if (!ring.is_field()) throw Error(ErrorKind::kInvalidArgument, "modified building-up is defined over fields");
  require_self_dual(c0);
  const Matrix& g0 = c0.gen();
  if (st.size() != g0.rows()) throw Error(ErrorKind::kInvalidArgument, "need one (s, t) pair per generator row");
  const std::size_t n = c0.length() + 4;

  Matrix g1(0, n);
  for (std::size_t i = 0; i < g0.rows(); ++i) {
    const auto [s, t] = st[i];
    Vec row{s, t, ring.add(ring.mul(alpha, s), ring.mul(beta, t)), ring.sub(ring.mul(beta, s), ring.mul(alpha, t))};
    const auto r = g0.row(i);
    row.insert(row.end(), r.begin(), r.end());
    g1.append_row(row);
  }
  const Code c1(c0.ring_ptr(), g1);
  const Matrix c1_echelon = rref(ring, g1);
  const auto c1_pivots = pivot_columns(ring, c1_echelon);
  const Code perp = dual(c1);

  const Vec e1{ring.one(), ring.zero(), ring.zero(), ring.zero()};
  const Vec e2{ring.zero(), ring.one(), ring.zero(), ring.zero()};
  const auto u1 = self_orthogonal_reps(ring, prefix_space(ring, perp.gen(), e1), c1_echelon, c1_pivots);
  const auto u2 = self_orthogonal_reps(ring, prefix_space(ring, perp.gen(), e2), c1_echelon, c1_pivots);

  std::map<std::vector<std::uint32_t>, Matrix> codes;
  for (const auto& a : u1) {
    for (const auto& b : u2) {
      if (!ring.is_zero(dot(ring, a, b))) continue;
      Matrix g = g1;
      g.append_row(a);
      g.append_row(b);
      Matrix key = rref(ring, g);
      codes.emplace(flat_key(key), std::move(key));
    }
  }
  std::vector<Code> out;
  out.reserve(codes.size());
  for (auto& [key, g] : codes) out.emplace_back(c0.ring_ptr(), std::move(g));
  return out;
}

ReductionCertificate reduce(const Code& c) {
  const Ring& ring = c.ring();
  const std::size_t n = c.length();
  if (n < 8) throw Error(ErrorKind::kLengthTooSmall, "length " + std::to_string(n) + " < 8");
  if (!is_self_dual(c)) throw Error(ErrorKind::kNotSelfDual, "input code is not self-dual");
  if (c.free_rank() < 4) {
    throw Error(ErrorKind::kFreeRankTooSmall, "free rank " + std::to_string(c.free_rank()) + " < 4");
  }
  const auto ab = solve_alpha_beta(ring);
  const auto& sf = c.standard_form();
  const Matrix& g = sf.gen;
  auto tail = [&](std::size_t i) {
    const auto r = g.row(i);
    return Vec(r.begin() + 4, r.end());
  };
  const Vec a1 = tail(0), a2 = tail(1), a3 = tail(2), a4 = tail(3);
  Vec v1 = a1, v2 = a2;
  axpy(ring, v1, ab.alpha, a3);
  axpy(ring, v1, ab.beta, a4);
  axpy(ring, v2, ab.beta, a3);
  axpy(ring, v2, ring.neg(ab.alpha), a4);

  Matrix g0(0, n - 4);
  g0.append_row(v1);
  g0.append_row(v2);
  for (std::size_t i = 4; i < g.rows(); ++i) g0.append_row(tail(i));

  ReductionCertificate cert{sf.perm, BuildUpWitness{ab.alpha, ab.beta, a1, a2}, Code(c.ring_ptr(), std::move(g0)),
                            unit_count(ring, v1), unit_count(ring, v2)};
  if (!is_self_dual(cert.reduced)) {
    throw Error(ErrorKind::kNotSelfDual, "reduced code failed the self-duality check");
  }
  return cert;
}

}  // namespace sdc
