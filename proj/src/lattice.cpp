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

#include "sdc/lattice.hpp"

#include <cmath>
#include <map>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "sdc/error.hpp"

namespace sdc {

namespace {

using Real = long double;

std::int64_t idot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct Gso {
  std::vector<std::vector<Real>> mu;
  std::vector<Real> bnorm;  // |b_i*|^2
};

Gso gram_schmidt(const IntMatrix& b) {
  const std::size_t n = b.size();
  Gso g{std::vector<std::vector<Real>>(n, std::vector<Real>(n, 0)), std::vector<Real>(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Real s = static_cast<Real>(idot(b[i], b[j]));
      for (std::size_t l = 0; l < j; ++l) s -= g.mu[j][l] * g.mu[i][l] * g.bnorm[l];
      g.mu[i][j] = s / g.bnorm[j];
    }
    Real s = static_cast<Real>(idot(b[i], b[i]));
    for (std::size_t l = 0; l < i; ++l) s -= g.mu[i][l] * g.mu[i][l] * g.bnorm[l];
    g.bnorm[i] = s;
    g.mu[i][i] = 1;
    if (!(s > 1e-9L)) throw Error(ErrorKind::kNotPositiveDefinite, "basis vectors are linearly dependent");
  }
  return g;
}

using Big = boost::multiprecision::cpp_int;

Big bareiss_det(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Big>> a(n, std::vector<Big>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  Big prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[r], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return n == 0 ? Big(1) : sign * a[n - 1][n - 1];
}

IntMatrix gram_of(const IntMatrix& b) {
  IntMatrix g(b.size(), std::vector<std::int64_t>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) g[i][j] = g[j][i] = idot(b[i], b[j]);
  }
  return g;
}

// Fincke-Pohst over the GSO; visits every nonzero vector with exact norm
// <= bound once up to sign.
class ShortVectors {
 public:
  ShortVectors(const IntMatrix& basis, std::int64_t bound)
      : b_(basis), n_(basis.size()), dim_(basis.empty() ? 0 : basis[0].size()), bound_(bound), gso_(gram_schmidt(basis)) {}

  template <class Visit>
  std::uint64_t run(Visit&& visit) {
    if (n_ == 0) return 0;
    u_.assign(n_, 0);
    partial_.assign(n_ + 1, std::vector<std::int64_t>(dim_, 0));
    nodes_ = 0;
    recurse(n_ - 1, 0.0L, true, visit);
    return nodes_;
  }

 private:
  template <class Visit>
  void recurse(std::size_t i, Real rho, bool higher_zero, Visit& visit) {
    ++nodes_;
    Real c = 0;
    for (std::size_t j = i + 1; j < n_; ++j) c -= gso_.mu[j][i] * static_cast<Real>(u_[j]);
    const Real slack = static_cast<Real>(bound_) * 1e-12L + 1e-9L;
    const Real room = (static_cast<Real>(bound_) - rho + slack) / gso_.bnorm[i];
    if (room < 0) return;
    const Real r = std::sqrt(room);
    auto lo = static_cast<std::int64_t>(std::ceil(c - r));
    const auto hi = static_cast<std::int64_t>(std::floor(c + r));
    if (higher_zero) lo = std::max<std::int64_t>(lo, 0);
    const auto& above = partial_[i + 1];
    auto& here = partial_[i];
    for (std::int64_t x = lo; x <= hi; ++x) {
      u_[i] = x;
      const Real d = static_cast<Real>(x) - c;
      const Real rho_i = rho + d * d * gso_.bnorm[i];
      for (std::size_t t = 0; t < dim_; ++t) here[t] = above[t] + x * b_[i][t];
      const bool zero_so_far = higher_zero && x == 0;
      if (i == 0) {
        if (zero_so_far) continue;
        std::int64_t norm = 0;
        for (auto v : here) norm += v * v;
        if (norm <= bound_) visit(norm);
      } else {
        recurse(i - 1, rho_i, zero_so_far, visit);
      }
    }
    u_[i] = 0;
  }

  const IntMatrix& b_;
  std::size_t n_;
  std::size_t dim_;
  std::int64_t bound_;
  Gso gso_;
  std::vector<std::int64_t> u_;
  std::vector<std::vector<std::int64_t>> partial_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Fraction make_fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return g > 1 ? Fraction{num / g, den / g} : Fraction{num, den};
}

std::string format_fraction(const Fraction& f) {
  if (f.den == 1) return std::to_string(f.num);
  return std::to_string(f.num) + "/" + std::to_string(f.den);
}

Lattice construction_a(const Code& code) {
  const Ring& ring = code.ring();
  if (ring.degree() != 1) throw Error(ErrorKind::kInvalidArgument, "Construction A needs a code over Z_m");
  if (!is_self_dual(code)) throw Error(ErrorKind::kNotSelfDual, "Construction A needs a self-dual code");
  const auto& sf = code.standard_form();
  const std::size_t n = code.length();
  const auto m = static_cast<std::int64_t>(ring.modulus());
  Lattice lat;
  lat.scale = m;
  std::vector<bool> pivot(n, false);
  for (std::size_t i = 0; i < sf.gen_original.rows(); ++i) {
    std::vector<std::int64_t> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = sf.gen_original(i, j).c[0];
    lat.basis.push_back(std::move(row));
    pivot[sf.perm[i]] = true;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (pivot[j]) continue;
    std::vector<std::int64_t> row(n, 0);
    row[j] = m;
    lat.basis.push_back(std::move(row));
  }
  return lat;
}

bool is_unimodular(const Lattice& lattice) {
  const std::size_t n = lattice.basis.size();
  if (n == 0 || lattice.basis[0].size() != n) return false;
  Big target = 1;
  for (std::size_t i = 0; i < n; ++i) target *= lattice.scale;
  return bareiss_det(gram_of(lattice.basis)) == target;
}

void lll_reduce(IntMatrix& b) {
  const std::size_t n = b.size();
  if (n < 2) return;
  constexpr Real delta = 0.99L;
  Gso g = gram_schmidt(b);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      const auto q = static_cast<std::int64_t>(std::llround(g.mu[k][j]));
      if (q == 0) continue;
      for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[j][t];
      for (std::size_t l = 0; l <= j; ++l) g.mu[k][l] -= static_cast<Real>(q) * g.mu[j][l];
    }
    if (g.bnorm[k] >= (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.bnorm[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      g = gram_schmidt(b);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

LatticeReport lattice_report(const Lattice& lattice, unsigned theta_depth) {
  LatticeReport rep;
  rep.dimension = lattice.basis.size();
  rep.scale = lattice.scale;
  rep.gram_scaled = gram_of(lattice.basis);
  if (rep.dimension == 0) throw Error(ErrorKind::kNotPositiveDefinite, "empty basis");
  IntMatrix reduced = lattice.basis;
  gram_schmidt(reduced);  // rejects dependent input before any work
  rep.unimodular = is_unimodular(lattice);
  lll_reduce(reduced);

  std::int64_t bound = INT64_MAX;
  for (const auto& row : reduced) bound = std::min(bound, idot(row, row));
  std::map<std::int64_t, std::uint64_t> hist;
  auto collect = [&](std::int64_t b) {
    hist.clear();
    ShortVectors sv(reduced, b);
    rep.nodes += sv.run([&](std::int64_t norm) { ++hist[norm]; });
  };
  collect(bound);
  const std::int64_t mu = hist.begin()->first;
  const std::int64_t top = mu + static_cast<std::int64_t>(std::max(theta_depth, 1u) - 1) * lattice.scale;
  if (top > bound) collect(top);
  rep.min_norm = make_fraction(mu, lattice.scale);
  rep.kissing = 2 * hist[mu];
  for (unsigned i = 0; i < std::max(theta_depth, 1u); ++i) {
    const std::int64_t norm = mu + static_cast<std::int64_t>(i) * lattice.scale;
    const auto it = hist.find(norm);
    rep.theta_prefix.emplace_back(make_fraction(norm, lattice.scale), it == hist.end() ? 0 : 2 * it->second);
  }
  return rep;
}

std::uint64_t min_euclidean_weight(const Code& code, const EnumOptions& options) {
  return min_weight(code, WeightKind::kEuclidean, options).weight;
}

}  // namespace sdc
