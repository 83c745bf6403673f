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

#include "poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdc::poly {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

}  // namespace

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly add(const Poly& a, const Poly& b, std::uint64_t n) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    out[i] = (x + y) % n;
  }
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t n) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    out[i] = (x + n - y) % n;
  }
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t n) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + mulmod(a[i], b[j], n)) % n;
    }
  }
  trim(out);
  return out;
}

Poly scale(const Poly& a, std::uint64_t s, std::uint64_t n) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mulmod(a[i], s, n);
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod_monic(Poly a, const Poly& f, std::uint64_t n) {
  trim(a);
  const std::size_t df = f.size() - 1;
  if (a.size() < f.size()) return {{}, a};
  Poly q(a.size() - df, 0);
  for (std::size_t d = a.size() - 1; d + 1 > df; --d) {
    std::uint64_t c = a[d] % n;
    if (c != 0) {
      q[d - df] = c;
      for (std::size_t j = 0; j <= df; ++j) {
        a[d - df + j] = (a[d - df + j] + n - mulmod(c, f[j], n)) % n;
      }
    }
    if (d == df) break;
  }
  a.resize(df);
  trim(a);
  trim(q);
  return {q, a};
}

Poly mod_monic(Poly a, const Poly& f, std::uint64_t n) { return divmod_monic(std::move(a), f, n).second; }

Poly powmod_x(std::uint64_t e, const Poly& f, std::uint64_t n) {
  Poly result{1 % n};
  Poly base = mod_monic(Poly{0, 1}, f, n);
  trim(result);
  while (e > 0) {
    if (e & 1) result = mod_monic(mul(result, base, n), f, n);
    base = mod_monic(mul(base, base, n), f, n);
    e >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t n) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("not invertible");
  if (t < 0) t += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(t);
}

Poly make_monic(const Poly& a, std::uint64_t p) {
  Poly b = a;
  trim(b);
  if (b.empty()) return b;
  return scale(b, inv_mod(b.back(), p), p);
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly bm = make_monic(b, p);
    Poly r = mod_monic(a, bm, p);
    a = std::move(bm);
    b = std::move(r);
  }
  return make_monic(a, p);
}

Bezout ext_gcd(const Poly& a0, const Poly& b0, std::uint64_t p) {
  Poly r0 = a0, r1 = b0;
  trim(r0);
  trim(r1);
  Poly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    const std::uint64_t lead_inv = inv_mod(r1.back(), p);
    Poly r1m = scale(r1, lead_inv, p);
    auto [q, rem] = divmod_monic(r0, r1m, p);
    q = scale(q, lead_inv, p);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::uint64_t li = inv_mod(r0.back(), p);
  return {scale(r0, li, p), scale(s0, li, p), scale(t0, li, p)};
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t r = f.size() - 1;
  if (r == 0) return false;
  if (r == 1) return true;
  // Rabin: gcd(x^(p^i) - x, f) == 1 for i <= r/2 and f | x^(p^r) - x.
  Poly xp = mod_monic(Poly{0, 1}, f, p);
  Poly x = xp;
  for (std::size_t i = 1; i <= r; ++i) {
    // xp <- xp^p mod f
    Poly acc{1};
    Poly base = xp;
    std::uint64_t e = p;
    while (e > 0) {
      if (e & 1) acc = mod_monic(mul(acc, base, p), f, p);
      base = mod_monic(mul(base, base, p), f, p);
      e >>= 1;
    }
    xp = acc;
    if (i <= r / 2) {
      Poly g = gcd(f, sub(xp, x, p), p);
      if (g.size() > 1) return false;
    }
  }
  return sub(xp, x, p).empty();
}

}  // namespace sdc::poly
