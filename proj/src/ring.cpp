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

#include "sdc/ring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "poly.hpp"
#include "sdc/error.hpp"

namespace sdc {

namespace {

// Above this field size the modulus is lifted coefficientwise only; the
// x^(p^r - 1) - 1 factorization gets too large to be worth it.
constexpr std::uint64_t kMaxPrimitiveLiftField = 4096;

std::uint64_t checked_pow(std::uint64_t base, unsigned e, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (out > limit / base) return limit + 1;
    out *= base;
  }
  return out;
}

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::uint64_t parse_u64(const std::string& tok) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorKind::kParse, "expected a nonnegative integer, got '" + tok + "'");
  }
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    throw Error(ErrorKind::kParse, "integer out of range: '" + tok + "'");
  }
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kNotAUnit: return "NotAUnit";
    case ErrorKind::kNoSolution: return "NoSolution";
    case ErrorKind::kUseOtherConstruction: return "UseOtherConstruction";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kWitnessInvalid: return "WitnessInvalid";
    case ErrorKind::kNotSelfDual: return "NotSelfDual";
    case ErrorKind::kExhausted: return "Exhausted";
    case ErrorKind::kFreeRankTooSmall: return "FreeRankTooSmall";
    case ErrorKind::kLengthTooSmall: return "LengthTooSmall";
    case ErrorKind::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::kFixtureValidationFailed: return "FixtureValidationFailed";
    case ErrorKind::kSizeLimit: return "SizeLimit";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

RingSpec parse_ring_spec(std::string_view text) {
  const auto tok = split_ws(text);
  if (tok.empty()) throw Error(ErrorKind::kParse, "empty ring spec");
  RingSpec spec;
  std::size_t coeff_start = 0;
  if (tok[0] == "gf") {
    if (tok.size() < 2) throw Error(ErrorKind::kParse, "gf needs <p>");
    spec.p = parse_u64(tok[1]);
    spec.m = 1;
    spec.r = tok.size() >= 3 ? static_cast<unsigned>(parse_u64(tok[2])) : 1;
    coeff_start = 3;
  } else if (tok[0] == "z") {
    if (tok.size() != 3) throw Error(ErrorKind::kParse, "z needs <p> <m>");
    spec.p = parse_u64(tok[1]);
    spec.m = static_cast<unsigned>(parse_u64(tok[2]));
    spec.r = 1;
    coeff_start = 3;
  } else if (tok[0] == "gr") {
    if (tok.size() < 4) throw Error(ErrorKind::kParse, "gr needs <p> <m> <r>");
    spec.p = parse_u64(tok[1]);
    spec.m = static_cast<unsigned>(parse_u64(tok[2]));
    spec.r = static_cast<unsigned>(parse_u64(tok[3]));
    coeff_start = 4;
  } else {
    throw Error(ErrorKind::kParse, "unknown ring kind '" + tok[0] + "'");
  }
  if (spec.m == 0 || spec.r == 0) throw Error(ErrorKind::kParse, "m and r must be >= 1");
  std::vector<std::uint64_t> coeffs;
  for (std::size_t i = coeff_start; i < tok.size(); ++i) coeffs.push_back(parse_u64(tok[i]));
  if (!coeffs.empty()) {
    if (spec.r == 1) throw Error(ErrorKind::kParse, "modulus polynomial given for r = 1");
    if (coeffs.size() == spec.r) coeffs.push_back(1);
    if (coeffs.size() != spec.r + 1 || coeffs.back() != 1) {
      throw Error(ErrorKind::kParse, "modulus polynomial must be monic of degree r");
    }
    spec.modulus_poly = std::move(coeffs);
  }
  spec.kind = spec.m == 1 ? RingKind::kField : (spec.r == 1 ? RingKind::kZpm : RingKind::kGaloisRing);
  return spec;
}

std::string format_ring_spec(const RingSpec& spec) {
  std::ostringstream out;
  switch (spec.kind) {
    case RingKind::kField:
      out << "gf " << spec.p;
      if (spec.r > 1) out << ' ' << spec.r;
      break;
    case RingKind::kZpm:
      out << "z " << spec.p << ' ' << spec.m;
      break;
    case RingKind::kGaloisRing:
      out << "gr " << spec.p << ' ' << spec.m << ' ' << spec.r;
      break;
  }
  for (auto c : spec.modulus_poly) out << ' ' << c;
  return out.str();
}

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned r) {
  if (r == 1) return {0, 1};
  const std::uint64_t count = checked_pow(p, r, std::uint64_t{1} << 40);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    poly::Poly f(r + 1, 0);
    std::uint64_t v = idx;
    for (unsigned i = 0; i < r; ++i) {
      f[i] = v % p;
      v /= p;
    }
    f[r] = 1;
    if (f[0] == 0) continue;
    if (poly::is_irreducible(f, p)) return f;
  }
  throw Error(ErrorKind::kInvalidArgument, "no irreducible polynomial found");
}

std::vector<std::uint64_t> hensel_lift_modulus(std::uint64_t p, unsigned m,
                                               std::span<const std::uint64_t> f_in) {
  poly::Poly f(f_in.begin(), f_in.end());
  const unsigned r = static_cast<unsigned>(f.size() - 1);
  const std::uint64_t q = checked_pow(p, r, kMaxPrimitiveLiftField);
  if (m == 1 || q > kMaxPrimitiveLiftField) return f;

  const std::uint64_t pm = checked_pow(p, m, kMaxModulus);
  poly::Poly big(q, 0);  // x^(q-1) - 1 over Z_{p^m}
  big[0] = pm - 1;
  big[q - 1] = 1;
  for (auto& c : f) c %= p;
  auto [g, rem] = poly::divmod_monic(big, f, p);
  if (!rem.empty()) throw Error(ErrorKind::kInvalidArgument, "modulus does not divide x^(p^r-1) - 1");
  const auto bez = poly::ext_gcd(f, g, p);  // s f + t g = 1
  std::uint64_t pk = p;
  for (unsigned k = 1; k < m; ++k) {
    const std::uint64_t next = pk * p;
    poly::Poly e = poly::sub(big, poly::mul(f, g, next), next);
    for (auto& c : e) c = (c / pk) % p;
    poly::trim(e);
    poly::Poly df = poly::mod_monic(poly::mul(bez.t, e, p), f, p);
    poly::Poly dg = poly::mod_monic(poly::mul(bez.s, e, p), g, p);
    f = poly::add(f, poly::scale(df, pk, next), next);
    g = poly::add(g, poly::scale(dg, pk, next), next);
    pk = next;
  }
  f.resize(r + 1, 0);
  return f;
}

Ring::Ring(RingSpec spec) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p)) {
    throw Error(ErrorKind::kInvalidArgument, std::to_string(spec_.p) + " is not prime");
  }
  if (spec_.m == 0 || spec_.r == 0) throw Error(ErrorKind::kInvalidArgument, "m and r must be >= 1");
  if (spec_.r > kMaxDegree) {
    throw Error(ErrorKind::kSizeLimit, "extension degree above " + std::to_string(kMaxDegree));
  }
  modulus_ = checked_pow(spec_.p, spec_.m, kMaxModulus);
  if (modulus_ > kMaxModulus) throw Error(ErrorKind::kSizeLimit, "p^m exceeds 2^31");
  spec_.kind = spec_.m == 1 ? RingKind::kField : (spec_.r == 1 ? RingKind::kZpm : RingKind::kGaloisRing);

  if (spec_.r == 1) {
    if (!spec_.modulus_poly.empty()) {
      throw Error(ErrorKind::kInvalidArgument, "modulus polynomial given for r = 1");
    }
  } else if (spec_.modulus_poly.empty()) {
    spec_.modulus_poly = hensel_lift_modulus(spec_.p, spec_.m, smallest_irreducible(spec_.p, spec_.r));
  } else {
    auto& f = spec_.modulus_poly;
    if (f.size() != spec_.r + 1 || f.back() != 1) {
      throw Error(ErrorKind::kInvalidArgument, "modulus polynomial must be monic of degree r");
    }
    for (auto c : f) {
      if (c >= modulus_) throw Error(ErrorKind::kInvalidArgument, "modulus coefficient out of range");
    }
    poly::Poly reduced(f.begin(), f.end());
    for (auto& c : reduced) c %= spec_.p;
    if (!poly::is_irreducible(reduced, spec_.p)) {
      throw Error(ErrorKind::kInvalidArgument, "modulus polynomial is not irreducible mod p");
    }
  }
  const std::uint64_t sat = ~std::uint64_t{0};
  size_ = 1;
  for (unsigned i = 0; i < spec_.r; ++i) {
    size_ = size_ > sat / modulus_ ? sat : size_ * modulus_;
  }
}

Elem Ring::from_int(std::int64_t v) const {
  Elem e;
  const auto n = static_cast<std::int64_t>(modulus_);
  std::int64_t r = v % n;
  if (r < 0) r += n;
  e.c[0] = static_cast<std::uint32_t>(r);
  return e;
}

Elem Ring::from_coeffs(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() > spec_.r) throw Error(ErrorKind::kInvalidArgument, "too many coefficients");
  Elem e;
  const auto n = static_cast<std::int64_t>(modulus_);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t r = coeffs[i] % n;
    if (r < 0) r += n;
    e.c[i] = static_cast<std::uint32_t>(r);
  }
  return e;
}

Elem Ring::add(const Elem& a, const Elem& b) const {
  Elem out;
  for (unsigned i = 0; i < spec_.r; ++i) {
    std::uint64_t s = std::uint64_t{a.c[i]} + b.c[i];
    out.c[i] = static_cast<std::uint32_t>(s >= modulus_ ? s - modulus_ : s);
  }
  return out;
}

Elem Ring::sub(const Elem& a, const Elem& b) const {
  Elem out;
  for (unsigned i = 0; i < spec_.r; ++i) {
    std::uint64_t s = std::uint64_t{a.c[i]} + modulus_ - b.c[i];
    out.c[i] = static_cast<std::uint32_t>(s >= modulus_ ? s - modulus_ : s);
  }
  return out;
}

Elem Ring::neg(const Elem& a) const { return sub(Elem{}, a); }

Elem Ring::mul(const Elem& a, const Elem& b) const {
  Elem out;
  const unsigned r = spec_.r;
  if (r == 1) {
    out.c[0] = static_cast<std::uint32_t>(std::uint64_t{a.c[0]} * b.c[0] % modulus_);
    return out;
  }
  std::array<std::uint64_t, 2 * kMaxDegree> t{};
  for (unsigned i = 0; i < r; ++i) {
    if (a.c[i] == 0) continue;
    for (unsigned j = 0; j < r; ++j) {
      t[i + j] = (t[i + j] + std::uint64_t{a.c[i]} * b.c[j]) % modulus_;
    }
  }
  const auto& f = spec_.modulus_poly;
  for (unsigned d = 2 * r - 2; d >= r; --d) {
    const std::uint64_t c = t[d];
    if (c != 0) {
      for (unsigned j = 0; j < r; ++j) {
        t[d - r + j] = (t[d - r + j] + modulus_ - c * f[j] % modulus_) % modulus_;
      }
      t[d] = 0;
    }
  }
  for (unsigned i = 0; i < r; ++i) out.c[i] = static_cast<std::uint32_t>(t[i]);
  return out;
}

Elem Ring::pow(Elem a, std::uint64_t e) const {
  Elem out = one();
  while (e > 0) {
    if (e & 1) out = mul(out, a);
    a = mul(a, a);
    e >>= 1;
  }
  return out;
}

bool Ring::is_unit(const Elem& a) const {
  for (unsigned i = 0; i < spec_.r; ++i) {
    if (a.c[i] % spec_.p != 0) return true;
  }
  return false;
}

Elem Ring::inv(const Elem& a) const {
  if (!is_unit(a)) throw Error(ErrorKind::kNotAUnit, format(a) + " is not a unit");
  if (spec_.r == 1) {
    Elem out;
    out.c[0] = static_cast<std::uint32_t>(poly::inv_mod(a.c[0], modulus_));
    return out;
  }
  // Inverse of the residue via Fermat, then Newton iteration x <- x(2 - ax)
  // doubles the p-adic precision each round.
  const std::uint64_t q = checked_pow(spec_.p, spec_.r, ~std::uint64_t{0} >> 1);
  Elem x = pow(a, q - 2);
  const Elem two = from_int(2);
  for (unsigned prec = 1; prec < spec_.m; prec *= 2) {
    x = mul(x, sub(two, mul(a, x)));
  }
  if (mul(a, x) != one()) throw Error(ErrorKind::kNotAUnit, "inverse lift failed");
  return x;
}

unsigned Ring::valuation(const Elem& a) const {
  unsigned best = spec_.m;
  for (unsigned i = 0; i < spec_.r; ++i) {
    std::uint64_t c = a.c[i];
    if (c == 0) continue;
    unsigned v = 0;
    while (c % spec_.p == 0) {
      c /= spec_.p;
      ++v;
    }
    best = std::min(best, v);
  }
  return best;
}

Elem Ring::gamma_pow(unsigned v) const {
  if (v >= spec_.m) return Elem{};
  return from_int(static_cast<std::int64_t>(checked_pow(spec_.p, v, modulus_)));
}

Elem Ring::div_gamma_pow(const Elem& a, unsigned v) const {
  if (v == 0) return a;
  if (valuation(a) < v) throw Error(ErrorKind::kInvalidArgument, "element not divisible by gamma^v");
  const std::uint64_t pv = checked_pow(spec_.p, v, modulus_);
  Elem out;
  for (unsigned i = 0; i < spec_.r; ++i) out.c[i] = static_cast<std::uint32_t>(a.c[i] / pv);
  return out;
}

Ring Ring::residue_field() const {
  RingSpec f;
  f.kind = RingKind::kField;
  f.p = spec_.p;
  f.m = 1;
  f.r = spec_.r;
  if (spec_.r > 1) {
    f.modulus_poly = spec_.modulus_poly;
    for (auto& c : f.modulus_poly) c %= spec_.p;
  }
  return Ring(std::move(f));
}

Elem Ring::reduce_to_residue(const Elem& a) const {
  Elem out;
  for (unsigned i = 0; i < spec_.r; ++i) out.c[i] = static_cast<std::uint32_t>(a.c[i] % spec_.p);
  return out;
}

Elem Ring::lift_from_residue(const Elem& a) const { return a; }

std::uint64_t Ring::index(const Elem& a) const {
  std::uint64_t idx = 0;
  for (unsigned i = spec_.r; i-- > 0;) idx = idx * modulus_ + a.c[i];
  return idx;
}

Elem Ring::from_index(std::uint64_t idx) const {
  Elem out;
  for (unsigned i = 0; i < spec_.r; ++i) {
    out.c[i] = static_cast<std::uint32_t>(idx % modulus_);
    idx /= modulus_;
  }
  return out;
}

std::vector<Elem> Ring::enumerate_all() const {
  if (size_ > (std::uint64_t{1} << 32)) throw Error(ErrorKind::kSizeLimit, "ring too large to enumerate");
  std::vector<Elem> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(from_index(i));
  return out;
}

std::string Ring::format(const Elem& a) const {
  if (spec_.r == 1) return std::to_string(a.c[0]);
  std::string s = "[";
  for (unsigned i = 0; i < spec_.r; ++i) {
    if (i) s += ' ';
    s += std::to_string(a.c[i]);
  }
  return s + "]";
}

ChainRingSpec chain_ring(const Ring& ring) {
  return ChainRingSpec{ring.spec(), ring.gamma_pow(1), ring.nilpotency()};
}

AlphaBeta solve_alpha_beta_field(const Ring& field) {
  if (!field.is_field()) throw Error(ErrorKind::kInvalidArgument, "solve_alpha_beta_field needs a field");
  const std::uint64_t q = field.size();
  if (q % 4 != 3) {
    throw Error(ErrorKind::kNoSolution,
                "q = " + std::to_string(q) + " is not 3 mod 4; use solve_c_field (c^2 = -1) instead");
  }
  // Smallest beta per square value, then scan alpha in canonical order.
  std::unordered_map<std::uint64_t, std::uint64_t> root_of;
  for (std::uint64_t b = 1; b < q; ++b) {
    const Elem be = field.from_index(b);
    root_of.emplace(field.index(field.mul(be, be)), b);
  }
  const Elem minus_one = field.neg(field.one());
  for (std::uint64_t a = 1; a < q; ++a) {
    const Elem al = field.from_index(a);
    const Elem target = field.sub(minus_one, field.mul(al, al));
    auto it = root_of.find(field.index(target));
    if (it != root_of.end()) return {al, field.from_index(it->second)};
  }
  throw Error(ErrorKind::kNoSolution, "no alpha, beta found");
}

Elem solve_c_field(const Ring& field) {
  if (!field.is_field()) throw Error(ErrorKind::kInvalidArgument, "solve_c_field needs a field");
  const Elem minus_one = field.neg(field.one());
  for (std::uint64_t c = 1; c < field.size(); ++c) {
    const Elem e = field.from_index(c);
    if (field.mul(e, e) == minus_one) return e;
  }
  throw Error(ErrorKind::kNoSolution, "-1 is not a square");
}

std::pair<std::uint64_t, std::uint64_t> hensel_lift_alpha_beta(std::uint64_t p, unsigned m) {
  if (p % 4 != 3 || !is_prime(p)) {
    throw Error(ErrorKind::kInvalidArgument, "hensel_lift_alpha_beta needs a prime p = 3 mod 4");
  }
  if (m == 0) throw Error(ErrorKind::kInvalidArgument, "m must be >= 1");
  RingSpec fs;
  fs.p = p;
  const Ring field(fs);
  const AlphaBeta base = solve_alpha_beta_field(field);
  const std::uint64_t alpha = field.to_int(base.alpha);
  const std::uint64_t beta = field.to_int(base.beta);
  const std::uint64_t pm = checked_pow(p, m, kMaxModulus);
  if (pm > kMaxModulus) throw Error(ErrorKind::kSizeLimit, "p^m exceeds 2^31");

  const std::uint64_t inv_two_alpha = poly::inv_mod(2 * alpha % p, p);
  std::uint64_t x = alpha;
  std::uint64_t pi = p;
  for (unsigned i = 1; i < m; ++i) {
    // x^2 + beta^2 + 1 is divisible by p^i; the quotient fixes the next digit.
    const std::uint64_t value = x * x + beta * beta + 1;
    const std::uint64_t ri = (value / pi) % p;
    const std::uint64_t digit = (p - ri * inv_two_alpha % p) % p;
    x += digit * pi;
    pi *= p;
  }
  return {x % pm, beta % pm};
}

AlphaBeta solve_alpha_beta(const Ring& ring) {
  const std::uint64_t p = ring.characteristic_prime();
  if (p == 2) throw Error(ErrorKind::kUseOtherConstruction, "p = 2 rings are not supported");
  if (ring.is_field()) return solve_alpha_beta_field(ring);
  if (p % 4 == 1) {
    throw Error(ErrorKind::kUseOtherConstruction,
                "p = 1 mod 4: -1 is a square, use the single-vector building-up variant");
  }
  const auto [x, y] = hensel_lift_alpha_beta(p, ring.nilpotency());
  return {ring.from_int(static_cast<std::int64_t>(x)), ring.from_int(static_cast<std::int64_t>(y))};
}

}  // namespace sdc
