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

#include "sdc/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "sdc/error.hpp"

namespace sdc {

namespace {

// Above this task size the message space is split into more tasks.
constexpr std::uint64_t kInnerTarget = std::uint64_t{1} << 22;
constexpr std::uint64_t kInnerFloor = std::uint64_t{1} << 10;

// Codes are enumerated as Z_N-modules: every standard-form row and its
// x^j multiples become "Z-rows" over coefficient vectors of width n*r, each
// with the additive order (radix) it has in C.
struct Plan {
  std::uint32_t modulus = 2;
  std::size_t length = 0;
  unsigned group = 1;
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::uint32_t> radix;
  std::vector<std::uint32_t> offset;
  bool projective = false;

  std::size_t width() const { return length * group; }
  bool fast() const { return group == 1 && modulus <= 127 && width() <= 64; }
};

struct Task {
  std::vector<std::uint32_t> digits;  // for rows [0, inner_begin)
  std::size_t inner_begin = 0;
  std::uint64_t count = 1;
};

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t out = 1;
  while (e--) out *= b;
  return out;
}

Plan plan_from_rows(const Ring& ring, const Matrix& rows, std::span<const unsigned> levels, bool projective) {
  Plan plan;
  plan.modulus = static_cast<std::uint32_t>(ring.modulus());
  plan.length = rows.cols();
  plan.group = ring.degree();
  plan.projective = projective;
  const unsigned r = ring.degree();
  Elem x{};
  if (r > 1) x.c[1] = 1;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    Vec row(rows.row(i).begin(), rows.row(i).end());
    const auto radix = static_cast<std::uint32_t>(ipow(ring.characteristic_prime(), ring.nilpotency() - levels[i]));
    for (unsigned j = 0; j < r; ++j) {
      std::vector<std::uint32_t> flat(plan.width());
      for (std::size_t c = 0; c < row.size(); ++c) {
        for (unsigned k = 0; k < r; ++k) flat[c * r + k] = row[c].c[k];
      }
      plan.rows.push_back(std::move(flat));
      plan.radix.push_back(radix);
      if (j + 1 < r) {
        for (auto& e : row) e = ring.mul(e, x);
      }
    }
  }
  return plan;
}

Plan plan_for(const Code& code, bool projective) {
  const auto& sf = code.standard_form();
  return plan_from_rows(code.ring(), sf.gen_original, sf.row_level, projective);
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  jobs = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(n, 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  std::exception_ptr failure;
  std::mutex failure_mu;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < n; i = next++) fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

// Splits the free digits [first, K) into an outer prefix enumerated as
// separate tasks and an inner suffix traversed in Gray order.
void split_free(const Plan& plan, std::vector<std::uint32_t> fixed, std::size_t first, std::uint64_t inner_target,
                std::vector<Task>& out) {
  const std::size_t k = plan.radix.size();
  std::size_t inner_begin = first;
  std::uint64_t inner = 1;
  for (std::size_t i = first; i < k; ++i) inner *= plan.radix[i];
  while (inner > inner_target && inner_begin < k) {
    inner /= plan.radix[inner_begin];
    ++inner_begin;
  }
  fixed.resize(inner_begin, 0);
  // Outer digits counted lexicographically, first digit most significant.
  for (;;) {
    out.push_back(Task{fixed, inner_begin, inner});
    std::size_t i = inner_begin;
    for (; i > first; --i) {
      if (++fixed[i - 1] < plan.radix[i - 1]) break;
      fixed[i - 1] = 0;
    }
    if (i == first) return;
  }
}

std::vector<Task> make_tasks(const Plan& plan, unsigned jobs, std::uint64_t total) {
  std::uint64_t target = kInnerTarget;
  if (jobs > 1) target = std::clamp<std::uint64_t>(total / (8ull * jobs), kInnerFloor, kInnerTarget);
  std::vector<Task> tasks;
  const std::size_t k = plan.radix.size();
  if (!plan.projective) {
    split_free(plan, {}, 0, target, tasks);
    return tasks;
  }
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::vector<std::uint32_t> fixed(lead + 1, 0);
    fixed[lead] = 1;
    split_free(plan, std::move(fixed), lead + 1, target, tasks);
  }
  return tasks;
}

template <std::size_t Lanes>
inline unsigned nonzero_lanes(const std::uint8_t* c) {
  unsigned s = 0;
  for (std::size_t i = 0; i < Lanes; ++i) s += c[i] != 0;
  return s;
}

template <std::size_t Lanes>
inline void add_row_u8(std::uint8_t* __restrict c, const std::uint8_t* __restrict r, std::uint8_t n) {
  for (std::size_t i = 0; i < Lanes; ++i) {
    const std::uint8_t s = static_cast<std::uint8_t>(c[i] + r[i]);
    c[i] = std::min<std::uint8_t>(s, static_cast<std::uint8_t>(s - n));
  }
}

std::vector<std::uint64_t> task_base(const Plan& plan, const Task& task) {
  std::vector<std::uint64_t> base(plan.width(), 0);
  if (!plan.offset.empty()) std::copy(plan.offset.begin(), plan.offset.end(), base.begin());
  for (std::size_t i = 0; i < task.digits.size(); ++i) {
    if (task.digits[i] == 0) continue;
    for (std::size_t c = 0; c < base.size(); ++c) {
      base[c] = (base[c] + std::uint64_t{task.digits[i]} * plan.rows[i][c]) % plan.modulus;
    }
  }
  return base;
}

// Visitor: bool operator()(const T* codeword, unsigned hamming_weight);
// returning false stops the task.
template <std::size_t Lanes, class Visitor>
bool run_fast(const Plan& plan, const Task& task, Visitor& visit) {
  alignas(64) std::uint8_t cur[Lanes] = {};
  const auto base = task_base(plan, task);
  for (std::size_t c = 0; c < base.size(); ++c) cur[c] = static_cast<std::uint8_t>(base[c]);
  const std::size_t k = plan.radix.size() - task.inner_begin;
  std::vector<std::uint8_t> rows(k * Lanes, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& src = plan.rows[task.inner_begin + i];
    for (std::size_t c = 0; c < src.size(); ++c) rows[i * Lanes + c] = static_cast<std::uint8_t>(src[c]);
  }
  std::vector<std::uint32_t> counter(k + 1, 0);
  const std::uint32_t* radix = plan.radix.data() + task.inner_begin;
  const auto n = static_cast<std::uint8_t>(plan.modulus);
  if (!visit(cur, nonzero_lanes<Lanes>(cur))) return false;
  for (;;) {
    std::size_t i = 0;
    while (i < k && ++counter[i] == radix[i]) counter[i++] = 0;
    if (i == k) return true;
    add_row_u8<Lanes>(cur, rows.data() + i * Lanes, n);
    if (!visit(cur, nonzero_lanes<Lanes>(cur))) return false;
  }
}

template <class Visitor>
bool run_generic(const Plan& plan, const Task& task, Visitor& visit) {
  const std::size_t width = plan.width();
  const unsigned group = plan.group;
  const auto base = task_base(plan, task);
  std::vector<std::uint32_t> cur(base.begin(), base.end());
  const std::size_t k = plan.radix.size() - task.inner_begin;
  std::vector<std::uint32_t> counter(k + 1, 0);
  const std::uint32_t* radix = plan.radix.data() + task.inner_begin;
  const std::uint32_t n = plan.modulus;
  auto weight = [&] {
    unsigned w = 0;
    for (std::size_t c = 0; c < width; c += group) {
      bool nz = false;
      for (unsigned j = 0; j < group; ++j) nz |= cur[c + j] != 0;
      w += nz;
    }
    return w;
  };
  if (!visit(cur.data(), weight())) return false;
  for (;;) {
    std::size_t i = 0;
    while (i < k && ++counter[i] == radix[i]) counter[i++] = 0;
    if (i == k) return true;
    const auto& row = plan.rows[task.inner_begin + i];
    for (std::size_t c = 0; c < width; ++c) {
      const std::uint32_t s = cur[c] + row[c];
      cur[c] = s >= n ? s - n : s;
    }
    if (!visit(cur.data(), weight())) return false;
  }
}

template <class Visitor>
bool run_task(const Plan& plan, const Task& task, Visitor& visit) {
  if (plan.fast()) {
    if (plan.width() <= 16) return run_fast<16>(plan, task, visit);
    if (plan.width() <= 32) return run_fast<32>(plan, task, visit);
    return run_fast<64>(plan, task, visit);
  }
  return run_generic(plan, task, visit);
}

// Runs make_visitor(task_index) over every task; visitors are collected in
// task order so results do not depend on the worker count.
template <class MakeVisitor>
auto run_plan(const Plan& plan, const EnumOptions& options, std::uint64_t total, MakeVisitor&& make_visitor) {
  const unsigned jobs = resolve_jobs(options.jobs);
  const auto tasks = make_tasks(plan, jobs, total);
  using V = decltype(make_visitor());
  std::vector<V> visitors(tasks.size(), make_visitor());
  std::atomic<std::uint64_t> done{0};
  std::mutex progress_mu;
  parallel_for(tasks.size(), jobs, [&](std::size_t t) {
    run_task(plan, tasks[t], visitors[t]);
    if (options.progress) {
      const std::uint64_t d = done += tasks[t].count;
      std::lock_guard lock(progress_mu);
      options.progress(d, total);
    }
  });
  return visitors;
}

std::uint64_t plan_total(const Plan& plan) {
  std::uint64_t t = 1;
  for (auto r : plan.radix) t *= r;
  if (plan.projective) t = (t - 1) / (plan.modulus - 1);
  return t;
}

Vec unflatten(const Ring& ring, const auto* cw, std::size_t length) {
  const unsigned r = ring.degree();
  Vec v(length);
  for (std::size_t i = 0; i < length; ++i) {
    for (unsigned j = 0; j < r; ++j) v[i].c[j] = static_cast<std::uint32_t>(cw[i * r + j]);
  }
  return v;
}

void check_budget(const Code& code, std::uint64_t budget) {
  const std::uint64_t card = code.cardinality();
  if (card > budget) throw BudgetExceeded(card, budget);
}

std::size_t euclidean_max(const Ring& ring, std::size_t n) {
  const std::uint64_t half = ring.modulus() / 2;
  return n * half * half;
}

struct HammingHist {
  std::vector<std::uint64_t> counts;
  template <class T>
  bool operator()(const T*, unsigned w) {
    ++counts[w];
    return true;
  }
};

struct EuclideanHist {
  std::vector<std::uint64_t> counts;
  const std::vector<std::uint64_t>* table = nullptr;
  std::size_t length = 0;
  template <class T>
  bool operator()(const T* cw, unsigned) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < length; ++i) w += (*table)[cw[i]];
    ++counts[w];
    return true;
  }
};

struct MinTracker {
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::uint32_t> witness;
  std::size_t width = 0;
  const std::vector<std::uint64_t>* table = nullptr;  // Euclidean when set
  template <class T>
  bool operator()(const T* cw, unsigned w) {
    std::uint64_t weight = w;
    if (table) {
      weight = 0;
      for (std::size_t i = 0; i < width; ++i) weight += (*table)[cw[i]];
    }
    if (weight != 0 && weight < best) {
      best = weight;
      witness.assign(cw, cw + width);
    }
    return true;
  }
};

struct BelowBound {
  unsigned bound = 0;
  std::size_t width = 0;
  std::optional<std::vector<std::uint32_t>> found;
  template <class T>
  bool operator()(const T* cw, unsigned w) {
    if (w != 0 && w < bound) {
      found.emplace(cw, cw + width);
      return false;
    }
    return true;
  }
};

struct LowCollector {
  unsigned max_weight = 0;
  std::size_t width = 0;
  std::vector<std::uint64_t> counts;
  std::vector<std::vector<std::uint32_t>> words;
  template <class T>
  bool operator()(const T* cw, unsigned w) {
    ++counts[w];
    if (w != 0 && w <= max_weight) words.emplace_back(cw, cw + width);
    return true;
  }
};

std::vector<std::uint64_t> euclid_table(const Ring& ring) {
  const std::uint64_t n = ring.modulus();
  std::vector<std::uint64_t> t(n);
  for (std::uint64_t c = 0; c < n; ++c) {
    const std::uint64_t d = std::min(c, n - c);
    t[c] = d * d;
  }
  return t;
}

void require_euclidean_ok(const Ring& ring) {
  if (ring.degree() != 1) throw Error(ErrorKind::kInvalidArgument, "Euclidean weight needs r = 1 (Z_m)");
}

}  // namespace

std::uint64_t WeightEnumerator::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::optional<std::size_t> WeightEnumerator::min_nonzero() const {
  for (std::size_t w = 1; w < counts.size(); ++w) {
    if (counts[w] != 0) return w;
  }
  return std::nullopt;
}

unsigned hamming_weight(const Ring& ring, std::span<const Elem> v) {
  unsigned w = 0;
  for (const auto& e : v) w += !ring.is_zero(e);
  return w;
}

std::uint64_t euclidean_weight(const Ring& ring, std::span<const Elem> v) {
  require_euclidean_ok(ring);
  const std::uint64_t n = ring.modulus();
  std::uint64_t w = 0;
  for (const auto& e : v) {
    const std::uint64_t d = std::min<std::uint64_t>(e.c[0], n - e.c[0]);
    w += d * d;
  }
  return w;
}

WeightEnumerator weight_enumerator(const Code& code, WeightKind kind, const EnumOptions& options) {
  check_budget(code, options.budget);
  const Ring& ring = code.ring();
  const std::size_t n = code.length();
  WeightEnumerator out;
  out.kind = kind;
  if (kind == WeightKind::kHamming) {
    const bool projective = ring.is_field();
    Plan plan = plan_for(code, projective);
    out.counts.assign(n + 1, 0);
    if (plan.rows.empty()) {
      out.counts[0] = 1;
      return out;
    }
    auto hists = run_plan(plan, options, plan_total(plan), [&] { return HammingHist{std::vector<std::uint64_t>(n + 1)}; });
    for (const auto& h : hists) {
      for (std::size_t w = 0; w <= n; ++w) out.counts[w] += h.counts[w];
    }
    if (projective) {
      for (auto& c : out.counts) c *= ring.modulus() - 1;
      out.counts[0] = 1;
    }
    return out;
  }
  require_euclidean_ok(ring);
  const auto table = euclid_table(ring);
  const std::size_t top = euclidean_max(ring, n);
  out.counts.assign(top + 1, 0);
  Plan plan = plan_for(code, false);
  if (plan.rows.empty()) {
    out.counts[0] = 1;
    return out;
  }
  auto hists = run_plan(plan, options, plan_total(plan),
                        [&] { return EuclideanHist{std::vector<std::uint64_t>(top + 1), &table, n}; });
  for (const auto& h : hists) {
    for (std::size_t w = 0; w <= top; ++w) out.counts[w] += h.counts[w];
  }
  return out;
}

MinWeight min_weight(const Code& code, WeightKind kind, const EnumOptions& options) {
  const Ring& ring = code.ring();
  if (code.standard_form().gen.rows() == 0) throw Error(ErrorKind::kInvalidArgument, "zero code has no minimum weight");
  if (kind == WeightKind::kHamming && !ring.is_field() && code.is_free()) {
    // d(C) == d(Res C) for free codes; p^(m-1) * lift(residue word) attains it.
    const Code res = residue_code(code);
    MinWeight rm = min_weight(res, kind, options);
    const Elem scale = ring.gamma_pow(ring.nilpotency() - 1);
    Vec w(rm.witness.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = ring.mul(scale, ring.lift_from_residue(rm.witness[i]));
    return {rm.weight, std::move(w)};
  }
  check_budget(code, options.budget);
  std::vector<std::uint64_t> table;
  if (kind == WeightKind::kEuclidean) {
    require_euclidean_ok(ring);
    table = euclid_table(ring);
  }
  Plan plan = plan_for(code, kind == WeightKind::kHamming && ring.is_field());
  auto trackers = run_plan(plan, options, plan_total(plan), [&] {
    MinTracker t;
    t.width = plan.width();
    t.table = table.empty() ? nullptr : &table;
    return t;
  });
  MinWeight out{~std::uint64_t{0}, {}};
  const MinTracker* best = nullptr;
  for (const auto& t : trackers) {
    if (t.best < out.weight) {
      out.weight = t.best;
      best = &t;
    }
  }
  out.witness = unflatten(ring, best->witness.data(), code.length());
  return out;
}

std::optional<Vec> find_codeword_below(const Code& code, unsigned bound, const EnumOptions& options) {
  check_budget(code, options.budget);
  const Ring& ring = code.ring();
  Plan plan = plan_for(code, ring.is_field());
  if (plan.rows.empty()) return std::nullopt;
  // Tasks run in order on one worker so the answer is the first hit.
  const auto tasks = make_tasks(plan, 1, plan_total(plan));
  BelowBound visitor{bound, plan.width(), std::nullopt};
  for (const auto& t : tasks) {
    if (!run_task(plan, t, visitor)) break;
  }
  if (!visitor.found) return std::nullopt;
  return unflatten(ring, visitor.found->data(), code.length());
}

bool low_weight_uses_residue_split(const Code& code) {
  const Ring& ring = code.ring();
  return ring.degree() == 1 && ring.nilpotency() == 2 && code.is_free() && code.length() <= 64 &&
         ring.characteristic_prime() <= 127;
}

WeightEnumerator low_weight_enumerator(const Code& code, unsigned max_weight, const EnumOptions& options) {
  const std::size_t n = code.length();
  max_weight = static_cast<unsigned>(std::min<std::size_t>(max_weight, n));
  if (!low_weight_uses_residue_split(code)) {
    WeightEnumerator full = weight_enumerator(code, WeightKind::kHamming, options);
    full.counts.resize(max_weight + 1);
    return full;
  }
  const Ring& ring = code.ring();
  const std::uint64_t p = ring.characteristic_prime();
  const auto& sf = code.standard_form();
  const std::size_t k = sf.gen.rows();
  if (ipow(p, static_cast<unsigned>(k)) > options.budget) throw BudgetExceeded(ipow(p, static_cast<unsigned>(k)), options.budget);

  // Residue code rows: the free standard-form rows mod p.
  Plan res;
  res.modulus = static_cast<std::uint32_t>(p);
  res.length = n;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint32_t> row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = static_cast<std::uint32_t>(sf.gen_original(i, c).c[0] % p);
    res.rows.push_back(std::move(row));
    res.radix.push_back(static_cast<std::uint32_t>(p));
  }
  res.projective = true;
  EnumOptions quiet = options;
  quiet.progress = nullptr;
  auto collectors = run_plan(res, quiet, plan_total(res), [&] {
    return LowCollector{max_weight, n, std::vector<std::uint64_t>(n + 1), {}};
  });
  std::vector<std::vector<std::uint32_t>> words;
  WeightEnumerator out;
  out.counts.assign(max_weight + 1, 0);
  for (auto& c : collectors) {
    // Words p*t for t in Res(C) (= Tor(C) for free codes).
    for (std::size_t w = 1; w <= max_weight; ++w) out.counts[w] += c.counts[w] * (p - 1);
    for (auto& wd : c.words) words.push_back(std::move(wd));
  }
  out.counts[0] = 1;

  // Each normalized residue word stands for its p - 1 scalar multiples,
  // whose fibres have identical weight profiles.
  std::vector<std::vector<std::uint64_t>> partial(words.size(), std::vector<std::uint64_t>(max_weight + 1, 0));
  const std::uint64_t pm = ring.modulus();
  parallel_for(words.size(), options.jobs, [&](std::size_t idx) {
    const auto& word = words[idx];
    std::vector<std::uint64_t> lift(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t u = word[sf.perm[i]];
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) lift[c] = (lift[c] + u * sf.gen_original(i, c).c[0]) % pm;
    }
    unsigned support = 0;
    Plan fibre;
    fibre.modulus = static_cast<std::uint32_t>(p);
    fibre.length = n;
    fibre.offset.assign(n, 0);
    fibre.rows = res.rows;
    fibre.radix = res.radix;
    for (std::size_t c = 0; c < n; ++c) {
      if (word[c] != 0) {
        ++support;
        for (auto& row : fibre.rows) row[c] = 0;
      } else {
        fibre.offset[c] = static_cast<std::uint32_t>(lift[c] / p);
      }
    }
    const auto tasks = make_tasks(fibre, 1, plan_total(fibre));
    HammingHist hist{std::vector<std::uint64_t>(n + 1)};
    for (const auto& t : tasks) run_task(fibre, t, hist);
    for (std::size_t w = support; w <= max_weight; ++w) partial[idx][w] += hist.counts[w - support] * (p - 1);
  });
  for (const auto& part : partial) {
    for (std::size_t w = 0; w <= max_weight; ++w) out.counts[w] += part[w];
  }
  return out;
}

boost::multiprecision::cpp_int mass_formula_gf7(unsigned n) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorKind::kInvalidArgument, "n must be even and >= 2");
  boost::multiprecision::cpp_int total = 2;
  boost::multiprecision::cpp_int seven_i = 1;
  for (unsigned i = 1; i <= (n - 2) / 2; ++i) {
    seven_i *= 7;
    total *= seven_i + 1;
  }
  return total;
}

std::string format_enumerator(const WeightEnumerator& we, char sep) {
  std::string s;
  for (std::size_t i = 0; i < we.counts.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(we.counts[i]);
  }
  return s;
}

}  // namespace sdc
