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

// sdcodes: command-line front end for the sdc library.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdc/buildup.hpp"
#include "sdc/code.hpp"
#include "sdc/enumerate.hpp"
#include "sdc/error.hpp"
#include "sdc/lattice.hpp"
#include "sdc/ring.hpp"
#include "sdc/search.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

enum class Format { kText, kTsv };

// Raised for invocation problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string code;
  std::string out;
  std::uint64_t budget = sdc::kDefaultBudget;
  Format format = Format::kText;
  unsigned jobs = 0;
  std::uint64_t rng = 1;
};

class Emitter {
 public:
  Emitter(std::ostream& os, Format f) : os_(os), f_(f) {}
  template <typename T>
  void kv(std::string_view key, const T& value) {
    os_ << key << (f_ == Format::kTsv ? '\t' : ' ') << value << '\n';
  }
  std::ostream& os() { return os_; }
  bool tsv() const { return f_ == Format::kTsv; }

 private:
  std::ostream& os_;
  Format f_;
};

// `--code @NAME` loads a built-in fixture instead of a file.
sdc::Code load_code(const std::string& ref) {
  if (ref.empty()) throw UsageError("--code is required");
  if (ref.front() == '@') return sdc::fixture_code(ref.substr(1));
  std::ifstream in(ref);
  if (!in) throw UsageError("cannot open code file " + ref);
  return sdc::read_code(in);
}

void write_output(const Common& c, const std::string& text) {
  if (c.out.empty() || c.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
}

std::vector<std::int64_t> parse_csv(const std::string& text) {
  std::vector<std::int64_t> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string tok = text.substr(pos, end - pos);
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    std::int64_t x = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size()) {
      throw UsageError("bad integer list: " + text);
    }
    v.push_back(x);
    pos = end + 1;
  }
  return v;
}

std::string csv(const sdc::Ring& R, std::span<const sdc::Elem> v) { return sdc::format_vector(R, v, ','); }

// Enumeration progress on stderr, at most every 10 percent, for big jobs.
sdc::EnumOptions enum_options(const Common& c, const sdc::Code* code = nullptr) {
  sdc::EnumOptions o;
  o.budget = c.budget;
  o.jobs = c.jobs;
  if (code && code->log_p_cardinality() * std::log2(static_cast<double>(code->ring().characteristic_prime())) > 26) {
    auto last = std::make_shared<std::atomic<int>>(-1);
    o.progress = [last](std::uint64_t done, std::uint64_t total) {
      const int tenth = total ? static_cast<int>(10 * done / total) : 10;
      int prev = last->load();
      while (tenth > prev && !last->compare_exchange_weak(prev, tenth)) {
      }
      if (tenth > prev) std::fprintf(stderr, "progress %d%%\n", tenth * 10);
    };
  }
  return o;
}

sdc::WeightKind parse_kind(const std::string& k) {
  if (k == "hamming") return sdc::WeightKind::kHamming;
  if (k == "euclidean") return sdc::WeightKind::kEuclidean;
  throw UsageError("--kind must be hamming or euclidean");
}

std::pair<int, int> parse_rows(const std::string& text, int count) {
  if (text.empty()) return {1, count};
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int r = std::stoi(text);
      return {r, r};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--rows expects a or a..b");
  }
}

// ---- verbs ----

int run_verify(const Common& c) {
  const sdc::Code code = load_code(c.code);
  Emitter e(std::cout, c.format);
  sdc::InnerProductReport rep;
  const bool sd = sdc::is_self_dual(code, &rep);
  e.kv("ring", sdc::format_ring_spec(code.ring().spec()));
  e.kv("length", code.length());
  e.kv("rows", code.gen().rows());
  e.kv("free-rank", code.free_rank());
  e.kv("log-p-size", code.log_p_cardinality());
  e.kv("self-orthogonal", rep.is_zero() ? "true" : "false");
  e.kv("self-dual", sd ? "true" : "false");
  return sd ? 0 : 1;
}

int run_wenum(const Common& c, const std::string& kind) {
  const sdc::Code code = load_code(c.code);
  const auto we = sdc::weight_enumerator(code, parse_kind(kind), enum_options(c, &code));
  Emitter e(std::cout, c.format);
  if (e.tsv()) {
    for (std::size_t w = 0; w < we.counts.size(); ++w) {
      if (we.counts[w]) e.os() << w << '\t' << we.counts[w] << '\n';
    }
  } else {
    e.kv(kind, sdc::format_enumerator(we));
    e.kv("total", we.total());
  }
  return 0;
}

int run_minweight(const Common& c, const std::string& kind) {
  const sdc::Code code = load_code(c.code);
  const auto mw = sdc::min_weight(code, parse_kind(kind), enum_options(c, &code));
  Emitter e(std::cout, c.format);
  e.kv("d", mw.weight);
  e.kv("witness", csv(code.ring(), mw.witness));
  return 0;
}

int run_residue(const Common& c) {
  const sdc::Code code = load_code(c.code);
  const sdc::Code res = sdc::residue_code(code);
  const sdc::Code tor = sdc::torsion_code(code);
  Emitter e(std::cerr, c.format);
  e.kv("residue-rows", res.gen().rows());
  e.kv("torsion-rows", tor.gen().rows());
  e.kv("res-equals-tor", sdc::same_row_space(res, tor) ? "true" : "false");
  write_output(c, sdc::format_code(res));
  return 0;
}

int run_buildup(const Common& c, const std::string& x1, const std::string& x2, std::optional<std::int64_t> alpha,
                std::optional<std::int64_t> beta) {
  const sdc::Code c0 = load_code(c.code);
  const sdc::Ring& R = c0.ring();
  if (alpha.has_value() != beta.has_value()) throw UsageError("--alpha and --beta go together");
  sdc::BuildUpWitness w;
  if (alpha) {
    w.alpha = R.from_int(*alpha);
    w.beta = R.from_int(*beta);
  } else {
    const auto ab = sdc::solve_alpha_beta(R);
    w.alpha = ab.alpha;
    w.beta = ab.beta;
  }
  w.x1 = sdc::make_vector(R, parse_csv(x1));
  w.x2 = sdc::make_vector(R, parse_csv(x2));
  write_output(c, sdc::format_code(sdc::buildup(c0, w)));
  return 0;
}

int run_reduce(const Common& c) {
  const sdc::Code code = load_code(c.code);
  const auto cert = sdc::reduce(code);
  const sdc::Ring& R = code.ring();
  Emitter e(std::cerr, c.format);
  std::ostringstream perm;
  for (std::size_t i = 0; i < cert.perm.size(); ++i) perm << (i ? "," : "") << cert.perm[i];
  e.kv("perm", perm.str());
  e.kv("alpha", R.format(cert.witness.alpha));
  e.kv("beta", R.format(cert.witness.beta));
  e.kv("x1", csv(R, cert.witness.x1));
  e.kv("x2", csv(R, cert.witness.x2));
  e.kv("v1-units", cert.v1_units);
  e.kv("v2-units", cert.v2_units);
  write_output(c, sdc::format_code(cert.reduced));
  return 0;
}

int run_search_witness(const Common& c, std::optional<std::uint64_t> seed, std::uint64_t count, bool exhaustive) {
  const sdc::Code code = load_code(c.code);
  const auto ab = sdc::solve_alpha_beta(code.ring());
  sdc::WitnessSearch ws(code.ring_ptr(), code.length(), ab.alpha, ab.beta,
                        exhaustive ? sdc::WitnessStrategy::kExhaustive : sdc::WitnessStrategy::kRandom,
                        seed.value_or(c.rng));
  const sdc::Ring& R = code.ring();
  const char sep = c.format == Format::kTsv ? '\t' : ' ';
  std::ostringstream os;
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto w = ws.next();
    if (!w) break;
    os << csv(R, w->x1) << sep << csv(R, w->x2) << '\n';
  }
  write_output(c, os.str());
  return 0;
}

int run_solve_ab(const Common& c, const std::string& ring_text) {
  if (ring_text.empty()) throw UsageError("--ring is required");
  const auto R = sdc::make_ring(ring_text);
  const auto ab = sdc::solve_alpha_beta(*R);
  Emitter e(std::cout, c.format);
  if (e.tsv()) {
    e.kv("alpha", R->format(ab.alpha));
    e.kv("beta", R->format(ab.beta));
  } else {
    std::cout << "alpha " << R->format(ab.alpha) << " beta " << R->format(ab.beta) << '\n';
  }
  return 0;
}

int run_lattice(const Common& c, unsigned depth) {
  const sdc::Code code = load_code(c.code);
  const auto lat = sdc::construction_a(code);
  const auto rep = sdc::lattice_report(lat, std::max(depth, 1u));
  Emitter e(std::cout, c.format);
  e.kv("dimension", rep.dimension);
  e.kv("scale", rep.scale);
  e.kv("det-one", rep.unimodular ? "true" : "false");
  e.kv("mu", sdc::format_fraction(rep.min_norm));
  e.kv("tau", rep.kissing);
  for (const auto& [norm, count] : rep.theta_prefix) {
    e.kv("theta", sdc::format_fraction(norm) + (e.tsv() ? "\t" : " ") + std::to_string(count));
  }
  e.kv("nodes", rep.nodes);
  return 0;
}

void print_row(Emitter& e, int table_id, const sdc::RowReport& row) {
  if (e.tsv()) {
    for (const auto& ch : row.checks) {
      e.os() << table_id << '\t' << row.no << '\t' << ch.name << '\t' << ch.expected << '\t' << ch.computed << '\t'
             << (ch.pass ? "pass" : "FAIL") << '\n';
    }
    for (const auto& [k, v] : row.info) e.os() << table_id << '\t' << row.no << '\t' << k << "\t-\t" << v << "\tinfo\n";
    if (!row.error.empty()) e.os() << table_id << '\t' << row.no << "\terror\t-\t" << row.error << "\tFAIL\n";
    return;
  }
  e.os() << "table " << table_id << " row " << row.no << ' ' << (row.pass() ? "PASS" : "FAIL");
  for (const auto& ch : row.checks) {
    e.os() << ' ' << ch.name << '=' << ch.computed;
    if (!ch.pass) e.os() << "(expected " << ch.expected << ')';
  }
  for (const auto& [k, v] : row.info) e.os() << ' ' << k << '=' << v << "(info)";
  if (!row.error.empty()) e.os() << " error: " << row.error;
  e.os() << '\n';
}

int run_reproduce(const Common& c, int table_id, const std::string& rows, bool no_lattice) {
  const auto& spec = sdc::table(table_id);
  const auto [first, last] = parse_rows(rows, static_cast<int>(spec.rows.size()));
  Emitter e(std::cout, c.format);
  sdc::ReproduceOptions opt;
  opt.enumeration = enum_options(c);
  opt.lattice = !no_lattice;
  const auto t0 = std::chrono::steady_clock::now();
  opt.on_row = [&](const sdc::RowReport& row) {
    print_row(e, table_id, row);
    e.os().flush();
    std::fprintf(stderr, "row %d of %d-%d done, %.1f s\n", row.no, first, last,
                 std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  };
  const auto report = sdc::reproduce_table(table_id, first, last, opt);
  const auto passed = std::count_if(report.rows.begin(), report.rows.end(), [](const auto& r) { return r.pass(); });
  if (!e.tsv()) e.os() << "table " << table_id << ' ' << passed << '/' << report.rows.size() << " rows pass\n";
  return report.pass() ? 0 : 1;
}

int run_discover(const Common& c, const std::string& seed_code, std::uint64_t count, std::size_t min_d,
                 std::uint64_t trials) {
  const sdc::Code seed = load_code(seed_code.empty() ? c.code : seed_code);
  sdc::DiscoverOptions opt;
  opt.rng_seed = c.rng;
  opt.max_codes = count;
  opt.min_d = min_d;
  opt.trials = trials;
  opt.enumeration = enum_options(c);
  const auto result = sdc::discover(seed, opt);
  std::fprintf(stderr, "trials %llu kept %zu rejected-distance %llu rejected-duplicate %llu\n",
               static_cast<unsigned long long>(result.trials), result.codes.size(),
               static_cast<unsigned long long>(result.rejected_distance),
               static_cast<unsigned long long>(result.rejected_duplicate));
  std::ostringstream manifest;
  if (!c.out.empty()) std::filesystem::create_directories(c.out);
  for (std::size_t i = 0; i < result.codes.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "code_%04zu.code", i + 1);
    if (!c.out.empty()) {
      std::ofstream f(std::filesystem::path(c.out) / name);
      if (!f) throw UsageError(std::string("cannot write ") + name);
      f << sdc::format_code(result.codes[i].code);
    }
    manifest << sdc::manifest_line(name, result.codes[i]) << '\n';
  }
  if (!c.out.empty()) {
    std::ofstream f(std::filesystem::path(c.out) / "manifest.txt");
    if (!f) throw UsageError("cannot write manifest");
    f << manifest.str();
  }
  std::cout << manifest.str();
  return 0;
}

std::string version_string() {
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(sdc::catalog_hash()));
  return std::string("sdcodes ") + kVersion + " catalog " + hash;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-dual codes over finite fields and chain rings: building-up construction, "
               "weight enumerators and Construction A lattices."};
  app.set_version_flag("--version", version_string, "Print version and fixture catalog hash");
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool code = true) {
    if (code) sub->add_option("--code", common.code, "Code file, or @NAME for a built-in fixture");
    sub->add_option("--out", common.out, "Output file (directory for discover)");
    sub->add_option("--budget", common.budget, "Maximum codewords to enumerate");
    sub->add_option("--format", common.format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::kText},
                                                                         {"tsv", Format::kTsv}}));
    sub->add_option("--jobs", common.jobs, "Worker threads (0 = all cores)");
    sub->add_option("--rng", common.rng, "Random seed");
  };

  auto* verify = app.add_subcommand(
      "verify", "Check G G^T = 0 and |C|^2 = |R|^n (self-duality as in Prop 2.2 and Prop 3.1)");
  add_common(verify);

  std::string kind = "hamming";
  auto* wenum = app.add_subcommand("wenum", "Exact weight enumerator (W2 of Section 3.3; A_i columns of Tables 1-8)");
  add_common(wenum);
  wenum->add_option("--kind", kind, "hamming or euclidean");

  auto* minweight =
      app.add_subcommand("minweight", "Minimum Hamming or Euclidean weight (d of Tables 1-8; d_E of Construction A)");
  add_common(minweight);
  minweight->add_option("--kind", kind, "hamming or euclidean");

  auto* residue = app.add_subcommand(
      "residue", "Residue code Res(C) and the Res = Tor check of Section 3.3; writes Res(C)");
  add_common(residue);

  std::string x1, x2;
  std::optional<std::int64_t> alpha, beta;
  auto* bu = app.add_subcommand("buildup", "Building-up construction (Prop 2.2 over fields, Prop 3.1 over chain rings)");
  add_common(bu);
  bu->add_option("--x1", x1, "Comma-separated x1")->required();
  bu->add_option("--x2", x2, "Comma-separated x2")->required();
  bu->add_option("--alpha", alpha, "alpha (default: solve-ab)");
  bu->add_option("--beta", beta, "beta (default: solve-ab)");

  auto* red = app.add_subcommand("reduce", "Converse reduction to length 2n-4 (Prop 2.4 over fields, Prop 3.2 over chain rings)");
  add_common(red);

  std::optional<std::uint64_t> seed;
  std::uint64_t count = 10;
  bool exhaustive = false;
  auto* sw = app.add_subcommand("search-witness", "Witness vectors x1, x2 satisfying the conditions of Prop 2.2");
  add_common(sw);
  sw->add_option("--seed", seed, "Random seed (overrides --rng)");
  sw->add_option("--count", count, "Number of witnesses");
  sw->add_flag("--exhaustive", exhaustive, "Lexicographic enumeration of all witnesses");

  std::string ring_text;
  auto* sab = app.add_subcommand("solve-ab", "Units alpha, beta with alpha^2 + beta^2 + 1 = 0 (Lemma 2.1, Prop 3.4)");
  add_common(sab, false);
  sab->add_option("--ring", ring_text, "Ring spec, e.g. \"z 3 2\" or \"gr 3 2 2\"")->required();

  unsigned depth = 1;
  auto* lat = app.add_subcommand(
      "lattice", "Construction A lattice: det, minimum norm mu and kissing number tau (Definition in Section 3.3, Tables 5-8)");
  add_common(lat);
  lat->add_option("--theta-depth", depth, "Number of theta series terms from mu");

  int table_id = 0;
  std::string rows;
  bool no_lattice = false;
  auto* rep = app.add_subcommand("reproduce", "Rebuild and check the rows of Tables 1-8");
  add_common(rep, false);
  rep->add_option("--table", table_id, "Table number 1-8")->required()->check(CLI::Range(1, 8));
  rep->add_option("--rows", rows, "Row or range a..b (default: all)");
  rep->add_flag("--no-lattice", no_lattice, "Skip mu and tau");

  std::string seed_code;
  std::size_t min_d = 1;
  std::uint64_t trials = 10000;
  std::uint64_t max_codes = 10;
  auto* disc = app.add_subcommand(
      "discover", "Random building-up search for new self-dual codes with fingerprint dedup (Section 2.1 search)");
  add_common(disc);
  disc->add_option("--seed-code", seed_code, "Seed code file or @NAME (same as --code)");
  disc->add_option("--count", max_codes, "Stop after this many new codes");
  disc->add_option("--min-d", min_d, "Minimum Hamming distance");
  disc->add_option("--trials", trials, "Maximum witnesses to try");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return run_verify(common);
    if (*wenum) return run_wenum(common, kind);
    if (*minweight) return run_minweight(common, kind);
    if (*residue) return run_residue(common);
    if (*bu) return run_buildup(common, x1, x2, alpha, beta);
    if (*red) return run_reduce(common);
    if (*sw) return run_search_witness(common, seed, count, exhaustive);
    if (*sab) return run_solve_ab(common, ring_text);
    if (*lat) return run_lattice(common, depth);
    if (*rep) return run_reproduce(common, table_id, rows, no_lattice);
    if (*disc) return run_discover(common, seed_code, max_codes, min_d, trials);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const sdc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
