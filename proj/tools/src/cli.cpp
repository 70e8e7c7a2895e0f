// Copyright 2026 The perioband Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"
#include "dense_baseline.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <utility>

#include "perioband/perioband.hpp"

namespace perioband::cli {
namespace {

struct Options {
  std::string input;
  std::string rhs;
  std::string output;
  std::string mode;  // empty: take the file header
  double tol = 1e-12;
  bool check = false;
  std::size_t n = 0;
  std::size_t k = 3;
  std::uint64_t seed = 0;
  double zero_probability = 0.0;
  std::vector<std::size_t> n_list;
  std::size_t reps = 3;
  std::size_t dense_max = 2000;
  std::size_t exact_max = 200;
};

// Failure reported after output was produced; carries the exit code.
struct Exit {
  int code;
};

class Command {
 public:
  Command(const Options& opts, std::ostream& out, std::ostream& err) : opts_(opts), out_(out), err_(err) {}

  int det();
  int invert(bool anti);
  int solve();
  int gen();
  int check();
  int bench();

 private:
  BandDocument load() const { return parse_band_document(read_text_file(opts_.input)); }
  ScalarKind kind(const BandDocument& doc) const {
    return opts_.mode.empty() ? doc.header().mode : parse_scalar_kind(opts_.mode);
  }
  void emit(const std::string& text) const {
    if (opts_.output.empty()) {
      out_ << text;
    } else {
      write_text_file(opts_.output, text);
    }
  }
  void singular(const std::string& detail = {}) const {
    err_ << "Singular Matrix" << detail << "\n";
    throw Exit{kExitSingular};
  }

  const Options& opts_;
  std::ostream& out_;
  std::ostream& err_;
};

// det(R) for the n x n exchange matrix.
int exchange_sign(std::size_t n) { return (n * (n - 1) / 2) % 2 == 0 ? 1 : -1; }

template <class T>
std::vector<T> band_product(const PeriodicBandMatrix<T>& m, std::span<const T> x) {
  const std::size_t n = m.order();
  const std::size_t h = m.half_bandwidth();
  std::vector<T> out(n, T(0));
  for (std::size_t i = 1; i <= n; ++i) {
    T s(0);
    const std::size_t lo = i > h ? i - h : 1;
    const std::size_t hi = std::min(i + h, n);
    for (std::size_t j = lo; j <= hi; ++j) s += m.band(i, j) * x[j - 1];
    if (i == 1 && h + 1 < n) s += m.corner_1n() * x[n - 1];
    if (i == n && h + 1 < n) s += m.corner_n1() * x[0];
    out[i - 1] = s;
  }
  return out;
}

template <class T>
std::vector<T> reversed(std::vector<T> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

int Command::det() {
  const BandDocument doc = load();
  const std::size_t n = doc.header().n;
  const int sign = doc.is_anti() ? exchange_sign(n) : 1;
  if (kind(doc) == ScalarKind::kFloat) {
    const double d = determinant(factorize(doc.periodic<double>(), opts_.tol)) * sign;
    emit(format_double(d) + "\n");
    return kExitOk;
  }
  const Rational d = determinant(factorize(doc.periodic<Rational>())) * Rational(sign);
  emit(d.to_string() + "\n");
  if (d.is_zero()) singular();
  return kExitOk;
}

int Command::invert(bool anti) {
  const BandDocument doc = load();
  if (doc.is_anti() != anti) {
    raise(ErrorCode::kParseError, anti ? "invert-anti expects an APKB file; use invert for PKB"
                                       : "invert expects a PKB file; use invert-anti for APKB");
  }
  if (kind(doc) == ScalarKind::kFloat) {
    const auto m = doc.periodic<double>();
    emit(format_dense(anti ? reverse_rows(perioband::invert(m, opts_.tol)) : perioband::invert(m, opts_.tol)));
  } else {
    const auto m = doc.periodic<Rational>();
    emit(format_dense(anti ? reverse_rows(perioband::invert(m)) : perioband::invert(m)));
  }
  return kExitOk;
}

int Command::solve() {
  const BandDocument doc = load();
  const std::string rhs_text = read_text_file(opts_.rhs);
  // N x = y with N = M R is M (R x) = y.
  if (kind(doc) == ScalarKind::kFloat) {
    const auto m = doc.periodic<double>();
    const auto y = parse_vec<double>(rhs_text);
    const auto mx = perioband::solve(m, y, opts_.tol).x;
    const auto x = doc.is_anti() ? reversed(mx) : mx;
    emit(format_vec<double>(x));
    if (opts_.check) {
      const auto r = band_product<double>(m, mx);
      double num = 0, den = 0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        num = std::max(num, std::fabs(r[i] - y[i]));
        den = std::max(den, std::fabs(y[i]));
      }
      err_ << "residual " << format_double(den > 0 ? num / den : num) << "\n";
    }
    return kExitOk;
  }
  const auto m = doc.periodic<Rational>();
  const auto y = parse_vec<Rational>(rhs_text);
  const auto mx = perioband::solve(m, y).x;
  const auto x = doc.is_anti() ? reversed(mx) : mx;
  emit(format_vec<Rational>(x));
  if (opts_.check) {
    const auto r = band_product<Rational>(m, mx);
    Rational worst;
    for (std::size_t i = 0; i < y.size(); ++i) worst = std::max(worst, abs(r[i] - y[i]));
    err_ << "residual " << worst.to_string() << "\n";
    if (!worst.is_zero()) throw Exit{kExitInternal};
  }
  return kExitOk;
}

int Command::gen() {
  if (opts_.n == 0) raise(ErrorCode::kInvalidInput, "gen needs --n");
  const auto m = generate_instance({opts_.n, opts_.k, opts_.seed, opts_.zero_probability});
  if (!opts_.mode.empty() && parse_scalar_kind(opts_.mode) == ScalarKind::kFloat) {
    emit(format_pkb(transform<double>(m, [](const Rational& v) { return v.to_double(); })));
  } else {
    emit(format_pkb(m));
  }
  return kExitOk;
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const DenseMatrix<Rational>& a,
                                                                    const DenseMatrix<Rational>& b) {
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

int Command::check() {
  const BandDocument doc = load();
  const auto m = doc.periodic<Rational>();
  const std::size_t n = m.order();
  const auto dense = doc.is_anti() ? to_dense(doc.anti<Rational>()) : to_dense(m);
  bool failed = false;
  auto report = [&](bool pass, const std::string& what) {
    out_ << (pass ? "PASS " : "FAIL ") << what << "\n";
    failed = failed || !pass;
  };

  const auto f = factorize(m);
  const Rational band_det = determinant(f) * Rational(doc.is_anti() ? exchange_sign(n) : 1);
  const Rational oracle_det = oracle::oracle_det(dense);
  report(band_det == oracle_det,
         "det band=" + band_det.to_string() + " oracle=" + oracle_det.to_string());

  if (oracle_det.is_zero() || band_det.is_zero()) {
    const bool band_refuses = band_det.is_zero();
    report(band_refuses && oracle_det.is_zero(), "inverse both report Singular Matrix");
    if (failed) throw Exit{kExitInternal};
    singular();
  }

  const auto inverse = doc.is_anti() ? reverse_rows(perioband::invert(f)) : perioband::invert(f);
  const auto reference = oracle::oracle_invert(dense);
  const auto diff = first_difference(inverse, reference);
  report(!diff, diff ? "inverse differs at (" + std::to_string(diff->first) + "," + std::to_string(diff->second) + ")"
                     : "inverse");
  report(first_difference(dense * inverse, DenseMatrix<Rational>::identity(n)) == std::nullopt,
         "inverse-identity");

  if (!opts_.rhs.empty()) {
    const auto y = parse_vec<Rational>(read_text_file(opts_.rhs));
    const auto mx = perioband::solve(f, y).x;
    const auto x = doc.is_anti() ? reversed(mx) : mx;
    report(x == oracle::oracle_solve(dense, y), "solve");
  }
  return failed ? kExitInternal : kExitOk;
}

template <class Fn>
double best_seconds(std::size_t reps, Fn&& fn) {
  double best = 1e300;
  for (std::size_t r = 0; r < std::max<std::size_t>(reps, 1); ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

// Exact band solve against the dense oracle on a nonsingular random instance.
std::string exact_agreement(std::size_t n, std::size_t k, std::uint64_t seed) {
  for (std::uint64_t s = seed;; ++s) {
    const auto m = generate_instance({n, k, s, 0.0});
    const auto dense = to_dense(m);
    if (oracle::oracle_det(dense).is_zero()) continue;
    std::vector<Rational> y;
    for (std::size_t i = 1; i <= n; ++i) y.emplace_back(static_cast<long>(i % 7) - 3);
    return perioband::solve(m, y).x == oracle::oracle_solve(dense, y) ? "match" : "MISMATCH";
  }
}

int Command::bench() {
  if (opts_.n_list.empty()) raise(ErrorCode::kInvalidInput, "bench needs --n");
  std::ostringstream table;
  table << std::left << std::setw(10) << "n" << std::setw(4) << "k" << std::right << std::setw(14) << "band_ms"
        << std::setw(14) << "dense_ms" << std::setw(10) << "speedup" << std::setw(10) << "exact" << "\n";
  bool mismatch = false;
  for (const std::size_t n : opts_.n_list) {
    const auto m = diagonally_dominant_instance(n, opts_.k, opts_.seed);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<double>(i % 7) - 3.0;
    volatile double sink = 0;
    const double band = best_seconds(opts_.reps, [&] { sink = perioband::solve(m, y, opts_.tol).x[0]; });
    std::optional<double> dense;
    if (n <= opts_.dense_max) {
      const auto d = to_dense(m);
      dense = best_seconds(n > 500 ? 1 : opts_.reps, [&] { sink = dense_float_solve(d, y)[0]; });
    }
    std::string exact = "-";
    if (n <= opts_.exact_max) {
      exact = exact_agreement(n, opts_.k, opts_.seed);
      mismatch = mismatch || exact != "match";
    }
    table << std::left << std::setw(10) << n << std::setw(4) << opts_.k << std::right << std::fixed
          << std::setprecision(3) << std::setw(14) << band * 1e3;
    if (dense) {
      table << std::setw(14) << *dense * 1e3 << std::setw(9) << std::setprecision(1) << *dense / band << "x";
    } else {
      table << std::setw(14) << "-" << std::setw(10) << "-";
    }
    table << std::setw(10) << exact << "\n";
  }
  emit(table.str());
  return mismatch ? kExitInternal : kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSingularMatrix:
      return kExitSingular;
    case ErrorCode::kZeroPivotNeedsExact:
      return kExitZeroPivot;
    case ErrorCode::kParseError:
    case ErrorCode::kInvalidBandwidth:
    case ErrorCode::kLengthMismatch:
    case ErrorCode::kPatternViolation:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kInvalidInput:
    case ErrorCode::kIndexOutOfRange:
      return kExitFormat;
    default:
      return kExitInternal;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Determinants, inverses and linear solves for periodic banded matrices", "perioband"};
  app.require_subcommand(1);

  auto add_mode = [&opts](CLI::App* sub) {
    sub->add_option("--mode", opts.mode, "exact or float; overrides PERIOBAND_MODE and the file header")
        ->envname("PERIOBAND_MODE")
        ->check(CLI::IsMember({"exact", "float"}));
  };
  auto add_matrix = [&opts, &add_mode](CLI::App* sub) {
    sub->add_option("input", opts.input, "PKB or APKB file")->required();
    add_mode(sub);
    sub->add_option("--tol", opts.tol, "relative zero-pivot tolerance in float mode")->check(CLI::NonNegativeNumber);
  };
  auto add_output = [&opts](CLI::App* sub) { sub->add_option("-o,--output", opts.output, "output file (default stdout)"); };

  CLI::App* det = app.add_subcommand("det", "print the determinant");
  add_matrix(det);
  add_output(det);
  CLI::App* inv = app.add_subcommand("invert", "write the inverse of a PKB matrix as DENSE");
  add_matrix(inv);
  add_output(inv);
  CLI::App* inv_anti = app.add_subcommand("invert-anti", "write the inverse of an APKB matrix as DENSE");
  add_matrix(inv_anti);
  add_output(inv_anti);
  CLI::App* slv = app.add_subcommand("solve", "solve M x = y and write x as VEC");
  add_matrix(slv);
  add_output(slv);
  slv->add_option("--rhs", opts.rhs, "VEC file holding y")->required();
  slv->add_flag("--check", opts.check, "report the max-norm residual on stderr");
  CLI::App* gen = app.add_subcommand("gen", "write a random PKB matrix");
  gen->add_option("--n", opts.n, "order")->required();
  gen->add_option("--k", opts.k, "bandwidth (odd, >= 3)");
  gen->add_option("--seed", opts.seed, "generator seed");
  gen->add_option("--zero-prob", opts.zero_probability, "chance of zeroing each band entry")
      ->check(CLI::Range(0.0, 1.0));
  add_mode(gen);
  add_output(gen);
  CLI::App* chk = app.add_subcommand("check", "compare band results with the dense oracle (exact)");
  chk->add_option("input", opts.input, "PKB or APKB file")->required();
  chk->add_option("--rhs", opts.rhs, "optional VEC file to compare solves");
  CLI::App* bch = app.add_subcommand("bench", "time float factor+solve, band against dense");
  bch->add_option("--n", opts.n_list, "orders, comma separated")->required()->delimiter(',');
  bch->add_option("--k", opts.k, "bandwidth");
  bch->add_option("--seed", opts.seed, "instance seed");
  bch->add_option("--reps", opts.reps, "repetitions; the best time is reported");
  bch->add_option("--dense-max", opts.dense_max, "largest n timed on the dense path");
  bch->add_option("--exact-max", opts.exact_max, "largest n checked exactly against the oracle");
  add_output(bch);

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Command cmd(opts, out, err);
  try {
    if (det->parsed()) return cmd.det();
    if (inv->parsed()) return cmd.invert(false);
    if (inv_anti->parsed()) return cmd.invert(true);
    if (slv->parsed()) return cmd.solve();
    if (gen->parsed()) return cmd.gen();
    if (chk->parsed()) return cmd.check();
    return cmd.bench();
  } catch (const Exit& e) {
    return e.code;
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (e.code() == ErrorCode::kZeroPivotNeedsExact) err << "; rerun with --mode exact";
    err << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace perioband::cli
