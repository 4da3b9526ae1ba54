// Command-line front end: count, verify, constants, sweep, expsum, delta.
// Exit codes: 0 success, 1 property or internal failure, 2 usage error.
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "e6count/arith.hpp"
#include "e6count/constants.hpp"
#include "e6count/enumerator.hpp"
#include "e6count/region.hpp"
#include "e6count/surface.hpp"
#include "e6count/torsor.hpp"

using namespace e6;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

struct RunConfig {
  i64 bound = 0;
  std::vector<i64> bounds;
  std::string bounds_text;
  std::string method = "torsor";
  std::string strategy = "auto";
  u64 prime_limit = 100'000;
  double tolerance = 1e-7;
  int threads = 1;
  Format format = Format::text;
  bool json = false;
  bool csv_flag = false;
  std::string output;
  std::string csv_path;
  i64 a = 1, b = 0, q = 1;
  i64 n = 0, x = 0;
};

std::string real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Rounded to 12 significant digits so JSON and text agree.
double real12(double v) { return std::isfinite(v) ? std::stod(real(v)) : v; }

Strategy parse_strategy(const std::string& s) {
  if (s == "direct") return Strategy::direct;
  if (s == "residue") return Strategy::residue;
  return Strategy::automatic;
}

Format resolve_format(const RunConfig& c) {
  if (c.json) return Format::json;
  if (c.csv_flag) return Format::csv;
  return c.format;
}

void check_common(const RunConfig& c) {
  if (c.threads < 1) throw UsageError("thread count must be >= 1");
  if (c.prime_limit < 100) throw UsageError("prime limit must be >= 100");
  if (!(c.tolerance > 0.0 && c.tolerance < 1e-2)) throw UsageError("tolerance must lie in (0, 1e-2)");
}

void check_bound(i64 B) {
  if (B < 1) throw UsageError("B must be >= 1");
  if (B > kMaxBound) throw UsageError("B exceeds " + std::to_string(kMaxBound));
}

// Writes to --output when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

ordered_json to_json(const CountReport& r) {
  return {{"bound", r.bound},
          {"e_count", r.e_count},
          {"conic_count", r.conic_count},
          {"x0zero_count", r.x0zero_count},
          {"x1zero_count", r.x1zero_count},
          {"total", r.total},
          {"method", to_string(r.method)},
          {"elapsed_seconds", real12(r.elapsed_seconds)}};
}

CountReport run_count(const RunConfig& c, i64 B) {
  if (c.method == "naive") return count_naive(B, c.threads);
  return count_total(B, parse_strategy(c.strategy), c.threads);
}

int cmd_count(const RunConfig& c) {
  check_common(c);
  check_bound(c.bound);
  const auto r = run_count(c, c.bound);
  Sink sink(c.output);
  auto& out = sink.out();
  switch (resolve_format(c)) {
    case Format::json:
      out << to_json(r).dump(2) << "\n";
      break;
    case Format::csv:
      out << "bound,e_count,conic_count,x0zero_count,x1zero_count,total,method,elapsed_seconds\n"
          << r.bound << "," << r.e_count << "," << r.conic_count << "," << r.x0zero_count << "," << r.x1zero_count
          << "," << r.total << "," << to_string(r.method) << "," << real(r.elapsed_seconds) << "\n";
      break;
    case Format::text:
      out << "bound: " << r.bound << "\nmethod: " << to_string(r.method) << "\ne_count: " << r.e_count
          << "\nconic_count: " << r.conic_count << "\nx0zero_count: " << r.x0zero_count
          << "\nx1zero_count: " << r.x1zero_count << "\ntotal: " << r.total
          << "\nelapsed_seconds: " << real(r.elapsed_seconds) << "\n";
      break;
  }
  return kExitOk;
}

struct Property {
  std::string name;
  bool pass = true;
  std::string counterexample;
};

Property check_round_trip(i64 B, int threads) {
  Property p{"round_trip psi(Phi(lift_T1(P))) = P on E(B)"};
  std::vector<SurfacePoint> pts;
  std::mutex mu;
  enumerate_E(
      B,
      [&](const SurfacePoint& s) {
        std::lock_guard lock(mu);
        pts.push_back(s);
      },
      threads);
  std::sort(pts.begin(), pts.end());
  for (const auto& s : pts) {
    std::string why;
    try {
      const auto t1 = lift_T1(s);
      const auto v1 = validate(t1);
      const auto t2 = phi_T1_to_T2(t1);
      const auto v2 = validate(t2);
      if (!v1) why = "T1: " + v1.violations.front();
      else if (!v2) why = "T2: " + v2.violations.front();
      else if (psi(t2) != s) why = "psi image " + to_string(psi(t2));
      else if (phi_T2_to_T1(t2) != t1) why = "inverse map differs";
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (!why.empty()) {
      p.pass = false;
      p.counterexample = to_string(s) + ": " + why;
      break;
    }
  }
  return p;
}

Property check_counts(i64 B, int threads) {
  Property p{"count_total(b) = count_naive(b) for b <= B, direct and residue"};
  for (i64 b = 1; b <= B && p.pass; ++b) {
    const i64 naive = count_naive(b, threads).total;
    for (auto s : {Strategy::direct, Strategy::residue}) {
      const i64 t = count_total(b, s, threads).total;
      if (t != naive) {
        p.pass = false;
        p.counterexample = "B=" + std::to_string(b) + " strategy=" + to_string(s) + " torsor=" + std::to_string(t) +
                           " naive=" + std::to_string(naive);
        break;
      }
    }
  }
  return p;
}

Property check_region() {
  Property p{"g2 closed form = defining length; g2(g1(v), v) = 0; int D1 g2 = -g2(g1(v), v)"};
  for (int i = 1; i <= 40 && p.pass; ++i) {
    const double v = i / 40.0;
    const double lo = g1(v);
    for (int j = 0; j < 40; ++j) {
      const double u = lo + (1.0 - lo) * j / 39.0;
      if (std::fabs(g2_numeric(u, v) - g2(u, v)) > 1e-9) {
        p.pass = false;
        p.counterexample = "g2(" + real(u) + ", " + real(v) + ") = " + real(g2(u, v)) + " vs " + real(g2_numeric(u, v));
        break;
      }
    }
    if (p.pass && v <= std::sqrt(0.5) && std::fabs(g2(g1(v), v)) > 1e-12) {
      p.pass = false;
      p.counterexample = "g2(g1(v), v) != 0 at v=" + real(v);
    }
    if (p.pass && std::fabs(integral_D1_g2(v) + g2(g1(v), v)) > 1e-5) {
      p.pass = false;
      p.counterexample = "int D1 g2 at v=" + real(v) + " is " + real(integral_D1_g2(v));
    }
  }
  return p;
}

int cmd_verify(const RunConfig& c) {
  check_common(c);
  check_bound(c.bound);
  const std::vector<Property> props{check_round_trip(c.bound, c.threads), check_counts(c.bound, c.threads),
                                    check_region()};
  Sink sink(c.output);
  auto& out = sink.out();
  bool all = true;
  if (resolve_format(c) == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : props) {
      arr.push_back({{"property", p.name}, {"pass", p.pass}, {"counterexample", p.counterexample}});
      all = all && p.pass;
    }
    out << ordered_json{{"bound", c.bound}, {"properties", arr}, {"pass", all}}.dump(2) << "\n";
  } else {
    for (const auto& p : props) {
      out << (p.pass ? "PASS " : "FAIL ") << p.name << "\n";
      if (!p.pass) out << "  counterexample: " << p.counterexample << "\n";
      all = all && p.pass;
    }
  }
  return all ? kExitOk : kExitFailure;
}

std::string rational_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

int cmd_constants(const RunConfig& c) {
  check_common(c);
  const auto r = leading_coefficient(c.prime_limit, c.tolerance);
  ordered_json j{{"alpha", rational_string(r.alpha)},
                 {"beta", r.beta},
                 {"omega_inf", real12(r.omega_inf)},
                 {"omega_inf_3d", real12(r.omega_inf_3d)},
                 {"omega_agreement", real12(r.omega_inf / r.omega_inf_3d)},
                 {"omega_inf_literal", real12(r.omega_inf_literal)},
                 {"omega_tolerance", real12(r.omega_tolerance)},
                 {"prime_limit", r.euler.prime_limit},
                 {"euler_product", real12(static_cast<double>(r.euler.value))},
                 {"euler_tail_bound", real12(static_cast<double>(r.euler.tail_bound))},
                 {"euler_raw_partial", real12(static_cast<double>(r.euler.raw_partial))},
                 {"euler_raw_tail_bound", real12(static_cast<double>(r.euler.raw_tail_bound))},
                 {"leading_coeff", real12(r.leading_coeff)}};
  Sink sink(c.output);
  auto& out = sink.out();
  if (resolve_format(c) == Format::json) {
    out << j.dump(2) << "\n";
  } else {
    for (auto it = j.begin(); it != j.end(); ++it) {
      out << it.key() << ": ";
      if (it->is_string()) out << it->get<std::string>();
      else if (it->is_number_float()) out << real(it->get<double>());
      else out << it->dump();
      out << "\n";
    }
  }
  return kExitOk;
}

std::vector<i64> parse_bounds(const std::string& text) {
  std::vector<i64> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    i64 v = 0;
    try {
      // Accept 1e5 style as well as plain integers.
      const double d = std::stod(item, &used);
      if (used != item.size() || d != std::floor(d) || d > static_cast<double>(kMaxBound)) throw UsageError("");
      v = static_cast<i64>(d);
    } catch (const std::exception&) {
      throw UsageError("malformed B-list entry '" + item + "'");
    }
    check_bound(v);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() < 2) throw UsageError("sweep needs at least two distinct B values");
  return out;
}

int cmd_sweep(const RunConfig& c) {
  check_common(c);
  const auto bounds = parse_bounds(c.bounds_text);
  std::vector<CountReport> reports;
  for (i64 B : bounds) reports.push_back(run_count(c, B));
  const double coeff = leading_coefficient(c.prime_limit, c.tolerance).leading_coeff;
  const auto rows = fit_report(reports, coeff, false);
  Sink sink(c.csv_path.empty() ? c.output : c.csv_path);
  auto& out = sink.out();
  const Format fmt = c.csv_path.empty() ? resolve_format(c) : Format::csv;
  if (fmt == Format::json) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto j = to_json(reports[i]);
      j["predicted"] = real12(rows[i].predicted);
      j["ratio"] = real12(rows[i].ratio);
      arr.push_back(j);
    }
    out << ordered_json{{"leading_coeff", real12(coeff)}, {"rows", arr}}.dump(2) << "\n";
    return kExitOk;
  }
  if (fmt == Format::text) out << "# non-asymptotic: lower-order terms of the degree-6 polynomial are unknown\n";
  out << "B,N,e_count,conic,x0zero,x1zero,predicted,ratio,seconds\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = reports[i];
    out << r.bound << "," << r.total << "," << r.e_count << "," << r.conic_count << "," << r.x0zero_count << ","
        << r.x1zero_count << "," << real(rows[i].predicted) << "," << real(rows[i].ratio) << ","
        << real(r.elapsed_seconds) << "\n";
  }
  return kExitOk;
}

// Largest p and l with q = p^l, or p = 0 when q is not a prime power.
std::pair<i64, int> prime_power(i64 q) {
  if (q < 2) return {0, 0};
  const auto f = factorize(static_cast<u64>(q));
  if (f.factors.size() != 1) return {0, 0};
  return {static_cast<i64>(f.factors[0].prime), f.factors[0].exponent};
}

int cmd_expsum(const RunConfig& c) {
  if (c.q < 1 || c.q > 1'000'000) throw UsageError("q must lie in [1, 1e6]");
  const auto S = exp_sum_S(c.a, c.b, c.q);
  const auto T = exp_sum_T(c.a, c.b, c.q);
  ordered_json j{{"a", c.a},
                 {"b", c.b},
                 {"q", c.q},
                 {"S_re", real12(S.real())},
                 {"S_im", real12(S.imag())},
                 {"S_abs", real12(std::abs(S))},
                 {"T_re", real12(T.real())},
                 {"T_im", real12(T.imag())},
                 {"T_abs", real12(std::abs(T))},
                 {"S_over_q_two_thirds", real12(std::abs(S) / std::pow(static_cast<double>(c.q), 2.0 / 3.0))}};
  bool ok = true;
  const auto [p, l] = prime_power(c.q);
  if (p != 0 && std::gcd(std::gcd(c.a, c.b), p) == 1) {
    const double bound = 2.0 * std::pow(static_cast<double>(p), l / 2.0) * static_cast<double>(std::gcd(c.b, c.q));
    ok = std::abs(T) <= bound + 1e-9;
    j["loxton_vaughan_bound"] = real12(bound);
    j["loxton_vaughan_holds"] = ok;
  }
  Sink sink(c.output);
  auto& out = sink.out();
  if (resolve_format(c) == Format::json) {
    out << j.dump(2) << "\n";
  } else {
    for (auto it = j.begin(); it != j.end(); ++it)
      out << it.key() << ": " << (it->is_number_float() ? real(it->get<double>()) : it->dump()) << "\n";
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_delta(const RunConfig& c) {
  if (c.n < 1 && c.x < 1) throw UsageError("give --n and/or --x (positive)");
  Sink sink(c.output);
  auto& out = sink.out();
  ordered_json j;
  if (c.n >= 1) {
    j["n"] = c.n;
    j["delta"] = real12(delta(c.n));
    j["weight"] = rational_string(delta_weight(c.n));
  }
  if (c.x >= 1) {
    const auto table = delta_table(c.x);
    ordered_json sums = ordered_json::array();
    double m = 0.0;
    i64 next = 1;
    for (i64 k = 1; k <= c.x; ++k) {
      m += table[k];
      if (k == next || k == c.x) {
        sums.push_back({{"x", k}, {"M", real12(m)}});
        if (k == next) next *= 10;
      }
    }
    j["partial_sums"] = sums;
  }
  if (resolve_format(c) == Format::json) {
    out << j.dump(2) << "\n";
  } else {
    if (j.contains("n"))
      out << "Delta(" << c.n << ") = " << real(j["delta"].get<double>()) << "  (n^{-1/6} Delta = "
          << j["weight"].get<std::string>() << ")\n";
    if (j.contains("partial_sums")) {
      out << "x,M(x)\n";
      for (const auto& row : j["partial_sums"]) out << row["x"].get<i64>() << "," << real(row["M"].get<double>()) << "\n";
    }
  }
  return kExitOk;
}

void add_format(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}},
          CLI::ignore_case));
  cmd->add_flag("--json", c.json, "Shorthand for --format json");
  cmd->add_option("-o,--output", c.output, "Write the report to this file");
}

void add_threads(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--threads", c.threads, "Worker threads")->envname("E6COUNT_THREADS");
}

void add_tolerance(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--tol", c.tolerance, "Quadrature tolerance for omega_inf")->envname("E6COUNT_TOL");
  cmd->add_option("--prime-limit", c.prime_limit, "Largest prime in the Euler product");
}

void add_method(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--method", c.method, "naive or torsor")->check(CLI::IsMember({"naive", "torsor"}));
  cmd->add_option("--strategy", c.strategy, "tau2 enumeration: direct, residue or auto")
      ->check(CLI::IsMember({"direct", "residue", "auto"}));
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Exact rational point counts on x1 x2^2 + x2 x0^2 + x3^3 = 0"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Count N(B) and emit the report");
  count->add_option("--B", cfg.bound, "Height bound")->required();
  add_method(count, cfg);
  add_threads(count, cfg);
  add_format(count, cfg);
  count->add_flag("--csv", cfg.csv_flag, "Shorthand for --format csv");

  auto* verify = app.add_subcommand("verify", "Run the bijection, count and region property suite");
  verify->add_option("--B", cfg.bound, "Height bound")->default_val(200);
  add_threads(verify, cfg);
  add_format(verify, cfg);

  auto* constants = app.add_subcommand("constants", "Leading constant and its ingredients");
  add_tolerance(constants, cfg);
  add_format(constants, cfg);

  auto* sweep = app.add_subcommand("sweep", "Counts over a list of bounds against c B log^6 B");
  sweep->add_option("--Bs", cfg.bounds_text, "Comma-separated bounds")->required();
  sweep->add_option("--csv", cfg.csv_path, "Write the CSV table to this file");
  add_method(sweep, cfg);
  add_threads(sweep, cfg);
  add_tolerance(sweep, cfg);
  add_format(sweep, cfg);

  auto* expsum = app.add_subcommand("expsum", "Cubic exponential sums S_q(a, b), T_q(a, b) and bound checks");
  expsum->add_option("--a", cfg.a, "Cubic coefficient");
  expsum->add_option("--b", cfg.b, "Quadratic coefficient");
  expsum->add_option("--q", cfg.q, "Modulus")->required();
  add_format(expsum, cfg);

  auto* delta_cmd = app.add_subcommand("delta", "Delta(n) and partial sums M(x)");
  delta_cmd->add_option("--n", cfg.n, "Evaluate Delta(n)");
  delta_cmd->add_option("--x", cfg.x, "Print M(x) at powers of ten up to x");
  add_format(delta_cmd, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count) return cmd_count(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*constants) return cmd_constants(cfg);
    if (*sweep) return cmd_sweep(cfg);
    if (*expsum) return cmd_expsum(cfg);
    if (*delta_cmd) return cmd_delta(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
