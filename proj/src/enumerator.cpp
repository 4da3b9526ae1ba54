#include "e6count/enumerator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <optional>
#include <thread>

#include "e6count/arith.hpp"
#include "e6count/region.hpp"

namespace e6 {

namespace {

// Automatic strategy: residue stepping once the tau2 interval is longer than
// this many integers and q0 > 1.
constexpr i64 kResidueMinLength = 48;

u64 sqrt_mod_odd_prime(u64 c, u64 p) {
  if (p == 2 || c == 0) return c % p;
  if (p % 4 == 3) return pow_mod(c, (p + 1) / 4, p);
  u64 q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = static_cast<u64>(s), cc = pow_mod(z, q, p), t = pow_mod(c, q, p),
      r = pow_mod(c, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = mul_mod(tt, tt, p);
      ++i;
    }
    u64 b = cc;
    for (u64 j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, p);
    m = i;
    cc = mul_mod(b, b, p);
    t = mul_mod(t, cc, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

u64 ipow(u64 p, int k) {
  u64 r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

// Roots of x^2 = c mod p^k for a unit c, appended to out (unsorted).
void unit_sqrt(u64 c, u64 p, int k, u64 m, std::vector<u64>& out) {
  if (p == 2) {
    if (k <= 3) {
      for (u64 x = 1; x < m; x += 2)
        if (mul_mod(x, x, m) == c % m) out.push_back(x);
      return;
    }
    if (c % 8 != 1) return;
    u64 r = 1;
    for (int j = 3; j < k; ++j) {
      const u64 mod = u64{1} << (j + 1);
      if (mul_mod(r, r, mod) != c % mod) r += u64{1} << (j - 1);
    }
    const u64 half = m / 2;
    for (u64 x : {r, m - r, (r + half) % m, (m - r + half) % m}) out.push_back(x);
    return;
  }
  const u64 cp = c % p;
  if (pow_mod(cp, (p - 1) / 2, p) != 1) return;
  u64 r = sqrt_mod_odd_prime(cp, p);
  u64 mod = p;
  for (int j = 1; j < k; ++j) {
    mod *= p;
    // r <- r - (r^2 - c) / (2r) mod p^{j+1}
    const u64 f = (mul_mod(r, r, mod) + mod - c % mod) % mod;
    const u64 inv = static_cast<u64>(inv_mod(static_cast<i64>((2 * r) % mod), static_cast<i64>(mod)));
    r = (r + mod - mul_mod(f, inv, mod)) % mod;
  }
  out.push_back(r);
  if (m - r != r) out.push_back(m - r);
}

// The congruence xi2 tau2^2 = -tau1^3 xi1^2 xi3 mod q0 for one xi.
class CongruenceSolver {
 public:
  CongruenceSolver(const XiVector& xi, i64 q0) : q0_(q0) {
    const i64 a = xi[kXi1] * xi[kXi1] * xi[kXi3];
    for (const auto& pp : factorize(static_cast<u64>(q0)).factors) {
      Part part;
      part.p = pp.prime;
      part.k = pp.exponent;
      part.m = ipow(pp.prime, pp.exponent);
      const i64 m = static_cast<i64>(part.m);
      if (gcd_i64(xi[kXi2], m) != 1 || gcd_i64(a, m) != 1)
        throw PreconditionViolated("tau2 congruence: xi1 xi2 xi3 not coprime to q0");
      // -a / xi2 mod m
      part.coeff = static_cast<u64>(mod_pos(-static_cast<i128>(a) * inv_mod(mod_pos(xi[kXi2], m), m), m));
      const i64 cofactor = q0 / m;
      part.crt = static_cast<i64>(mod_pos(static_cast<i128>(cofactor) * inv_mod(mod_pos(cofactor, m), m), q0));
      parts_.push_back(part);
    }
  }

  // Residues mod q0, unsorted; false if there are none.
  bool solve(i64 tau1, std::vector<i64>& out) {
    out.assign(1, 0);
    for (const auto& part : parts_) {
      const i64 m = static_cast<i64>(part.m);
      const u64 t = static_cast<u64>(mod_pos(tau1, m));
      if (t % part.p == 0) throw PreconditionViolated("tau2 congruence: tau1 not coprime to q0");
      const u64 c = mul_mod(mul_mod(mul_mod(t, t, part.m), t, part.m), part.coeff, part.m);
      roots_.clear();
      unit_sqrt(c, part.p, part.k, part.m, roots_);
      if (roots_.empty()) {
        out.clear();
        return false;
      }
      next_.clear();
      for (i64 base : out)
        for (u64 r : roots_)
          next_.push_back(static_cast<i64>(mod_pos(base + static_cast<i128>(r) * part.crt, q0_)));
      out.swap(next_);
    }
    return true;
  }

 private:
  struct Part {
    u64 p = 0;
    int k = 0;
    u64 m = 0;
    u64 coeff = 0;
    i64 crt = 0;
  };
  i64 q0_;
  std::vector<Part> parts_;
  std::vector<u64> roots_;
  std::vector<i64> next_;
};

struct XiLoopTables {
  std::vector<int> mu;  // Moebius values up to B^{1/2}
  bool squarefree(i64 n) const { return mu[static_cast<std::size_t>(n)] != 0; }
};

class Worker {
 public:
  Worker(i64 bound, const EnumerationOptions& opt, const XiLoopTables& tables, std::mutex& visit_mutex)
      : B_(bound), opt_(opt), tables_(tables), visit_mutex_(visit_mutex) {}

  // All xi with the given (xi6, xi5).
  void run(i64 xi6, i64 xi5) {
    XiVector xi{};
    xi[kXi6] = xi6;
    xi[kXi5] = xi5;
    const i64 r5 = B_ / ipow_i(xi6, 6) / ipow_i(xi5, 5);
    for (i64 xi4 = 1, n4 = floor_root(r5, 4); xi4 <= n4; ++xi4) {
      if (!tables_.squarefree(xi4) || gcd_i64(xi4, xi5) != 1) continue;
      xi[kXi4] = xi4;
      const i64 r4 = r5 / ipow_i(xi4, 4);
      for (i64 xi3 = 1, n3 = floor_root(r4, 4); xi3 <= n3; ++xi3) {
        if (!tables_.squarefree(xi3) || gcd_i64(xi3, xi4 * xi5) != 1) continue;
        xi[kXi3] = xi3;
        const i64 r3 = r4 / ipow_i(xi3, 4);
        for (i64 xiL = 1, nL = floor_root(r3, 3); xiL <= nL; ++xiL) {
          if (gcd_i64(xiL, xi3) != 1) continue;
          xi[kXiL] = xiL;
          const i64 rL = r3 / ipow_i(xiL, 3);
          for (i64 xi2 = 1, n2 = floor_root(rL, 3); xi2 <= n2; ++xi2) {
            if (!tables_.squarefree(xi2) || gcd_i64(xi2, xi3 * xi4 * xi5 * xiL) != 1) continue;
            xi[kXi2] = xi2;
            const i64 r2 = rL / ipow_i(xi2, 3);
            const i64 forbidden = xi2 * xiL * xi4 * xi5;
            for (i64 xi1 = 1, n1 = isqrt(r2); xi1 <= n1; ++xi1) {
              if (gcd_i64(xi1, forbidden) != 1) continue;
              xi[kXi1] = xi1;
              process(xi);
            }
          }
        }
      }
    }
  }

  EnumerationStats stats;

 private:
  static i64 ipow_i(i64 b, int e) {
    i64 r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  }

  void process(const XiVector& xi) {
    ++stats.xi_tuples;
    const RegionParams rp = region_params(xi, B_);
    const i64 m0 = static_cast<i64>(monomial(xi, monomials::kX0));
    const i64 m3 = static_cast<i64>(monomial(xi, monomials::kX3));
    const i64 q0 = static_cast<i64>(monomial(xi, monomials::kModulus));
    const i64 a = static_cast<i64>(monomial(xi, monomials::kTau1Coeff));
    const i64 xi2 = xi[kXi2];
    const i64 tau1_forbidden = xi[kXi2] * xi[kXi3] * xi[kXiL] * xi[kXi4] * xi[kXi5] * xi[kXi6];
    const i64 tau2_forbidden = xi[kXi1] * xi[kXi3];
    const i64 tauL_forbidden = xi[kXi4] * xi[kXi5] * xi[kXi6];
    const i64 slack = opt_.slack;

    const double gl = g1(rp.alpha);
    const i64 t1_cap = B_ / m3;
    const i64 t1_lo = std::max(static_cast<i64>(std::ceil(rp.X1 * gl)) - slack, -t1_cap);
    const i64 t1_hi = std::min(static_cast<i64>(std::floor(rp.X1)) + slack, t1_cap);
    const i64 t2_cap = B_ / m0;

    std::optional<CongruenceSolver> solver;
    for (i64 tau1 = t1_lo; tau1 <= t1_hi; ++tau1) {
      if (tau1 == 0 || gcd_i64(tau1, tau1_forbidden) != 1) continue;
      ++stats.tau1_values;
      const double u = std::clamp(tau1 / rp.X1, gl, 1.0);
      const i64 t2_lo = std::max<i64>(static_cast<i64>(std::floor(rp.X2 * g21(u, rp.alpha))) + 1 - slack, 1);
      const i64 t2_hi = std::min(static_cast<i64>(std::floor(rp.X2 * g22(u, rp.alpha))) + slack, t2_cap);
      if (t2_lo > t2_hi) continue;
      const i128 c1 = static_cast<i128>(tau1) * tau1 * tau1 * a;

      auto accept = [&](i64 tau2) {
        ++stats.tau2_candidates;
        const i128 num = static_cast<i128>(tau2) * tau2 * xi2 + c1;
        if (num % q0 != 0) return;
        const i128 tauL = -num / q0;
        if (tauL == 0 || abs128(tauL) > B_) return;
        if (gcd_i64(tau2, tau2_forbidden) != 1) return;
        if (gcd128(tauL, tauL_forbidden) != 1) return;
        if (static_cast<i128>(m0) * tau2 > B_ || static_cast<i128>(m3) * (tau1 < 0 ? -tau1 : tau1) > B_) return;
        ++stats.e_count;
        if (opt_.visit) {
          const TorsorPoint t{xi, tau1, tau2, static_cast<i64>(tauL), Scheme::T2};
          std::lock_guard lock(visit_mutex_);
          opt_.visit(t);
        }
      };

      const bool residue = q0 > 1 && (opt_.strategy == Strategy::residue ||
                                      (opt_.strategy == Strategy::automatic && t2_hi - t2_lo + 1 > kResidueMinLength));
      if (!residue) {
        for (i64 tau2 = t2_lo; tau2 <= t2_hi; ++tau2) accept(tau2);
        continue;
      }
      if (!solver) solver.emplace(xi, q0);
      if (!solver->solve(tau1, residues_)) continue;
      for (i64 r : residues_)
        for (i64 tau2 = t2_lo + static_cast<i64>(mod_pos(r - t2_lo, q0)); tau2 <= t2_hi; tau2 += q0) accept(tau2);
    }
  }

  i64 B_;
  const EnumerationOptions& opt_;
  const XiLoopTables& tables_;
  std::mutex& visit_mutex_;
  std::vector<i64> residues_;
};

}  // namespace

std::vector<u64> sqrt_mod_prime_power(i64 c, u64 p, int k) {
  if (k < 1 || !is_prime(p)) throw std::invalid_argument("sqrt_mod_prime_power: need prime p and k >= 1");
  const u64 m = ipow(p, k);
  const u64 cm = static_cast<u64>(mod_pos(c, static_cast<i64>(m)));
  if (cm % p == 0) throw NonUnitInput("sqrt_mod_prime_power: p divides c");
  std::vector<u64> out;
  unit_sqrt(cm, p, k, m, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<i64> solve_tau2_congruence(const XiVector& xi, i64 tau1, i64 q0) {
  if (q0 < 1) throw std::invalid_argument("solve_tau2_congruence: q0 must be positive");
  const i64 g = gcd128(gcd128(static_cast<i128>(tau1) * xi[kXi1], static_cast<i128>(xi[kXi2]) * xi[kXi3]), q0);
  if (g != 1) throw PreconditionViolated("solve_tau2_congruence: gcd(tau1 xi1 xi2 xi3, q0) != 1");
  CongruenceSolver solver(xi, q0);
  std::vector<i64> out;
  solver.solve(tau1, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::direct: return "direct";
    case Strategy::residue: return "residue";
    case Strategy::automatic: return "auto";
  }
  return "unknown";
}

void EnumerationStats::add(const EnumerationStats& o) {
  e_count += o.e_count;
  xi_tuples += o.xi_tuples;
  tau1_values += o.tau1_values;
  tau2_candidates += o.tau2_candidates;
}

EnumerationStats enumerate_E_torsor(i64 bound, const EnumerationOptions& options) {
  if (bound < 1 || bound > kMaxBound) throw std::domain_error("height bound out of range");
  if (options.slack < 0) throw std::invalid_argument("slack must be non-negative");
  XiLoopTables tables{mobius_table(static_cast<u64>(isqrt(bound)))};
  std::vector<std::pair<i64, i64>> outer;
  for (i64 xi6 = 1, n6 = floor_root(bound, 6); xi6 <= n6; ++xi6)
    for (i64 xi5 = 1, n5 = floor_root(bound / (xi6 * xi6 * xi6 * xi6 * xi6 * xi6), 5); xi5 <= n5; ++xi5)
      if (tables.squarefree(xi5)) outer.emplace_back(xi6, xi5);

  std::mutex visit_mutex;
  const int threads = std::max(1, options.threads);
  std::vector<EnumerationStats> parts(static_cast<std::size_t>(threads));
  auto job = [&](int w) {
    Worker worker(bound, options, tables, visit_mutex);
    for (std::size_t i = static_cast<std::size_t>(w); i < outer.size(); i += static_cast<std::size_t>(threads))
      worker.run(outer[i].first, outer[i].second);
    parts[static_cast<std::size_t>(w)] = worker.stats;
  };
  if (threads == 1) {
    job(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(job, w);
    for (auto& t : pool) t.join();
  }
  EnumerationStats total;
  for (const auto& p : parts) total.add(p);
  return total;
}

i64 count_E_torsor(i64 bound, Strategy strategy, int threads) {
  EnumerationOptions opt;
  opt.strategy = strategy;
  opt.threads = threads;
  return enumerate_E_torsor(bound, opt).e_count;
}

CountReport count_total(i64 bound, Strategy strategy, int threads) {
  const auto start = std::chrono::steady_clock::now();
  CountReport r;
  r.bound = bound;
  r.e_count = count_E_torsor(bound, strategy, threads);
  const FamilyCounts f = family_counts(bound);
  r.conic_count = f.conic;
  r.x0zero_count = f.x0zero;
  r.x1zero_count = f.x1zero;
  r.total = 2 * r.e_count + r.family_total();
  r.method = strategy == Strategy::direct    ? CountMethod::torsor_direct
             : strategy == Strategy::residue ? CountMethod::torsor_residue
                                             : CountMethod::torsor_auto;
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace e6
