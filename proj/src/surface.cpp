#include "e6count/surface.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <thread>

#include "e6count/arith.hpp"

namespace e6 {

namespace {

i128 eval128(i128 x0, i128 x1, i128 x2, i128 x3) { return x1 * x2 * x2 + x2 * x0 * x0 + x3 * x3 * x3; }

// cube_step[n] = least r > 0 with n | r^3, i.e. prod p^ceil(e/3).
std::vector<i64> cube_steps(i64 n) {
  std::vector<i64> spf(static_cast<std::size_t>(n) + 1, 0);
  for (i64 i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    for (i64 j = i; j <= n; j += i)
      if (spf[j] == 0) spf[j] = i;
  }
  std::vector<i64> step(static_cast<std::size_t>(n) + 1, 1);
  for (i64 m = 2; m <= n; ++m) {
    i64 rest = m, r = 1;
    while (rest > 1) {
      const i64 p = spf[rest];
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      for (int k = 0; k < (e + 2) / 3; ++k) r *= p;
    }
    step[m] = r;
  }
  return step;
}

struct ScanTally {
  i64 e = 0, e_neg = 0, conic = 0, x0zero = 0, x1zero = 0;

  void add(const ScanTally& o) {
    e += o.e;
    e_neg += o.e_neg;
    conic += o.conic;
    x0zero += o.x0zero;
    x1zero += o.x1zero;
  }
};

// Every canonical point with x2 in the worker's residue class and
// x0 in [x0_min, B]. Visitor sees only points with all coordinates nonzero
// and x0 > 0.
template <class Visit>
ScanTally scan(i64 bound, i64 x0_min, const std::vector<i64>& step, int worker, int workers,
               Visit&& visit) {
  ScanTally tally;
  const i128 B = bound;
  for (i64 x2 = 1 + worker; x2 <= bound; x2 += workers) {
    const i128 x2sq = static_cast<i128>(x2) * x2;
    const i64 r = step[x2];
    for (i64 x0 = x0_min; x0 <= bound; ++x0) {
      const i128 base = static_cast<i128>(x2) * x0 * x0;
      // |x2 x0^2 + x3^3| <= B x2^2, with |x3| <= B.
      i128 lo = std::max(ceil_cbrt(-B * x2sq - base), -B);
      const i128 hi = std::min(floor_cbrt(B * x2sq - base), B);
      if (lo > hi) continue;
      lo = ceil_div(lo, r) * r;
      for (i128 x3 = lo; x3 <= hi; x3 += r) {
        const i128 num = base + x3 * x3 * x3;
        if (num % x2sq != 0) continue;
        const i128 x1 = -num / x2sq;
        if (abs128(x1) > B) continue;
        if (gcd128(gcd128(x0, x1), gcd128(x2, x3)) != 1) continue;
        // [0:0:1:0] needs a = 0 in every family parametrization; not counted.
        if (x0 == 0 && x3 == 0) continue;
        if (x3 == 0) {
          ++tally.conic;
        } else if (x0 == 0) {
          ++tally.x0zero;
        } else if (x1 == 0) {
          ++tally.x1zero;
        } else if (x0 > 0) {
          ++tally.e;
          visit(SurfacePoint{x0, static_cast<i64>(x1), x2, static_cast<i64>(x3)});
        } else {
          ++tally.e_neg;
        }
      }
    }
  }
  return tally;
}

void check_bound(i64 bound) {
  if (bound < 1 || bound > kMaxBound) throw std::domain_error("height bound out of range");
}

template <class Job>
ScanTally run_workers(int threads, Job&& job) {
  threads = std::max(threads, 1);
  if (threads == 1) return job(0, 1);
  std::vector<ScanTally> parts(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&, w] { parts[w] = job(w, threads); });
  for (auto& t : pool) t.join();
  ScanTally total;
  for (const auto& p : parts) total.add(p);
  return total;
}

}  // namespace

std::string to_string(const SurfacePoint& p) {
  return "(" + std::to_string(p.x0) + "," + std::to_string(p.x1) + "," + std::to_string(p.x2) +
         "," + std::to_string(p.x3) + ")";
}

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::naive: return "naive";
    case CountMethod::torsor_direct: return "torsor-direct";
    case CountMethod::torsor_residue: return "torsor-residue";
    case CountMethod::torsor_auto: return "torsor-auto";
  }
  return "unknown";
}

Int256 eval_surface(i64 x0, i64 x1, i64 x2, i64 x3) {
  const Int256 a = x0, b = x1, c = x2, d = x3;
  return b * c * c + c * a * a + d * d * d;
}

SurfacePoint canonicalize(i64 x0, i64 x1, i64 x2, i64 x3) {
  if (x0 == 0 && x1 == 0 && x2 == 0 && x3 == 0)
    throw RejectedPoint(Rejection::zero_vector, "zero vector is not a projective point");
  if (eval_surface(x0, x1, x2, x3) != 0)
    throw RejectedPoint(Rejection::off_surface, "point is not on the surface");
  if (x2 == 0 && x3 == 0) throw RejectedPoint(Rejection::on_line, "point lies on the line x2 = x3 = 0");
  const i64 g = gcd_i64(gcd_i64(x0, x1), gcd_i64(x2, x3));
  SurfacePoint p{x0 / g, x1 / g, x2 / g, x3 / g};
  // x2 = 0 forces x3 = 0 on the surface, so x2 != 0 here.
  if (p.x2 < 0) p = {-p.x0, -p.x1, -p.x2, -p.x3};
  return p;
}

i64 height(const SurfacePoint& p) {
  return std::max({std::abs(p.x0), std::abs(p.x1), std::abs(p.x2), std::abs(p.x3)});
}

void enumerate_E(i64 bound, const std::function<void(const SurfacePoint&)>& visit, int threads) {
  check_bound(bound);
  const auto step = cube_steps(bound);
  std::mutex m;
  run_workers(threads, [&](int w, int n) {
    return scan(bound, 1, step, w, n, [&](const SurfacePoint& p) {
      if (n == 1) {
        visit(p);
      } else {
        std::lock_guard lock(m);
        visit(p);
      }
    });
  });
}

std::vector<SurfacePoint> enumerate_E(i64 bound) {
  std::vector<SurfacePoint> out;
  enumerate_E(bound, [&](const SurfacePoint& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

CountReport count_naive(i64 bound, int threads) {
  check_bound(bound);
  const auto start = std::chrono::steady_clock::now();
  const auto step = cube_steps(bound);
  const ScanTally t = run_workers(threads, [&](int w, int n) {
    return scan(bound, -bound, step, w, n, [](const SurfacePoint&) {});
  });
  // x0 -> -x0 maps the all-nonzero points with x0 < 0 onto E(B).
  if (t.e != t.e_neg) throw std::logic_error("naive count: x0 sign symmetry violated");
  CountReport r;
  r.bound = bound;
  r.e_count = t.e;
  r.conic_count = t.conic;
  r.x0zero_count = t.x0zero;
  r.x1zero_count = t.x1zero;
  r.total = t.e + t.e_neg + t.conic + t.x0zero + t.x1zero;
  r.method = CountMethod::naive;
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

FamilyCounts family_counts(i64 bound) {
  check_bound(bound);
  const i64 sq = static_cast<i64>(isqrt(bound));
  const i64 cb = static_cast<i64>(floor_cbrt(bound));
  const i64 qcb = coprime_pairs(cb);
  return {2 * coprime_pairs(sq), 2 * qcb, 2 * qcb};
}

i64 count_mod_p(i64 p) {
  if (!is_prime(static_cast<u64>(p))) throw std::domain_error("count_mod_p: p must be prime");
  i64 count = 0;
  auto on_surface = [&](i64 a, i64 b, i64 c, i64 d) { return mod_pos(eval128(a, b, c, d), p) == 0; };
  // Representatives with leading nonzero coordinate equal to 1.
  for (i64 b = 0; b < p; ++b)
    for (i64 c = 0; c < p; ++c)
      for (i64 d = 0; d < p; ++d) count += on_surface(1, b, c, d);
  for (i64 c = 0; c < p; ++c)
    for (i64 d = 0; d < p; ++d) count += on_surface(0, 1, c, d);
  for (i64 d = 0; d < p; ++d) count += on_surface(0, 0, 1, d);
  count += on_surface(0, 0, 0, 1);
  return count;
}

}  // namespace e6
