#include "multlab/sums.hpp"

#include <algorithm>
#include <cmath>

#include "multlab/kahan.hpp"

namespace multlab::sums {

namespace {

struct Block {
  u64 lo = 0, hi = 0;
  std::vector<cplx> val;
  std::vector<u64> pmin;      // empty unless tracked
  std::vector<char> alive;    // empty unless sifting
};

double pi_estimate(double x) {
  if (x < 3) return x >= 2 ? 1 : 0;
  return x / std::max(1.0, std::log(x) - 1.0);
}

}  // namespace

SiftedRoute sifted_route(u64 x, double y) {
  if (y < 2) return SiftedRoute::full;
  if (y * y >= static_cast<double>(x)) return SiftedRoute::primes_only;
  if (pi_estimate(static_cast<double>(x)) - pi_estimate(y) <= 1e6)
    return SiftedRoute::enumeration;
  return SiftedRoute::sieve;
}

void multiplicative_scan(const MultFunc& f, u64 x, double sift_y,
                         const ScanConfig& cfg, bool track_pmin,
                         const TermConsumer& consume) {
  if (x < 1) throw RangeError("multiplicative_scan: x must be >= 1");
  if (x > cfg.ceiling) throw CapacityError("multiplicative_scan: x exceeds ceiling");

  const u64 root = static_cast<u64>(std::sqrt(static_cast<double>(x)));
  const u64 mark_limit =
      sift_y >= 2 ? std::min<u64>(static_cast<u64>(sift_y), x) : 0;
  const bool sifting = sift_y >= 2;
  auto base = primes::small_primes(std::max(root, mark_limit));

  auto produce = [&](u64, u64 a, u64 b) {
    Block blk;
    blk.lo = a;
    blk.hi = b;
    const u64 len = b - a;
    blk.val.assign(len, cplx(1.0, 0.0));
    std::vector<u64> rem(len);
    for (u64 i = 0; i < len; ++i) rem[i] = a + i;
    if (track_pmin) blk.pmin.assign(len, 0);
    if (sifting) blk.alive.assign(len, 1);

    // Dead-marking primes (p <= sift level) come before valuation primes in
    // the ascending base list, so alive[] is settled before any f() call.
    for (u64 pp : base) {
      const u64 p = pp;
      const u64 first = ((a + p - 1) / p) * p;
      if (first >= b) continue;
      if (sifting && p <= mark_limit) {
        for (u64 m = first; m < b; m += p) blk.alive[m - a] = 0;
        continue;
      }
      if (p > root) break;  // base may extend past sqrt(x) for dead-marking only
      const cplx fp1 = f.at(p, 1);
      for (u64 m = first; m < b; m += p) {
        const u64 i = m - a;
        if (sifting && !blk.alive[i]) continue;
        u64 r = rem[i] / p;
        int e = 1;
        while (r % p == 0) {
          r /= p;
          ++e;
        }
        rem[i] = r;
        blk.val[i] *= (e == 1) ? fp1 : f.at(p, e);
        if (track_pmin && blk.pmin[i] == 0) blk.pmin[i] = p;
      }
    }

    for (u64 i = 0; i < len; ++i) {
      if (sifting && !blk.alive[i]) continue;
      const u64 r = rem[i];
      if (r > 1) {
        blk.val[i] *= f.at(r, 1);
        if (track_pmin && blk.pmin[i] == 0) blk.pmin[i] = r;
      }
    }
    return blk;
  };

  primes::ordered_segments<Block>(
      1, x + 1, cfg.segment_size, cfg.threads, produce, [&](Block&& blk) {
        for (u64 i = 0; i < blk.hi - blk.lo; ++i) {
          if (!blk.alive.empty() && !blk.alive[i]) continue;
          consume(blk.lo + i, blk.val[i], blk.pmin.empty() ? 0 : blk.pmin[i]);
        }
      });
}

namespace {

void enumerate_rough(const MultFunc& f, u64 x, const std::vector<u64>& ps,
                     std::size_t start, u64 m, cplx val, const TermConsumer& consume) {
  for (std::size_t j = start; j < ps.size(); ++j) {
    const u64 p = ps[j];
    if (p > x / m) break;
    u64 q = m;
    for (int e = 1;; ++e) {
      if (q > x / p) break;
      q *= p;
      const cplx v = val * f.at(p, e);
      consume(q, v, 0);
      enumerate_rough(f, x, ps, j + 1, q, v, consume);
    }
  }
}

}  // namespace

void sifted_scan_route(const MultFunc& f, u64 x, double y, SiftedRoute route,
                       const ScanConfig& cfg, const TermConsumer& consume) {
  if (x < 1) throw RangeError("sifted_scan: x must be >= 1");
  if (x > cfg.ceiling) throw CapacityError("sifted_scan: x exceeds ceiling");
  switch (route) {
    case SiftedRoute::full:
      multiplicative_scan(f, x, 0.0, cfg, false, consume);
      return;
    case SiftedRoute::primes_only: {
      consume(1, 1.0, 0);
      u64 lo = static_cast<u64>(y) + 1;
      if (lo < 2) lo = 2;
      if (lo <= x)
        primes::for_each_prime(lo, x + 1, cfg,
                               [&](u64 p) { consume(p, f.at(p, 1), p); });
      return;
    }
    case SiftedRoute::enumeration: {
      consume(1, 1.0, 0);
      u64 lo = static_cast<u64>(y) + 1;
      if (lo < 2) lo = 2;
      std::vector<u64> ps;
      if (lo <= x) ps = primes::primes_in(lo, x + 1, cfg.segment_size);
      enumerate_rough(f, x, ps, 0, 1, 1.0, consume);
      return;
    }
    case SiftedRoute::sieve:
      multiplicative_scan(f, x, y, cfg, false, consume);
      return;
  }
}

void sifted_scan(const MultFunc& f, u64 x, double y, const ScanConfig& cfg,
                 const TermConsumer& consume) {
  sifted_scan_route(f, x, y, sifted_route(x, y), cfg, consume);
}

cplx partial_sum(const MultFunc& f, u64 x, const ScanConfig& cfg) {
  KahanComplex acc;
  multiplicative_scan(f, x, 0.0, cfg, false,
                      [&](u64, cplx v, u64) { acc.add(v); });
  return acc.value();
}

std::vector<cplx> partial_sum_grid(const MultFunc& f, const std::vector<u64>& xs,
                                   const ScanConfig& cfg) {
  std::vector<cplx> out(xs.size());
  if (xs.empty()) return out;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (xs[i] > xs[i + 1]) throw RangeError("partial_sum_grid: xs must ascend");
  KahanComplex acc;
  std::size_t next = 0;
  multiplicative_scan(f, xs.back(), 0.0, cfg, false, [&](u64 n, cplx v, u64) {
    while (next < xs.size() && n > xs[next]) out[next++] = acc.value();
    acc.add(v);
  });
  while (next < xs.size()) out[next++] = acc.value();
  return out;
}

cplx sifted_sum(const MultFunc& f, u64 x, double y, const ScanConfig& cfg) {
  if (y >= 2 && static_cast<double>(x) < y) {
    // only n = 1 survives
    return 1.0;
  }
  KahanComplex acc;
  sifted_scan(f, x, y, cfg, [&](u64, cplx v, u64) { acc.add(v); });
  return acc.value();
}

double prime_log_sum(const MultFunc& f, double lo, double hi, int j,
                     const ScanConfig& cfg) {
  if (j < 0) throw RangeError("prime_log_sum: j must be >= 0");
  if (hi > static_cast<double>(cfg.ceiling))
    throw CapacityError("prime_log_sum: hi exceeds ceiling");
  Kahan acc;
  if (hi > lo) {
    u64 a = static_cast<u64>(std::floor(lo)) + 1;  // (lo, hi]
    u64 b = static_cast<u64>(std::floor(hi)) + 1;
    if (a < 2) a = 2;
    if (b > a)
      primes::for_each_prime(a, b, cfg, [&](u64 p) {
        acc.add((f.at(p, 1).real() + j) / static_cast<double>(p));
      });
  }
  return acc.value();
}

cplx chebyshev_sum(const MultFunc& f, u64 x, const ScanConfig& cfg) {
  if (x > cfg.ceiling) throw CapacityError("chebyshev_sum: x exceeds ceiling");
  KahanComplex acc;
  if (x >= 2)
    primes::for_each_prime(2, x + 1, cfg, [&](u64 p) {
      acc.add(f.at(p, 1) * std::log(static_cast<double>(p)));
    });
  return acc.value();
}

SmallnessReport smallness_scan(const MultFunc& f, const multfun::ClassParams& params,
                               const std::vector<u64>& grid, const ScanConfig& cfg) {
  SmallnessReport rep;
  std::vector<cplx> sums = partial_sum_grid(f, grid, cfg);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double normalized = std::abs(sums[i]) / params.sum_bound(static_cast<double>(grid[i]));
    rep.per_x.emplace_back(grid[i], normalized);
    if (normalized > rep.max_normalized) {
      rep.max_normalized = normalized;
      rep.witness_x = grid[i];
    }
  }
  return rep;
}

}  // namespace multlab::sums
