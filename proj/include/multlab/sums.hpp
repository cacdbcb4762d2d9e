#ifndef MULTLAB_SUMS_HPP
#define MULTLAB_SUMS_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "multlab/multfun.hpp"
#include "multlab/primes.hpp"

namespace multlab::sums {

using multfun::cplx;
using multfun::MultFunc;
using primes::ScanConfig;
using u64 = std::uint64_t;

enum class SumKind { partial, sifted, prime_log, chebyshev, heuristic };

struct SumRecord {
  SumKind kind = SumKind::partial;
  std::string f_label;
  double lo = 0, hi = 0;
  int j_shift = 0;
  cplx value;
  u64 truncation = 0;
  double error_budget = 0.0;
};

// Streams (n, f(n), pmin) for every n in [1, x] with P^-(n) > sift_y, where
// pmin is the least prime factor (0 for n = 1). The sieve route visits n in
// ascending order; the enumeration route (sparse survivors) uses a fixed
// DFS order and reports pmin = 0. Either way the order depends only on
// (x, sift_y), never on segment size or thread count.
using TermConsumer = std::function<void(u64 n, cplx value, u64 pmin)>;

void multiplicative_scan(const MultFunc& f, u64 x, double sift_y,
                         const ScanConfig& cfg, bool track_pmin,
                         const TermConsumer& consume);

void sifted_scan(const MultFunc& f, u64 x, double y, const ScanConfig& cfg,
                 const TermConsumer& consume);

// Which route sifted_scan takes; exposed so tests can cover both on overlap.
enum class SiftedRoute { full, primes_only, enumeration, sieve };
SiftedRoute sifted_route(u64 x, double y);
void sifted_scan_route(const MultFunc& f, u64 x, double y, SiftedRoute route,
                       const ScanConfig& cfg, const TermConsumer& consume);

cplx partial_sum(const MultFunc& f, u64 x, const ScanConfig& cfg = {});

// M_f at several cut points in one pass; xs ascending.
std::vector<cplx> partial_sum_grid(const MultFunc& f, const std::vector<u64>& xs,
                                   const ScanConfig& cfg = {});

cplx sifted_sum(const MultFunc& f, u64 x, double y, const ScanConfig& cfg = {});

// sum over lo < p <= hi of (Re f(p) + j)/p
double prime_log_sum(const MultFunc& f, double lo, double hi, int j,
                     const ScanConfig& cfg = {});

cplx chebyshev_sum(const MultFunc& f, u64 x, const ScanConfig& cfg = {});

struct SmallnessReport {
  double max_normalized = 0.0;
  u64 witness_x = 0;
  std::vector<std::pair<u64, double>> per_x;  // (x, |M_f(x)| / bound(x))
};

SmallnessReport smallness_scan(const MultFunc& f, const multfun::ClassParams& params,
                               const std::vector<u64>& grid, const ScanConfig& cfg = {});

}  // namespace multlab::sums

#endif
