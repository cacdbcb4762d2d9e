#ifndef MULTLAB_LSERIES_HPP
#define MULTLAB_LSERIES_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "multlab/multfun.hpp"
#include "multlab/sums.hpp"

namespace multlab::lseries {

using multfun::ClassParams;
using multfun::cplx;
using multfun::MultFunc;
using sums::ScanConfig;
using u64 = std::uint64_t;

struct SeriesPoint {
  cplx s;
  double y = 0.0;  // sift level, 0 = none
  cplx value;
  std::optional<cplx> log_value;  // branch-tracked where applicable
  u64 truncation = 0;
  double tail_bound = 0.0;
  std::vector<std::string> warnings;
};

struct ZeroEntry {
  cplx rho;
  int multiplicity = 1;
};

struct ZeroSet {
  cplx center = cplx(1.0, 0.0);
  double radius = 0.0;
  std::vector<ZeroEntry> zeros;  // |rho - 1| ascending
  int total = 0;
};

// Tail budget from the declared class bound via partial summation; +inf when
// no parameters are available or the exponent has no positive margin.
double abel_tail_budget(const std::optional<ClassParams>& params, double y,
                        cplx s, int j, u64 X);

// log L_y(s,f) as the prime-power sum over p in (y, p_cutoff].
SeriesPoint log_L_truncated(const MultFunc& f, cplx s, double y, u64 p_cutoff,
                            const ScanConfig& cfg = {}, bool allow_sigma_one = false);

// Sifted Dirichlet sum over n <= X with P^-(n) > y.
SeriesPoint L_truncated(const MultFunc& f, cplx s, double y, u64 X,
                        const ScanConfig& cfg = {});

// j-th derivative: sum f(n) (-log n)^j / n^s over the same range.
SeriesPoint L_derivative(const MultFunc& f, cplx s, int j, double y, u64 X,
                         const ScanConfig& cfg = {});

// Abel representation s * int_1^X M_f(x) x^{-s-1} dx, exact over the step
// function, with the strong-class tail bound in closed form.
SeriesPoint L_continuation(const MultFunc& f, const ClassParams& params, cplx s,
                           u64 X, const ScanConfig& cfg = {});

// L_{y_i}(s,f) for an ascending grid of sift levels in one scan.
std::vector<SeriesPoint> L_grid(const MultFunc& f, cplx s,
                                const std::vector<double>& ys, u64 X,
                                const ScanConfig& cfg = {});

// Taylor model of the truncated Dirichlet series around s = 1; makes contour
// evaluation O(J) per point after one pass over n <= X.
struct DirichletTaylor {
  std::vector<cplx> mhat;  // mhat[j] = (1/j!) sum f(n)(-log n)^j / n
  cplx M_X;
  u64 X = 0;
  double log_X = 0.0;
  cplx eval(cplx s, cplx* deriv = nullptr) const;
  double taylor_remainder(double radius) const;
};

DirichletTaylor build_taylor(const MultFunc& f, u64 X, int J,
                             const ScanConfig& cfg = {});

struct FindZerosOptions {
  int initial_contour_points = 64;
  int max_contour_points = 1 << 16;
  double newton_tol = 1e-9;
  double contour_abs_floor = 1e-8;
};

// Argument-principle zero search in B(1, c0/log Q).
ZeroSet find_zeros(const MultFunc& f, const ClassParams& params, double c0, u64 X,
                   const ScanConfig& cfg = {}, const FindZerosOptions& opt = {});

// Smallest j in {0..D} whose j-th derivative at s=1 clears theta*(log Q)^j;
// returns D and sets *degenerate when everything is below threshold.
int detect_multiplicity(const MultFunc& f, const ClassParams& params, double theta,
                        u64 X, const ScanConfig& cfg = {}, bool* degenerate = nullptr);

// Bulk evaluation for the log|L_y| vs prime-sum comparison: one streaming
// pass over primes up to p_cutoff for all (y, z) pairs.
struct Lemma22Cell {
  double y = 0, z = 0;
  double re_log_L = 0;   // Re log L_y(1 + 1/log z, f), truncated at p_cutoff
  double prime_sum = 0;  // sum_{y < p <= z} Re f(p)/p
  double diff = 0;
};

std::vector<Lemma22Cell> lemma22_grid(const MultFunc& f,
                                      const std::vector<std::pair<double, double>>& yz,
                                      u64 p_cutoff, const ScanConfig& cfg = {});

}  // namespace multlab::lseries

#endif
