#include "multlab/structure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "multlab/kahan.hpp"

namespace multlab::structure {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
}

double TransitionProfile::cut_log_for(int j) const {
  if (j < m || j > D + 1) throw RangeError("TransitionProfile: level outside [m, D+1]");
  if (j == m) return kInf;
  if (j == D + 1) return base_log;
  return cut_logs[static_cast<std::size_t>(j - m - 1)];
}

bool TransitionProfile::monotone() const {
  double prev = base_log;
  for (std::size_t k = cut_logs.size(); k-- > 0;) {
    if (cut_logs[k] < prev - 1e-12) return false;
    prev = cut_logs[k];
  }
  return true;
}

std::vector<double> geometric_grid(double lo, double hi, double ratio) {
  if (!(lo > 0 && hi >= lo)) throw RangeError("geometric_grid: need 0 < lo <= hi");
  if (!(ratio > 1.0)) throw RangeError("geometric_grid: ratio must exceed 1");
  std::vector<double> out;
  for (double y = lo; y < hi * (1.0 - 1e-12); y *= ratio) out.push_back(y);
  out.push_back(hi);
  return out;
}

TransitionProfile transition_points(const MultFunc& f, const ClassParams& params,
                                    int m, const std::vector<double>& y_grid, u64 X,
                                    const ScanConfig& cfg) {
  if (m < 0 || m > params.D) throw RangeError("transition_points: need 0 <= m <= D");
  if (y_grid.empty() || y_grid.front() < params.Q * (1.0 - 1e-9))
    throw RangeError("transition_points: y_grid must start at Q");
  for (std::size_t i = 0; i + 1 < y_grid.size(); ++i) {
    if (!(y_grid[i] < y_grid[i + 1]))
      throw RangeError("transition_points: y_grid must strictly ascend");
    if (y_grid[i + 1] / y_grid[i] > 1.2 * (1.0 + 1e-9))
      throw RangeError("transition_points: y_grid ratio must be <= 1.2");
  }
  if (X > cfg.ceiling) throw CapacityError("transition_points: X exceeds ceiling");

  TransitionProfile prof;
  prof.m = m;
  prof.D = params.D;
  prof.Q = params.Q;
  prof.base_log = std::log(params.Q);
  prof.provenance = Provenance::constructed;

  const int steps = params.D - m;
  if (steps == 0) return prof;  // m = D: no finite cut points

  const double cap_log = std::log(static_cast<double>(std::min<u64>(X, cfg.ceiling)));
  MultFunc g = (m == 0) ? f : multfun::convolve(multfun::tau_k(m), f);
  g.set_params(params);

  // one grid evaluation per inductive step, each a single sieve pass
  double Yk_log = 0.0;
  for (int k = 1; k <= steps; ++k) {
    const cplx s = (k == 1) ? cplx(1.0, 0.0) : cplx(1.0 + 1.0 / Yk_log, 0.0);
    MultFunc h = (k == 1) ? g : multfun::convolve(multfun::tau_k(k - 1), g);
    if (k > 1) h.set_params(params);

    std::vector<double> ys;
    for (double y : y_grid)
      if (k == 1 || std::log(y) <= Yk_log * (1.0 + 1e-12)) ys.push_back(y);
    if (ys.empty()) ys.push_back(y_grid.front());

    std::vector<lseries::SeriesPoint> pts = lseries::L_grid(h, s, ys, X, cfg);

    MinimizerRecord rec;
    rec.step_k = k;
    rec.sigma = s.real();
    double best = kInf;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      const double absL = std::abs(pts[i].value);
      const double expo = absL > 0 ? std::max(1.0, 1.0 / absL) : kInf;
      const double cand = std::log(ys[i]) * expo;
      if (cand < best) {
        best = cand;
        best_i = i;
      }
    }
    rec.y_star = ys[best_i];
    rec.L_value = pts[best_i].value;
    rec.candidate_log = best;
    rec.at_grid_endpoint = (best_i == 0 || best_i + 1 == ys.size());

    double Znext_log = best;
    bool sat = false;
    if (Znext_log >= cap_log) {
      Znext_log = cap_log;
      sat = true;
    }
    double Ynext_log;
    if (k == 1) {
      Ynext_log = Znext_log;
    } else if (Znext_log >= Yk_log) {
      Ynext_log = Yk_log;  // case split: no new finite cut
      rec.case_split_kept_Yk = true;
      sat = prof.saturated.back();
    } else {
      Ynext_log = Znext_log;
    }
    prof.cut_logs.push_back(Ynext_log);
    prof.saturated.push_back(sat);
    prof.diagnostics.push_back(rec);
    Yk_log = Ynext_log;
  }
  if (!prof.monotone())
    throw InternalCheckError("transition_points: cut points not monotone");
  return prof;
}

StructureReport verify_structure(const MultFunc& f, const TransitionProfile& profile,
                                 int subintervals_per_level, u64 X, double threshold,
                                 const ScanConfig& cfg) {
  if (subintervals_per_level < 1)
    throw RangeError("verify_structure: need at least one sub-interval per level");
  if (X > cfg.ceiling) throw CapacityError("verify_structure: X exceeds ceiling");
  StructureReport rep;
  rep.m = profile.m;
  rep.D = profile.D;
  rep.threshold = threshold;

  const double cap_log = std::log(static_cast<double>(X));

  // cells over all levels share one prime stream
  struct Level {
    int j;
    std::vector<double> edges_log;
  };
  std::vector<Level> levels;
  for (int j = profile.m; j <= profile.D; ++j) {
    double lo_log = profile.cut_log_for(j + 1);
    double hi_log = std::min(profile.cut_log_for(j), cap_log);
    if (!(hi_log > lo_log + 1e-9)) {
      rep.warnings.push_back("empty level j=" + std::to_string(j));
      continue;
    }
    Level lv;
    lv.j = j;
    const int s = subintervals_per_level;
    for (int i = 0; i <= s; ++i)
      lv.edges_log.push_back(lo_log + (hi_log - lo_log) * i / s);
    levels.push_back(std::move(lv));
  }

  // per-cell compensated sums, one ascending pass
  std::vector<std::vector<Kahan>> cell(levels.size());
  for (std::size_t li = 0; li < levels.size(); ++li)
    cell[li].assign(levels[li].edges_log.size() - 1, Kahan{});
  double max_hi = 0;
  for (auto& lv : levels) max_hi = std::max(max_hi, lv.edges_log.back());
  if (!levels.empty()) {
    u64 hi_n = static_cast<u64>(std::floor(std::exp(max_hi))) + 1;
    hi_n = std::min(hi_n, X + 1);
    primes::for_each_prime(2, hi_n, cfg, [&](u64 p) {
      const double lp = std::log(static_cast<double>(p));
      for (std::size_t li = 0; li < levels.size(); ++li) {
        const auto& e = levels[li].edges_log;
        if (lp <= e.front() || lp > e.back()) continue;  // (lo, hi] cells
        std::size_t c =
            static_cast<std::size_t>(std::lower_bound(e.begin(), e.end(), lp) - e.begin());
        if (c == 0 || c > cell[li].size()) continue;
        cell[li][c - 1].add((f.at(p, 1).real() + levels[li].j) / static_cast<double>(p));
      }
    });
  }

  for (std::size_t li = 0; li < levels.size(); ++li) {
    const auto& e = levels[li].edges_log;
    double prefix = 0.0;
    for (std::size_t c = 0; c + 1 < e.size(); ++c) {
      const double v = cell[li][c].value();
      rep.records.push_back({levels[li].j, std::exp(e[c]), std::exp(e[c + 1]), v, false});
      prefix += v;
      if (c > 0)
        rep.records.push_back({levels[li].j, std::exp(e[0]), std::exp(e[c + 1]), prefix, true});
    }
  }
  for (auto& r : rep.records) rep.max_abs = std::max(rep.max_abs, std::abs(r.value));
  rep.pass = rep.max_abs <= threshold;
  return rep;
}

TransitionProfile zero_to_intervals(const lseries::ZeroSet& zeros, double Q, double c0) {
  if (!(c0 > 0 && c0 <= 1)) throw RangeError("zero_to_intervals: c0 must be in (0,1]");
  TransitionProfile prof;
  prof.provenance = Provenance::from_zeros;
  prof.Q = Q;
  prof.base_log = std::log(Q) / c0;  // log Q^{1/c0} = 1/|rho_{d+1} - 1|

  std::vector<double> dists;  // |rho - 1| for rho != 1, multiplicity-expanded
  int m = 0;
  for (const auto& z : zeros.zeros) {
    const double d = std::abs(z.rho - cplx(1.0, 0.0));
    if (d <= 1e-6) {
      m += z.multiplicity;
    } else {
      for (int i = 0; i < z.multiplicity; ++i) dists.push_back(d);
    }
  }
  std::sort(dists.begin(), dists.end());
  prof.m = m;
  prof.D = m + static_cast<int>(dists.size());  // this is d
  for (double d : dists) {
    prof.cut_logs.push_back(1.0 / d);
    prof.saturated.push_back(false);
  }
  // The outer convention e^{log Q / c0} only makes sense below the innermost
  // cut; a zero right at the ball edge would otherwise invert the order.
  if (!prof.cut_logs.empty())
    prof.base_log = std::min(prof.base_log, prof.cut_logs.back());
  if (!prof.monotone())
    throw InternalCheckError("zero_to_intervals: cuts not monotone");
  return prof;
}

namespace {

double simpson(const std::function<double(double)>& g, double a, double m, double b,
               double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& g, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = g(lm), frm = g(rm);
  const double left = simpson(g, a, lm, m, fa, flm, fm);
  const double right = simpson(g, m, rm, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(g, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         adaptive_simpson(g, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

}  // namespace

double heuristic_integral(cplx rho, double lo, double hi, double abs_tol) {
  const double e = std::exp(1.0);
  if (lo < e * (1.0 - 1e-12)) throw RangeError("heuristic_integral: lo must be >= e");
  if (hi < lo) throw RangeError("heuristic_integral: hi must be >= lo");
  if (hi > 1e300) throw RangeError("heuristic_integral: hi above 1e300");
  const double u0 = std::log(lo), u1 = std::log(hi);
  if (u1 - u0 < 1e-15) return 0.0;
  const double a = rho.real() - 1.0;
  const double b = rho.imag();
  auto g = [a, b](double u) { return std::exp(a * u) * std::cos(b * u) / u; };

  // pre-split so the oscillation is resolved before adapting
  const double panel = std::min(2.0, kPi / (4.0 * std::max({std::abs(a), std::abs(b), 0.5})));
  const int n_panels = std::max(1, static_cast<int>(std::ceil((u1 - u0) / panel)));
  Kahan total;
  for (int i = 0; i < n_panels; ++i) {
    const double x0 = u0 + (u1 - u0) * i / n_panels;
    const double x1 = u0 + (u1 - u0) * (i + 1) / n_panels;
    const double xm = 0.5 * (x0 + x1);
    const double f0 = g(x0), fm = g(xm), f1 = g(x1);
    const double whole = simpson(g, x0, xm, x1, f0, fm, f1);
    total.add(adaptive_simpson(g, x0, x1, f0, fm, f1, whole, abs_tol / n_panels, 40));
  }
  return total.value();
}

std::vector<HeuristicRow> heuristic_demo(const std::vector<cplx>& zeros,
                                         const std::vector<std::pair<double, double>>& intervals,
                                         const MultFunc* f, const ScanConfig& cfg) {
  std::vector<HeuristicRow> rows;
  rows.reserve(intervals.size());
  for (auto [lo, hi] : intervals) {
    HeuristicRow row;
    row.lo = lo;
    row.hi = hi;
    Kahan pred;
    for (cplx rho : zeros) pred.add(-heuristic_integral(rho, lo, hi));
    row.prediction = pred.value();
    if (f && hi <= static_cast<double>(cfg.ceiling))
      row.measured = sums::prime_log_sum(*f, lo, hi, 0, cfg);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace multlab::structure
