#include "multlab/lseries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "multlab/kahan.hpp"

namespace multlab::lseries {

namespace {
constexpr double kPi = std::numbers::pi;
}

// The class bounds carry inexplicit O_{A,D}(1) constants; this fixed stand-in
// keeps the budgets honest at desk scale (calibrated once against measured
// tails across the gallery).
inline constexpr double kBudgetConstant = 64.0;

double abel_tail_budget(const std::optional<ClassParams>& params, double y,
                        cplx s, int j, u64 X) {
  if (!params) return std::numeric_limits<double>::infinity();
  const ClassParams& P = *params;
  const double sigma = s.real();
  const double lX = std::log(static_cast<double>(X));
  double eps, logfac;
  if (y >= P.Q) {
    // sifted shape from the sieve lemma, with alpha = 1/2
    eps = 0.5 * P.eta / std::log(y);
    logfac = std::pow(std::log(y), P.A - 1.0);
  } else {
    eps = P.eta / std::log(P.Q);
    logfac = std::pow(std::log(P.Q), P.A - P.D - 1.0);
  }
  const double beta = sigma - 1.0 + eps;
  if (!(beta > 0)) return std::numeric_limits<double>::infinity();
  // C * B(X) X^{-sigma} (log X)^j [1 + (j/log X + |s|)/beta]
  const double BX_over = std::exp((1.0 - eps - sigma) * lX) * logfac / std::pow(lX, P.A);
  return kBudgetConstant * BX_over * std::pow(lX, j) * (1.0 + (j / lX + std::abs(s)) / beta);
}

namespace {

int k_stop_for(const MultFunc& f, u64 p) {
  // p^k <= 2^62 keeps the power exact in double-exponent range
  int ks = static_cast<int>(62.0 * std::numbers::ln2 / std::log(static_cast<double>(p)));
  return std::clamp(ks, 1, f.k_max());
}

// exponential integral E1(z), z > 0
double expint_E1(double z) {
  if (z <= 0) return std::numeric_limits<double>::infinity();
  if (z < 1.0) {
    double sum = -std::numbers::egamma - std::log(z);
    double term = 1.0;
    for (int k = 1; k <= 40; ++k) {
      term *= -z / k;
      sum -= term / k;
      if (std::abs(term / k) < 1e-18) break;
    }
    return sum;
  }
  // modified Lentz continued fraction
  double b = z + 1.0, c = 1e308, d = 1.0 / b, h = d;
  for (int i = 1; i <= 200; ++i) {
    double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return h * std::exp(-z);
}

// sum_{k > ks} D / (k p^{k sigma})
double lambda_k_remainder(int D, u64 p, int ks, double sigma) {
  double t = std::exp(-(ks + 1) * sigma * std::log(static_cast<double>(p)));
  double q = std::exp(-sigma * std::log(static_cast<double>(p)));
  return D * t / ((ks + 1) * (1.0 - q));
}

}  // namespace

SeriesPoint log_L_truncated(const MultFunc& f, cplx s, double y, u64 p_cutoff,
                            const ScanConfig& cfg, bool allow_sigma_one) {
  const double sigma = s.real();
  if (sigma < 1.0)
    throw DivergenceError("log_L_truncated: Re s < 1");
  if (sigma < 1.0 + 1e-12 && !allow_sigma_one)
    throw DivergenceError("log_L_truncated: Re s = 1 needs the slow-convergence override");
  if (p_cutoff > cfg.ceiling)
    throw CapacityError("log_L_truncated: p_cutoff exceeds ceiling");

  SeriesPoint out;
  out.s = s;
  out.y = y;
  out.truncation = p_cutoff;

  KahanComplex acc;
  Kahan k_rem;
  u64 lo = y < 2 ? 2 : static_cast<u64>(y) + 1;
  if (lo <= p_cutoff) {
    primes::for_each_prime(lo, p_cutoff + 1, cfg, [&](u64 p) {
      const double lp = std::log(static_cast<double>(p));
      const int ks = k_stop_for(f, p);
      multfun::LambdaSlice L = multfun::lambda_of(f, p, ks);
      for (int k = 1; k <= ks; ++k) {
        const cplx pw = std::exp(-static_cast<double>(k) * s * lp);
        acc.add(L.lam[k - 1] * pw / (k * lp));
      }
      if (ks < 40) k_rem.add(lambda_k_remainder(f.D(), p, ks, sigma));
    });
  }
  out.log_value = acc.value();
  out.value = std::exp(acc.value());

  // tail over p > cutoff: k=1 bounded through dpi(t) <= 1.3 dt/log t, k>=2
  // through the all-integers comparison
  double tail;
  if (sigma > 1.0 + 1e-12) {
    const double Xd = static_cast<double>(p_cutoff);
    tail = f.D() * (1.3 * expint_E1((sigma - 1.0) * std::log(Xd)) +
                    std::pow(Xd, 1.0 - 2.0 * sigma) / (2.0 * sigma - 1.0));
  } else {
    tail = std::numeric_limits<double>::infinity();
    out.warnings.push_back("sigma-at-one: tail not summable, truncated value only");
  }
  out.tail_bound = tail + k_rem.value();
  if (out.tail_bound > 0.1) out.warnings.push_back("cutoff-too-small: tail_bound > 0.1");
  return out;
}

SeriesPoint L_truncated(const MultFunc& f, cplx s, double y, u64 X,
                        const ScanConfig& cfg) {
  SeriesPoint out;
  out.s = s;
  out.y = y;
  out.truncation = X;
  if (X < 2) {
    out.value = 1.0;
    return out;
  }
  if (X > cfg.ceiling) throw CapacityError("L_truncated: X exceeds ceiling");

  KahanComplex acc;
  const bool s_real = s.imag() == 0.0;
  const double sigma = s.real();
  sums::sifted_scan(f, X, y, cfg, [&](u64 n, cplx v, u64) {
    if (n == 1) {
      acc.add(v);
      return;
    }
    const double ln = std::log(static_cast<double>(n));
    if (s_real) {
      acc.add(v * std::exp(-sigma * ln));
    } else {
      acc.add(v * std::exp(-s * ln));
    }
  });
  out.value = acc.value();
  out.tail_bound = abel_tail_budget(f.params(), y, s, 0, X);
  if (!std::isfinite(out.tail_bound))
    out.warnings.push_back("no tail estimate: class parameters unavailable or no margin");
  return out;
}

SeriesPoint L_derivative(const MultFunc& f, cplx s, int j, double y, u64 X,
                         const ScanConfig& cfg) {
  if (j < 0) throw RangeError("L_derivative: j must be >= 0");
  if (j > f.D()) throw RangeError("L_derivative: j must be <= D");
  if (s.real() < 1.0) throw DivergenceError("L_derivative: Re s < 1");
  if (j == 0) return L_truncated(f, s, y, X, cfg);
  SeriesPoint out;
  out.s = s;
  out.y = y;
  out.truncation = X;
  if (X < 2) {
    out.value = j == 0 ? 1.0 : 0.0;
    return out;
  }
  if (X > cfg.ceiling) throw CapacityError("L_derivative: X exceeds ceiling");

  KahanComplex acc;
  const bool s_real = s.imag() == 0.0;
  const double sigma = s.real();
  sums::sifted_scan(f, X, y, cfg, [&](u64 n, cplx v, u64) {
    if (n == 1) return;  // (-log 1)^j = 0 for j >= 1
    const double ln = std::log(static_cast<double>(n));
    const double wj = std::pow(-ln, j);
    if (s_real)
      acc.add(v * (wj * std::exp(-sigma * ln)));
    else
      acc.add(v * wj * std::exp(-s * ln));
  });
  out.value = acc.value();
  out.tail_bound = abel_tail_budget(f.params(), y, s, j, X);
  if (!std::isfinite(out.tail_bound))
    out.warnings.push_back("no tail estimate: class parameters unavailable or no margin");
  return out;
}

SeriesPoint L_continuation(const MultFunc& f, const ClassParams& params, cplx s,
                           u64 X, const ScanConfig& cfg) {
  if (params.eta < 1.0)
    throw RangeError("L_continuation: strong class (eta = 1) required");
  if (X > cfg.ceiling) throw CapacityError("L_continuation: X exceeds ceiling");
  const double lQ = std::log(params.Q);
  const double beta = s.real() - 1.0 + 1.0 / lQ;
  if (beta < 0)
    throw MarginError("L_continuation: Re s below the abscissa 1 - 1/log Q");

  SeriesPoint out;
  out.s = s;
  out.truncation = X;
  if (beta < 0.01 / lQ)
    out.warnings.push_back("close to abscissa: tail bound is weak");

  KahanComplex dir, mass;
  sums::multiplicative_scan(f, X, 0.0, cfg, false, [&](u64 n, cplx v, u64) {
    mass.add(v);
    if (n == 1)
      dir.add(v);
    else
      dir.add(v * std::exp(-s * std::log(static_cast<double>(n))));
  });
  const cplx MX = mass.value();
  const double lX = std::log(static_cast<double>(X));
  out.value = dir.value() - MX * std::exp(-s * lX);

  // |s| int_X^inf t^{-sigma - 1/log Q - 1} (log t)^{-(D+1)} dt, closed forms
  const double u0 = lX;
  double tail_a = std::numeric_limits<double>::infinity();
  if (beta > 0) tail_a = std::exp(-beta * u0) / (beta * std::pow(u0, params.D + 1));
  const double tail_b = std::exp(-beta * u0) / (params.D * std::pow(u0, params.D));
  out.tail_bound = std::abs(s) * std::min(tail_a, tail_b);
  return out;
}

std::vector<SeriesPoint> L_grid(const MultFunc& f, cplx s,
                                const std::vector<double>& ys, u64 X,
                                const ScanConfig& cfg) {
  for (std::size_t i = 0; i + 1 < ys.size(); ++i)
    if (!(ys[i] <= ys[i + 1])) throw RangeError("L_grid: ys must ascend");
  if (X > cfg.ceiling) throw CapacityError("L_grid: X exceeds ceiling");
  const std::size_t G = ys.size();
  std::vector<KahanComplex> bucket(G + 1);
  const bool s_real = s.imag() == 0.0;
  const double sigma = s.real();
  const bool s_is_one = s_real && sigma == 1.0;

  sums::multiplicative_scan(f, X, 0.0, cfg, true, [&](u64 n, cplx v, u64 pmin) {
    if (n == 1) return;  // added to every level at the end
    const std::size_t b = static_cast<std::size_t>(
        std::lower_bound(ys.begin(), ys.end(), static_cast<double>(pmin)) - ys.begin());
    if (b == 0) return;  // below every sift level
    cplx term;
    if (s_is_one)
      term = v / static_cast<double>(n);
    else if (s_real)
      term = v * std::exp(-sigma * std::log(static_cast<double>(n)));
    else
      term = v * std::exp(-s * std::log(static_cast<double>(n)));
    bucket[b].add(term);
  });

  std::vector<SeriesPoint> out(G);
  cplx suffix = 0.0;
  for (std::size_t i = G; i-- > 0;) {
    suffix += bucket[i + 1].value();
    out[i].s = s;
    out[i].y = ys[i];
    out[i].truncation = X;
    out[i].value = suffix + 1.0;  // n = 1 survives every sift
    out[i].tail_bound = abel_tail_budget(f.params(), ys[i], s, 0, X);
  }
  return out;
}

cplx DirichletTaylor::eval(cplx s, cplx* deriv) const {
  const cplx w = s - cplx(1.0, 0.0);
  cplx val = 0.0, der = 0.0;
  for (std::size_t j = mhat.size(); j-- > 0;) {
    if (j + 1 < mhat.size()) der = der * w + mhat[j + 1] * static_cast<double>(j + 1);
    val = val * w + mhat[j];
  }
  const cplx boundary = M_X * std::exp(-s * log_X);
  val -= boundary;
  if (deriv) *deriv = der + boundary * log_X;
  return val;
}

double DirichletTaylor::taylor_remainder(double radius) const {
  // geometric estimate from the last few coefficients
  double worst = 0.0;
  const std::size_t J = mhat.size();
  for (std::size_t j = J >= 5 ? J - 5 : 0; j < J; ++j)
    worst = std::max(worst, std::abs(mhat[j]) * std::pow(radius, static_cast<double>(j)));
  return 10.0 * worst;
}

DirichletTaylor build_taylor(const MultFunc& f, u64 X, int J, const ScanConfig& cfg) {
  if (X > cfg.ceiling) throw CapacityError("build_taylor: X exceeds ceiling");
  DirichletTaylor T;
  T.X = X;
  T.log_X = std::log(static_cast<double>(X));
  std::vector<KahanComplex> acc(J + 1);
  KahanComplex mass;
  std::vector<double> inv_j(J + 1, 1.0);
  for (int j = 1; j <= J; ++j) inv_j[j] = 1.0 / j;

  sums::multiplicative_scan(f, X, 0.0, cfg, false, [&](u64 n, cplx v, u64) {
    mass.add(v);
    if (n == 1) {
      acc[0].add(v);
      return;
    }
    const double t = -std::log(static_cast<double>(n));
    const cplx base = v / static_cast<double>(n);
    double tj = 1.0;
    acc[0].add(base);
    for (int j = 1; j <= J; ++j) {
      tj *= t * inv_j[j];
      acc[j].add(base * tj);
    }
  });
  T.M_X = mass.value();
  T.mhat.resize(J + 1);
  for (int j = 0; j <= J; ++j) T.mhat[j] = acc[j].value();
  return T;
}

// ---------------------------------------------------------------------------
// winding machinery
// ---------------------------------------------------------------------------

namespace {

struct ContourNearZero {
  cplx where;
};

struct WindingScan {
  const DirichletTaylor* T;
  double abs_floor;
  double min_abs = std::numeric_limits<double>::max();

  cplx probe(cplx s) {
    cplx v = T->eval(s);
    double a = std::abs(v);
    min_abs = std::min(min_abs, a);
    if (a < abs_floor) throw ContourNearZero{s};
    return v;
  }

  // accumulated phase change between two curve points, refining until each
  // step turns by at most pi/4
  double phase_between(const std::function<cplx(double)>& gamma, double t0, cplx z0,
                       double t1, cplx z1, int depth) {
    double d = std::arg(z1 / z0);
    if (std::abs(d) <= kPi / 4) return d;
    if (depth > 48) throw WindingError("winding: phase step failed to settle");
    double tm = 0.5 * (t0 + t1);
    cplx zm = probe(gamma(tm));
    return phase_between(gamma, t0, z0, tm, zm, depth + 1) +
           phase_between(gamma, tm, zm, t1, z1, depth + 1);
  }

  // closed curve gamma : [0,1] -> C, gamma(0) = gamma(1)
  int closed_winding(const std::function<cplx(double)>& gamma, int n_init) {
    std::vector<double> ts(n_init);
    std::vector<cplx> zs(n_init);
    for (int i = 0; i < n_init; ++i) {
      ts[i] = static_cast<double>(i) / n_init;
      zs[i] = probe(gamma(ts[i]));
    }
    double total = 0.0;
    for (int i = 0; i < n_init; ++i) {
      int j = (i + 1) % n_init;
      double t1 = i + 1 == n_init ? 1.0 : ts[j];
      total += phase_between(gamma, ts[i], zs[i], t1, zs[j], 0);
    }
    double w = total / (2 * kPi);
    double rounded = std::round(w);
    if (std::abs(w - rounded) > 0.1)
      throw WindingError("winding: not an integer within 0.1");
    return static_cast<int>(rounded);
  }
};

std::function<cplx(double)> circle_path(cplx c, double r) {
  return [c, r](double t) {
    double th = 2 * kPi * t;
    return c + r * cplx(std::cos(th), std::sin(th));
  };
}

std::function<cplx(double)> rect_path(double x0, double x1, double y0, double y1) {
  return [=](double t) -> cplx {
    double u = t * 4.0;
    if (u < 1) return {x0 + (x1 - x0) * u, y0};
    if (u < 2) return {x1, y0 + (y1 - y0) * (u - 1)};
    if (u < 3) return {x1 - (x1 - x0) * (u - 2), y1};
    return {x0, y1 - (y1 - y0) * (u - 3)};
  };
}

struct Cell {
  double x0, x1, y0, y1;
  double half() const { return 0.5 * std::max(x1 - x0, y1 - y0); }
};

// distance from the ball center (1,0) to the cell
double cell_distance_to_one(const Cell& c) {
  double dx = std::max({c.x0 - 1.0, 1.0 - c.x1, 0.0});
  double dy = std::max({c.y0 - 0.0, 0.0 - c.y1, 0.0});
  return std::hypot(dx, dy);
}

int rect_winding(WindingScan& scan, const Cell& c, int n_init) {
  return scan.closed_winding(rect_path(c.x0, c.x1, c.y0, c.y1), n_init);
}

}  // namespace

ZeroSet find_zeros(const MultFunc& f, const ClassParams& params, double c0, u64 X,
                   const ScanConfig& cfg, const FindZerosOptions& opt) {
  if (!(c0 > 0.0 && c0 <= 1.0)) throw RangeError("find_zeros: c0 must be in (0,1]");
  if (params.eta < 1.0) throw RangeError("find_zeros: strong class (eta = 1) required");
  const double r0 = c0 / std::log(params.Q);

  DirichletTaylor T = build_taylor(f, X, 56, cfg);

  // main contour; perturb radius by +-5% when it runs through a zero
  const double radius_factors[4] = {1.0, 1.05, 0.95, 1.10};
  double r = r0;
  int count = -1;
  std::string last_err;
  for (double fac : radius_factors) {
    r = r0 * fac;
    WindingScan scan{&T, opt.contour_abs_floor};
    try {
      count = scan.closed_winding(circle_path(1.0, r), opt.initial_contour_points);
      break;
    } catch (const ContourNearZero&) {
      last_err = "contour through zero";
      continue;
    }
  }
  if (count < 0) throw ContourError("find_zeros: " + last_err + " after 3 retries");

  ZeroSet out;
  out.radius = r;
  if (count == 0) return out;

  // Quadtree over the circumscribing square. Split points get nudged when an
  // edge runs near a zero, and child counts must re-add to the parent count.
  WindingScan scan{&T, 1e-13};
  std::vector<std::pair<Cell, int>> leaves;
  Cell root{1.0 - 1.02 * r, 1.0 + 1.02 * r, -1.02 * r, 1.02 * r};
  int root_w = -1;
  for (double grow : {1.0, 1.01, 0.99, 1.02}) {
    Cell c{1.0 - 1.02 * r * grow, 1.0 + 1.02 * r * grow, -1.02 * r * grow,
           1.02 * r * grow};
    try {
      root_w = rect_winding(scan, c, 8);
      root = c;
      break;
    } catch (const ContourNearZero&) {
      continue;
    }
  }
  if (root_w < 0) throw ContourError("find_zeros: bounding square kept hitting a zero");

  const double leaf_half = r * 5e-4;
  std::vector<std::pair<Cell, int>> work{{root, root_w}};
  const double fracs[5] = {0.5, 0.53, 0.47, 0.56, 0.44};
  while (!work.empty()) {
    auto [c, w] = work.back();
    work.pop_back();
    if (w == 0) continue;
    if (cell_distance_to_one(c) > r * (1.0 + 1e-6)) continue;
    if (c.half() <= leaf_half) {
      leaves.push_back({c, w});
      continue;
    }
    bool split_ok = false;
    for (double frac : fracs) {
      const double xm = c.x0 + (c.x1 - c.x0) * frac;
      const double ym = c.y0 + (c.y1 - c.y0) * frac;
      Cell kids[4] = {{c.x0, xm, c.y0, ym},
                      {xm, c.x1, c.y0, ym},
                      {c.x0, xm, ym, c.y1},
                      {xm, c.x1, ym, c.y1}};
      int ws[4];
      try {
        int sum = 0;
        for (int i = 0; i < 4; ++i) {
          ws[i] = rect_winding(scan, kids[i], 8);
          sum += ws[i];
        }
        if (sum != w) continue;  // a zero slipped through an edge; re-split
        for (int i = 0; i < 4; ++i) work.push_back({kids[i], ws[i]});
        split_ok = true;
        break;
      } catch (const ContourNearZero&) {
        continue;
      }
    }
    if (!split_ok) throw ContourError("find_zeros: subdivision kept hitting a zero");
  }

  // Newton refinement with a numerically differentiated L
  const double h = std::max(1e-9, 1e-6 * r);
  std::vector<cplx> candidates;
  for (auto& [cell, w] : leaves) {
    cplx s(0.5 * (cell.x0 + cell.x1), 0.5 * (cell.y0 + cell.y1));
    for (int it = 0; it < 300; ++it) {
      cplx L = T.eval(s);
      cplx Lp = (T.eval(s + h) - T.eval(s - h)) / (2.0 * h);
      if (std::abs(Lp) == 0.0) break;
      cplx step = L / Lp;
      s -= step;
      if (std::abs(step) <= opt.newton_tol) break;
    }
    candidates.push_back(s);
  }
  std::sort(candidates.begin(), candidates.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  // A multiple zero of the underlying L splits, at this truncation, into a
  // tight cluster of simple zeros of diameter about sqrt(tail). Merge below
  // that resolution and let a winding circle around the cluster read the
  // multiplicity.
  double merge_r = std::min(0.04, r / 8);
  const double tail_at_one = abel_tail_budget(params, 0.0, cplx(1.0, 0.0), 0, X);
  if (std::isfinite(tail_at_one))
    merge_r = std::clamp(std::sqrt(tail_at_one), 20 * opt.newton_tol, r / 3);
  struct Cluster {
    std::vector<cplx> members;
    cplx centroid;
    double spread = 0;
  };
  std::vector<Cluster> clusters;
  for (cplx s : candidates) {
    bool merged = false;
    for (auto& cl : clusters)
      if (std::abs(s - cl.centroid) < merge_r) {
        cl.members.push_back(s);
        cplx c = 0;
        for (cplx m : cl.members) c += m;
        cl.centroid = c / static_cast<double>(cl.members.size());
        merged = true;
        break;
      }
    if (!merged) clusters.push_back({{s}, s, 0});
  }
  for (auto& cl : clusters)
    for (cplx m : cl.members)
      cl.spread = std::max(cl.spread, std::abs(m - cl.centroid));

  int total = 0;
  for (const auto& cl : clusters) {
    if (std::abs(cl.centroid - cplx(1.0, 0.0)) > r * (1.0 + 1e-6)) continue;
    double rm = std::max({2.5 * cl.spread, 1e-5 * r, 8e-6});
    for (const auto& other : clusters)
      if (&other != &cl)
        rm = std::min(rm, 0.4 * std::abs(other.centroid - cl.centroid));
    WindingScan mscan{&T, 1e-300};
    int mult = mscan.closed_winding(circle_path(cl.centroid, rm), 16);
    if (mult <= 0) continue;
    out.zeros.push_back({cl.centroid, mult});
    total += mult;
  }
  if (total != count)
    throw WindingError("find_zeros: localized multiplicities disagree with contour count");
  out.total = total;
  std::sort(out.zeros.begin(), out.zeros.end(), [](const ZeroEntry& a, const ZeroEntry& b) {
    return std::abs(a.rho - cplx(1.0, 0.0)) < std::abs(b.rho - cplx(1.0, 0.0));
  });
  if (out.total > params.D)
    throw InternalCheckError("find_zeros: more than D zeros in the ball");
  return out;
}

int detect_multiplicity(const MultFunc& f, const ClassParams& params, double theta,
                        u64 X, const ScanConfig& cfg, bool* degenerate) {
  if (!(theta > 0)) throw RangeError("detect_multiplicity: theta must be > 0");
  if (degenerate) *degenerate = false;
  const double lQ = std::log(params.Q);
  for (int j = 0; j <= params.D; ++j) {
    SeriesPoint pt = L_derivative(f, cplx(1.0, 0.0), j, 0.0, X, cfg);
    if (std::abs(pt.value) > theta * std::pow(lQ, j)) return j;
  }
  if (degenerate) *degenerate = true;
  return params.D;
}

std::vector<Lemma22Cell> lemma22_grid(const MultFunc& f,
                                      const std::vector<std::pair<double, double>>& yz,
                                      u64 p_cutoff, const ScanConfig& cfg) {
  std::vector<Lemma22Cell> cells(yz.size());
  std::vector<Kahan> logl(yz.size()), psum(yz.size());
  std::vector<double> sig(yz.size());
  for (std::size_t i = 0; i < yz.size(); ++i) {
    cells[i].y = yz[i].first;
    cells[i].z = yz[i].second;
    sig[i] = 1.0 + 1.0 / std::log(yz[i].second);
  }
  primes::for_each_prime(2, p_cutoff + 1, cfg, [&](u64 p) {
    const double pd = static_cast<double>(p);
    const double lp = std::log(pd);
    const int ks = k_stop_for(f, p);
    multfun::LambdaSlice L = multfun::lambda_of(f, p, ks);
    const double re_fp = f.at(p, 1).real();
    for (std::size_t i = 0; i < yz.size(); ++i) {
      if (pd <= cells[i].y) continue;
      for (int k = 1; k <= ks; ++k) {
        const double pw = std::exp(-k * sig[i] * lp);
        logl[i].add(L.lam[k - 1].real() * pw / (k * lp));
      }
      if (pd <= cells[i].z) psum[i].add(re_fp / pd);
    }
  });
  for (std::size_t i = 0; i < yz.size(); ++i) {
    cells[i].re_log_L = logl[i].value();
    cells[i].prime_sum = psum[i].value();
    cells[i].diff = cells[i].re_log_L - cells[i].prime_sum;
  }
  return cells;
}

}  // namespace multlab::lseries
