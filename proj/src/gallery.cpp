#include "multlab/gallery.hpp"

#include <algorithm>
#include <cmath>

namespace multlab::gallery {

using multfun::ClassParams;

namespace {

int jacobi_odd(long long a, long long m) {
  // m odd, m > 0
  a %= m;
  if (a < 0) a += m;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long long r = m % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) t = -t;
    a %= m;
  }
  return m == 1 ? t : 0;
}

bool squarefree_small(long long q) {
  for (long long d = 2; d * d <= q; ++d)
    if (q % (d * d) == 0) return false;
  return true;
}

std::string fmt_gamma(double g) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", g);
  return buf;
}

}  // namespace

int kronecker_symbol(long long a, long long n) {
  if (n < 0) throw RangeError("kronecker_symbol: n must be >= 0");
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int e = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++e;
  }
  int k2 = 1;
  if (e > 0) {
    if (a % 2 == 0) return 0;
    long long am8 = ((a % 8) + 8) % 8;
    k2 = (am8 == 1 || am8 == 7) ? 1 : -1;
  }
  int part2 = (e % 2 == 1) ? k2 : 1;
  return part2 * jacobi_odd(a, n);
}

GalleryEntry make_basic(Basic which) {
  GalleryEntry e;
  switch (which) {
    case Basic::one: {
      e.f = MultFunc([](multfun::u64, int) -> cplx { return 1.0; }, 1, "one");
      e.params = ClassParams(1, 2.5, 100.0, 0.0);
      e.notes = "not in the class: partial sums equal x; Lambda bound still holds with D=1";
      break;
    }
    case Basic::moebius: {
      e.f = MultFunc([](multfun::u64, int k) -> cplx { return k == 1 ? -1.0 : 0.0; }, 1,
                     "moebius");
      e.params = ClassParams(1, 2.5, 100.0, 1.0);
      e.known_m = 1;
      e.zeros_known = true;
      e.known_zeros = {cplx(1.0, 0.0)};
      e.notes = "L = 1/zeta; simple zero at s=1 from the zeta pole";
      break;
    }
    case Basic::moebius_conv_moebius: {
      e.f = multfun::convolve(make_basic(Basic::moebius).f, make_basic(Basic::moebius).f);
      e.f.set_label("conv(moebius,moebius)");
      e.params = ClassParams(2, 3.5, 100.0, 1.0);
      e.known_m = 2;
      e.zeros_known = true;
      e.known_zeros = {cplx(1.0, 0.0), cplx(1.0, 0.0)};
      e.notes = "L = 1/zeta^2; double zero at s=1. Strong-class membership is "
                "approximate at desk scale (constants).";
      break;
    }
  }
  e.f.set_params(e.params);
  return e;
}

GalleryEntry make_tau(int k) {
  if (k < 1) throw RangeError("make_tau: k must be >= 1");
  GalleryEntry e;
  e.f = multfun::tau_k(k);
  e.f.set_label("tau:k=" + std::to_string(k));
  e.params = ClassParams(k, k + 2.0, 100.0, 0.0);
  e.notes = "tau_k: Lambda_f = k Lambda; partial sums grow, not in the class";
  e.f.set_params(e.params);
  return e;
}

GalleryEntry make_moebius_twist(double gamma) {
  if (!(std::abs(gamma) > 0.0 && std::abs(gamma) <= 1.0))
    throw RangeError("make_moebius_twist: need |gamma| in (0,1]");
  GalleryEntry e;
  e.f = MultFunc(
      [gamma](multfun::u64 p, int k) -> cplx {
        if (k != 1) return 0.0;
        double t = gamma * std::log(static_cast<double>(p));
        return -cplx(std::cos(t), std::sin(t));
      },
      1, "moebius_twist:gamma=" + fmt_gamma(gamma));
  e.params = ClassParams(1, 2.5, 100.0, 1.0);
  e.known_m = 0;
  e.zeros_known = true;
  e.known_zeros = {cplx(1.0, gamma)};
  e.notes = "f(n) = mu(n) n^{i gamma}; L = 1/zeta(s - i gamma), zero at 1 + i gamma";
  e.f.set_params(e.params);
  return e;
}

GalleryEntry make_twist_product(const std::vector<double>& gammas) {
  if (gammas.empty() || gammas.size() > 3)
    throw RangeError("make_twist_product: need 1..3 gammas");
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (gammas[i] == 0.0) throw RangeError("make_twist_product: gammas must be nonzero");
    for (std::size_t j = i + 1; j < gammas.size(); ++j)
      if (gammas[i] == gammas[j])
        throw RangeError("make_twist_product: gammas must be distinct");
  }
  GalleryEntry e = make_moebius_twist(gammas[0]);
  for (std::size_t i = 1; i < gammas.size(); ++i) {
    GalleryEntry t = make_moebius_twist(gammas[i]);
    e.f = multfun::convolve(e.f, t.f);
    e.known_zeros.push_back(cplx(1.0, gammas[i]));
  }
  int D = static_cast<int>(gammas.size());
  std::string label = "conv(";
  for (std::size_t i = 0; i < gammas.size(); ++i)
    label += (i ? "," : "") + std::string("moebius_twist:gamma=") + fmt_gamma(gammas[i]);
  label += ")";
  if (gammas.size() == 1) label = "moebius_twist:gamma=" + fmt_gamma(gammas[0]);
  e.f.set_label(label);
  e.params = ClassParams(D, D + 1.5, 100.0, 1.0);
  e.known_m = 0;
  e.zeros_known = true;
  std::sort(e.known_zeros.begin(), e.known_zeros.end(),
            [](cplx a, cplx b) { return std::abs(a - 1.0) < std::abs(b - 1.0); });
  e.notes = "product of moebius twists; L = prod 1/zeta(s - i gamma_j)";
  e.f.set_params(e.params);
  return e;
}

GalleryEntry make_remark(int D) {
  if (D < 1) throw RangeError("make_remark: D must be >= 1");
  auto lambda_rule = [D](multfun::u64 p, int) -> cplx {
    double lp = std::log(static_cast<double>(p));
    double coeff = -static_cast<double>(D);
    if (p > 100) coeff += 1.0 / std::log(lp);
    return coeff * lp;
  };
  GalleryEntry e;
  e.f = multfun::func_from_lambda(lambda_rule, D, "remark:D=" + std::to_string(D));
  // A = D+1 is exactly the boundary the remark exhibits; declare just above it.
  e.params = ClassParams(D, D + 1.01, 100.0, 0.0);
  e.notes = "boundary example: partial sums expected of size x/(log x)^{D+1}; "
            "measured only, never asserted";
  e.f.set_params(e.params);
  return e;
}

GalleryEntry make_quadratic_char(long long q) {
  if (q < 3 || q % 2 == 0 || !squarefree_small(q))
    throw RangeError("make_quadratic_char: modulus must be odd, squarefree, >= 3");
  long long disc = (q % 4 == 1) ? q : -q;
  GalleryEntry e;
  e.f = MultFunc(
      [disc](multfun::u64 p, int k) -> cplx {
        int chi = kronecker_symbol(disc, static_cast<long long>(p));
        double v = 1.0;
        for (int i = 0; i < k; ++i) v *= chi;
        return v;
      },
      1, "char:q=" + std::to_string(q));
  e.params = ClassParams(1, 2.5, std::max<double>(1000.0, static_cast<double>(q) * q), 1.0);
  e.known_m = 0;
  e.zeros_known = true;  // no zeros near s=1 for these small conductors
  e.notes = "real primitive character via the Kronecker symbol";
  e.f.set_params(e.params);
  return e;
}

GalleryEntry make_one_conv_char(long long q) {
  GalleryEntry chi = make_quadratic_char(q);
  GalleryEntry one = make_basic(Basic::one);
  GalleryEntry e;
  e.f = multfun::convolve(one.f, chi.f);
  e.f.set_label("conv(one,char:q=" + std::to_string(q) + ")");
  e.params = ClassParams(2, 3.5, chi.params.Q, 0.0);
  e.notes = "1*chi: partial sums grow like L(1,chi) x; illustration only, not in class";
  e.f.set_params(e.params);
  return e;
}

GalleryEntry twist_entry(const GalleryEntry& base, double gamma) {
  GalleryEntry e = base;
  MultFunc inner = base.f;
  e.f = MultFunc(
      [inner, gamma](multfun::u64 p, int k) -> cplx {
        double t = gamma * static_cast<double>(k) * std::log(static_cast<double>(p));
        return inner.at(p, k) * cplx(std::cos(t), std::sin(t));
      },
      base.f.D(), "twist(" + base.f.label() + ",gamma=" + fmt_gamma(gamma) + ")");
  e.f.set_k_max(base.f.k_max());
  for (auto& z : e.known_zeros) z += cplx(0.0, gamma);
  e.f.set_params(e.params);
  return e;
}

}  // namespace multlab::gallery
