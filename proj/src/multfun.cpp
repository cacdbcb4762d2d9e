#include "multlab/multfun.hpp"

#include <cmath>

namespace multlab::multfun {

double ClassParams::sum_bound(double x) const {
  double lx = std::log(x);
  double lQ = std::log(Q);
  if (eta >= 1.0) {
    // strong class: x^{1-1/log Q} / (log x)^{D+1}
    return std::exp((1.0 - 1.0 / lQ) * lx) / std::pow(lx, D + 1);
  }
  // interpolated form; eta = 0 is the plain class bound
  return std::exp((1.0 - eta / lQ) * lx) * std::pow(lQ, A - D - 1) / std::pow(lx, A);
}

LambdaSlice lambda_of(const MultFunc& f, u64 p, int k_max) {
  LambdaSlice out;
  out.p = p;
  out.lam.resize(k_max);
  double lp = std::log(static_cast<double>(p));
  std::vector<cplx> fv(k_max + 1);
  fv[0] = 1.0;
  for (int k = 1; k <= k_max; ++k) fv[k] = f.at(p, k);
  for (int k = 1; k <= k_max; ++k) {
    cplx acc = fv[k] * (static_cast<double>(k) * lp);
    for (int j = 1; j < k; ++j) acc -= out.lam[j - 1] * fv[k - j];
    out.lam[k - 1] = acc;
  }
  return out;
}

std::vector<cplx> f_of_lambda(const LambdaSlice& L, int k_max) {
  if (static_cast<int>(L.lam.size()) < k_max)
    throw RangeError("f_of_lambda: Lambda values not defined up to k_max");
  double lp = std::log(static_cast<double>(L.p));
  std::vector<cplx> fv(k_max + 1);
  fv[0] = 1.0;
  for (int k = 1; k <= k_max; ++k) {
    cplx acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += L.lam[j - 1] * fv[k - j];
    fv[k] = acc / (static_cast<double>(k) * lp);
  }
  return std::vector<cplx>(fv.begin() + 1, fv.end());
}

MultFunc func_from_lambda(std::function<cplx(u64, int)> lambda_rule, int D,
                          std::string label) {
  auto rule = [lr = std::move(lambda_rule)](u64 p, int k) -> cplx {
    LambdaSlice L;
    L.p = p;
    L.lam.resize(k);
    for (int j = 1; j <= k; ++j) L.lam[j - 1] = lr(p, j);
    return f_of_lambda(L, k)[k - 1];
  };
  return MultFunc(rule, D, std::move(label));
}

MultFunc dirichlet_inverse(const MultFunc& f) {
  MultFunc fc = f;  // captured by value so the inverse owns its rule
  MultFunc out(
      [fc](u64 p, int k) -> cplx {
        std::vector<cplx> fv(k + 1), gv(k + 1);
        fv[0] = gv[0] = 1.0;
        for (int j = 1; j <= k; ++j) fv[j] = fc.at(p, j);
        for (int j = 1; j <= k; ++j) {
          cplx acc = 0.0;
          for (int i = 1; i <= j; ++i) acc += fv[i] * gv[j - i];
          gv[j] = -acc;
        }
        return gv[k];
      },
      f.D(), "inv(" + f.label() + ")");
  out.set_k_max(f.k_max());
  return out;
}

MultFunc convolve(const MultFunc& f, const MultFunc& h) {
  MultFunc fc = f, hc = h;
  MultFunc out(
      [fc, hc](u64 p, int k) -> cplx {
        cplx acc = fc.at(p, k) + hc.at(p, k);
        for (int j = 1; j < k; ++j) acc += fc.at(p, j) * hc.at(p, k - j);
        return acc;
      },
      f.D() + h.D(), "conv(" + f.label() + "," + h.label() + ")");
  out.set_k_max(std::min(f.k_max(), h.k_max()));
  return out;
}

namespace {

// binomial(n, r) in exact integers when possible, else double (warned by
// caller through tau_k's contract).
double binomial_checked(int n, int r, bool* overflowed) {
  if (r < 0 || r > n) return 0.0;
  r = std::min(r, n - r);
  unsigned long long acc = 1;
  bool exact = true;
  for (int i = 1; i <= r; ++i) {
    unsigned long long num = static_cast<unsigned long long>(n - r + i);
    if (acc > (~0ULL) / num) {
      exact = false;
      break;
    }
    acc = acc * num / static_cast<unsigned long long>(i);
  }
  if (exact) return static_cast<double>(acc);
  *overflowed = true;
  double d = 0.0;
  for (int i = 1; i <= r; ++i)
    d += std::log(static_cast<double>(n - r + i)) - std::log(static_cast<double>(i));
  return std::exp(d);
}

}  // namespace

MultFunc tau_k(int k) {
  if (k < 0) throw RangeError("tau_k: k must be >= 0");
  if (k == 0) {
    // convolution identity: 1 at n=1, i.e. 0 on every prime power
    return MultFunc([](u64, int) -> cplx { return 0.0; }, 0, "tau_0");
  }
  MultFunc out(
      [k](u64, int e) -> cplx {
        bool over = false;
        double v = binomial_checked(e + k - 1, k - 1, &over);
        return v;
      },
      k, "tau_" + std::to_string(k));
  return out;
}

double tau_value(int k, u64 n, const primes::FactorSieve& fs) {
  if (n == 1) return 1.0;
  if (n < fs.lo || n >= fs.hi) throw RangeError("tau_value: n outside the factor sieve");
  double v = 1.0;
  bool over = false;
  for (auto [p, a] : fs.factor(n)) v *= binomial_checked(a + k - 1, k - 1, &over);
  return v;
}

cplx value_at(const MultFunc& f, u64 n, const primes::FactorSieve& fs) {
  if (n == 0) throw RangeError("value_at: n must be >= 1");
  if (n == 1) return 1.0;
  if (n < fs.lo || n >= fs.hi) throw RangeError("value_at: n outside the factor sieve");
  cplx v = 1.0;
  for (auto [p, a] : fs.factor(n)) v *= f.at(p, a);
  return v;
}

ClassCheckReport class_check(const MultFunc& f, const ClassParams& params,
                             u64 p_max, int k_max) {
  ClassCheckReport rep;
  const double slack = 1.0 + 1e-9;
  primes::ScanConfig cfg;
  primes::for_each_prime(2, p_max + 1, cfg, [&](u64 p) {
    double lp = std::log(static_cast<double>(p));
    int km = std::min(k_max, f.k_max());
    LambdaSlice L = lambda_of(f, p, km);
    for (int k = 1; k <= km; ++k) {
      double ratio = std::abs(L.lam[k - 1]) / (params.D * lp);
      if (ratio > rep.worst_ratio) {
        rep.worst_ratio = ratio;
        rep.witness_p = p;
        rep.witness_k = k;
        rep.witness_lambda = L.lam[k - 1];
      }
      if (std::abs(L.lam[k - 1]) > params.D * lp * slack) rep.passes = false;
    }
  });
  return rep;
}

}  // namespace multlab::multfun
