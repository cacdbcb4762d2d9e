#ifndef MULTLAB_MULTFUN_HPP
#define MULTLAB_MULTFUN_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "multlab/errors.hpp"
#include "multlab/primes.hpp"

namespace multlab::multfun {

using u64 = std::uint64_t;
using cplx = std::complex<double>;

// Parameters of the function classes: |Lambda_f| <= D*Lambda together with a
// partial-sum bound selected by eta (eta = 1 picks the strong variant).
struct ClassParams {
  int D = 1;
  double A = 2.5;   // must exceed D+1
  double Q = 100.0; // must be >= 3
  double eta = 0.0; // in [0,1]

  ClassParams() = default;
  ClassParams(int D_, double A_, double Q_, double eta_) : D(D_), A(A_), Q(Q_), eta(eta_) {
    if (!(A > D + 1)) throw RangeError("ClassParams: need A > D+1");
    if (!(Q >= 3)) throw RangeError("ClassParams: need Q >= 3");
    if (!(eta >= 0 && eta <= 1)) throw RangeError("ClassParams: need eta in [0,1]");
  }

  // |sum_{n<=x} f(n)| is declared to be at most this for x >= Q.
  double sum_bound(double x) const;
};

// A multiplicative function given by its prime-power rule. Values at p^k with
// k beyond `k_max` raise instead of silently extending by zero, since that
// would change Lambda_f.
class MultFunc {
 public:
  using Rule = std::function<cplx(u64 p, int k)>;

  MultFunc() = default;
  MultFunc(Rule rule, int D, std::string label)
      : rule_(std::move(rule)), D_(D), label_(std::move(label)) {}

  cplx at(u64 p, int k) const {
    if (k < 1 || k > k_max_)
      throw RangeError("MultFunc(" + label_ + "): prime power p^" + std::to_string(k) +
                       " beyond declared depth");
    return rule_(p, k);
  }

  int D() const { return D_; }
  int k_max() const { return k_max_; }
  void set_k_max(int k) { k_max_ = k; }
  const std::string& label() const { return label_; }
  void set_label(std::string s) { label_ = std::move(s); }

  const std::optional<ClassParams>& params() const { return params_; }
  void set_params(ClassParams p) { params_ = p; }

 private:
  Rule rule_;
  int D_ = 1;
  int k_max_ = 30;  // floor(log2(global ceiling))
  std::string label_;
  std::optional<ClassParams> params_;
};

// Lambda_f values at one prime: lam[k-1] = Lambda_f(p^k).
struct LambdaSlice {
  u64 p = 0;
  std::vector<cplx> lam;
};

// f log = f * Lambda_f, solved upward in k.
LambdaSlice lambda_of(const MultFunc& f, u64 p, int k_max);

// Inverse direction: reconstruct f(p^k) from Lambda_f values.
std::vector<cplx> f_of_lambda(const LambdaSlice& L, int k_max);

// Whole-function wrapper around the inverse recursion.
MultFunc func_from_lambda(std::function<cplx(u64, int)> lambda_rule, int D,
                          std::string label);

MultFunc dirichlet_inverse(const MultFunc& f);

MultFunc convolve(const MultFunc& f, const MultFunc& h);

// tau_k(p^e) = binomial(e+k-1, k-1); k = 0 gives the convolution identity.
MultFunc tau_k(int k);

double tau_value(int k, u64 n, const primes::FactorSieve& fs);

cplx value_at(const MultFunc& f, u64 n, const primes::FactorSieve& fs);

struct ClassCheckReport {
  bool passes = true;
  double worst_ratio = 0.0;  // max |Lambda_f(p^k)| / (D log p)
  u64 witness_p = 0;
  int witness_k = 0;
  cplx witness_lambda;
};

// Scans |Lambda_f(p^k)| <= D log p over p <= p_max, k <= k_max, with a
// 1+1e-9 multiplicative slack for the float comparisons.
ClassCheckReport class_check(const MultFunc& f, const ClassParams& params,
                             u64 p_max, int k_max);

}  // namespace multlab::multfun

#endif
