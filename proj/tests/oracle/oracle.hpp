#ifndef MULTLAB_ORACLE_HPP
#define MULTLAB_ORACLE_HPP

// Brute-force reference paths. These validate the optimized engines and
// produce every frozen constant; they share nothing with production code
// beyond the public type definitions.

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "multlab/multfun.hpp"
#include "multlab/report.hpp"

namespace multlab::oracle {

using multfun::cplx;
using multfun::MultFunc;
using u64 = std::uint64_t;

struct OracleReport {
  std::string operation;
  std::string range;
  double max_abs_discrepancy = 0.0;
  double max_rel_discrepancy = 0.0;
  std::map<std::string, double> frozen;
  std::vector<std::string> messages;
  bool ok = true;
};

// f(n) by trial-division factorization of n.
cplx brute_value(const MultFunc& f, u64 n);

// (f*h)(n) for n <= n_max by divisor enumeration; index n (entry 0 unused).
std::vector<cplx> brute_convolution(const MultFunc& f, const MultFunc& h, u64 n_max);

// M_f(n) for n <= x_max, per-n trial division; index n (entry 0 is 0).
std::vector<cplx> brute_partial_sums(const MultFunc& f, u64 x_max);

// Euler-Maclaurin zeta with 8 Bernoulli corrections; pole error at s = 1.
cplx zeta_reference(cplx s);

// Trial-division prime test / count, the primes-module oracle.
bool trial_is_prime(u64 n);
u64 trial_prime_count(u64 lo, u64 hi);

// ---- frozen-constant suites ------------------------------------------

std::vector<std::string> suite_names();

// Measured values for one suite (deterministic given the RunConfig).
std::map<std::string, double> run_suite(const std::string& name,
                                        const report::RunConfig& rc);

// Runs suites and writes (or, in verify mode, re-checks within 1e-9) the
// committed constants file. "all" runs everything.
OracleReport freeze_constants(const std::string& suite, const std::string& path,
                              bool verify_only, const report::RunConfig& rc);

}  // namespace multlab::oracle

#endif
