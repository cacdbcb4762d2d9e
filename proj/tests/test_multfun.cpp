#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "multlab/gallery.hpp"
#include "multlab/multfun.hpp"
#include "oracle/oracle.hpp"

using namespace multlab;
using multfun::cplx;
using multfun::MultFunc;
using multfun::u64;

namespace {

MultFunc one_func() { return gallery::make_basic(gallery::Basic::one).f; }
MultFunc mu_func() { return gallery::make_basic(gallery::Basic::moebius).f; }

std::vector<MultFunc> algebra_gallery() {
  return {
      one_func(),
      mu_func(),
      multfun::tau_k(2),
      multfun::tau_k(3),
      gallery::make_basic(gallery::Basic::moebius_conv_moebius).f,
      gallery::make_moebius_twist(0.3).f,
      gallery::make_twist_product({0.08, 0.4}).f,
      gallery::make_remark(2).f,
      gallery::make_quadratic_char(5).f,
  };
}

}  // namespace

TEST_CASE("lambda_of closed forms") {
  auto lam1 = multfun::lambda_of(one_func(), 2, 3);
  CHECK(std::abs(lam1.lam[2] - cplx(std::log(2.0), 0)) < 1e-14);  // Lambda(2^3) = log 2

  // Lambda_mu(p^k) = -log p for all k
  for (u64 p : {2ULL, 3ULL, 97ULL}) {
    auto lam = multfun::lambda_of(mu_func(), p, 6);
    for (int k = 1; k <= 6; ++k)
      CHECK(std::abs(lam.lam[k - 1] + std::log(static_cast<double>(p))) < 1e-12);
  }

  // remark function: Lambda_f(p) = (-2 + 1_{p>100}/log log p) log p by construction
  auto rem = gallery::make_remark(2).f;
  auto lam101 = multfun::lambda_of(rem, 101, 1);
  double l101 = std::log(101.0);
  CHECK(std::abs(lam101.lam[0] - cplx((-2.0 + 1.0 / std::log(l101)) * l101, 0)) < 1e-10);
  auto lam97 = multfun::lambda_of(rem, 97, 1);
  CHECK(std::abs(lam97.lam[0] - cplx(-2.0 * std::log(97.0), 0)) < 1e-10);
}

TEST_CASE("f_of_lambda closed forms") {
  // Lambda = classical von Mangoldt -> f = 1
  multfun::LambdaSlice L;
  L.p = 7;
  L.lam.assign(5, cplx(std::log(7.0), 0));
  auto fv = multfun::f_of_lambda(L, 5);
  for (auto v : fv) CHECK(std::abs(v - cplx(1, 0)) < 1e-12);

  // Lambda_mu -> f(p) = -1, f(p^2) = 0
  L.lam.assign(3, cplx(-std::log(7.0), 0));
  fv = multfun::f_of_lambda(L, 3);
  CHECK(std::abs(fv[0] - cplx(-1, 0)) < 1e-12);
  CHECK(std::abs(fv[1]) < 1e-12);

  // Lambda = 2 Lambda -> tau_2, f(p^2) = 3
  L.lam.assign(3, cplx(2.0 * std::log(7.0), 0));
  fv = multfun::f_of_lambda(L, 3);
  CHECK(std::abs(fv[1] - cplx(3, 0)) < 1e-12);
}

TEST_CASE("roundtrip f -> Lambda -> f on prime powers up to 1e4") {
  for (const auto& f : algebra_gallery()) {
    for (u64 p : primes::primes_in(2, 101)) {
      int kmax = 1;
      while (std::pow(static_cast<double>(p), kmax + 1) <= 1e4) ++kmax;
      auto lam = multfun::lambda_of(f, p, kmax);
      auto back = multfun::f_of_lambda(lam, kmax);
      for (int k = 1; k <= kmax; ++k) {
        cplx expect = f.at(p, k);
        CHECK(std::abs(back[k - 1] - expect) <=
              1e-10 * std::max(1.0, std::abs(expect)));
      }
    }
  }
}

TEST_CASE("dirichlet inverse closed forms") {
  auto inv1 = multfun::dirichlet_inverse(one_func());
  CHECK(std::abs(inv1.at(5, 1) - cplx(-1, 0)) < 1e-14);  // mu
  CHECK(std::abs(inv1.at(5, 2)) < 1e-14);

  auto invtau = multfun::dirichlet_inverse(multfun::tau_k(2));
  CHECK(std::abs(invtau.at(3, 1) - cplx(-2, 0)) < 1e-13);
  CHECK(std::abs(invtau.at(3, 2) - cplx(1, 0)) < 1e-13);

  auto invmu = multfun::dirichlet_inverse(mu_func());
  for (int k = 1; k <= 5; ++k) CHECK(std::abs(invmu.at(2, k) - cplx(1, 0)) < 1e-13);
}

TEST_CASE("convolution identities") {
  auto mumu = multfun::convolve(mu_func(), mu_func());
  CHECK(std::abs(mumu.at(7, 1) - cplx(-2, 0)) < 1e-14);
  CHECK(std::abs(mumu.at(7, 2) - cplx(1, 0)) < 1e-14);

  auto eps = multfun::convolve(one_func(), mu_func());
  for (int k = 1; k <= 4; ++k) CHECK(std::abs(eps.at(3, k)) < 1e-14);

  CHECK(std::abs(multfun::tau_k(2).at(11, 2) - cplx(3, 0)) < 1e-14);
}

TEST_CASE("tau_k values") {
  auto fs = primes::factor_segment(2, 100);
  CHECK(multfun::tau_k(1).at(13, 5) == cplx(1, 0));
  CHECK(multfun::tau_k(3).at(5, 2) == cplx(6, 0));  // binomial(4,2)
  CHECK(multfun::value_at(multfun::tau_k(2), 12, fs) == cplx(6, 0));
  CHECK(multfun::value_at(multfun::tau_k(2), 36, fs) == cplx(9, 0));
}

TEST_CASE("value_at spec examples") {
  auto fs = primes::factor_segment(2, 1000);
  auto tw = gallery::make_moebius_twist(0.3).f;
  CHECK(std::abs(multfun::value_at(tw, 12, fs)) < 1e-14);  // mu(12) = 0
  CHECK(std::abs(multfun::value_at(mu_func(), 30, fs) - cplx(-1, 0)) < 1e-14);
  CHECK_THROWS_AS(multfun::value_at(mu_func(), 5000, fs), RangeError);
}

TEST_CASE("convolve agrees with divisor-enumeration oracle") {
  auto mu = mu_func();
  auto tw = gallery::make_moebius_twist(0.3).f;
  auto conv = multfun::convolve(mu, tw);
  auto brute = oracle::brute_convolution(mu, tw, 2000);
  auto fs = primes::factor_segment(2, 2001);
  for (u64 n = 1; n <= 2000; ++n) {
    CHECK(std::abs(multfun::value_at(conv, n, fs) - brute[n]) < 1e-11);
  }
}

TEST_CASE("Lambda additivity under convolution") {
  auto f = gallery::make_moebius_twist(0.08).f;
  auto h = gallery::make_moebius_twist(0.4).f;
  auto c = multfun::convolve(f, h);
  for (u64 p : {2ULL, 3ULL, 5ULL, 89ULL}) {
    auto lf = multfun::lambda_of(f, p, 5);
    auto lh = multfun::lambda_of(h, p, 5);
    auto lc = multfun::lambda_of(c, p, 5);
    for (int k = 0; k < 5; ++k)
      CHECK(std::abs(lc.lam[k] - lf.lam[k] - lh.lam[k]) <=
            1e-10 * std::max(1.0, std::abs(lc.lam[k])));
  }
}

TEST_CASE("inverse convolves to the identity through value_at") {
  auto fs = primes::factor_segment(2, 10001);
  for (const auto& f : algebra_gallery()) {
    auto g = multfun::dirichlet_inverse(f);
    auto id = multfun::convolve(f, g);
    for (u64 n : {1ULL, 2ULL, 4ULL, 36ULL, 97ULL, 210ULL, 1024ULL, 9991ULL}) {
      cplx expect = n == 1 ? 1.0 : 0.0;
      CHECK(std::abs(multfun::value_at(id, n, fs) - expect) < 1e-12);
    }
  }
}

TEST_CASE("class_check: mu, mu*mu, tau_3") {
  multfun::ClassParams D1(1, 2.5, 100, 0);
  multfun::ClassParams D2(2, 3.5, 100, 0);
  auto r1 = multfun::class_check(mu_func(), D1, 500, 8);
  CHECK(r1.passes);
  CHECK(r1.worst_ratio == doctest::Approx(1.0).epsilon(1e-12));

  auto mumu = gallery::make_basic(gallery::Basic::moebius_conv_moebius).f;
  CHECK(multfun::class_check(mumu, D2, 500, 8).passes);

  auto r3 = multfun::class_check(multfun::tau_k(3), D2, 500, 8);
  CHECK_FALSE(r3.passes);
  CHECK(r3.worst_ratio > 1.4);  // |Lambda| = 3 log p against 2 log p
  CHECK(r3.witness_p >= 2);
}

TEST_CASE("beyond-depth prime powers raise instead of zero-extending") {
  auto f = mu_func();
  f.set_k_max(4);
  CHECK_THROWS_AS(f.at(2, 5), RangeError);
}

TEST_CASE("divisor bound |f| <= tau_D and |g| <= tau_D after class_check") {
  auto fs = primes::factor_segment(2, 100001);
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<u64> pick(1, 100000);
  for (const auto& e :
       {gallery::make_basic(gallery::Basic::moebius),
        gallery::make_basic(gallery::Basic::moebius_conv_moebius),
        gallery::make_moebius_twist(0.3), gallery::make_remark(2),
        gallery::make_quadratic_char(5)}) {
    REQUIRE(multfun::class_check(e.f, e.params, 200, 6).passes);
    auto g = multfun::dirichlet_inverse(e.f);
    for (int i = 0; i < 500; ++i) {
      u64 n = pick(rng);
      double td = multfun::tau_value(e.params.D, n, fs);
      CHECK(std::abs(multfun::value_at(e.f, n, fs)) <= td * (1 + 1e-9));
      CHECK(std::abs(multfun::value_at(g, n, fs)) <= td * (1 + 1e-9));
    }
  }
}
