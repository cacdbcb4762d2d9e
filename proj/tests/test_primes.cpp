#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "multlab/primes.hpp"
#include "oracle/oracle.hpp"

using namespace multlab;
using primes::u64;

TEST_CASE("small ranges match the spec examples") {
  CHECK(primes::primes_in(2, 11, 1024) == std::vector<u64>{2, 3, 5, 7});
  CHECK(primes::primes_in(14, 15, 1024).empty());
}

TEST_CASE("stream agrees with trial division up to 1e5") {
  primes::PrimeStream st(2, 100000);
  for (u64 n = 2; n < 100000; ++n) {
    if (oracle::trial_is_prime(n)) {
      CHECK(st.next() == n);
    }
  }
  CHECK(st.next() == 0);
}

TEST_CASE("pi(1e6) = 78498") {
  u64 count = 0;
  primes::ScanConfig cfg;
  primes::for_each_prime(2, 1000000, cfg, [&](u64) { ++count; });
  CHECK(count == 78498);
}

TEST_CASE("segment-size independence, bit for bit") {
  auto a = primes::primes_in(1000, 200000, 64);
  auto b = primes::primes_in(1000, 200000, 1 << 14);
  auto c = primes::primes_in(1000, 200000, 1 << 18);
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("threaded streaming is identical to sequential") {
  std::vector<u64> seq, par;
  primes::ScanConfig s1;
  s1.threads = 1;
  s1.segment_size = 4096;
  primes::ScanConfig s2;
  s2.threads = 4;
  s2.segment_size = 4096;
  primes::for_each_prime(2, 500000, s1, [&](u64 p) { seq.push_back(p); });
  primes::for_each_prime(2, 500000, s2, [&](u64 p) { par.push_back(p); });
  CHECK(seq == par);
}

TEST_CASE("capacity errors") {
  CHECK_THROWS_AS(primes::primes_in(2, primes::kGlobalCeiling + 2), CapacityError);
  CHECK_THROWS_AS(primes::primes_in(2, 100, 32), RangeError);
  CHECK_THROWS_AS(primes::factor_segment(2, 2 + (u64{1} << 25)), CapacityError);
}

TEST_CASE("factor sieve: spec examples and exhaustive check") {
  auto fs = primes::factor_segment(2, 100000);
  CHECK(fs.spf_of(12) == 2);
  CHECK(fs.spf_of(9991) == 97);  // 9991 = 97 * 103
  CHECK(fs.spf_of(97) == 97);

  auto f12 = fs.factor(12);
  REQUIRE(f12.size() == 2);
  CHECK(f12[0] == std::pair<u64, int>{2, 2});
  CHECK(f12[1] == std::pair<u64, int>{3, 1});

  for (u64 n = 2; n < 3000; ++n) {
    u64 p = fs.spf_of(n);
    CHECK(n % p == 0);
    bool least = true;
    for (u64 d = 2; d < p; ++d)
      if (n % d == 0) least = false;
    CHECK(least);
    if (oracle::trial_is_prime(n)) CHECK(p == n);
  }

  // recombination over a window that forces the trial-division fallback
  auto hi = primes::factor_segment(50000, 60000);
  for (u64 n = 50000; n < 50100; ++n) {
    u64 prod = 1;
    for (auto [p, a] : hi.factor(n))
      for (int i = 0; i < a; ++i) prod *= p;
    CHECK(prod == n);
  }
}

TEST_CASE("mertens_V closed forms") {
  CHECK(primes::mertens_V(2) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(primes::mertens_V(10) == doctest::Approx(8.0 / 35.0).epsilon(1e-13));
  // constant between consecutive primes
  CHECK(primes::mertens_V(10) == primes::mertens_V(10.9));
  CHECK(primes::mertens_V(8) == primes::mertens_V(10));
}

TEST_CASE("mertens_V against an extended-precision direct product") {
  long double prod = 1.0L;
  for (u64 n = 2; n <= 10000; ++n)
    if (oracle::trial_is_prime(n)) prod *= (1.0L - 1.0L / static_cast<long double>(n));
  CHECK(std::abs(primes::mertens_V(1e4) - static_cast<double>(prod)) < 1e-9);
}

TEST_CASE("mertens_V strictly decreases at primes") {
  double prev = primes::mertens_V(2);
  for (u64 p : primes::primes_in(3, 1000)) {
    double cur = primes::mertens_V(static_cast<double>(p));
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("Mertens theorem sanity on a log grid") {
  // |V(y) log y - e^{-gamma}| <= 0.05 on [1e4, 1e8]
  std::vector<double> ys;
  for (double y = 1e4; y <= 1.0000001e8; y *= std::sqrt(10.0)) ys.push_back(y);
  auto Vs = primes::mertens_V_grid(ys);
  const double target = std::exp(-std::numbers::egamma);
  for (std::size_t i = 0; i < ys.size(); ++i)
    CHECK(std::abs(Vs[i] * std::log(ys[i]) - target) <= 0.05);
}
