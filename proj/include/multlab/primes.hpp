#ifndef MULTLAB_PRIMES_HPP
#define MULTLAB_PRIMES_HPP

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "multlab/errors.hpp"

namespace multlab::primes {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

// Desk-scale hard limit for every sieving range. Fail loudly above it.
inline constexpr u64 kGlobalCeiling = 1'000'000'000ULL;
inline constexpr u64 kDefaultSegmentSize = u64{1} << 18;
inline constexpr u64 kFactorSegmentCap = u64{1} << 24;

struct ScanConfig {
  u64 segment_size = kDefaultSegmentSize;
  int threads = 1;
  u64 ceiling = kGlobalCeiling;
};

// One sieved block: flags[i] is true iff lo+i is prime.
struct PrimeSegment {
  u64 lo = 0;
  u64 hi = 0;  // exclusive
  std::vector<bool> flags;
};

// Smallest-prime-factor table for [lo, hi).
struct FactorSieve {
  u64 lo = 0;
  u64 hi = 0;
  std::vector<u32> spf;

  u32 spf_of(u64 n) const {
    if (n < lo || n >= hi) throw RangeError("FactorSieve: n outside [lo, hi)");
    return spf[n - lo];
  }
  // (prime, exponent) pairs, ascending primes. Quotients that fall below lo
  // are finished by trial division.
  std::vector<std::pair<u64, int>> factor(u64 n) const;
};

// Plain sieve for base primes (limit is small: at most sqrt(ceiling)).
std::vector<u32> small_primes(u64 limit);

PrimeSegment sieve_segment(u64 lo, u64 hi, const std::vector<u32>& base);

FactorSieve factor_segment(u64 lo, u64 hi);

// Runs produce(index, lo, hi) -> R on workers and consume(R&&) strictly in
// ascending segment order. With threads <= 1 everything stays on the caller's
// thread. Results are identical for any thread count.
template <class R, class Produce, class Consume>
void ordered_segments(u64 lo, u64 hi, u64 segment_size, int threads,
                      Produce produce, Consume consume) {
  if (segment_size < 64) throw RangeError("segment_size must be >= 64");
  if (lo >= hi) return;
  const u64 nseg = (hi - lo + segment_size - 1) / segment_size;
  if (threads <= 1 || nseg <= 1) {
    for (u64 i = 0; i < nseg; ++i) {
      u64 a = lo + i * segment_size;
      u64 b = std::min(hi, a + segment_size);
      consume(produce(i, a, b));
    }
    return;
  }

  std::mutex mu;
  std::condition_variable cv;
  std::map<u64, R> ready;
  u64 next_to_produce = 0;
  u64 next_to_consume = 0;
  const u64 max_backlog = 2 * static_cast<u64>(threads) + 2;

  auto worker = [&] {
    for (;;) {
      u64 idx;
      {
        std::unique_lock<std::mutex> lk(mu);
        cv.wait(lk, [&] {
          return next_to_produce >= nseg ||
                 next_to_produce < next_to_consume + max_backlog;
        });
        if (next_to_produce >= nseg) return;
        idx = next_to_produce++;
      }
      u64 a = lo + idx * segment_size;
      u64 b = std::min(hi, a + segment_size);
      R r = produce(idx, a, b);
      {
        std::lock_guard<std::mutex> lk(mu);
        ready.emplace(idx, std::move(r));
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  int nworkers = std::min<u64>(threads, nseg);
  pool.reserve(nworkers);
  for (int t = 0; t < nworkers; ++t) pool.emplace_back(worker);

  while (next_to_consume < nseg) {
    R r = [&] {
      std::unique_lock<std::mutex> lk(mu);
      cv.wait(lk, [&] { return ready.count(next_to_consume) != 0; });
      auto it = ready.find(next_to_consume);
      R out = std::move(it->second);
      ready.erase(it);
      ++next_to_consume;
      return out;
    }();
    cv.notify_all();
    consume(std::move(r));
  }
  for (auto& t : pool) t.join();
}

// Calls fn(p) for every prime p in [lo, hi), ascending.
void for_each_prime(u64 lo, u64 hi, const ScanConfig& cfg,
                    const std::function<void(u64)>& fn);

// Pull-style stream over the primes in [lo, hi); spec operation primes_stream.
class PrimeStream {
 public:
  PrimeStream(u64 lo, u64 hi, u64 segment_size = kDefaultSegmentSize,
              u64 ceiling = kGlobalCeiling);
  // Returns 0 when exhausted (0 is never a prime).
  u64 next();

 private:
  void refill();
  u64 lo_, hi_, segment_size_;
  std::vector<u32> base_;
  std::vector<u64> buffer_;
  std::size_t pos_ = 0;
};

std::vector<u64> primes_in(u64 lo, u64 hi,
                           u64 segment_size = kDefaultSegmentSize);

// Mertens product V(y) = prod_{p <= y} (1 - 1/p), via compensated log sums.
double mertens_V(double y);

// V at several points in one streaming pass; ys must be ascending.
std::vector<double> mertens_V_grid(const std::vector<double>& ys,
                                   const ScanConfig& cfg = {});

}  // namespace multlab::primes

#endif
