#include "multlab/primes.hpp"

#include <algorithm>
#include <cmath>

#include "multlab/kahan.hpp"

namespace multlab::primes {

std::vector<u32> small_primes(u64 limit) {
  std::vector<u32> out;
  if (limit < 2) return out;
  std::vector<bool> is_prime(limit + 1, true);
  is_prime[0] = is_prime[1] = false;
  for (u64 i = 2; i * i <= limit; ++i)
    if (is_prime[i])
      for (u64 j = i * i; j <= limit; j += i) is_prime[j] = false;
  for (u64 i = 2; i <= limit; ++i)
    if (is_prime[i]) out.push_back(static_cast<u32>(i));
  return out;
}

PrimeSegment sieve_segment(u64 lo, u64 hi, const std::vector<u32>& base) {
  PrimeSegment seg;
  seg.lo = lo;
  seg.hi = hi;
  seg.flags.assign(hi - lo, false);
  if (hi <= lo) return seg;

  // Odd candidates only; 2 handled explicitly.
  if (lo <= 2 && 2 < hi) seg.flags[2 - lo] = true;
  for (u64 n = std::max<u64>(lo | 1, 3); n < hi; n += 2) seg.flags[n - lo] = true;
  if (lo <= 1 && 1 < hi) seg.flags[1 - lo] = false;
  if (lo == 0) seg.flags[0] = false;

  for (u32 p : base) {
    if (p == 2) continue;
    u64 pp = u64{p} * p;
    if (pp >= hi) break;
    u64 start = std::max(pp, ((lo + p - 1) / p) * p);
    if (start % 2 == 0) start += p;  // only odd multiples carry flags
    for (u64 m = start; m < hi; m += 2 * u64{p}) seg.flags[m - lo] = false;
  }
  return seg;
}

std::vector<std::pair<u64, int>> FactorSieve::factor(u64 n) const {
  if (n < 1) throw RangeError("FactorSieve::factor: n must be >= 1");
  std::vector<std::pair<u64, int>> out;
  u64 cur = n;
  while (cur > 1) {
    u64 p;
    if (cur >= lo && cur < hi) {
      p = spf[cur - lo];
    } else {
      p = cur;
      for (u64 d = 2; d * d <= cur; ++d)
        if (cur % d == 0) {
          p = d;
          break;
        }
    }
    int a = 0;
    while (cur % p == 0) {
      cur /= p;
      ++a;
    }
    out.emplace_back(p, a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FactorSieve factor_segment(u64 lo, u64 hi) {
  if (lo < 2 || lo >= hi) throw RangeError("factor_segment: need 2 <= lo < hi");
  if (hi > kGlobalCeiling + 1) throw CapacityError("factor_segment: hi above global ceiling");
  if (hi - lo > kFactorSegmentCap) throw CapacityError("factor_segment: range above segment cap");

  FactorSieve fs;
  fs.lo = lo;
  fs.hi = hi;
  fs.spf.assign(hi - lo, 0);
  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(hi - 1))) + 1;
  for (u32 p : small_primes(root)) {
    u64 start = std::max<u64>(u64{p} * p, ((lo + p - 1) / p) * p);
    for (u64 m = start; m < hi; m += p)
      if (fs.spf[m - lo] == 0) fs.spf[m - lo] = p;
  }
  for (u64 n = lo; n < hi; ++n)
    if (fs.spf[n - lo] == 0) fs.spf[n - lo] = static_cast<u32>(n);
  return fs;
}

namespace {

void check_stream_range(u64 lo, u64 hi, u64 segment_size, u64 ceiling) {
  if (segment_size < 64) throw RangeError("primes: segment_size must be >= 64");
  if (lo < 2) throw RangeError("primes: lo must be >= 2");
  if (hi > ceiling) throw CapacityError("primes: hi exceeds configured ceiling");
}

}  // namespace

void for_each_prime(u64 lo, u64 hi, const ScanConfig& cfg,
                    const std::function<void(u64)>& fn) {
  check_stream_range(lo, hi, cfg.segment_size, cfg.ceiling);
  if (lo >= hi) return;
  auto base = small_primes(static_cast<u64>(std::sqrt(static_cast<double>(hi - 1))) + 1);
  ordered_segments<PrimeSegment>(
      lo, hi, cfg.segment_size, cfg.threads,
      [&](u64, u64 a, u64 b) { return sieve_segment(a, b, base); },
      [&](PrimeSegment&& seg) {
        for (u64 i = 0; i < seg.hi - seg.lo; ++i)
          if (seg.flags[i]) fn(seg.lo + i);
      });
}

PrimeStream::PrimeStream(u64 lo, u64 hi, u64 segment_size, u64 ceiling)
    : lo_(lo), hi_(hi), segment_size_(segment_size) {
  check_stream_range(lo, hi, segment_size, ceiling);
  if (hi_ > lo_)
    base_ = small_primes(static_cast<u64>(std::sqrt(static_cast<double>(hi_ - 1))) + 1);
}

void PrimeStream::refill() {
  buffer_.clear();
  pos_ = 0;
  while (buffer_.empty() && lo_ < hi_) {
    u64 b = std::min(hi_, lo_ + segment_size_);
    PrimeSegment seg = sieve_segment(lo_, b, base_);
    for (u64 i = 0; i < seg.hi - seg.lo; ++i)
      if (seg.flags[i]) buffer_.push_back(seg.lo + i);
    lo_ = b;
  }
}

u64 PrimeStream::next() {
  if (pos_ >= buffer_.size()) {
    refill();
    if (buffer_.empty()) return 0;
  }
  return buffer_[pos_++];
}

std::vector<u64> primes_in(u64 lo, u64 hi, u64 segment_size) {
  std::vector<u64> out;
  ScanConfig cfg;
  cfg.segment_size = segment_size;
  for_each_prime(lo, hi, cfg, [&](u64 p) { out.push_back(p); });
  return out;
}

double mertens_V(double y) {
  if (y < 2) throw RangeError("mertens_V: y must be >= 2");
  if (y > static_cast<double>(kGlobalCeiling))
    throw CapacityError("mertens_V: y exceeds global ceiling");
  u64 yi = static_cast<u64>(y);
  Kahan logsum;
  ScanConfig cfg;
  for_each_prime(2, yi + 1, cfg,
                 [&](u64 p) { logsum.add(std::log1p(-1.0 / static_cast<double>(p))); });
  return std::exp(logsum.value());
}

std::vector<double> mertens_V_grid(const std::vector<double>& ys, const ScanConfig& cfg) {
  std::vector<double> out(ys.size());
  if (ys.empty()) return out;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i)
    if (!(ys[i] <= ys[i + 1])) throw RangeError("mertens_V_grid: ys must ascend");
  if (ys.front() < 2) throw RangeError("mertens_V_grid: y must be >= 2");
  u64 hi = static_cast<u64>(ys.back()) + 1;
  Kahan logsum;
  std::size_t next = 0;
  for_each_prime(2, hi, cfg, [&](u64 p) {
    while (next < ys.size() && static_cast<double>(p) > ys[next])
      out[next++] = std::exp(logsum.value());
    logsum.add(std::log1p(-1.0 / static_cast<double>(p)));
  });
  while (next < ys.size()) out[next++] = std::exp(logsum.value());
  return out;
}

}  // namespace multlab::primes
