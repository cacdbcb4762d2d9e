#ifndef MULTLAB_KAHAN_HPP
#define MULTLAB_KAHAN_HPP

#include <complex>

namespace multlab {

// Kahan compensated accumulator. All reductions in this project feed terms
// in a fixed (ascending) order through one of these, which makes results
// bit-identical across segment sizes and worker counts.
struct Kahan {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    double y = x - comp;
    volatile double t = sum + y;  // keep the compiler from re-associating
    comp = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

struct KahanComplex {
  Kahan re, im;

  void add(std::complex<double> z) {
    re.add(z.real());
    im.add(z.imag());
  }
  std::complex<double> value() const { return {re.value(), im.value()}; }
};

}  // namespace multlab

#endif
