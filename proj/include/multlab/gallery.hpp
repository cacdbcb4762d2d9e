#ifndef MULTLAB_GALLERY_HPP
#define MULTLAB_GALLERY_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "multlab/multfun.hpp"

namespace multlab::gallery {

using multfun::cplx;
using multfun::MultFunc;

// A gallery function together with hand-entered analytic ground truth.
struct GalleryEntry {
  MultFunc f;
  multfun::ClassParams params;
  std::optional<int> known_m;
  bool zeros_known = false;
  std::vector<cplx> known_zeros;  // multiplicity by repetition, |rho-1| ascending
  std::string notes;
};

enum class Basic { one, moebius, moebius_conv_moebius };

GalleryEntry make_basic(Basic which);
GalleryEntry make_tau(int k);
GalleryEntry make_moebius_twist(double gamma);
GalleryEntry make_twist_product(const std::vector<double>& gammas);
GalleryEntry make_remark(int D);
GalleryEntry make_quadratic_char(long long q);
// The D=2 object 1*chi from the character illustration.
GalleryEntry make_one_conv_char(long long q);
// Pointwise twist by p^{i k gamma}; zeros (when known) shift by i*gamma.
GalleryEntry twist_entry(const GalleryEntry& base, double gamma);

// Kronecker symbol (a|n) for n >= 0.
int kronecker_symbol(long long a, long long n);

}  // namespace multlab::gallery

#endif
