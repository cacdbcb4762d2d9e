#ifndef MULTLAB_STRUCTURE_HPP
#define MULTLAB_STRUCTURE_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "multlab/lseries.hpp"
#include "multlab/multfun.hpp"
#include "multlab/sums.hpp"

namespace multlab::structure {

using multfun::ClassParams;
using multfun::cplx;
using multfun::MultFunc;
using sums::ScanConfig;
using u64 = std::uint64_t;

enum class Provenance { constructed, from_zeros };

struct MinimizerRecord {
  int step_k = 0;          // 1 builds Y_1, k+1 builds Z_{k+1}
  double sigma = 1.0;      // evaluation point 1 + 1/log Y_k
  double y_star = 0.0;     // grid minimizer
  cplx L_value;            // L_{y*}(sigma, tau_k * g)
  double candidate_log = 0.0;
  bool at_grid_endpoint = false;
  bool case_split_kept_Yk = false;  // Z_{k+1} >= Y_k: no new finite cut
};

// Cut points live in log space: zero-derived cuts e^{1/|rho-1|} can overflow
// a double long before they stop being meaningful.
struct TransitionProfile {
  int m = 0;
  int D = 0;  // d (number of zeros used) on the from_zeros route
  double Q = 0.0;
  double base_log = 0.0;          // log Q_{D+1}
  std::vector<double> cut_logs;   // index k-1 holds log Y_k = log Q_{m+k}
  std::vector<bool> saturated;    // capped at the configured ceiling
  Provenance provenance = Provenance::constructed;
  std::vector<MinimizerRecord> diagnostics;

  // log Q_j for j in [m, D+1]; j = m gives +inf
  double cut_log_for(int j) const;
  bool monotone() const;
};

std::vector<double> geometric_grid(double lo, double hi, double ratio);

// The inductive construction: Y_1 from L_y(1, g), then Z_{k+1} from
// L_y(1 + 1/log Y_k, tau_k * g) over y in [Q, Y_k].
TransitionProfile transition_points(const MultFunc& f, const ClassParams& params,
                                    int m, const std::vector<double>& y_grid, u64 X,
                                    const ScanConfig& cfg = {});

struct IntervalRecord {
  int j = 0;
  double lo = 0, hi = 0;
  double value = 0;
  bool nested = false;  // prefix interval rather than a disjoint cell
};

struct StructureReport {
  int m = 0, D = 0;
  double max_abs = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::vector<IntervalRecord> records;
  std::vector<std::string> warnings;
};

StructureReport verify_structure(const MultFunc& f, const TransitionProfile& profile,
                                 int subintervals_per_level, u64 X, double threshold,
                                 const ScanConfig& cfg = {});

TransitionProfile zero_to_intervals(const lseries::ZeroSet& zeros, double Q, double c0);

// Re int_lo^hi y^{rho-2} / log y dy, evaluated as int e^{(rho-1)u}/u du.
double heuristic_integral(cplx rho, double lo, double hi, double abs_tol = 1e-6);

struct HeuristicRow {
  double lo = 0, hi = 0;
  double prediction = 0;  // -sum_rho Re int_I dy / (y^{2-rho} log y)
  std::optional<double> measured;
};

std::vector<HeuristicRow> heuristic_demo(const std::vector<cplx>& zeros,
                                         const std::vector<std::pair<double, double>>& intervals,
                                         const MultFunc* f = nullptr,
                                         const ScanConfig& cfg = {});

}  // namespace multlab::structure

#endif
