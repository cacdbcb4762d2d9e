#ifndef MULTLAB_REPORT_HPP
#define MULTLAB_REPORT_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "multlab/lseries.hpp"
#include "multlab/structure.hpp"
#include "multlab/sums.hpp"

namespace multlab::report {

// Shortest text that reads back to the identical double.
std::string fmt_double(double v);

// ---- CSV -------------------------------------------------------------
// schema: kind,f,lo,hi,j,value_re,value_im,truncation,error_budget

extern const char* kSumCsvHeader;

std::string to_csv_row(const sums::SumRecord& rec);
sums::SumRecord parse_csv_row(const std::string& line);

std::string csv_escape(const std::string& field);
std::vector<std::string> csv_split(const std::string& line);

// ---- JSON ------------------------------------------------------------

std::string zeroset_json(const lseries::ZeroSet& zs);
std::string profile_json(const structure::TransitionProfile& p);
std::string structure_report_json(const structure::StructureReport& r);

// ---- flat key=value config (also the frozen-constants format) --------

std::map<std::string, std::string> read_kv_file(const std::string& path);
void write_kv_file(const std::string& path,
                   const std::map<std::string, std::string>& kv);

struct RunConfig {
  std::uint64_t ceiling = 100'000'000;  // per-run cap, <= global sieve ceiling
  std::uint64_t segment_size = primes::kDefaultSegmentSize;
  std::uint64_t X_lseries = 10'000'000;
  std::uint64_t X_transition = 100'000'000;
  double c0 = 0.1;
  double theta = 0.05;
  double y_grid_ratio = 1.2;
  int threads = 1;
  std::string format = "csv";  // csv | json

  sums::ScanConfig scan() const {
    sums::ScanConfig cfg;
    cfg.segment_size = segment_size;
    cfg.threads = threads;
    cfg.ceiling = ceiling;
    return cfg;
  }
  void apply_kv(const std::map<std::string, std::string>& kv);
};

}  // namespace multlab::report

#endif
