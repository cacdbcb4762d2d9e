#include "multlab/report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace multlab::report {

using json = nlohmann::ordered_json;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* kSumCsvHeader = "kind,f,lo,hi,j,value_re,value_im,truncation,error_budget";

namespace {

const char* kind_name(sums::SumKind k) {
  switch (k) {
    case sums::SumKind::partial: return "partial";
    case sums::SumKind::sifted: return "sifted";
    case sums::SumKind::prime_log: return "prime_log";
    case sums::SumKind::chebyshev: return "chebyshev";
    case sums::SumKind::heuristic: return "heuristic";
  }
  return "?";
}

sums::SumKind kind_from(const std::string& s) {
  if (s == "partial") return sums::SumKind::partial;
  if (s == "sifted") return sums::SumKind::sifted;
  if (s == "prime_log") return sums::SumKind::prime_log;
  if (s == "chebyshev") return sums::SumKind::chebyshev;
  if (s == "heuristic") return sums::SumKind::heuristic;
  throw RangeError("unknown SumRecord kind: " + s);
}

double to_double(const std::string& s) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw RangeError("bad numeric CSV field: " + s);
  return v;
}

}  // namespace

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string to_csv_row(const sums::SumRecord& rec) {
  std::string out;
  out += kind_name(rec.kind);
  out += ',';
  out += csv_escape(rec.f_label);
  out += ',';
  out += fmt_double(rec.lo);
  out += ',';
  out += fmt_double(rec.hi);
  out += ',';
  out += std::to_string(rec.j_shift);
  out += ',';
  out += fmt_double(rec.value.real());
  out += ',';
  out += fmt_double(rec.value.imag());
  out += ',';
  out += std::to_string(rec.truncation);
  out += ',';
  out += fmt_double(rec.error_budget);
  return out;
}

sums::SumRecord parse_csv_row(const std::string& line) {
  auto f = csv_split(line);
  if (f.size() != 9) throw RangeError("SumRecord row needs 9 fields");
  sums::SumRecord rec;
  rec.kind = kind_from(f[0]);
  rec.f_label = f[1];
  rec.lo = to_double(f[2]);
  rec.hi = to_double(f[3]);
  rec.j_shift = static_cast<int>(to_double(f[4]));
  rec.value = {to_double(f[5]), to_double(f[6])};
  rec.truncation = static_cast<std::uint64_t>(to_double(f[7]));
  rec.error_budget = to_double(f[8]);
  return rec;
}

std::string zeroset_json(const lseries::ZeroSet& zs) {
  json j;
  j["center"] = {zs.center.real(), zs.center.imag()};
  j["radius"] = zs.radius;
  j["total"] = zs.total;
  j["zeros"] = json::array();
  for (const auto& z : zs.zeros) {
    json e;
    e["re"] = z.rho.real();
    e["im"] = z.rho.imag();
    e["multiplicity"] = z.multiplicity;
    e["dist_to_one"] = std::abs(z.rho - std::complex<double>(1.0, 0.0));
    j["zeros"].push_back(e);
  }
  return j.dump(2);
}

std::string profile_json(const structure::TransitionProfile& p) {
  json j;
  j["provenance"] =
      p.provenance == structure::Provenance::constructed ? "constructed" : "from_zeros";
  j["m"] = p.m;
  j["D"] = p.D;
  j["Q"] = p.Q;
  j["base_log"] = p.base_log;
  j["cut_points"] = json::array();
  for (std::size_t k = 0; k < p.cut_logs.size(); ++k) {
    json c;
    c["j"] = p.m + 1 + static_cast<int>(k);  // Q_{m+k+1} = Y_{k+1}
    c["log"] = p.cut_logs[k];
    c["value"] = p.cut_logs[k] < 700 ? std::exp(p.cut_logs[k])
                                     : std::numeric_limits<double>::infinity();
    c["saturated"] = static_cast<bool>(p.saturated[k]);
    j["cut_points"].push_back(c);
  }
  j["diagnostics"] = json::array();
  for (const auto& d : p.diagnostics) {
    json r;
    r["step_k"] = d.step_k;
    r["sigma"] = d.sigma;
    r["y_star"] = d.y_star;
    r["L_re"] = d.L_value.real();
    r["L_im"] = d.L_value.imag();
    r["candidate_log"] = d.candidate_log;
    r["at_grid_endpoint"] = d.at_grid_endpoint;
    r["case_split_kept_Yk"] = d.case_split_kept_Yk;
    j["diagnostics"].push_back(r);
  }
  return j.dump(2);
}

std::string structure_report_json(const structure::StructureReport& r) {
  json j;
  j["m"] = r.m;
  j["D"] = r.D;
  j["max_abs"] = r.max_abs;
  j["threshold"] = r.threshold;
  j["pass"] = r.pass;
  j["warnings"] = r.warnings;
  j["records"] = json::array();
  for (const auto& rec : r.records) {
    json e;
    e["j"] = rec.j;
    e["lo"] = rec.lo;
    e["hi"] = rec.hi;
    e["value"] = rec.value;
    e["nested"] = rec.nested;
    j["records"].push_back(e);
  }
  return j.dump(2);
}

std::map<std::string, std::string> read_kv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RangeError("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw RangeError("config line without '=': " + line);
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    auto trim = [](std::string& s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.pop_back();
    };
    trim(key);
    trim(val);
    kv[key] = val;
  }
  return kv;
}

void write_kv_file(const std::string& path, const std::map<std::string, std::string>& kv) {
  std::ofstream out(path);
  if (!out) throw RangeError("cannot write file: " + path);
  for (const auto& [k, v] : kv) out << k << " = " << v << "\n";
}

void RunConfig::apply_kv(const std::map<std::string, std::string>& kv) {
  auto get = [&](const char* key) -> const std::string* {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  if (auto* v = get("ceiling")) ceiling = std::stoull(*v);
  if (auto* v = get("segment_size")) segment_size = std::stoull(*v);
  if (auto* v = get("X_lseries")) X_lseries = std::stoull(*v);
  if (auto* v = get("X_transition")) X_transition = std::stoull(*v);
  if (auto* v = get("c0")) c0 = std::stod(*v);
  if (auto* v = get("theta")) theta = std::stod(*v);
  if (auto* v = get("y_grid_ratio")) y_grid_ratio = std::stod(*v);
  if (auto* v = get("threads")) threads = std::stoi(*v);
  if (auto* v = get("format")) format = *v;
  if (ceiling > primes::kGlobalCeiling)
    throw CapacityError("config: ceiling above global sieve ceiling");
}

}  // namespace multlab::report
