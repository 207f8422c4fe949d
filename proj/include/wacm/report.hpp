#ifndef WACM_REPORT_HPP
#define WACM_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace wacm {

/// Suite configuration; identity and model lists are resolved names ("all"
/// handled by the caller/CLI).
struct RunConfig {
  std::vector<std::string> models;      // resolved model names
  std::vector<std::string> identities;  // resolved identity ids (catalog order)
  int points = 100;
  int tuples = 8;
  std::uint64_t seed = 42;
  double tol = 1e-8;
  int threads = 0;  // 0 = auto; result independent of the value
};

struct ReportRow {
  std::string model;
  std::string identity;
  bool hypothesis_ok = false;
  int n = 0;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  bool pass = false;
  std::string note;
};

struct CheckReport {
  RunConfig run;
  std::vector<ReportRow> rows;

  bool all_pass() const;
};

/// Byte-stable serializations: fixed key order, %.17g floats, no timestamps.
std::string to_json(const CheckReport& report);
std::string to_csv(const CheckReport& report);
std::string to_text(const CheckReport& report);

std::string format_double(double v);  // %.17g

}  // namespace wacm

#endif
