#include "wacm/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace wacm {

bool CheckReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string to_json(const CheckReport& report) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"schema\": 1,\n";
  os << "  \"run\": {";
  os << "\"seed\": " << report.run.seed;
  os << ", \"tol\": " << format_double(report.run.tol);
  os << ", \"points\": " << report.run.points;
  os << ", \"tuples\": " << report.run.tuples;
  os << "},\n";
  os << "  \"rows\": [\n";
  for (size_t i = 0; i < report.rows.size(); ++i) {
    const ReportRow& r = report.rows[i];
    os << "    {\"model\": \"" << json_escape(r.model) << "\""
       << ", \"identity\": \"" << json_escape(r.identity) << "\""
       << ", \"hypothesis_ok\": " << (r.hypothesis_ok ? "true" : "false")
       << ", \"n\": " << r.n
       << ", \"max_residual\": " << format_double(r.max_residual)
       << ", \"mean_residual\": " << format_double(r.mean_residual)
       << ", \"pass\": " << (r.pass ? "true" : "false")
       << ", \"note\": \"" << json_escape(r.note) << "\"}";
    if (i + 1 < report.rows.size()) os << ",";
    os << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

std::string to_csv(const CheckReport& report) {
  std::ostringstream os;
  os << "model,identity,hypothesis_ok,n,max_residual,mean_residual,pass,note\n";
  for (const ReportRow& r : report.rows) {
    std::string note = r.note;
    std::replace(note.begin(), note.end(), ',', ';');
    os << r.model << ',' << r.identity << ',' << (r.hypothesis_ok ? 1 : 0) << ',' << r.n
       << ',' << format_double(r.max_residual) << ',' << format_double(r.mean_residual)
       << ',' << (r.pass ? 1 : 0) << ',' << note << "\n";
  }
  return os.str();
}

std::string to_text(const CheckReport& report) {
  std::ostringstream os;
  os << "suite: seed=" << report.run.seed << " tol=" << format_double(report.run.tol)
     << " points=" << report.run.points << " tuples=" << report.run.tuples << "\n";
  for (const ReportRow& r : report.rows) {
    os << (r.pass ? "[pass] " : "[FAIL] ") << r.model << " " << r.identity
       << "  max=" << format_double(r.max_residual)
       << "  mean=" << format_double(r.mean_residual);
    if (!r.hypothesis_ok) os << "  (informational)";
    if (!r.note.empty()) os << "  -- " << r.note;
    os << "\n";
  }
  return os.str();
}

}  // namespace wacm
