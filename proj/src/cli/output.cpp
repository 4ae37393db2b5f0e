#include "output.hpp"

#include "dini/cli.hpp"

namespace dini::cli {

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (double x : v.values()) a.push_back(x);
  return a;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (double v : m.row(i)) row.push_back(v);
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const SolverConfig& c) {
  Json j;
  j["residual_tol"] = c.residual_tol;
  j["width_tol"] = c.width_tol;
  j["max_iter"] = c.max_iter;
  j["bracket_r0"] = c.bracket_r0;
  j["default_radius"] = c.default_radius;
  j["max_expansions"] = c.max_expansions;
  j["accel"] = c.accel == Accel::bisect ? "bisect" : "illinois";
  j["seed_tol"] = c.seed_tol;
  return j;
}

Json to_json(const MinorReport& r) {
  Json j;
  j["type"] = "minor";
  j["k"] = r.k;
  j["min_abs"] = r.min_abs;
  j["argmin"] = to_json(r.argmin);
  j["samples"] = r.samples;
  j["skipped"] = r.skipped;
  j["sign_change"] = r.sign_change;
  j["violation_tol"] = r.violation_tol;
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

Json to_json(const MixedReport& r) {
  Json j;
  j["type"] = "mixed";
  j["trials"] = r.trials;
  j["skipped"] = r.skipped;
  j["min_abs_det"] = r.min_abs_det;
  Json pts = Json::array();
  for (const auto& p : r.worst_points) pts.push_back(to_json(p));
  j["worst_points"] = pts;
  j["worst_matrix"] = to_json(r.worst_matrix);
  j["sign_change"] = r.sign_change;
  j["violation_tol"] = r.violation_tol;
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

Json to_json(const MeanValueReport& r) {
  Json j;
  j["type"] = "mean-value";
  j["segments"] = r.segments;
  j["failures"] = r.failures;
  j["max_residual"] = r.max_residual;
  return j;
}

Json failure_record(std::size_t index, const Vector& at, FailureKind kind, const std::string& message) {
  Json j;
  j["type"] = "failure";
  j["index"] = index;
  j["x"] = to_json(at);
  j["reason"] = std::string(to_string(kind));
  j["message"] = message;
  return j;
}

void write_line(std::ostream& os, const Json& record) { os << record.dump() << '\n'; }

void write_csv_row(std::ostream& os, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << format_number(values[i]);
  }
  os << '\n';
}

void write_csv_header(std::ostream& os, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) os << ',';
    os << names[i];
  }
  os << '\n';
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace dini::cli
