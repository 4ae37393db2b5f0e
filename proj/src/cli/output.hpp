#pragma once

// Record formatting shared by the commands. JSON goes through nlohmann so
// the bytes depend only on the values.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dini/dini_solver.hpp"
#include "dini/hypothesis_checker.hpp"
#include "dini/solver_config.hpp"

namespace dini::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Vector& v);
Json to_json(const Matrix& a);
Json to_json(const SolverConfig& c);
Json to_json(const MinorReport& r);
Json to_json(const MixedReport& r);
Json to_json(const MeanValueReport& r);

Json failure_record(std::size_t index, const Vector& at, FailureKind kind, const std::string& message);

void write_line(std::ostream& os, const Json& record);

/// One CSV row, numbers at 17 significant digits, LF terminated.
void write_csv_row(std::ostream& os, const std::vector<double>& values);
void write_csv_header(std::ostream& os, const std::vector<std::string>& names);

/// prefix1..prefixN
std::vector<std::string> numbered(const std::string& prefix, std::size_t count);

}  // namespace dini::cli
