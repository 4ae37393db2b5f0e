#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dini/dini_solver.hpp"
#include "dini/errors.hpp"
#include "dini/inverse_solver.hpp"

namespace dini::cli {

enum ExitCode : int { kOk = 0, kSolverFailure = 1, kValidation = 2 };

/// Invalid user input; the message names the offending field.
class SpecError : public Error {
 public:
  SpecError(std::string field, const std::string& what)
      : Error(field + ": " + what), field(std::move(field)) {}
  std::string field;
};

struct ProblemSpec {
  std::string problem;             // builtin name, empty when expressions are used
  std::vector<std::string> exprs;  // one per equation
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<Vector> seed_a;
  std::optional<Vector> seed_b;
  std::optional<BoxDomain> box;
  SolverConfig config;
};

/// A validated problem. Pure problems carry `inverse`; all carry the map that
/// hypothesis audits run on and the box they sample.
struct ResolvedProblem {
  std::string label;
  bool pure = false;
  std::optional<ImplicitProblem> implicit;
  std::optional<InverseProblem> inverse;
  DifferentiableMap audit_map;
  BoxDomain audit_box;
};

/// Which problem kinds a command accepts. Expressions are read as F(x) in
/// x1..xn for Mode::pure and as F(x, y) otherwise.
enum class Mode { implicit, pure, any };

/// Throws SpecError (or expr::ParseError for malformed expressions).
ResolvedProblem resolve(const ProblemSpec& spec, Mode mode);

Vector parse_vector(std::string_view text, std::string_view field);
BoxDomain parse_box(std::string_view text, std::string_view field);

/// "lo:hi:count" per dimension, cartesian product with the first dimension
/// varying slowest.
std::vector<Vector> parse_grid(const std::vector<std::string>& dims, std::string_view field);

/// %.17g formatting (round-trips doubles).
std::string format_number(double v);

/// Runs the command line (args[0] is the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dini::cli
