#include "dini/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dini/example_map.hpp"
#include "dini/expr.hpp"
#include "dini/hypothesis_checker.hpp"
#include "dini/kernels.hpp"
#include "dini/sampling.hpp"
#include "output.hpp"

namespace dini::cli {

namespace {

struct Options {
  std::string problem;
  std::vector<std::string> exprs;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string seed_a, seed_b, box, radius;
  std::vector<std::string> grid;
  bool continuation = false;
  std::size_t budget = 2000;
  bool budget_given = false;
  std::size_t trials = 1000;
  std::size_t pairs = 0;
  std::uint64_t rng_seed = 0;
  std::optional<double> tol_residual, tol_width;
  std::string accel = "illinois";
  std::string out_path;
  std::string format = "csv";
  int threads = 0;
  std::vector<std::string> targets, at_x;
  std::string command_echo;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

SolverConfig make_config(const Options& o) {
  SolverConfig c;
  if (o.tol_residual) c.residual_tol = *o.tol_residual;
  if (o.tol_width) c.width_tol = *o.tol_width;
  c.accel = o.accel == "bisect" ? Accel::bisect : Accel::illinois;
  if (!o.radius.empty()) c.bracket_r0 = parse_vector(o.radius, "radius").values();
  return c;
}

ProblemSpec make_spec(const Options& o) {
  ProblemSpec s;
  s.problem = o.problem;
  s.exprs = o.exprs;
  s.n = o.n;
  s.m = o.m;
  if (!o.seed_a.empty()) s.seed_a = parse_vector(o.seed_a, "seed-a");
  if (!o.seed_b.empty()) s.seed_b = parse_vector(o.seed_b, "seed-b");
  if (!o.box.empty()) s.box = parse_box(o.box, "box");
  s.config = make_config(o);
  return s;
}

// Parses each expression on its own first so a syntax error can point at
// the offending source.
void check_expressions(const Options& o, Mode mode) {
  const bool pure = mode == Mode::pure || (mode == Mode::any && o.m == 0);
  for (std::size_t i = 0; i < o.exprs.size(); ++i) {
    try {
      (void)expr::parse(o.exprs[i], o.n, pure ? 0 : o.m);
    } catch (const expr::ParseError& e) {
      throw SpecError("expr " + std::to_string(i + 1),
                      std::string(e.what()) + "\n  " + o.exprs[i] + "\n  " +
                          std::string(e.offset, ' ') + "^");
    }
  }
}

Json run_record(const Options& o, const ResolvedProblem& r) {
  Json j;
  j["type"] = "run";
  j["command"] = o.command_echo;
  j["problem"] = r.label;
  const SolverConfig& c = r.implicit ? r.implicit->config : r.inverse->config;
  j["config"] = to_json(c);
  return j;
}

FailureKind classify(const std::exception_ptr& ep, std::string& message) {
  try {
    std::rethrow_exception(ep);
  } catch (const BracketError& e) {
    message = e.what();
    return FailureKind::bracket;
  } catch (const ConvergenceError& e) {
    message = e.what();
    return FailureKind::convergence;
  } catch (const DomainError& e) {
    message = e.what();
    return FailureKind::domain;
  } catch (const EvaluationError& e) {
    message = e.what();
    return FailureKind::evaluation;
  } catch (const SingularityError& e) {
    message = e.what();
    return FailureKind::singular;
  } catch (const Error& e) {
    message = e.what();
    return FailureKind::other;
  }
}

int cmd_solve(const Options& o, std::ostream& data, std::ostream& err) {
  check_expressions(o, Mode::implicit);
  const ResolvedProblem r = resolve(make_spec(o), Mode::implicit);
  const ImplicitProblem& p = *r.implicit;
  std::vector<Vector> grid = o.grid.empty() ? std::vector<Vector>{p.a} : parse_grid(o.grid, "grid");
  if (!o.grid.empty() && o.grid.size() != p.f.n) {
    throw SpecError("grid", "expected " + std::to_string(p.f.n) + " axes (one per x), got " +
                                std::to_string(o.grid.size()));
  }

  const auto start = Clock::now();
  const auto results = solve_on_grid(p, grid, o.continuation);
  const bool jsonl = o.format == "jsonl";
  std::ostream& fail_out = jsonl ? data : err;

  if (jsonl) {
    write_line(data, run_record(o, r));
  } else {
    auto names = numbered("x", p.f.n);
    for (auto& y : numbered("y", p.f.m)) names.push_back(y);
    names.push_back("residual");
    names.push_back("iterations");
    write_csv_header(data, names);
  }
  std::size_t failures = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& res = results[i];
    if (!res.ok()) {
      ++failures;
      write_line(fail_out, failure_record(i, grid[i], res.failure, res.message));
      continue;
    }
    const ImplicitValue& v = *res.value;
    if (jsonl) {
      Json j;
      j["type"] = "solution";
      j["index"] = i;
      j["x"] = to_json(grid[i]);
      j["y"] = to_json(v.y);
      j["residual"] = v.residual;
      j["iterations"] = v.inner_solves;
      write_line(data, j);
    } else {
      std::vector<double> row = grid[i].values();
      for (double y : v.y.values()) row.push_back(y);
      row.push_back(v.residual);
      row.push_back(static_cast<double>(v.inner_solves));
      write_csv_row(data, row);
    }
  }
  if (jsonl) {
    Json j;
    j["type"] = "summary";
    j["points"] = results.size();
    j["failures"] = failures;
    write_line(data, j);
  }
  err << "solved " << results.size() - failures << "/" << results.size() << " points in "
      << seconds_since(start) << " s\n";
  return failures ? kSolverFailure : kOk;
}

int cmd_invert(const Options& o, std::ostream& data, std::ostream& err) {
  check_expressions(o, Mode::pure);
  const ResolvedProblem r = resolve(make_spec(o), Mode::pure);
  const InverseProblem& p = *r.inverse;
  const std::size_t dim = p.f.dim;

  std::vector<Vector> targets;
  for (const auto& t : o.targets) {
    Vector y = parse_vector(t, "target");
    if (y.size() != dim) throw SpecError("target", "expected " + std::to_string(dim) + " components");
    targets.push_back(std::move(y));
  }
  for (const auto& t : o.at_x) {
    Vector x = parse_vector(t, "at-x");
    if (x.size() != dim) throw SpecError("at-x", "expected " + std::to_string(dim) + " components");
    try {
      targets.push_back(evaluate(p.f, x));
    } catch (const Error& e) {
      throw SpecError("at-x", e.what());
    }
  }
  if (targets.empty()) throw SpecError("target", "give at least one --target or --at-x");

  const auto start = Clock::now();
  const bool jsonl = o.format == "jsonl";
  std::ostream& fail_out = jsonl ? data : err;
  if (jsonl) {
    write_line(data, run_record(o, r));
  } else {
    auto names = numbered("y", dim);
    for (auto& x : numbered("x", dim)) names.push_back(x);
    names.push_back("round_trip");
    write_csv_header(data, names);
  }
  std::size_t failures = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Vector& y = targets[i];
    Vector x;
    try {
      x = invert_at(p, y);
    } catch (const Error&) {
      std::string message;
      const FailureKind kind = classify(std::current_exception(), message);
      ++failures;
      Json j = failure_record(i, y, kind, message);
      j.erase("x");
      j["y"] = to_json(y);
      write_line(fail_out, j);
      continue;
    }
    const double rt = (evaluate(p.f, x) - y).norm_inf();
    if (jsonl) {
      Json j;
      j["type"] = "inverse";
      j["index"] = i;
      j["y"] = to_json(y);
      j["x"] = to_json(x);
      j["round_trip"] = rt;
      write_line(data, j);
    } else {
      std::vector<double> row = y.values();
      for (double v : x.values()) row.push_back(v);
      row.push_back(rt);
      write_csv_row(data, row);
    }
  }
  if (jsonl) {
    Json j;
    j["type"] = "summary";
    j["points"] = targets.size();
    j["failures"] = failures;
    write_line(data, j);
  }
  err << "inverted " << targets.size() - failures << "/" << targets.size() << " targets in "
      << seconds_since(start) << " s\n";
  return failures ? kSolverFailure : kOk;
}

// A violation is a finding about the problem, not a tool failure, so the
// exit code stays 0; consumers read the verdict fields.
int cmd_audit(const Options& o, std::ostream& data, std::ostream& err) {
  check_expressions(o, Mode::any);
  const ResolvedProblem r = resolve(make_spec(o), Mode::any);
  const auto start = Clock::now();

  Json run = run_record(o, r);
  run["box_lower"] = to_json(r.audit_box.lower);
  run["box_upper"] = to_json(r.audit_box.upper);
  run["budget"] = o.budget;
  run["trials"] = o.trials;
  run["rng_seed"] = o.rng_seed;
  write_line(data, run);

  std::size_t violations = 0;
  for (const auto& rep : audit_minors(r.audit_map, r.audit_box, o.budget)) {
    Json j = to_json(rep);
    const bool bad = rep.verdict == Verdict::violation_found;
    violations += bad;
    j["note"] = bad ? (rep.sign_change ? "minor changes sign on the box" : "minor vanishes within tolerance")
                    : "no sampled point vanished; sampling cannot certify";
    write_line(data, j);
  }
  if (o.trials > 0) {
    const MixedReport mixed = audit_mixed_determinant(r.audit_map, r.audit_box, o.trials, o.rng_seed);
    violations += mixed.verdict == Verdict::violation_found;
    write_line(data, to_json(mixed));
  }
  if (o.pairs > 0) {
    const MeanValueReport mv = audit_mean_value_matrix(r.audit_map, r.audit_box, o.pairs, o.rng_seed);
    write_line(data, to_json(mv));
  }
  err << "audit: " << violations << " violation report(s), " << seconds_since(start) << " s\n";
  return kOk;
}

struct Claim {
  bool pass = false;
  std::string title;
  std::string detail;
};

Claim demo_differentiability() {
  std::vector<double> radii;
  for (int e = 1; e <= 8; ++e) radii.push_back(std::pow(10.0, -e));
  Claim c{true, "F is differentiable at the origin with JF(0) = diag(8, 8)", ""};
  std::ostringstream os;
  os << std::setprecision(3);
  for (const auto& s : example_differentiability_scan(radii)) {
    const bool ok = s.residual <= s.h * s.h;
    c.pass = c.pass && ok;
    os << "\n    h = " << s.h << "  residual = " << s.residual << (ok ? "" : "  > h^2");
  }
  c.detail = os.str();
  return c;
}

Claim demo_witness() {
  // r_k < 1e-3 once k exceeds about 3.2e5
  Claim c{true, "dF1/dx has no limit at the origin (oscillation of amplitude 2)", ""};
  bool plus = false, minus = false;
  std::ostringstream os;
  os << std::setprecision(6);
  for (std::uint64_t k = 400000; k < 400008; ++k) {
    const WitnessSample w = example_discontinuity_witness(k);
    c.pass = c.pass && std::fabs(w.value) >= 1.9 && w.r < 1e-3;
    plus = plus || w.value > 0;
    minus = minus || w.value < 0;
    os << "\n    r = " << w.r << "  jump = " << w.value;
  }
  c.pass = c.pass && plus && minus;
  c.detail = os.str();
  return c;
}

Claim demo_minors(std::size_t budget) {
  Claim c{false, "leading minors on [-0.7, 0.7]^2: min |m1| >= 3 and min |det| >= 5", ""};
  std::ostringstream os;
  os << std::setprecision(6);
  try {
    const ExampleBounds b = example_minor_bounds(example_map().domain, budget);
    c.pass = true;
    os << "\n    budget = " << budget << "  min |m1| = " << b.first.min_abs << "  min |det| = " << b.det.min_abs;
  } catch (const Error& e) {
    os << "\n    " << e.what();
  }
  c.detail = os.str();
  return c;
}

Claim demo_round_trip(const SolverConfig& config) {
  Claim c{false, "local inverse: G(F(x)) = x and JG JF = I on the disc of radius 0.4", ""};
  std::ostringstream os;
  os << std::setprecision(3);
  try {
    const InverseProblem p = make_inverse_problem(example_map(), Vector{0.0, 0.0}, config);
    const auto xs = sampling::halton_disc(Vector{0.0, 0.0}, 0.4, 100);
    const RoundTripReport rep = round_trip_check(p, xs);
    c.pass = rep.failures == 0 && rep.max_round_trip <= 1e-8 && rep.max_jacobian_error <= 1e-6;
    os << "\n    points = " << xs.size() << "  failures = " << rep.failures
       << "  max |G(F(x)) - x| = " << rep.max_round_trip
       << "  max |JG JF - I| = " << rep.max_jacobian_error;
    for (const auto& pt : rep.points) {
      if (!pt.ok) {
        os << "\n    first failure: " << to_string(pt.failure) << ": " << pt.message;
        break;
      }
    }
  } catch (const Error& e) {
    os << "\n    " << e.what();
  }
  c.detail = os.str();
  return c;
}

int cmd_demo(const Options& o, std::ostream& data, std::ostream& err) {
  const SolverConfig config = make_config(o);
  try {
    config.validate();
  } catch (const PreconditionError& e) {
    throw SpecError("config", e.what());
  }
  const auto start = Clock::now();
  const std::size_t budget = o.budget_given ? o.budget : 5000;
  const std::vector<Claim> claims{demo_differentiability(), demo_witness(), demo_minors(budget),
                                  demo_round_trip(config)};
  data << "F(x, y) = (8x + x^3 cos(1/(x^2+y^2)), 8y + y^3 sin(1/(x^2+y^2))), F(0, 0) = 0\n";
  std::size_t failed = 0;
  for (const auto& c : claims) {
    failed += !c.pass;
    data << (c.pass ? "[PASS] " : "[FAIL] ") << c.title << c.detail << '\n';
  }
  data << (failed ? std::to_string(failed) + " claim(s) failed" : std::string("all claims hold")) << '\n';
  err << "demo: " << seconds_since(start) << " s\n";
  return failed ? kSolverFailure : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Implicit functions and local inverses by nested bracketed root finding", "dini"};
  app.set_config("--config", "", "TOML file with the same keys as the flags; flags win");
  app.require_subcommand(1, 1);

  app.add_option("--problem", o.problem, "builtin problem name");
  app.add_option("--expr", o.exprs, "one component of F in x1..xn (and y1..ym for F(x, y)); repeatable");
  app.add_option("--n", o.n, "number of independent variables x");
  app.add_option("--m", o.m, "number of unknowns y (equations)");
  app.add_option("--seed-a", o.seed_a, "seed x as 'v1,v2,...'");
  app.add_option("--seed-b", o.seed_b, "seed y as 'v1,v2,...'");
  app.add_option("--box", o.box, "domain box 'lo:hi,lo:hi,...'");
  app.add_option("--grid", o.grid, "grid axis 'lo:hi:count', one per x (repeatable)");
  app.add_flag("--continuation", o.continuation, "seed each grid solve from the nearest solved point");
  app.add_option("--radius", o.radius, "initial bracket radius per unknown 'r1,r2,...'");
  auto* budget = app.add_option("--budget", o.budget, "Halton samples for the minor audit");
  app.add_option("--trials", o.trials, "mixed-determinant trials");
  app.add_option("--pairs", o.pairs, "random segments for the mean-value audit");
  app.add_option("--rng-seed", o.rng_seed, "seed of the audit RNG streams");
  app.add_option("--tol-residual", o.tol_residual, "residual tolerance of the scalar solves")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-width", o.tol_width, "relative bracket width tolerance")->check(CLI::PositiveNumber);
  app.add_option("--accel", o.accel, "bracketed iteration")->check(CLI::IsMember({"bisect", "illinois"}));
  app.add_option("--out", o.out_path, "write data to this file instead of stdout");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "jsonl"}));
  app.add_option("--threads", o.threads, "worker threads (0 = machine default)")->check(CLI::NonNegativeNumber);
  app.add_option("--target", o.targets, "invert: target y 'v1,v2,...' (repeatable)");
  app.add_option("--at-x", o.at_x, "invert: use y = F(x) for this x (repeatable)");

  auto* solve = app.add_subcommand("solve", "solve F(x, y) = 0 for y on a grid of x")->fallthrough();
  auto* invert = app.add_subcommand("invert", "invert a map F: R^n -> R^n at target points")->fallthrough();
  auto* audit = app.add_subcommand("audit", "sample the minor and mixed-determinant hypotheses")->fallthrough();
  auto* demo = app.add_subcommand("demo", "check the claims about the built-in non-C^1 example")->fallthrough();

  std::vector<std::string> owned(args.begin(), args.end());
  if (owned.empty()) owned.push_back("dini");
  std::vector<char*> argv;
  for (auto& a : owned) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }
  o.budget_given = budget->count() > 0;
  for (std::size_t i = 1; i < owned.size(); ++i) o.command_echo += (i > 1 ? " " : "") + owned[i];

  try {
    if (o.threads > 0) kernels::set_threads(o.threads);
    std::ofstream file;
    if (!o.out_path.empty()) {
      file.open(o.out_path);
      if (!file) throw SpecError("out", "cannot open '" + o.out_path + "'");
    }
    std::ostream& data = o.out_path.empty() ? out : file;
    data << std::setprecision(17);
    if (*solve) return cmd_solve(o, data, err);
    if (*invert) return cmd_invert(o, data, err);
    if (*audit) return cmd_audit(o, data, err);
    if (*demo) return cmd_demo(o, data, err);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const expr::ParseError& e) {
    err << "error: expr: " << e.what() << '\n';
    return kValidation;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kSolverFailure;
  }
  return kValidation;
}

}  // namespace dini::cli
