#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dini/cli.hpp"

using namespace dini;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dini");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::vector<nlohmann::json> jsonl(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("solve builtin circle on a grid") {
  const Run r = run({"solve", "--problem", "circle", "--grid", "-0.9:0.9:19"});
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 20);
  CHECK(rows[0] == std::vector<std::string>{"x1", "y1", "residual", "iterations"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double x = std::stod(rows[i][0]), y = std::stod(rows[i][1]);
    CHECK(std::stod(rows[i][2]) <= 1e-10);
    CHECK(std::fabs(y - std::sqrt(1 - x * x)) <= 1e-9);
  }
  CHECK(r.out.find('\r') == std::string::npos);
  CHECK(r.out.find("-0.90000000000000002") != std::string::npos);
}

TEST_CASE("expression and builtin give the same y column") {
  const Run a = run({"solve", "--problem", "circle", "--grid", "-0.9:0.9:19"});
  const Run b = run({"solve", "--expr", "x1^2+y1^2-1", "--n", "1", "--m", "1", "--seed-a", "0", "--seed-b", "1",
                     "--box", "-2:2,-2:2", "--grid", "-0.9:0.9:19"});
  CHECK(b.code == 0);
  const auto ra = csv(a.out), rb = csv(b.out);
  REQUIRE(ra.size() == rb.size());
  for (std::size_t i = 1; i < ra.size(); ++i) CHECK(std::fabs(std::stod(ra[i][1]) - std::stod(rb[i][1])) <= 1e-9);
}

TEST_CASE("validation errors exit 2 with field names") {
  const Run parse = run({"solve", "--expr", "x1 + * 2", "--n", "1", "--m", "1"});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("offset 5") != std::string::npos);
  CHECK(parse.err.find("     ^") != std::string::npos);
  CHECK(parse.out.empty());

  CHECK(run({"solve", "--expr", "y1", "--expr", "y2", "--n", "1", "--m", "1"}).code == 2);
  CHECK(run({"solve", "--problem", "nope"}).err.find("valid: circle") != std::string::npos);
  CHECK(run({"solve", "--problem", "circle", "--seed-b", "0.5"}).code == 2);
  CHECK(run({"solve", "--problem", "circle", "--grid", "0:1"}).err.find("grid") != std::string::npos);
  CHECK(run({"solve", "--problem", "circle", "--box", "1:0,0:1"}).err.find("box") != std::string::npos);
  CHECK(run({"solve", "--problem", "paper-example"}).code == 2);
  CHECK(run({"invert", "--problem", "circle", "--target", "1"}).code == 2);
  CHECK(run({"solve", "--problem", "circle", "--accel", "newton"}).code == 2);
  CHECK(run({"solve", "--problem", "circle", "--tol-residual", "-1"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("solver failures exit 1 and are reported as JSON lines") {
  const Run r = run({"solve", "--problem", "circle", "--grid", "0:1.5:2"});
  CHECK(r.code == 1);
  CHECK(csv(r.out).size() == 2);
  const auto fails = jsonl(r.err.substr(0, r.err.find("solved")));
  REQUIRE(fails.size() == 1);
  CHECK(fails[0]["reason"] == "bracket-failure");
  CHECK(fails[0]["index"] == 1);

  const Run j = run({"solve", "--problem", "circle", "--grid", "0:1.5:2", "--format", "jsonl"});
  const auto recs = jsonl(j.out);
  CHECK(recs.front()["type"] == "run");
  CHECK(recs.back()["type"] == "summary");
  CHECK(recs.back()["failures"] == 1);
}

TEST_CASE("invert") {
  const Run ex = run({"invert", "--problem", "paper-example", "--at-x", "0.1,0.2"});
  CHECK(ex.code == 0);
  const auto rows = csv(ex.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"y1", "y2", "x1", "x2", "round_trip"});
  CHECK(std::fabs(std::stod(rows[1][2]) - 0.1) <= 1e-8);
  CHECK(std::fabs(std::stod(rows[1][3]) - 0.2) <= 1e-8);

  const Run id = run({"invert", "--problem", "identity", "--target", "1.25,-3"});
  const auto ir = csv(id.out);
  CHECK(std::stod(ir[1][2]) == doctest::Approx(1.25));
  CHECK(std::stod(ir[1][3]) == doctest::Approx(-3.0));

  const Run far = run({"invert", "--problem", "paper-example", "--target", "100,100", "--format", "jsonl"});
  CHECK(far.code == 1);
  bool found = false;
  for (const auto& rec : jsonl(far.out)) found = found || (rec["type"] == "failure" && rec["reason"] == "bracket-failure");
  CHECK(found);

  const Run expr = run({"invert", "--expr", "2*x1", "--expr", "x2 + x1", "--n", "2", "--target", "4,5"});
  CHECK(expr.code == 0);
  CHECK(std::stod(csv(expr.out)[1][2]) == doctest::Approx(2.0));
  CHECK(std::stod(csv(expr.out)[1][3]) == doctest::Approx(3.0));
}

TEST_CASE("audit") {
  const Run ex = run({"audit", "--problem", "paper-example", "--budget", "5000"});
  CHECK(ex.code == 0);
  const auto recs = jsonl(ex.out);
  REQUIRE(recs.size() == 4);
  CHECK(recs[2]["type"] == "minor");
  CHECK(recs[2]["k"] == 2);
  CHECK(recs[2]["min_abs"].get<double>() >= 5.0);
  CHECK(recs[2]["verdict"] == "no-violation-found");

  const Run circle = run({"audit", "--problem", "circle", "--box", "-0.5:0.5,-1:1"});
  CHECK(circle.code == 0);
  CHECK(jsonl(circle.out)[1]["verdict"] == "violation-found");

  const std::vector<std::string> args{"audit", "--problem", "coupled3", "--rng-seed", "42", "--pairs", "5"};
  const Run a = run(args), b = run(args);
  CHECK(a.out == b.out);
  CHECK(run({"audit", "--problem", "coupled3", "--rng-seed", "43", "--pairs", "5"}).out != a.out);
}

TEST_CASE("demo") {
  const Run d = run({"demo"});
  CHECK(d.code == 0);
  CHECK(d.out.find("[FAIL]") == std::string::npos);
  CHECK(d.out.find("all claims hold") != std::string::npos);

  CHECK(run({"demo", "--budget", "10"}).code == 0);

  const Run bad = run({"demo", "--tol-residual", "1e-30"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("[FAIL]") != std::string::npos);
  CHECK(bad.out.find("convergence-failure") != std::string::npos);
}

TEST_CASE("config file supplies defaults and flags win") {
  const std::string path = "dini_test_config.toml";
  {
    std::ofstream f(path);
    f << "problem = \"circle\"\ngrid = [\"-0.5:0.5:3\"]\n";
  }
  const Run r = run({"solve", "--config", path});
  CHECK(r.code == 0);
  CHECK(csv(r.out).size() == 4);
  const Run o = run({"solve", "--config", path, "--grid", "0:0.5:2"});
  CHECK(csv(o.out).size() == 3);
  std::remove(path.c_str());
}

TEST_CASE("--out writes the data file") {
  const std::string path = "dini_test_out.csv";
  const Run r = run({"solve", "--problem", "linear", "--grid", "0:1:2", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(csv(ss.str()).size() == 3);
  std::remove(path.c_str());
}
