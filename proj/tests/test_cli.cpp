// End-to-end tests of the pq-special binary (path injected by the build
// as PQ_SPECIAL_BIN).  These exercise the documented exit-code contract:
// 0 success, 2 usage/domain error, 3 non-convergence, 4 violations.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(PQ_SPECIAL_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
    out.append(buf, n);
  }
  int status = pclose(pipe);
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = out;
  return r;
}

// First whitespace-separated token of the first line, parsed as double.
double first_number(const std::string& out) {
  std::istringstream in(out);
  double v = 0.0;
  in >> v;
  REQUIRE(in.good());
  return v;
}

std::vector<std::string> lines_of(const std::string& out) {
  std::vector<std::string> lines;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  return lines;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double rel(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST_CASE("eval prints value, error estimate, and evaluation count") {
  CliResult r = run_cli("eval beta x=2 y=3");
  CHECK(r.exit_code == 0);
  CHECK(rel(first_number(r.out), 1.0 / 12.0) <= 1e-12);

  std::istringstream in(r.out);
  double value = 0.0, error = 0.0;
  long long evals = 0;
  in >> value >> error >> evals;
  CHECK(error >= 0.0);
  CHECK(evals >= 1);
}

TEST_CASE("eval reproduces the extended-beta oracle value") {
  CliResult r = run_cli("eval extended_beta x=2 y=3 p=1 q=1");
  CHECK(r.exit_code == 0);
  CHECK(rel(first_number(r.out), 0.00081151198625972452) <= 1e-10);
}

TEST_CASE("eval accepts Greek argument spellings") {
  CliResult ascii = run_cli("eval phi_integral beta=1.5 gamma=3 z=2 p=1 q=0.5");
  CliResult greek = run_cli(
      "eval phi_integral \xce\xb2=1.5 \xce\xb3=3 z=2 p=1 q=0.5");
  CHECK(ascii.exit_code == 0);
  CHECK(greek.exit_code == 0);
  CHECK(ascii.out == greek.out);
}

TEST_CASE("eval usage and domain failures exit with 2") {
  CHECK(run_cli("eval beta x=-1 y=2").exit_code == 2);
  CHECK(run_cli("eval beta x=2").exit_code == 2);
  CHECK(run_cli("eval beta x=2 y=3 z=4").exit_code == 2);
  CHECK(run_cli("eval nosuch x=1").exit_code == 2);
  CHECK(run_cli("eval beta x=abc y=2").exit_code == 2);
  CHECK(run_cli("eval phi_derivative beta=1 gamma=2 z=0 p=0 q=0 n=0")
            .exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("eval reports non-convergence with exit 3") {
  CliResult r =
      run_cli("eval phi_series beta=1 gamma=2 z=30 p=0.5 q=0.5 --max-terms 10");
  CHECK(r.exit_code == 3);
  CHECK(first_number(r.out) > 0.0);  // best-effort value still printed
}

TEST_CASE("verify a single checker") {
  CliResult r = run_cli("verify turan_pq --n 20 --seed 7");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].rfind("checker=turan_pq ", 0) == 0);
  CHECK(lines[0].find("violated=0") != std::string::npos);
  CHECK(lines[1].rfind("total ", 0) == 0);
}

TEST_CASE("verify all runs every checker") {
  CliResult r = run_cli("verify all --n 5 --seed 1");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 12);  // 11 checkers + total
  CHECK(lines.back().rfind("total ", 0) == 0);
  CHECK(lines.back().find("violated=0") != std::string::npos);
}

TEST_CASE("verify rejects unknown checkers") {
  CHECK(run_cli("verify nosuch").exit_code == 2);
  CHECK(run_cli("verify").exit_code == 2);
}

TEST_CASE("verify CSV output is deterministic") {
  std::string f1 = "/tmp/pqsf_test_verify_1.csv";
  std::string f2 = "/tmp/pqsf_test_verify_2.csv";
  CHECK(run_cli("verify all --n 4 --seed 9 --output " + f1).exit_code == 0);
  CHECK(run_cli("verify all --n 4 --seed 9 --output " + f2).exit_code == 0);
  std::string a = slurp(f1);
  std::string b = slurp(f2);
  CHECK(a == b);
  CHECK(a.rfind("case_id,checker,params_json,lhs,rhs,margin,error_budget,"
                "status\n",
                0) == 0);
  CHECK(lines_of(a).size() == 4 * 11 + 1);
  std::remove(f1.c_str());
  std::remove(f2.c_str());
}

TEST_CASE("verify serial and parallel agree") {
  CliResult serial = run_cli("verify all --n 6 --seed 5 --threads 1");
  CliResult parallel = run_cli("verify all --n 6 --seed 5 --threads 4");
  CHECK(serial.exit_code == 0);
  CHECK(parallel.exit_code == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("sweep emits steps+1 ascending rows") {
  CliResult r = run_cli("sweep extended_beta --vary p 0:2:5 x=2 y=3 q=1");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 7);  // header + 6 rows
  CHECK(lines[0] == "param,value,error_estimate,note");
  CHECK(lines[1].rfind("0,", 0) == 0);
  CHECK(lines[6].rfind("2,", 0) == 0);
}

TEST_CASE("sweep hits exact classical values") {
  CliResult r = run_cli(
      "sweep phi_integral --vary z -1:1:4 \xce\xb2=1 \xce\xb3=2 p=0 q=0");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  // Middle row: z = 0 where Phi(1;2;0) = 1.
  CHECK(lines[3].rfind("0,", 0) == 0);
  double mid = std::strtod(lines[3].c_str() + 2, nullptr);
  CHECK(std::abs(mid - 1.0) <= 1e-12);

  CliResult g = run_cli("sweep gamma_p --vary p 0:1:10 z=0.5");
  auto glines = lines_of(g.out);
  REQUIRE(glines.size() == 12);
  double at0 = std::strtod(glines[1].c_str() + 2, nullptr);
  CHECK(rel(at0, std::sqrt(std::acos(-1.0))) <= 1e-12);
}

TEST_CASE("sweep records per-point failures without aborting") {
  CliResult r = run_cli("sweep extended_beta --vary x 0:2:2 y=3 p=0 q=1");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[1].rfind("0,,,", 0) == 0);  // x = 0 is out of domain at p = 0
  CHECK(lines[2].rfind("1,", 0) == 0);
  CHECK(lines[2].find(",,") == std::string::npos);
}

TEST_CASE("sweep range validation") {
  CHECK(run_cli("sweep extended_beta --vary p 2:0:5 x=2 y=3 q=1").exit_code ==
        2);
  CHECK(run_cli("sweep extended_beta --vary p 0:2:0 x=2 y=3 q=1").exit_code ==
        2);
  CHECK(run_cli("sweep extended_beta --vary p 0:2 x=2 y=3 q=1").exit_code ==
        2);
  CHECK(run_cli("sweep extended_beta x=2 y=3 p=1 q=1").exit_code == 2);
  CHECK(run_cli("sweep extended_beta --vary w 0:2:4 x=2 y=3 q=1").exit_code ==
        2);
  CHECK(run_cli("sweep extended_beta --vary p 0:2:4 x=2 y=3 q=1 p=1")
            .exit_code == 2);
}

TEST_CASE("tolerance flags are honored") {
  // A loose tolerance converges in fewer evaluations than a tight one.
  CliResult loose = run_cli("eval extended_beta x=2 y=3 p=1 q=1 --rel-tol 1e-6");
  CliResult tight =
      run_cli("eval extended_beta x=2 y=3 p=1 q=1 --rel-tol 1e-13");
  CHECK(loose.exit_code == 0);
  CHECK(tight.exit_code == 0);
  std::istringstream lin(loose.out), tin(tight.out);
  double lv, le, tv, te;
  long long ln, tn;
  lin >> lv >> le >> ln;
  tin >> tv >> te >> tn;
  CHECK(ln < tn);
  CHECK(rel(lv, tv) <= 1e-6);

  CHECK(run_cli("eval extended_beta x=2 y=3 p=1 q=1 --max-level 20")
            .exit_code == 2);
}
