#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <string>

#include "subprocess.hpp"

namespace {

const std::string kCli = GIRY_CLI_BIN;
const std::string kFixtures = GIRY_FIXTURE_DIR;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string temp_path(const std::string& stem) {
  return "/tmp/giry_cli_" + std::to_string(getpid()) + "_" + stem;
}

std::string section(const std::string& report, const std::string& from, const std::string& to) {
  auto begin = report.find(from);
  auto end = report.find(to);
  REQUIRE(begin != std::string::npos);
  REQUIRE(end != std::string::npos);
  return report.substr(begin, end - begin);
}

}  // namespace

TEST_CASE("infer prints a report and exits 0") {
  auto r = testutil::run(kCli + " infer --model " + fixture("worked3.json") + " --method rn");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"method\": \"rn\"") != std::string::npos);
  CHECK(r.output.find("\"x1\": \"2/3\"") != std::string::npos);
  CHECK(r.output.find("\"x3\": \"1\"") != std::string::npos);
  CHECK(r.output.find("\"a\": \"3/4\"") != std::string::npos);
}

TEST_CASE("identity models produce point-mass posteriors") {
  auto r = testutil::run(kCli + " infer --model " + fixture("identity.json") + " --method rn");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"x1\": \"1\"") != std::string::npos);
  CHECK(r.output.find("\"x2\": \"1\"") != std::string::npos);
  CHECK(r.output.find("\"x3\": \"1\"") != std::string::npos);
}

TEST_CASE("both methods emit byte-identical kernel sections") {
  auto rn = testutil::run(kCli + " infer --model " + fixture("nondet_3x2.json") + " --method rn");
  auto decomp =
      testutil::run(kCli + " infer --model " + fixture("nondet_3x2.json") + " --method decomp");
  REQUIRE(rn.exit_code == 0);
  REQUIRE(decomp.exit_code == 0);
  CHECK(section(rn.output, "\"joint_kernel\"", "\"posterior\"") ==
        section(decomp.output, "\"joint_kernel\"", "\"posterior\""));
}

TEST_CASE("reports are byte-deterministic") {
  std::string cmd = kCli + " infer --model " + fixture("skewed5.json") + " --method decomp";
  auto first = testutil::run(cmd);
  auto second = testutil::run(cmd);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("infer writes to --out and the report re-verifies") {
  std::string out = temp_path("report.json");
  auto infer =
      testutil::run(kCli + " infer --model " + fixture("uniform4.json") + " --method rn --out " + out);
  REQUIRE(infer.exit_code == 0);

  auto verify = testutil::run(kCli + " verify --model " + fixture("uniform4.json") +
                              " --candidate " + out);
  CHECK(verify.exit_code == 0);
  CHECK(verify.output.find("verified") != std::string::npos);
  ::unlink(out.c_str());
}

TEST_CASE("a perturbed supported row fails verification with a witness") {
  std::string candidate = temp_path("bad_candidate.json");
  testutil::write_file(candidate, R"json({
    "candidate": {
      "a": {"(x1,a)": "1/3", "(x2,a)": "2/3"},
      "b": {"(x3,b)": "1"}
    }
  })json");
  auto r = testutil::run(kCli + " verify --model " + fixture("worked3.json") + " --candidate " +
                         candidate);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("FAILED") != std::string::npos);
  CHECK(r.output.find("zeta") != std::string::npos);
  CHECK(r.output.find("joint(zeta)") != std::string::npos);
  ::unlink(candidate.c_str());
}

TEST_CASE("a perturbed null row still verifies") {
  // nondet_null_column.json never observes b, so the b-row is free
  std::string candidate = temp_path("null_row_candidate.json");
  testutil::write_file(candidate, R"json({
    "candidate": {
      "a": {"(x1,a)": "1/5", "(x2,a)": "4/5"},
      "b": {"(x2,b)": "1"},
      "c": {"(x1,c)": "1"}
    }
  })json");
  auto r = testutil::run(kCli + " verify --model " + fixture("nondet_null_column.json") +
                         " --candidate " + candidate);
  CHECK(r.exit_code == 0);
  ::unlink(candidate.c_str());
}

TEST_CASE("parse and validation problems exit 2") {
  auto missing = testutil::run(kCli + " infer --model /nonexistent.json --method rn");
  CHECK(missing.exit_code == 2);

  std::string broken = temp_path("broken.json");
  testutil::write_file(broken, "{\n  \"spaces\": oops\n}\n");
  auto syntax = testutil::run(kCli + " infer --model " + broken + " --method rn");
  CHECK(syntax.exit_code == 2);
  CHECK(syntax.output.find("line") != std::string::npos);
  ::unlink(broken.c_str());

  std::string bad_sum = temp_path("bad_sum.json");
  testutil::write_file(bad_sum, R"({
    "spaces": {"X": ["x"], "Y": ["y"]},
    "prior": {"space": "X", "weights": {"x": "1/2"}},
    "likelihood": {"source": "X", "target": "Y", "map": {"x": "y"}}
  })");
  auto invalid = testutil::run(kCli + " infer --model " + bad_sum + " --method rn");
  CHECK(invalid.exit_code == 2);
  ::unlink(bad_sum.c_str());

  auto bad_flag = testutil::run(kCli + " infer --model x.json --method nope");
  CHECK(bad_flag.exit_code == 2);

  auto no_sub = testutil::run(kCli);
  CHECK(no_sub.exit_code == 2);

  auto help = testutil::run(kCli + " --help");
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("infer") != std::string::npos);
}

TEST_CASE("laws subcommand runs the suites") {
  auto r = testutil::run(kCli + " laws --seed 5 --max-points 3 --trials 20");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("all 14 checks passed") != std::string::npos);

  auto again = testutil::run(kCli + " laws --seed 5 --max-points 3 --trials 20");
  CHECK(again.output == r.output);

  auto vacuous = testutil::run(kCli + " laws --trials 0");
  CHECK(vacuous.exit_code == 0);

  auto bad = testutil::run(kCli + " laws --max-points 0");
  CHECK(bad.exit_code == 2);
}
