#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "hjj/io.hpp"
#include "support.hpp"

namespace {

using nlohmann::json;

struct CliResult {
  int exit_code;
  std::string out;
};

// Runs a full shell command, capturing stdout only.
CliResult run_shell(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), out};
}

// Runs the tool with the given arguments.
CliResult run_cli(const std::string& args) {
  return run_shell(std::string(HJJ_CLI_PATH) + " " + args + " 2>/dev/null");
}

std::string fx(const std::string& name) { return testsupport::fixture_path(name); }

}  // namespace

TEST_CASE("verify reports verdicts through the exit code") {
  CHECK(run_cli("verify " + fx("alg2.json")).exit_code == 0);
  CHECK(run_cli("verify " + fx("jj5.json")).exit_code == 0);

  CliResult broken = run_cli("verify " + fx("alg3.json") + " --json");
  CHECK(broken.exit_code == 1);
  json j = json::parse(broken.out);
  CHECK(j["multiplicative"] == false);
  CHECK(j["multiplicativity_witness"] == json::array({"e2", "e2"}));
  CHECK(j["hom_jacobi"] == false);
  CHECK(j["jacobi_witness"] == json::array({"e2", "e2", "e2"}));

  CHECK(run_cli("verify " + fx("alg2.json") + " --adjoint 0").exit_code == 0);
}

TEST_CASE("input problems exit with code two") {
  CHECK(run_cli("verify " + fx("no_such_file.json")).exit_code == 2);
  CHECK(run_cli("totally-not-a-verb").exit_code == 2);
  CHECK(run_cli("verify").exit_code == 2);
  CHECK(run_cli("cohomology " + fx("alg2.json") + " --n 1").exit_code == 2);
  CHECK(run_cli("cohomology " + fx("alg2.json") + " --n 1 --trivial --adjoint 0").exit_code == 2);
  CHECK(run_cli("extend " + fx("alg2.json")).exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cohomology emits the documented keys") {
  CliResult r = run_cli("cohomology " + fx("alg2.json") + " --adjoint 0 --n 1 --json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["dimZ"] == 1);
  CHECK(j["dimB"] == 0);
  CHECK(j["dimH"] == 1);
  CHECK(j["representatives"] ==
        json::array({json::array({"0", "0", "1", "0"})}));

  CliResult tr = run_cli("cohomology " + fx("alg2.json") + " --trivial --n 1 --json");
  json jt = json::parse(tr.out);
  CHECK(jt["dimH"] == 1);
  CHECK(jt["representatives"] == json::array({json::array({"1", "0"})}));

  CliResult file_rep = run_cli("cohomology " + fx("alg2.json") + " --rep " +
                               fx("rep_adjoint.json") + " --n 1 --json");
  CHECK(json::parse(file_rep.out)["dimH"] == 1);
}

TEST_CASE("degree caps come from the flag or the environment") {
  // flag below the degree: refused
  CHECK(run_cli("cohomology " + fx("alg2.json") + " --trivial --n 3 --max-degree 2").exit_code == 2);
  // default cap of four: degree 5 refused, degree 3 fine
  CHECK(run_cli("cohomology " + fx("alg2.json") + " --trivial --n 5").exit_code == 2);
  CHECK(run_cli("cohomology " + fx("alg2.json") + " --trivial --n 3").exit_code == 0);
  // environment override
  std::string base = std::string(HJJ_CLI_PATH) + " cohomology " + fx("alg2.json");
  CHECK(run_shell("HJJ_MAX_DEGREE=2 " + base + " --trivial --n 3 2>/dev/null").exit_code == 2);
  CHECK(run_shell("HJJ_MAX_DEGREE=6 " + base + " --trivial --n 5 2>/dev/null").exit_code == 0);
  CHECK(run_shell("HJJ_MAX_DEGREE=bogus " + base + " --trivial --n 1 2>/dev/null").exit_code == 2);
  // the flag wins over the environment
  CHECK(run_shell("HJJ_MAX_DEGREE=2 " + base + " --trivial --n 5 --max-degree 5 2>/dev/null").exit_code == 0);
}

TEST_CASE("operator verbs") {
  CHECK(run_cli("rb " + fx("alg2.json") + " --op " + fx("op_t.json")).exit_code == 0);
  CliResult withs = run_cli("rb " + fx("alg2.json") + " --op " + fx("op_t.json") + " --n 0 --json");
  CHECK(withs.exit_code == 0);
  json j = json::parse(withs.out);
  CHECK(j["twist_compatible"] == true);
  CHECK(j["identity"] == true);
  CHECK(j["cohomology"]["dimH"] == 1);

  CHECK(run_cli("nijenhuis " + fx("alg2.json") + " --op " + fx("nijenhuis.json")).exit_code == 0);
  CHECK(run_cli("rb " + fx("alg2.json") + " --op " + fx("nijenhuis.json")).exit_code == 0);
}

TEST_CASE("deformation verbs") {
  CHECK(run_cli("deform " + fx("alg2.json") + " --series " + fx("series_constant.json")).exit_code == 0);

  CliResult failing =
      run_cli("deform " + fx("alg2.json") + " --series " + fx("series_failing.json") + " --json");
  CHECK(failing.exit_code == 1);
  json j = json::parse(failing.out);
  CHECK(j["ok"] == false);
  CHECK(j["first_failure"] == 1);
  CHECK(j["orders"][1]["witness"] == json::array({"e1", "e1", "e1"}));
  CHECK(j["orders"][1]["residual"] == json::array({"3", "0"}));

  CliResult rigidity = run_cli("deform " + fx("alg2.json") + " --json");
  CHECK(rigidity.exit_code == 0);
  json r = json::parse(rigidity.out);
  CHECK(r["h2"]["dimH"] == 1);
  CHECK(r["rigid_sufficient"] == false);
}

TEST_CASE("extension verb in both modes") {
  CliResult central = run_cli("extend " + fx("alg2.json") + " --theta " + fx("theta_valid.json") + " --json");
  CHECK(central.exit_code == 0);
  json j = json::parse(central.out);
  CHECK(j["valid"] == true);
  CHECK(j["algebra"]["basis"].size() == 3);

  CHECK(run_cli("extend " + fx("alg2.json") + " --theta " + fx("theta_invalid.json")).exit_code == 1);
  CHECK(run_cli("extend " + fx("alg2.json") + " --op " + fx("op_t.json")).exit_code == 0);
}

TEST_CASE("the extension output parses back as an algebra file") {
  CliResult central = run_cli("extend " + fx("alg2.json") + " --theta " + fx("theta_valid.json"));
  // the algebra block starts at the first brace
  std::size_t brace = central.out.find('{');
  REQUIRE(brace != std::string::npos);
  hjj::HomAlgebra ext = hjj::parse_algebra_text(central.out.substr(brace));
  CHECK(ext.dim() == 3);
  CHECK(hjj::verify_algebra(ext).all());
}
