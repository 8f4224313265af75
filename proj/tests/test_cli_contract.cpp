// test_cli_contract.cpp -- exit-code contract of the command-line tool:
// 0 on success, 1 on domain errors, 2 on usage errors.

#include <cstdio>
#include <fstream>
#include <string>

#include <doctest.h>

#include <sys/wait.h>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(MORICONE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/moricone_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("exit 0 on success") {
  CHECK(run_cli("catalog").exit_code == 0);
  CHECK(run_cli("classify HE8~").exit_code == 0);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("exit 2 on usage errors") {
  CHECK(run_cli("").exit_code == 2);                         // missing subcommand
  CHECK(run_cli("classify").exit_code == 2);                 // missing input
  CHECK(run_cli("classify HE8~ --no-such-flag").exit_code == 2);
  CHECK(run_cli("frobnicate HE8~").exit_code == 2);          // unknown subcommand
  CHECK(run_cli("bounds HE8~ --format yaml").exit_code == 2);
}

TEST_CASE("exit 1 on domain errors") {
  CHECK(run_cli("classify no-such-input").exit_code == 1);
  CHECK(run_cli("catalog no-such-entry").exit_code == 1);
  CHECK(run_cli("classify k3-counts").exit_code == 1);  // reference table is not analyzable

  const std::string malformed = write_temp("malformed.json", "{ not json");
  const CliResult bad = run_cli("classify " + malformed);
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("malformed JSON") != std::string::npos);

  const std::string asymmetric = write_temp("asym.json",
      R"({"kind":"surface","labels":["E1","E2"],"gram":[[-2,1],[0,-2]]})");
  const CliResult asym = run_cli("classify " + asymmetric);
  CHECK(asym.exit_code == 1);
  CHECK(asym.output.find("not symmetric") != std::string::npos);
}

TEST_CASE("dimension cap refusal cites the cap") {
  // 13 orthogonal (-1)-curves: rank 13 exceeds the default face-lattice cap
  std::string labels, gram;
  for (int i = 0; i < 13; ++i) {
    labels += (i ? "," : "");
    labels += "\"E" + std::to_string(i + 1) + "\"";
    gram += (i ? "," : "");
    gram += "[";
    for (int j = 0; j < 13; ++j) {
      gram += (j ? "," : "");
      gram += (i == j ? "-1" : "0");
    }
    gram += "]";
  }
  const std::string path = write_temp("dim13.json",
      "{\"kind\":\"surface\",\"labels\":[" + labels + "],\"gram\":[" + gram + "]}");
  const CliResult r = run_cli("cone " + path);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("cap") != std::string::npos);
  CHECK(run_cli("cone " + path + " --dim-cap 13").exit_code == 0);
}
