#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(QES_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> chunk;
  std::size_t got = 0;
  while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0)
    result.output.append(chunk.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_model(const char* name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

const std::string& shg_path() {
  static const std::string path = write_model(
      "qes_cli_shg.json", R"({"nu": ["1/2"], "mu": ["1"], "n": [2], "m": [1], "g": 1.0})");
  return path;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    if (end > pos) lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("validate reports the model class") {
  const RunResult result = run_cli("validate " + shg_path());
  REQUIRE(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.output);
  CHECK(j["kind"] == "harmonic-generation");
  CHECK(j["harmonic"] == 2);
  CHECK(j["constraint"]["status"] == "ok");
  CHECK(j["constraint"]["pump"] == "1");
  CHECK(j["model"]["nu"][0] == "1/2");
}

TEST_CASE("validate rejects a detuned model with both sums") {
  const std::string path = write_model(
      "qes_cli_broken.json", R"({"nu": ["2/3"], "mu": ["1"], "n": [2], "m": [1]})");
  const RunResult result = run_cli("validate " + path);
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("ConstraintViolated") != std::string::npos);
  CHECK(result.output.find("4/3") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("sector describes the tower holding a monomial") {
  const RunResult result = run_cli("sector " + shg_path() + " --monomial \"i=4;j=0\"");
  REQUIRE(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.output);
  CHECK(j["sector"] == "N=0;M=2");
  CHECK(j["r"] == 2);
  CHECK(j["dim"] == 3);
  CHECK(j["e0"] == "2");
  CHECK(j["basis"][0] == "i=0;j=2");
  CHECK(j["basis"][2] == "i=4;j=0");
  CHECK(j["norm_constants"] == nlohmann::json::array({"2", "2", "24"}));
}

TEST_CASE("spectrum emits levels in CSV") {
  const RunResult result =
      run_cli("spectrum " + shg_path() + " --sector \"N=0;M=2\" --format csv");
  REQUIRE(result.exit_code == 0);
  const auto rows = lines_of(result.output);
  REQUIRE(rows.size() == 3);
  const double expected[3][2] = {{-4.0, -2.0}, {0.0, 2.0}, {4.0, 6.0}};
  for (std::size_t row = 0; row < 3; ++row) {
    const std::size_t comma = rows[row].find(',');
    REQUIRE(comma != std::string::npos);
    const double lambda = std::strtod(rows[row].substr(0, comma).c_str(), nullptr);
    const double total = std::strtod(rows[row].substr(comma + 1).c_str(), nullptr);
    CHECK(std::abs(lambda - expected[row][0]) <= 1e-9);
    CHECK(std::abs(total - expected[row][1]) <= 1e-9);
  }
}

TEST_CASE("spectrum JSON carries the certificate") {
  const RunResult result = run_cli("spectrum " + shg_path() + " --monomial \"i=4;j=0\"");
  REQUIRE(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.output);
  CHECK(j["eigenvalues"].size() == 3);
  CHECK(j["total"].size() == 3);
  CHECK(j["scale_log2"] == 0);
  CHECK(j["method"] == "sturm-bisection");
  CHECK(j["certified_width"].get<double>() > 0.0);
  CHECK(j["certified_width"].get<double>() < 1e-10);
}

TEST_CASE("reduce prints the expansion and confirms equality") {
  const RunResult result = run_cli("reduce " + shg_path() + " --sector \"N=0;M=2\"");
  REQUIRE(result.exit_code == 0);
  CHECK(result.output.find("4 * J- * (J0 + 1/2) + (-1) * J+") != std::string::npos);
  CHECK(result.output.find("\"equal\": true") != std::string::npos);
  // stdout is one JSON document, nothing else
  CHECK(result.output.front() == '{');
}

TEST_CASE("enumerate lists every sector within the budget") {
  const RunResult result =
      run_cli("enumerate " + shg_path() + " --max-photons 2 --format csv");
  REQUIRE(result.exit_code == 0);
  const auto rows = lines_of(result.output);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "\"N=0;M=0\",0,1");
  CHECK(rows[1] == "\"N=0;M=1\",1,2");
  CHECK(rows[2] == "\"N=0;M=2\",2,3");
  CHECK(rows[3] == "\"N=1;M=0\",0,1");
  CHECK(rows[4] == "\"N=1;M=1\",1,2");
}

TEST_CASE("exit codes separate IO, validation, and verification") {
  CHECK(run_cli("validate /nonexistent/model.json").exit_code == 3);
  CHECK(run_cli("spectrum " + shg_path()).exit_code == 1);
  CHECK(run_cli("spectrum " + shg_path() +
                " --sector \"N=0;M=2\" --monomial \"i=4;j=0\"")
            .exit_code == 1);
  CHECK(run_cli("frobnicate " + shg_path()).exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("output bytes are deterministic across runs") {
  const std::string args = "spectrum " + shg_path() + " --sector \"N=0;M=2\"";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);

  const std::string enum_args = "enumerate " + shg_path() + " --max-photons 9";
  CHECK(run_cli(enum_args).output == run_cli(enum_args).output);
}

TEST_CASE("verify passes on a sound model") {
  const RunResult result =
      run_cli("verify " + shg_path() + " --max-photons 6 --max-r 6");
  REQUIRE(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.output);
  CHECK(j["failed"] == 0);
  CHECK(j["checks"].size() == 7);
  for (const auto& check : j["checks"]) CHECK(check["status"] == "pass");
}
