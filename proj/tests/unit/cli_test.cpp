#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_app.hpp"
#include "tsl/report_io.hpp"
#include "test_util.hpp"

namespace tsl::testing {

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("tsl");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text) {
    if (c == '\n') ++lines;
  }
  return lines;
}

/// Temp file that cleans up after itself.
class TempFile {
 public:
  explicit TempFile(const std::string& name)
      : path_("/tmp/tsl_test_" + name + "_" +
              std::to_string(::getpid())) {}
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("analyze plain output", "[cli]") {
  const CliResult r = run_cli({"analyze", "-n", "1000", "-d", "2", "-s", "-1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("d_F = 9.8499e-06") != std::string::npos);
  CHECK(r.out.find("d_F^T = 1.7977e-04") != std::string::npos);
  CHECK(r.out.find("definite: yes") != std::string::npos);
}

TEST_CASE("analyze json output", "[cli]") {
  const CliResult r = run_cli(
      {"analyze", "-n", "10", "-d", "1.8", "-s", "-1", "--format", "json"});
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["unstructured_minimizer_indices"] == nlohmann::json::array({2}));
  CHECK(j["minimizers"][0]["h"] == 1);
  CHECK(j["unique"] == true);
}

TEST_CASE("plain numbers are the machine values at 5 digits", "[cli]") {
  const CliResult plain =
      run_cli({"analyze", "-n", "10", "-d", "1.8", "-s", "-1"});
  const CliResult json = run_cli(
      {"analyze", "-n", "10", "-d", "1.8", "-s", "-1", "--format", "json"});
  const nlohmann::json j = nlohmann::json::parse(json.out);
  const std::string rounded =
      io::format_plain(j["structured_distance_f"].get<double>());
  CHECK(plain.out.find("d_F^T = " + rounded) != std::string::npos);
}

TEST_CASE("analyze error paths", "[cli]") {
  SECTION("sigma = 0 is a domain error") {
    const CliResult r = run_cli({"analyze", "-n", "5", "-d", "1", "-s", "0"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }
  SECTION("unknown flag is a usage error") {
    const CliResult r = run_cli({"analyze", "-n", "5", "--bogus", "1"});
    CHECK(r.code == 1);
  }
  SECTION("missing subcommand") {
    CHECK(run_cli({}).code == 1);
  }
  SECTION("missing parameters") {
    CHECK(run_cli({"analyze", "-n", "5"}).code == 1);
  }
  SECTION("value and expression flags are mutually exclusive") {
    const CliResult r = run_cli({"analyze", "-n", "5", "-d", "1",
                                 "--delta-expr", "cos(pi/3)", "-s", "1"});
    CHECK(r.code == 1);
  }
  SECTION("malformed expression") {
    const CliResult r = run_cli(
        {"analyze", "-n", "5", "--delta-expr", "cos(", "-s", "1"});
    CHECK(r.code == 1);
  }
}

TEST_CASE("expression flags reach the reference parameters", "[cli]") {
  const CliResult r =
      run_cli({"analyze", "-n", "9", "--delta-expr", "cos(pi/20)",
               "--sigma-expr", "-sqrt(2)/2", "--format", "json"});
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["minimizers"][0]["h"] == 2);
  CHECK(rel_diff(j["structured_distance_f"].get<double>(), 2.9845e-1) < 1e-4);
}

TEST_CASE("examples command", "[cli]") {
  for (int id : {1, 2, 3, 4}) {
    const CliResult r = run_cli({"examples", std::to_string(id)});
    INFO("example " << id << "\n" << r.out);
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
  CHECK(run_cli({"examples", "9"}).code == 1);
}

TEST_CASE("example 1 writes the inverse-factor diagnostics", "[cli]") {
  TempFile csv("rinv");
  const CliResult r = run_cli({"examples", "1", "--rinv-csv", csv.path()});
  CHECK(r.code == 0);
  std::ifstream in(csv.path());
  std::string header;
  std::getline(in, header);
  CHECK(header == "row,col,value");
}

TEST_CASE("figures command", "[cli]") {
  SECTION("figure 1: kappa table for n=100") {
    const CliResult r = run_cli({"figures", "1"});
    REQUIRE(r.code == 0);
    CHECK(count_lines(r.out) == 101);
    std::istringstream is(r.out);
    std::string line;
    for (int i = 0; i <= 50; ++i) std::getline(is, line);
    const double expected = std::sqrt(
        1.0 / 100 +
        (2.0 / 99) * std::pow(std::cos(50 * std::numbers::pi / 101), 2));
    CHECK(line.rfind("50,", 0) == 0);
    CHECK(rel_diff(std::strtod(line.c_str() + 3, nullptr), expected) < 1e-12);
  }
  SECTION("figure 1 extremes report") {
    const CliResult r = run_cli({"figures", "1", "--extremes", "-n", "9"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("role,h,kappa,asymptotic_estimate\n", 0) == 0);
    CHECK(r.out.find("min,5,") != std::string::npos);
    CHECK(r.out.find("max,1,") != std::string::npos);
    CHECK(r.out.find("max,9,") != std::string::npos);
  }
  SECTION("figure 3: the n=2 ratio is exactly one") {
    const CliResult r = run_cli({"figures", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\n2,1,even\n") != std::string::npos);
    CHECK(count_lines(r.out) == 100);  // header + n = 2..100
  }
  SECTION("figure 5: deterministic for a fixed seed") {
    const std::vector<std::string> args{"figures", "5",        "--n-max", "12",
                                        "--samples", "500",    "--seed",  "42"};
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("n,tested,discarded,ties_skipped,mismatches\n", 0) == 0);
  }
  SECTION("grid figures require --grid") {
    CHECK(run_cli({"figures", "2"}).code == 1);
    CHECK(run_cli({"figures", "4"}).code == 1);
  }
  SECTION("figure 2 grid export") {
    const CliResult r = run_cli({"figures", "2", "--grid", "-n", "6"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("h,row,col,value\n", 0) == 0);
    CHECK(count_lines(r.out) == 1 + 2 * 36);
  }
  SECTION("figure 4 grid export") {
    const CliResult r = run_cli({"figures", "4", "--grid", "-n", "5"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("R_inv,1,1,") != std::string::npos);
    CHECK(r.out.find("T_inv,5,5,") != std::string::npos);
  }
  SECTION("unknown figure id") {
    CHECK(run_cli({"figures", "7"}).code == 1);
  }
}

TEST_CASE("experiment command", "[cli]") {
  SECTION("plain summary") {
    const CliResult r = run_cli(
        {"experiment", "--n-max", "8", "--samples", "200", "--seed", "5"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("percentage = ") != std::string::npos);
    CHECK(r.out.find("mt19937_64") != std::string::npos);
  }
  SECTION("identical output for identical seeds") {
    const std::vector<std::string> args{"experiment", "--n-max", "10",
                                        "--samples", "300"};
    CHECK(run_cli(args).out == run_cli(args).out);
  }
  SECTION("invalid range") {
    const CliResult r = run_cli({"experiment", "--n-min", "1"});
    CHECK(r.code == 1);
  }
}

TEST_CASE("spectrum and cholesky commands", "[cli]") {
  SECTION("spectrum csv") {
    const CliResult r =
        run_cli({"spectrum", "-n", "12", "-d", "0", "-s", "1", "-f", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("h,lambda\n", 0) == 0);
    CHECK(count_lines(r.out) == 13);
  }
  SECTION("cholesky csv factor") {
    const CliResult r = run_cli(
        {"cholesky", "-n", "6", "-d", "3", "-s", "1", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("i,r_diag,r_super\n", 0) == 0);
    CHECK(count_lines(r.out) == 7);
  }
  SECTION("cholesky rejects indefinite input with exit 2") {
    const CliResult r = run_cli({"cholesky", "-n", "5", "-d", "1", "-s", "-1"});
    CHECK(r.code == 2);
  }
  SECTION("cholesky plain report") {
    const CliResult r = run_cli({"cholesky", "-n", "100", "-d", "2", "-s",
                                 "-1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("diagonal nonincreasing: yes") != std::string::npos);
    CHECK(r.out.find("R^-1 pattern") != std::string::npos);
  }
}

TEST_CASE("output redirection and config file", "[cli]") {
  SECTION("--out writes the report to a file") {
    TempFile out("analyze");
    const CliResult r = run_cli({"analyze", "-n", "10", "-d", "1.8", "-s",
                                 "-1", "--out", out.path()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out.path());
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str().find("d_F^T = 2.1560e-01") != std::string::npos);
  }
  SECTION("TSL_ environment variables supply defaults") {
    ::setenv("TSL_FORMAT", "json", 1);
    const CliResult via_env = run_cli({"analyze", "-n", "10", "-d", "1.8",
                                       "-s", "-1"});
    const CliResult flag_wins = run_cli({"analyze", "-n", "10", "-d", "1.8",
                                         "-s", "-1", "--format", "csv"});
    ::unsetenv("TSL_FORMAT");
    REQUIRE(via_env.code == 0);
    CHECK(nlohmann::json::parse(via_env.out)["n"] == 10);
    REQUIRE(flag_wins.code == 0);
    CHECK(flag_wins.out.rfind("h,lambda,kappa,ratio\n", 0) == 0);
  }
  SECTION("config file sets the format, flags still win") {
    TempFile cfg("config");
    {
      std::ofstream c(cfg.path());
      c << "format=json\n";
    }
    const CliResult json_via_config =
        run_cli({"analyze", "-n", "10", "-d", "1.8", "-s", "-1", "--config",
                 cfg.path()});
    REQUIRE(json_via_config.code == 0);
    CHECK(nlohmann::json::parse(json_via_config.out)["n"] == 10);

    const CliResult flag_wins =
        run_cli({"analyze", "-n", "10", "-d", "1.8", "-s", "-1", "--config",
                 cfg.path(), "--format", "csv"});
    REQUIRE(flag_wins.code == 0);
    CHECK(flag_wins.out.rfind("h,lambda,kappa,ratio\n", 0) == 0);
  }
}

}  // namespace tsl::testing
