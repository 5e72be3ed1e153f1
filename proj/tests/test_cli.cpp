#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dmorse/cli.hpp"

using namespace dmorse;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/dmorse_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

struct Run {
  int code = -1;
  std::string out;
};

// run the installed binary; used for end-to-end exit-code checks
Run run_binary(const std::string& args) {
  const char* bin = std::getenv("DMORSE_BIN");
  REQUIRE(bin != nullptr);
  const std::string out_path = "/tmp/dmorse_test_stdout";
  const std::string cmd = std::string(bin) + " " + args + " > " + out_path + " 2>&1";
  const int raw = std::system(cmd.c_str());
  Run r;
  r.code = WEXITSTATUS(raw);
  std::ifstream f(out_path);
  std::stringstream ss;
  ss << f.rdbuf();
  r.out = ss.str();
  return r;
}

}  // namespace

TEST_CASE("config validation carries precise messages") {
  const auto path = write_temp("bad_a.json", R"({"model": {"A": 0.0}})");
  cli::RunConfig cfg = cli::load_config(path);
  CHECK_THROWS_WITH_AS(cfg.model(), "ModelParams: A must be nonzero",
                       std::invalid_argument);

  const auto p2 = write_temp("bad_lx.json", R"({"model": {"xi": 1.25, "lambda_c": 0.9}})");
  CHECK_THROWS_WITH_AS(cli::load_config(p2).model(),
                       "ModelParams: lambda_c * xi must be < 1", std::invalid_argument);

  const auto p3 = write_temp("bad_key.json", R"({"modle": {}})");
  CHECK_THROWS_AS(cli::load_config(p3), std::invalid_argument);

  const auto p4 = write_temp("bad_omega.json", R"({"model": {"omega": -1.0}})");
  CHECK_THROWS_WITH_AS(cli::load_config(p4).model(),
                       "ModelParams: omega must be > 0", std::invalid_argument);
}

TEST_CASE("spectrum command: canonical table layout") {
  cli::RunConfig cfg;  // canonical defaults
  std::ostringstream out, err;
  const int code = cli::cmd_spectrum(cfg, out, err);
  CHECK(code == 0);

  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,branch,epsilon,alpha_n,valid,shooting_epsilon,abs_delta");
  int rows = 0;
  bool saw_plus_edge = false, saw_minus_edge = false;
  while (std::getline(lines, line)) {
    ++rows;
    if (line.rfind("0,1,0.59999999999999987", 0) == 0) saw_plus_edge = true;
    if (line.rfind("0,-1,-0.59999999999999987", 0) == 0) saw_minus_edge = true;
  }
  CHECK(rows == 8);
  CHECK(saw_plus_edge);
  CHECK(saw_minus_edge);
}

TEST_CASE("spectrum output is identical across runs") {
  cli::RunConfig cfg;
  std::ostringstream out1, out2, err;
  cli::cmd_spectrum(cfg, out1, err);
  cli::cmd_spectrum(cfg, out2, err);
  CHECK(out1.str() == out2.str());
  CHECK(!out1.str().empty());
}

TEST_CASE("json output round-trips through the config schema") {
  cli::RunConfig cfg;
  cfg.format = cli::OutputFormat::json;
  cfg.energy = 1.25;
  cfg.n_terms = 8;
  std::ostringstream out, err;
  REQUIRE(cli::cmd_coefficients(cfg, out, err) == 0);

  // feed the embedded config object back in as a config file
  const auto doc = nlohmann::json::parse(out.str());
  REQUIRE(doc.contains("config"));
  REQUIRE(doc.contains("results"));
  const auto path = write_temp("roundtrip.json", doc["config"].dump());
  const cli::RunConfig cfg2 = cli::load_config(path);

  std::ostringstream out2, err2;
  REQUIRE(cli::cmd_coefficients(cfg2, out2, err2) == 0);
  CHECK(out2.str() == out.str());
}

TEST_CASE("wavefunction command validations") {
  cli::RunConfig cfg;
  std::ostringstream out, err;

  SUBCASE("gap energy is rejected with the dedicated message") {
    cfg.energy = 0.8;  // C < |eps| < 1
    CHECK(cli::cmd_wavefunction(cfg, out, err) == 2);
    CHECK(err.str().find("bound-state regime; use spectrum") != std::string::npos);
  }
  SUBCASE("below-gap energy is rejected") {
    cfg.energy = 0.3;
    CHECK(cli::cmd_wavefunction(cfg, out, err) == 2);
  }
  SUBCASE("empty grid is rejected") {
    cfg.energy = 1.25;
    cfg.grid = "0:10:0";
    CHECK(cli::cmd_wavefunction(cfg, out, err) == 2);
  }
  SUBCASE("missing selector is rejected") {
    CHECK(cli::cmd_wavefunction(cfg, out, err) == 2);
  }
  SUBCASE("invalid bound state is rejected") {
    cfg.bound_n = 3;  // alpha_3 < 0 at the canonical parameters
    CHECK(cli::cmd_wavefunction(cfg, out, err) == 2);
  }
  SUBCASE("bound ground state has tiny residual everywhere") {
    cfg.bound_n = 0;
    cfg.grid = "-3:18:101";
    REQUIRE(cli::cmd_wavefunction(cfg, out, err) == 0);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "x,z,phi_upper,theta_lower,ode_residual");
    while (std::getline(lines, line)) {
      const auto last_comma = line.rfind(',');
      const double res = std::stod(line.substr(last_comma + 1));
      CHECK(res <= 1e-6);
    }
  }
}

TEST_CASE("binary end-to-end: exit codes and formats") {
  SUBCASE("A = 0 exits 2 with a message") {
    const auto r = run_binary("spectrum --A 0");
    CHECK(r.code == 2);
    CHECK(r.out.find("A must be nonzero") != std::string::npos);
  }
  SUBCASE("verify exits 0 by default and 1 under the zeta fault") {
    const auto ok = run_binary("verify --only tridiag");
    CHECK(ok.code == 0);
    const auto bad = run_binary("verify --only tridiag --zeta-fault 0.1");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
  }
  SUBCASE("unknown suite exits 2") {
    CHECK(run_binary("verify --only nope").code == 2);
  }
  SUBCASE("coefficients to a file") {
    const auto r = run_binary("coefficients --energy 1.25 --n-terms 4 --output "
                              "/tmp/dmorse_test_coeff.csv");
    CHECK(r.code == 0);
    std::ifstream f("/tmp/dmorse_test_coeff.csv");
    std::string header;
    std::getline(f, header);
    CHECK(header == "n,s_n,f_n,recursion_residual");
  }
  SUBCASE("config file plus flag override") {
    const auto path = write_temp(
        "override.json", R"({"model": {"A": 2.0, "omega": 0.5, "xi": 0.8, "lambda_c": 1.0}})");
    const auto r = run_binary("spectrum --config " + path + " --omega 0.45");
    CHECK(r.code == 0);
    // n_max grows from 3 to 3.70 -> still 3; value row must reflect omega 0.45
    CHECK(r.out.find("0.6") != std::string::npos);
  }
}
