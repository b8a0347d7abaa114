#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "bgev/blend.hpp"
#include "bgev/config.hpp"

using namespace bgev;

namespace {

struct RunOutput {
  int exit_code;
  std::string out;
};

RunOutput run_cli(const std::string& args) {
  const std::string cmd = std::string(BGEV_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof(buf), pipe))
    out.append(buf, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/bgev_cli_test_") + name;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  REQUIRE(f.good());
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

const char* kParamsText =
    "model=bgev\nq_alpha=1\ns_beta=2\nxi=0.2\nalpha=0.5\nbeta=0.5\n"
    "p_a=0.05\np_b=0.2\nc1=5\nc2=5\n";

}  // namespace

TEST_CASE("key=value parser basics") {
  const auto kv = parse_key_value("a=1\n# comment\n\n b = x y \n");
  CHECK(kv.at("a") == "1");
  CHECK(kv.at("b") == "x y");
  CHECK(kv.size() == 2);
  CHECK_THROWS_WITH_AS(parse_key_value("a=1\nnonsense\n"),
                       doctest::Contains("line 2"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_key_value("a=1\na=2\n"),
                       doctest::Contains("duplicate"), std::runtime_error);
}

TEST_CASE("run config applies typed values and rejects unknown keys") {
  RunConfig rc;
  rc.apply(parse_key_value("model=gev\nalpha=0.6\nseed=42\nprior_enabled=1\n"));
  CHECK(rc.model == Model::kGev);
  CHECK(rc.blend.alpha == 0.6);
  CHECK(rc.seed == 42);
  CHECK(rc.prior_enabled);
  CHECK_THROWS_AS(rc.apply(parse_key_value("bogus=1\n")), std::runtime_error);
  CHECK_THROWS_AS(rc.apply(parse_key_value("alpha=abc\n")),
                  std::runtime_error);
}

TEST_CASE("fit round-trips seeded samples") {
  const auto params = temp_path("params.txt");
  const auto data = temp_path("data.csv");
  const auto fitted = temp_path("fitted.txt");
  write_file(params, kParamsText);
  auto s = run_cli("sample " + params + " -n 1000 --seed 5 --out " + data);
  REQUIRE(s.exit_code == 0);
  auto f = run_cli("fit " + data + " --model bgev --out " + fitted);
  REQUIRE(f.exit_code == 0);
  const ParamsFile pf = read_params_file(fitted);
  CHECK(pf.model == Model::kBgev);
  CHECK(pf.params.q_alpha == doctest::Approx(1.0).epsilon(0.15));
  CHECK(pf.params.s_beta == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("fit input errors use exit code 1") {
  const auto empty = temp_path("empty.csv");
  write_file(empty, "");
  auto r = run_cli("fit " + empty);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("no observations") != std::string::npos);

  const auto bad = temp_path("bad.csv");
  write_file(bad, "value\n1.5\n2.5\noops\n3.5\n4.5\n5.5\n");
  r = run_cli("fit " + bad);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("line 4") != std::string::npos);

  r = run_cli("fit /nonexistent/file.csv");
  CHECK(r.exit_code == 1);
}

TEST_CASE("return levels from a saved Gumbel fit") {
  const auto gum = temp_path("gumbel.txt");
  write_file(gum,
             "model=gev\nq_alpha=0.36651292058166435\n"
             "s_beta=1.5725335836855191\nxi=0\nalpha=0.5\nbeta=0.5\n");
  auto r = run_cli("rl " + gum + " -T 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("T,level") == 0);
  CHECK(r.out.find("2,0.3665129") != std::string::npos);
  // T <= 1 is an input error.
  CHECK(run_cli("rl " + gum + " -T 1").exit_code == 1);
}

TEST_CASE("pit command reports a ks summary") {
  const auto params = temp_path("params.txt");
  const auto data = temp_path("data.csv");
  write_file(params, kParamsText);
  run_cli("sample " + params + " -n 200 --seed 8 --out " + data);
  auto r = run_cli("pit " + params + " " + data);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("index,observation,pit") == 0);
  CHECK(r.out.find("# ks_distance=") != std::string::npos);
}

TEST_CASE("repeated invocations are byte-identical") {
  const auto params = temp_path("params.txt");
  const auto out1 = temp_path("rep1.csv");
  const auto out2 = temp_path("rep2.csv");
  write_file(params, kParamsText);
  REQUIRE(run_cli("sample " + params + " -n 500 --seed 77 --out " + out1)
              .exit_code == 0);
  REQUIRE(run_cli("sample " + params + " -n 500 --seed 77 --out " + out2)
              .exit_code == 0);
  CHECK(read_file(out1) == read_file(out2));
}

TEST_CASE("prior tabulation starts at lambda/sqrt(2)") {
  auto r = run_cli("prior --grid 0:0.05:0.45 --prior-lambda 7");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("xi,pc_density,p3c_density") == 0);
  CHECK(r.out.find("0,4.9497474683") != std::string::npos);
}

TEST_CASE("simulate rejects unknown studies") {
  CHECK(run_cli("simulate study9").exit_code == 1);
}

TEST_CASE("config precedence: flag > file > default") {
  const auto params = temp_path("params.txt");
  const auto cfg = temp_path("conf.txt");
  write_file(params, kParamsText);

  // Built-in default seed is 1.
  const auto by_default = run_cli("sample " + params + " -n 5").out;
  const auto seed1 = run_cli("sample " + params + " -n 5 --seed 1").out;
  CHECK(by_default == seed1);

  // A config file overrides the default...
  write_file(cfg, "seed=2\n");
  const auto by_file = run_cli("sample " + params + " -n 5 --config " + cfg).out;
  const auto seed2 = run_cli("sample " + params + " -n 5 --seed 2").out;
  CHECK(by_file == seed2);
  CHECK(by_file != by_default);

  // ...and a flag overrides the config file.
  const auto by_flag =
      run_cli("sample " + params + " -n 5 --config " + cfg + " --seed 3").out;
  const auto seed3 = run_cli("sample " + params + " -n 5 --seed 3").out;
  CHECK(by_flag == seed3);
  CHECK(by_flag != by_file);

  // Malformed config files are input errors with a line number.
  write_file(cfg, "seed=2\nwhat\n");
  auto r = run_cli("sample " + params + " -n 5 --config " + cfg);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("line 2") != std::string::npos);
}
