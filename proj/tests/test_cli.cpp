#include "galgrp/json_io.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string &args) {
  std::string command = std::string(GALGRP_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  CliResult result;
  FILE *pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

} // namespace

TEST_CASE("cli: snf text output") {
  CliResult r = run_cli("snf --matrix \"2,4;6,8\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "diag(2,4)\n");
}

TEST_CASE("cli: snf json output satisfies u m v = s") {
  CliResult r = run_cli("snf --matrix \"2,4;6,8\" --json");
  REQUIRE(r.exit_code == 0);
  auto j = galgrp::OrderedJson::parse(r.output);
  CHECK(j["s"][0][0] == 2);
  CHECK(j["s"][1][1] == 4);
  CHECK(j.contains("u"));
  CHECK(j.contains("v"));
}

TEST_CASE("cli: surface json") {
  CliResult r = run_cli("surface --family p2 --k 5 --json");
  REQUIRE(r.exit_code == 0);
  auto j = galgrp::OrderedJson::parse(r.output);
  CHECK(j["degree"] == 25);
  CHECK(j["projective_galois"]["torsion"].size() == 23);
  CHECK(j["assumptions"][0] == "C^aff assumed trivial");
}

TEST_CASE("cli: surface text mentions the quotient labels") {
  CliResult r = run_cli("surface --family p2 --k 5");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("pi1(Xgal)/C^proj: (Z/5)^23") != std::string::npos);
  CliResult r2 = run_cli("surface --family p2 --k 5 --known-trivial-caff");
  CHECK(r2.output.find("pi1(Xgal): (Z/5)^23") != std::string::npos);
}

TEST_CASE("cli: verify-snd runs clean") {
  CliResult r = run_cli("verify-snd --n 5 --d 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0 failures") != std::string::npos);
}

TEST_CASE("cli: kgroup on a named group") {
  CliResult r = run_cli("kgroup --cyclic 4 --n 3 --json");
  REQUIRE(r.exit_code == 0);
  auto j = galgrp::OrderedJson::parse(r.output);
  CHECK(j["order"] == 16);
  CHECK(j["abelianization"]["torsion"].size() == 2);
}

TEST_CASE("cli: kgroup on explicit generators") {
  CliResult r = run_cli("kgroup --gens \"(1 2),(1 2 3)\" --n 3 --json");
  REQUIRE(r.exit_code == 0);
  auto j = galgrp::OrderedJson::parse(r.output);
  CHECK(j["order"] == 108);
}

TEST_CASE("cli: recover reports a match") {
  CliResult r = run_cli("recover --q8 --n 3 --json");
  REQUIRE(r.exit_code == 0);
  auto j = galgrp::OrderedJson::parse(r.output);
  CHECK(j["order_match"] == true);
  CHECK(j["abelianization_match"] == true);
  CHECK(j["exponent_match"] == true);
}

TEST_CASE("cli: ktilde text") {
  CliResult r = run_cli("ktilde --torsion 2,2 --n 3");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("H2(G): Z/2") != std::string::npos);
  CHECK(r.output.find("order: 32") != std::string::npos);
}

TEST_CASE("cli: kappa") {
  CliResult r = run_cli("kappa --d 2 --target 2 --m 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("Z/2") != std::string::npos);
}

TEST_CASE("cli: --help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("surface --help").exit_code == 0);
}

TEST_CASE("cli exit codes: usage errors return 2") {
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("surface --family nope --k 5").exit_code == 2);
  CHECK(run_cli("surface --family p2 --k 3").exit_code == 2); // below the validity range
  CHECK(run_cli("kappa --d 4 --target 3 --m 2").exit_code == 2);
  CHECK(run_cli("verify-snd --n 4 --d 1").exit_code == 2); // small n needs the override
  CHECK(run_cli("kgroup --cyclic 4 --q8 --n 3").exit_code == 2);
}

TEST_CASE("cli exit codes: computational failures return 1") {
  CHECK(run_cli("kgroup --q8 --n 4 --cap 500").exit_code == 1); // cap exceeded
}

TEST_CASE("cli: --out writes the file") {
  std::string path = "/tmp/galgrp_cli_test_output.json";
  std::remove(path.c_str());
  CliResult r = run_cli("surface --family quadric --a 6 --b 9 --json --out " + path);
  CHECK(r.exit_code == 0);
  FILE *f = fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 65536> buffer{};
  std::size_t got = fread(buffer.data(), 1, buffer.size(), f);
  fclose(f);
  auto j = galgrp::OrderedJson::parse(std::string(buffer.data(), got));
  CHECK(j["divisibility"] == 3);
  std::remove(path.c_str());
}
