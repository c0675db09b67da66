#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cli_util.hpp"
#include "json.hpp"

using cli_util::cli_path;
using cli_util::run_command;

TEST_CASE("poly prints canonical renderings") {
  CHECK(run_command(cli_path() + " poly --family A_xys --n 2").output == "s + y\n");
  CHECK(run_command(cli_path() + " poly --family dB_xq --n 1").output == "q\n");
  CHECK(run_command(cli_path() + " poly --family Phi --n 0").output == "0\n");
  CHECK(run_command(cli_path() + " poly --family d_xr --n 2 --r 3").output ==
        "4*x^2 + 9*x\n");
}

TEST_CASE("poly exit codes") {
  CHECK(run_command(cli_path() + " poly --family A_xys --n 3").exit_code == 0);
  CHECK(run_command(cli_path() + " poly --family nope --n 3 2>/dev/null").exit_code == 2);
  CHECK(run_command(cli_path() + " poly --family d_xr --n 12 2>/dev/null").exit_code == 3);
  CHECK(run_command(cli_path() + " poly --n 3 2>/dev/null").exit_code == 2);
  CHECK(run_command("GAMMAKIT_MAX_ELEMENTS=10 " + cli_path() +
                    " poly --family d_xr --n 6 2>/dev/null")
            .exit_code == 3);
}

TEST_CASE("table export in JSON and CSV") {
  auto json_run = run_command(cli_path() + " table --table gamma --max-n 3 --format json");
  REQUIRE(json_run.exit_code == 0);
  auto doc = nlohmann::json::parse(json_run.output);
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["name"] == "gamma");
  bool found = false;
  for (const auto& entry : doc["entries"])
    if (entry["n"] == 2 && entry["i"] == 0 && entry["j"] == 1) {
      CHECK(entry["value"] == "1");
      found = true;
    }
  CHECK(found);

  auto b_run = run_command(cli_path() + " table --table b_of_p --max-n 2 --format json");
  auto b_doc = nlohmann::json::parse(b_run.output);
  bool found_b = false;
  for (const auto& entry : b_doc["entries"])
    if (entry["n"] == 1 && entry["i"] == 1 && entry["j"] == 0) {
      CHECK(entry["value"] == "p");
      found_b = true;
    }
  CHECK(found_b);

  auto csv_run = run_command(cli_path() + " table --table W --max-n 4 --format csv");
  REQUIRE(csv_run.exit_code == 0);
  CHECK(csv_run.output.substr(0, 12) == "n,i,j,value\n");
  // W(4,1) = 16 forced by the S(n,i) relation
  CHECK(csv_run.output.find("4,1,,16\n") != std::string::npos);

  auto p_run = run_command(cli_path() + " table --table P --max-n 3 --format csv");
  CHECK(p_run.output.find("2,1,1,1\n") != std::string::npos);  // only 12 has asc = suc = 1

  CHECK(run_command(cli_path() + " table --table nope --max-n 3 2>/dev/null").exit_code == 2);
  CHECK(run_command(cli_path() + " table --table gamma --format yaml 2>/dev/null").exit_code ==
        2);
}

TEST_CASE("verify runs suites with deterministic output") {
  CHECK(run_command(cli_path() + " verify --suite gamma --max-n 4 2>/dev/null").exit_code == 0);
  CHECK(run_command(cli_path() + " verify --suite identities --max-n 1 2>/dev/null").exit_code ==
        0);
  CHECK(run_command(cli_path() + " verify --suite nope 2>/dev/null").exit_code == 2);

  auto a = run_command(cli_path() + " verify --suite egf --max-n 3 --threads 1 --json 2>/dev/null");
  auto b = run_command(cli_path() + " verify --suite egf --max-n 3 --threads 2 --json 2>/dev/null");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  auto doc = nlohmann::json::parse(a.output);
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["summary"]["fail"] == 0);
}

TEST_CASE("verify reports skipped checks when the element cap bites") {
  auto run = run_command("GAMMAKIT_MAX_ELEMENTS=100 " + cli_path() +
                         " verify --suite bijection --max-n 6 --json 2>/dev/null");
  CHECK(run.exit_code == 1);  // skipped checks are not passes
  auto doc = nlohmann::json::parse(run.output);
  CHECK(doc["summary"]["skipped"] > 0);
  CHECK(doc["summary"]["fail"] == 0);
}

TEST_CASE("bound override flag widens the caps") {
  // S_10 is rejected by default but allowed once the cap is raised.
  CHECK(run_command(cli_path() + " poly --family d_xr --n 10 --r 1 2>/dev/null").exit_code == 3);
  auto run = run_command(cli_path() +
                         " --bound-override S=10,elements=4000000 poly --family d_xr --n 10 "
                         "--r 1 2>/dev/null");
  CHECK(run.exit_code == 0);
  CHECK(run_command(cli_path() + " --bound-override S=zero poly --family d_x --n 1 2>/dev/null")
            .exit_code == 2);
}
