#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "ramnag/cli.hpp"

using ramnag::cli::dispatch;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze emits the reference certificate") {
  auto r = run({"analyze", "--k", "736", "--y", "3", "--json"});
  CHECK(r.code == ramnag::cli::kOk);
  CHECK(r.out.find("2523692765") != std::string::npos);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("status") == "NoSolutions");
  CHECK(j.dump() + "\n" == r.out);

  r = run({"analyze", "--k", "736", "--y", "both", "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).size() == 2);

  r = run({"analyze", "--k", "736"});
  CHECK(r.code == 0);
  CHECK(r.out.find("X1 + Y1*sqrt(736) < 8462") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"pell", "--d", "4"}).code == ramnag::cli::kUsage);
  CHECK(run({"pell", "--d", "736"}).code == ramnag::cli::kOk);
  CHECK(run({}).code == ramnag::cli::kUsage);
  CHECK(run({"analyze", "--k", "736", "--bogus"}).code == ramnag::cli::kUsage);
  CHECK(run({"analyze", "--k", "12x"}).code == ramnag::cli::kUsage);
  CHECK(run({"analyze", "--k", "736", "--y", "7"}).code == ramnag::cli::kUsage);
  CHECK(run({"analyze", "--k", "1"}).code == ramnag::cli::kUsage);
  int c = run({"--factor-budget", "1", "--trial-limit", "100", "analyze", "--k", "999999999999999999999", "--y", "3"})
              .code;
  CHECK((c == ramnag::cli::kInconclusive || c == ramnag::cli::kBudget));
}

TEST_CASE("other subcommands") {
  auto r = run({"verify", "--k", "5", "--y", "1", "--zmax", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("x = 4, z = 2") != std::string::npos);

  r = run({"classnumber", "--disc", "2944"});
  CHECK(r.code == 0);
  CHECK(r.out.find("h = 4") != std::string::npos);

  r = run({"fundsols", "--d", "736", "--K", "-1471", "--z1", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2577") != std::string::npos);

  r = run({"sandwich", "--coeffs", "1,-6,12,-8,1"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("Y0") == "16");

  r = run({"density", "--n", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("N0 = 7") != std::string::npos);

  r = run({"sweep", "--from", "2", "--to", "5", "--y", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("k,y,status,rule_that_decided,h4k,pell_u1,pell_v1,runtime_ms", 0) == 0);
}
