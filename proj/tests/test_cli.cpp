#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "charasym/harness.hpp"
#include "json.hpp"

using namespace charasym;
using nlohmann::json;

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + CHARASYM_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("documented examples") {
  auto e = cli("eval --family schur --lambda 1,0 --x 3 --N 2");
  REQUIRE(e.status == 0);
  auto j = json::parse(e.out);
  CHECK(j["value"] == "2");
  CHECK(j["config"]["command"] == "eval");
  CHECK(j["config"]["lambda"] == "1,0");

  auto a = cli("asm count --n 4");
  REQUIRE(a.status == 0);
  CHECK(json::parse(a.out)["count"] == "42");

  auto g = cli("asympt gue --profile halfstair --h 0 --N 100");
  REQUIRE(g.status == 0);
  auto gj = json::parse(g.out);
  CHECK(gj["prediction"] == "1");
  CHECK(gj["E"] == "1/4");
  CHECK(gj["S"] == "5/48");
}

TEST_CASE("exact evaluation of several families") {
  // two variables go through the operator determinant
  auto two = json::parse(cli("eval --lambda 2,1,0 --x 2,3").out);
  CHECK(two["method"] == "determinant");
  // s_{(2,1,0)}(2,3,1) / s_{(2,1,0)}(1,1,1) = 60/8
  CHECK(two["value"] == "15/2");
  auto sp = json::parse(cli("eval --family symplectic --lambda 1 --x 2").out);
  // (x + 1/x) / 2 at x = 2
  CHECK(sp["value"] == "5/4");
  auto padded = json::parse(cli("eval --lambda 1 --N 3 --x 0.5").out);
  CHECK(padded["signature"] == "(1,0,0)");
  CHECK(padded["value"] == "5/6");
}

TEST_CASE("exit codes") {
  CHECK(cli("suite bogus").status == 2);
  CHECK(cli("eval --lambda 1,0").status == 2);
  CHECK(cli("eval --lambda 1,0 --x 2 --family orthogonal").status == 2);
  CHECK(cli("eval --lambda 1,0,0 --N 2 --x 2").status == 2);
  CHECK(cli("asm count --n 0").status == 2);
  CHECK(cli("--format xml asm count --n 3").status == 2);
  CHECK(cli("").status == 2);
  // module errors
  CHECK(cli("eval --lambda 1,0 --x 1").status == 1);
  CHECK(cli("eval --lambda 1,0 --x abc").status == 2);
  CHECK(cli("suite oracles").status == 0);
}

TEST_CASE("suite report and csv ladder") {
  auto s = cli("suite asm");
  REQUIRE(s.status == 0);
  auto j = json::parse(s.out);
  CHECK(j["pass"] == true);
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["criterion"] == 8);
  CHECK(j["checks"][1]["data"]["final_max"].get<double>() <= 0.02);

  auto c = cli("suite asm --format csv");
  REQUIRE(c.status == 0);
  std::istringstream in(c.out);
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("# config: ", 0) == 0);
  auto cfg = json::parse(line.substr(10));
  CHECK(cfg["suite"] == "asm");
  std::getline(in, line);
  CHECK(line.rfind("# versions: ", 0) == 0);
  std::getline(in, line);
  CHECK(line == "series,size,param,value,reference,error");
  int rows = 0;
  while (std::getline(in, line))
    if (line.rfind("9:asm,", 0) == 0) ++rows;
  CHECK(rows == 12);  // 4 sizes times 3 values of s
}

TEST_CASE("determinism, output files and precision from the environment") {
  CHECK(cli("suite characters").out == cli("suite characters").out);
  const std::string path = "cli_test_output.csv";
  std::remove(path.c_str());
  auto w = cli("--format csv -o " + path + " suite loop");
  CHECK(w.status == 0);
  CHECK(w.out.empty());
  std::ifstream f(path);
  std::stringstream body;
  body << f.rdbuf();
  CHECK(body.str().find("\"command\":\"suite\"") != std::string::npos);
  std::remove(path.c_str());

  auto env = json::parse(cli("asm count --n 3", "CHARASYM_PRECISION=200").out);
  CHECK(env["config"]["precision_bits"] == 200);
  auto flag = json::parse(cli("asm count --n 3 --precision 96", "CHARASYM_PRECISION=200").out);
  CHECK(flag["config"]["precision_bits"] == 96);
}

TEST_CASE("config validation and rendering in-process") {
  RunConfig c;
  c.command = Command::Suite;
  c.suite = "nope";
  CHECK_THROWS_AS(c.validate(), UsageError);
  c.suite = "asm";
  c.format = "yaml";
  CHECK_THROWS_AS(c.validate(), UsageError);
  c.format = "json";
  c.validate();
  CHECK(suite_criteria("oracles") == std::vector<int>{1, 2, 3});
  CHECK(suite_names().size() == 6);
  CHECK_THROWS_AS(run_criterion(12, 1), UsageError);

  RunConfig e;
  e.lambda = "2,0";
  e.x = {"3"};
  const auto out = run(e);
  const std::string text = render(e, out);
  auto j = json::parse(text);
  CHECK(j["value"] == "13/3");  // (9 + 3 + 1)/3
  CHECK(j["versions"]["charasym"] == library_version());
}
