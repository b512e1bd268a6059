#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "germs/frontend/cli.hpp"
#include "germs/frontend/commands.hpp"

using namespace germs::frontend;

namespace {

struct Run {
  int code;
  Json out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  Json j;
  std::string text = out.str();
  if (!text.empty() && text.front() == '{') j = Json::parse(text);
  return {code, j, err.str()};
}

}  // namespace

TEST_CASE("intersect with both methods") {
  Run r = run({"intersect", "curve(t^2; t^3)", "curve(t; 0)", "--method", "both"});
  CHECK(r.code == 0);
  CHECK(r.out.dump() == R"({"order":{"exact":3},"noether":{"exact":3}})");
}

TEST_CASE("exp and log") {
  Run e = run({"exp", "vf(0; x^2)"});
  CHECK(e.out["diffeo"] == "(x, y + x^2)");
  Run l = run({"log", "(x, y + x^3)"});
  CHECK(l.out["vfield"] == "vf(0; x^3)");
}

TEST_CASE("finite determination command") {
  Run r = run({"fd-check", "group(diff(x, y + e*x + x^2), diff(x, y + e^2*x + x^3), diff(x, y + e^3*x + x^4))",
               "--jet", "1", "--ball", "3", "--trunc", "12"});
  CHECK(r.code == 0);
  CHECK(r.out["determined"] == true);
  CHECK(r.out["k"] == 1);
  CHECK(r.out["L"] == 3);
}

TEST_CASE("diagnostics") {
  Run bad = run({"exp", "diff(x)"});
  CHECK(bad.code == 1);
  CHECK(bad.out["error"]["kind"] == "parse");
  Run nonprim = run({"inp", "curve(t^2; t^4)"});
  CHECK(nonprim.code == 1);
  Run general = run({"log", "(2*x, y)"});
  CHECK(general.code == 1);
  CHECK(run({"no-such-command"}).code != 0);
}

TEST_CASE("resource caps") {
  Run r = run({"fd-check", "group((x + y^2, y), (x, y + x^2))", "--ball", "6", "--caps", "words=20,seconds=10"});
  CHECK(r.code == 2);
  CHECK(r.out["complete"] == false);
}

TEST_CASE("batch mode") {
  std::string path = "germs_cli_batch_test.txt";
  {
    std::ofstream f(path);
    f << "# comment\n";
    f << "exp 'vf(0; x^2)'\n";
    f << "intersect 'curve(t; t^2)' 'curve(t; t^3)'\n";
  }
  std::ostringstream out, err;
  int code = run_cli({"batch", path}, out, err);
  std::remove(path.c_str());
  CHECK(code == 0);
  std::istringstream lines(out.str());
  std::string first, second;
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(Json::parse(first)["diffeo"] == "(x, y + x^2)");
  CHECK(Json::parse(second)["order"]["exact"] == 2);
}

TEST_CASE("table output") {
  std::ostringstream out, err;
  int code = run_cli({"inp", "curve(t; t^3)", "--depth", "3", "--table"}, out, err);
  CHECK(code == 0);
  CHECK(out.str().find("multiplicities") != std::string::npos);
}

TEST_CASE("every command is registered") {
  for (const auto& name : command_names()) {
    std::ostringstream out, err;
    run_cli({name, "--help"}, out, err);
    CHECK(out.str().find(name) != std::string::npos);
  }
}
