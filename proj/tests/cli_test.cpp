// End-to-end checks of the command-line tool: exit codes, golden DOT output,
// and byte stability across runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(RSFAN_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data_path(const std::string& rel) { return std::string(RSFAN_DATA_DIR) + "/" + rel; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("verify-rs exits zero on the canonical real semigroup") {
  RunResult r = run("verify-rs " + data_path("structures/three.ts"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("RS3: pass") != std::string::npos);
}

TEST_CASE("verify-rs exits nonzero when strong associativity breaks") {
  RunResult r = run("verify-rs " + data_path("structures/free2.ts"));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("RS3: FAIL") != std::string::npos);
}

TEST_CASE("the representation order of F2 matches the frozen DOT byte for byte") {
  RunResult r = run("examples f2 --dot");
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(data_path("golden/repr_f2.dot")));
  RunResult again = run("examples f2 --dot");
  CHECK(r.out == again.out);
}

TEST_CASE("dashes in example names map onto the underscore constructors") {
  RunResult r = run("examples f1-idem");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("5 elements, 2 characters") != std::string::npos);
}

TEST_CASE("all six built-in structures print and reparse") {
  for (const char* name : {"three", "f1", "f1-idem", "f2", "f3", "f4"}) {
    RunResult r = run(std::string("examples ") + name);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ts ") == 0);
  }
}

TEST_CASE("parse errors are reported with the offending line and exit code 2") {
  std::string bad = "/tmp/rsfan_cli_test_bad.ts";
  {
    std::ofstream f(bad);
    f << "ts broken\nconstants 1 0 -1\nelements 1 0 -1\ntable\n1 0 nope\n0 0 0\n-1 0 1\nend\n";
  }
  RunResult r = run("check-ts " + bad);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("parse error") != std::string::npos);
  std::remove(bad.c_str());
}

TEST_CASE("precondition violations surface the module witness") {
  RunResult r = run("make-fan " + data_path("structures/free2.ts"));
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("condition [Z]") != std::string::npos);
  CHECK(r.out.find("x") != std::string::npos);
}

TEST_CASE("json reports parse and carry the stable keys") {
  RunResult r = run("verify-rs " + data_path("structures/f1.ts") + " --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"command\": \"verify-rs\"") != std::string::npos);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("quotient by characters prints the collapsed table") {
  RunResult r = run("quotient " + data_path("structures/f2.ts") + " --chars h1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("3 classes") != std::string::npos);
  CHECK(r.out.find("fan: yes") != std::string::npos);
}

TEST_CASE("the verification battery is byte-identical across runs") {
  RunResult a = run("reproduce");
  RunResult b = run("reproduce");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("acceptance: all criteria pass") != std::string::npos);
}
