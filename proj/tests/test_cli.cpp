// Process-level contract tests for the germtool binary: exit codes, output
// determinism, and the no-floating-point rule. The binary path comes from
// GERMTOOL_BIN and the bundled corpus from GERM_CORPUS (set by ctest).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <string>

#include "doctest.h"

namespace {

struct CmdResult {
  int code = -1;
  std::string out;
};

std::string binary() {
  const char* env = std::getenv("GERMTOOL_BIN");
  REQUIRE_MESSAGE(env != nullptr, "GERMTOOL_BIN must point at the binary");
  return env;
}

std::string corpus_path() {
  const char* env = std::getenv("GERM_CORPUS");
  REQUIRE_MESSAGE(env != nullptr, "GERM_CORPUS must point at the corpus");
  return env;
}

CmdResult run(const std::string& args) {
  CmdResult result;
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  int status = pclose(pipe);
  result.code = WEXITSTATUS(status);
  return result;
}

bool has_float_literal(const std::string& s) {
  static const std::regex float_re(R"([0-9]+\.[0-9]|[0-9]+[eE][+-][0-9])");
  return std::regex_search(s, float_re);
}

}  // namespace

TEST_CASE("invariants: text fields and exit 0") {
  CmdResult r = run("invariants 'x^2 + y^3'");
  CHECK(r.code == 0);
  CHECK(r.out.find("mu: 2") != std::string::npos);
  CHECK(r.out.find("tau: 2") != std::string::npos);
  CHECK(r.out.find("multiplicity: 2") != std::string::npos);
  CHECK(r.out.find("newton_number: 2") != std::string::npos);
  CHECK(r.out.find("weights: (3,2; 6)") != std::string::npos);

  CmdResult morse = run("invariants 'x1^2 + x2^2 + x3^2'");
  CHECK(morse.code == 0);
  CHECK(morse.out.find("mu: 1") != std::string::npos);
  CHECK(morse.out.find("bound: 1") != std::string::npos);
  CHECK(morse.out.find("yau_zuo: true") != std::string::npos);
}

TEST_CASE("invariants: non-isolated is in-band, exit 0") {
  CmdResult r = run("invariants 'x^2' --vars x,y");
  CHECK(r.code == 0);
  CHECK(r.out.find("mu: infinite") != std::string::npos);
  CHECK(r.out.find("verdict: NonIsolated") != std::string::npos);
}

TEST_CASE("structured output: deterministic, exact, float-free") {
  CmdResult a = run("invariants 'x^3 + x*y^3' --format structured");
  CmdResult b = run("invariants 'x^3 + x*y^3' --format structured");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);  // byte-identical
  CHECK(!has_float_literal(a.out));
  CHECK(a.out.find("\"mu\": 7") != std::string::npos);
  CHECK(a.out.find("\"verdict\": \"StrictInequality\"") != std::string::npos);

  CmdResult c = run("deform 'x^3 + y^3' --samples 5 --seed 7 --format structured");
  CmdResult d = run("deform 'x^3 + y^3' --samples 5 --seed 7 --format structured");
  CHECK(c.code == 0);
  CHECK(c.out == d.out);
  CHECK(!has_float_literal(c.out));
}

TEST_CASE("exit code 2: parse and usage errors") {
  CHECK(run("invariants 'x +'").code == 2);
  CHECK(run("invariants 'x^-2'").code == 2);
  CHECK(run("invariants 'y' --vars x").code == 2);
  CHECK(run("invariants '0'").code == 2);  // zero germ has no invariants
  CHECK(run("--no-such-flag").code == 2);
}

TEST_CASE("exit code 3: resource guard") {
  CHECK(run("invariants 'x^5 + y^5 + x^3*y^3' --max-degree 3").code == 3);
  CHECK(run("classify 'x^3 + x*y^3' --max-pairs 0").code == 3);
  // wall-clock guard on an input far beyond desk scale
  std::string monster =
      "'-8*z0^2*z1*z2 - z0^2*z2^2 - 9*z0*z1^3*z2 + 9*z0*z1^5 + 9*z0*z1*z2^4 "
      "- 6*z1^2*z2^4'";
  CHECK(run("invariants " + monster + " --timeout 1").code == 3);
}

TEST_CASE("classify: evidence trail and declared weights") {
  CmdResult r = run("classify 'x^3 + y^3 + z^3'");
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: HomogeneousEquivalent") != std::string::npos);
  CHECK(r.out.find("normalized weights (1,1,1; 3) all equal") != std::string::npos);

  CmdResult s = run("classify 'x*y' --weights 1,1:2");
  CHECK(s.code == 0);
  CHECK(s.out.find("verdict: HomogeneousEquivalent") != std::string::npos);
  CHECK(s.out.find("full rank 2") != std::string::npos);

  CmdResult t = run("classify 'x*y'");
  CHECK(t.code == 0);
  CHECK(t.out.find("verdict: SemiHomogeneous") != std::string::npos);
  CHECK(t.out.find("underdetermined") != std::string::npos);

  // declared weights that do not fit are a usage error
  CHECK(run("classify 'x*y' --weights 1,2:2").code == 2);
}

TEST_CASE("deform: chain report") {
  CmdResult r = run("deform 'x^2 + y^3' --samples 5 --seed 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("mu: 2") != std::string::npos);
  CHECK(r.out.find("chain = ok") != std::string::npos);
  CHECK(r.out.find("VIOLATION") == std::string::npos);
  CHECK(r.out.find("all_ok: true") != std::string::npos);
}

TEST_CASE("corpus: bundled corpus passes") {
  CmdResult r = run("corpus " + corpus_path());
  CHECK(r.code == 0);
  CHECK(r.out.find("0 mismatched") != std::string::npos);
  CHECK(r.out.find("0 errors") != std::string::npos);

  // serial and parallel runs emit identical bytes
  CmdResult s = run("corpus " + corpus_path() + " --serial");
  CHECK(s.out == r.out);

  CmdResult j = run("corpus " + corpus_path() + " --format structured");
  CHECK(j.code == 0);
  CHECK(!has_float_literal(j.out));
}

TEST_CASE("corpus: mismatches diff and exit 1") {
  std::string path = "/tmp/germtool_test_bad_corpus.jsonl";
  {
    std::ofstream out(path);
    out << R"({"name":"bad-mu","poly":"x^2 + y^3","vars":["x","y"],"expected":{"mu":5}})"
        << "\n";
  }
  CmdResult r = run("corpus " + path);
  CHECK(r.code == 1);
  CHECK(r.out.find("mu: computed 2, expected 5") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("corpus: malformed line is a parse error, exit 2") {
  std::string path = "/tmp/germtool_test_malformed_corpus.jsonl";
  {
    std::ofstream out(path);
    out << "{\"name\": \"broken\"\n";
  }
  CHECK(run("corpus " + path).code == 2);
  std::remove(path.c_str());

  CHECK(run("corpus /tmp/no_such_corpus_file.jsonl").code == 2);
}

TEST_CASE("corpus: empty file reports zero entries, exit 0") {
  std::string path = "/tmp/germtool_test_empty_corpus.jsonl";
  { std::ofstream out(path); }
  CmdResult r = run("corpus " + path);
  CHECK(r.code == 0);
  CHECK(r.out.find("0 entries") != std::string::npos);
  std::remove(path.c_str());
}
