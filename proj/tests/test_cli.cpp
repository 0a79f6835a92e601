#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

std::string binary() {
  const char* path = std::getenv("TWINDOM_BIN");
  REQUIRE_MESSAGE(path != nullptr, "TWINDOM_BIN must point at the CLI binary");
  return path;
}

RunResult run(const std::string& args) {
  const std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string write_file(const std::string& name, const std::string& content) {
  std::ofstream f(name, std::ios::binary);
  f << content;
  return name;
}

std::string slurp(const std::string& name) {
  std::ifstream f(name, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

const std::string c3 = write_file("cli_c3.trn", "3\n101\n");
const std::string k1 = write_file("cli_k1.trn", "1\n");
const std::string bad = write_file("cli_bad.trn", "3\n11\n");

}  // namespace

TEST_CASE("gamma") {
  const RunResult ok = run("gamma " + c3);
  CHECK(ok.status == 0);
  CHECK(ok.out == "gamma_star=2 set=0,1\n");

  const RunResult single = run("gamma " + k1);
  CHECK(single.status == 0);
  CHECK(single.out == "gamma_star=1 set=0\n");

  CHECK(run("gamma " + bad).status == 2);
  CHECK(run("gamma cli_missing.trn").status == 2);

  run("random 21 --seed 7 --out cli_r21.trn");
  CHECK(run("gamma cli_r21.trn").status == 3);
  CHECK(run("gamma cli_r21.trn --cap 21").status == 0);
}

TEST_CASE("check") {
  const RunResult yes = run("check " + c3 + " 0,1");
  CHECK(yes.status == 0);
  CHECK(yes.out == "true\n");

  const RunResult no = run("check " + c3 + " 0");
  CHECK(no.status == 1);
  CHECK(no.out == "false\n");

  CHECK(run("check " + c3 + " 0,9").status == 2);
}

TEST_CASE("witness") {
  std::string tt8 = "8\n";
  tt8 += std::string(28, '1');
  write_file("cli_tt8.trn", tt8 + "\n");
  const RunResult order8 = run("witness cli_tt8.trn --method order8");
  CHECK(order8.status == 0);
  CHECK(order8.out.find("method=") == 0);
  CHECK(order8.out.find("verified=true") != std::string::npos);

  run("random 10 --seed 42 --out cli_r10.trn");
  const RunResult half = run("witness cli_r10.trn --method half");
  CHECK(half.status == 0);
  CHECK(half.out.find("method=half_witness") == 0);
  const auto size_pos = half.out.find("size=");
  REQUIRE(size_pos != std::string::npos);
  CHECK(half.out[size_pos + 5] <= '5');

  CHECK(run("witness " + c3 + " --method sinksource").status == 3);
  CHECK(run("witness " + c3 + " --method order8").status == 3);
  const RunResult fallback = run("witness " + c3);
  CHECK(fallback.status == 0);
  CHECK(fallback.out.find("method=exact") == 0);
}

TEST_CASE("domstar") {
  const RunResult r = run("domstar 3 --out cli_d3.json");
  CHECK(r.status == 0);
  CHECK(r.out == "DOM*(K_3)=2 classes=2\n");
  const std::string json = slurp("cli_d3.json");
  CHECK(json.find("\"dom_star\": 2") != std::string::npos);
  CHECK(json.find("\"class_count\": 2") != std::string::npos);

  CHECK(run("domstar 9").status == 3);
}

TEST_CASE("random") {
  const RunResult a = run("random 8 --seed 42");
  const RunResult b = run("random 8 --seed 42");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != run("random 8 --seed 43").out);
  CHECK(run("random 65").status == 3);
}

TEST_CASE("enumerate") {
  const RunResult canonical = run("enumerate 3");
  CHECK(canonical.status == 0);
  CHECK(canonical.out == "3\n000\n3\n010\n");

  const RunResult labeled = run("enumerate 3 --mode labeled");
  CHECK(labeled.status == 0);
  int records = 0;
  for (std::size_t pos = 0; (pos = labeled.out.find("3\n", pos)) != std::string::npos; pos += 2) ++records;
  CHECK(records == 8);

  CHECK(run("enumerate 9").status == 3);
  CHECK(run("enumerate 7 --mode labeled").status == 3);
}

TEST_CASE("convert round trip") {
  CHECK(run("convert " + c3 + " --to matrix --out cli_c3.mat").status == 0);
  CHECK(slurp("cli_c3.mat") == "010\n001\n100\n");
  CHECK(run("convert cli_c3.mat --to trn").out == "3\n101\n");
  CHECK(run("convert " + c3 + " --to nonsense").status == 2);
}

TEST_CASE("search") {
  const RunResult found = run("search 6 4 --seed 1 --budget 20000 --out cli_s6.trn");
  CHECK(found.status == 0);
  const RunResult confirm = run("gamma cli_s6.trn");
  CHECK(confirm.out.find("gamma_star=4") == 0);

  CHECK(run("search 3 3 --seed 1 --budget 500").status == 1);
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
}
