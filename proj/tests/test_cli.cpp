// End-to-end tests of the ellipj binary: subcommand output shapes, exit
// codes, determinism of file output, and the env-var override.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#ifndef ELLIPJ_CLI_PATH
#error "ELLIPJ_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int rc = -1;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(ELLIPJ_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  FILE* f = fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::string s;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) s.append(buf, n);
  fclose(f);
  return s;
}

int count_lines(const std::string& s) {
  int k = 0;
  for (char c : s)
    if (c == '\n') ++k;
  return k;
}

}  // namespace

TEST_CASE("eval: values, exactness at z = 0, domain rejection") {
  auto r = run("eval --z 0.5+0i --m 1+0i");
  CHECK(r.rc == 0);
  CHECK(r.out.find("\"sn\":{\"value\":{\"re\":0.4621171572600") !=
        std::string::npos);
  CHECK(r.out.find("\"cn\":{\"value\":{\"re\":0.8868188839700") !=
        std::string::npos);

  auto z0 = run("eval --z 0+0i --m 0.3+0.1i");
  CHECK(z0.rc == 0);
  CHECK(z0.out.find("\"sn\":{\"value\":{\"re\":0,\"im\":0}") !=
        std::string::npos);

  auto bad = run("eval --z 2+0i --m 0.5+0i", /*merge_stderr=*/true);
  CHECK(bad.rc == 2);
  CHECK(bad.out.find("pi/2") != std::string::npos);

  auto badm = run("eval --z 0.5+0i --m 1.5+0i");
  CHECK(badm.rc == 2);
}

TEST_CASE("eval: complex literal parsing") {
  CHECK(run("eval --z 0.25-0.5i --m -0.3+0.2i").rc == 0);
  CHECK(run("eval --z 1e-1+2e-2i --m 0.5+0i").rc == 0);
  CHECK(run("eval --z 0.5 --m 0.25").rc == 0);  // bare reals accepted
  CHECK(run("eval --z nope --m 0.5+0i").rc == 2);
  CHECK(run("eval --z 0.5i --m 0.5+0i").rc == 2);  // needs the a+bi form
}

TEST_CASE("eval: table exhaustion maps to exit 3") {
  auto r = run("eval --z 1.5+0i --m 0.5+0i --tol 1e-15", /*merge_stderr=*/true);
  CHECK(r.rc == 3);
  CHECK(r.out.find("ELLIPK_TABLE_N") != std::string::npos);
}

TEST_CASE("verify: stream shape, exit codes, config rejection") {
  auto r = run("verify --samples 1 --seed 7");
  CHECK(r.rc == 0);
  CHECK(count_lines(r.out) == 2);  // one report + summary

  CHECK(run("verify --R 1.6 --samples 1").rc == 2);
  CHECK(run("verify --samples 0").rc == 2);
}

TEST_CASE("verify: file output is deterministic, csv stays pure") {
  auto a = run("verify --samples 20 --seed 11 --out /tmp/ellipj_t1.jsonl");
  auto b = run("verify --samples 20 --seed 11 --out /tmp/ellipj_t2.jsonl");
  CHECK(a.rc == 0);
  CHECK(b.rc == 0);
  CHECK(slurp("/tmp/ellipj_t1.jsonl") == slurp("/tmp/ellipj_t2.jsonl"));

  auto c = run("verify --samples 3 --seed 11 --format csv --out /tmp/ellipj_t.csv");
  CHECK(c.rc == 0);
  std::string csv = slurp("/tmp/ellipj_t.csv");
  CHECK(csv.rfind("index,seed,", 0) == 0);
  CHECK(csv.find("summary") == std::string::npos);
  CHECK(csv.find("\r\n") != std::string::npos);
}

TEST_CASE("monotone: defaults pass, tiny grid works") {
  auto r = run("monotone --u-count 1 --m1-count 2");
  CHECK(r.rc == 0);
  CHECK(count_lines(r.out) == 2);  // one row + summary
  CHECK(r.out.find("\"all_negative\":true") != std::string::npos);
}

TEST_CASE("coeffs: anchor content, N = 0, determinism, bad path") {
  auto r = run("coeffs --n 2");
  CHECK(r.rc == 0);
  CHECK(r.out.find(R"({"kind":"sn","n":2,"coeffs":["1","14","1"]})") !=
        std::string::npos);

  auto r0 = run("coeffs --n 0");
  CHECK(r0.rc == 0);
  CHECK(r0.out.find(R"({"kind":"dn","n":0,"coeffs":["1"]})") !=
        std::string::npos);

  auto f1 = run("coeffs --n 6 --out /tmp/ellipj_c1.json");
  auto f2 = run("coeffs --n 6 --out /tmp/ellipj_c2.json");
  CHECK(f1.rc == 0);
  CHECK(f2.rc == 0);
  CHECK(slurp("/tmp/ellipj_c1.json") == slurp("/tmp/ellipj_c2.json"));

  CHECK(run("coeffs --n 2 --out /nonexistent-dir/x.json").rc == 2);
}

TEST_CASE("ELLIPK_TABLE_N is honored and validated") {
  // a 60-entry table cannot reach tol 1e-13 at |z| = 1.4
  std::string cmd = "env ELLIPK_TABLE_N=60 " + std::string(ELLIPJ_CLI_PATH) +
                    " eval --z 1.4+0i --m 0.5+0i >/dev/null 2>&1";
  int st = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(st) == 3);
  cmd = "env ELLIPK_TABLE_N=garbage " + std::string(ELLIPJ_CLI_PATH) +
        " eval --z 0.5+0i --m 0.5+0i >/dev/null 2>&1";
  st = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(st) == 2);
}

TEST_CASE("help and unknown subcommands") {
  CHECK(run("--help").rc == 0);
  CHECK(run("frobnicate", /*merge_stderr=*/true).rc == 2);
}
