// End-to-end tests driving the installed CLI binary. The binary path comes
// from the RENLAB_CLI environment variable (set by CTest).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("RENLAB_CLI");
  if (p == nullptr || *p == '\0')
    throw std::runtime_error("RENLAB_CLI must point at the CLI binary");
  return p;
}

// Runs `<env> <cli> <args>` through the shell, capturing stdout; stderr is
// dropped unless the caller redirects it.
RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = (env.empty() ? "" : env + " ") + cli_path() + " " + args +
                    " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("polynomial printing matches the pinned forms") {
  CHECK(run_cli("poly P --l 2 --k 3").out == "1 * p1^2 + 1 * p2\n");
  CHECK(run_cli("poly Q --n 3 --k 3").out == "1 * p1^2 + 1 * p1 * p2\n");
  CHECK(run_cli("poly P --l 3 --k 5 --form composition").out ==
        "1 * p1^3 + 2 * p1 * p2 + 1 * p3\n");
}

TEST_CASE("compute emits exact sequences") {
  RunResult r = run_cli("compute --masses 1/2,1/2 --n 6 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"limit\": \"2/3\"") != std::string::npos);
  CHECK(r.out.find("\"3/4\"") != std::string::npos);
  CHECK(r.out.back() == '\n');

  SUBCASE("csv") {
    RunResult c = run_cli("compute --masses 1/2,1/2 --n 4 --format csv");
    CHECK(c.out.rfind("n,u_n,b_n,c_n\n", 0) == 0);
    CHECK(c.out.find("4,11/16,") != std::string::npos);
  }
  SUBCASE("periodic law in text") {
    RunResult t = run_cli("compute --masses 0,1 --n 4");
    CHECK(t.out.find("periodic law (period 2)") != std::string::npos);
  }
}

TEST_CASE("exit codes follow the contract") {
  SUBCASE("usage errors are 2") {
    CHECK(run_cli("compute --masses 1/2,1/2,1/4 --n 4").exit_code == 2);
    CHECK(run_cli("compute --masses nonsense").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("poly Q --n 3 --k 3 --form composition").exit_code == 2);
  }
  SUBCASE("help and version are 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("compute --help").exit_code == 0);
  }
  SUBCASE("a falsified membership claim exits 1") {
    RunResult r = run_cli("classes --poly p2 --k 3 --grid 16");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("certified-out") != std::string::npos);
  }
  SUBCASE("an unfalsified membership claim exits 0") {
    RunResult r = run_cli("classes --poly \"1 * p1^2 + 1 * p1 * p2\" --k 3 "
                          "--class a-hat --grid 16");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("not-falsified") != std::string::npos);
  }
}

TEST_CASE("extremes reports the first window and its law") {
  RunResult r = run_cli("extremes --masses 1/2,1/4,1/4 --horizon 40 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"M\": \"5/8\"") != std::string::npos);
  CHECK(r.out.find("\"argmax\": 3") != std::string::npos);
  CHECK(r.out.find("\"min_checked\": true") != std::string::npos);
  CHECK(r.out.find("\"ok\": true") != std::string::npos);

  SUBCASE("a first-mass-free law reports the upper violation honestly") {
    RunResult z = run_cli(
        "extremes --masses 0,0,0,0,1/2,1/2 --horizon 60 --format json");
    CHECK(z.out.find("\"min_checked\": false") != std::string::npos);
    CHECK(z.out.find("\"first_max_violation\": 11") != std::string::npos);
  }
}

TEST_CASE("probe and demo run clean at k = 3") {
  RunResult p = run_cli("probe --k 3 --class a-hat --grid 16");
  CHECK(p.exit_code == 0);
  CHECK(p.out.find("\"anomalous\": false") != std::string::npos);

  RunResult d = run_cli("demo no-largest --k 3 --scan 32");
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("\"regions\": [") != std::string::npos);
}

TEST_CASE("monte carlo gate") {
  RunResult r = run_cli("mc --masses 1/2,1/2 --n 10 --walks 20000 --seed 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
  const std::string cmd = "verify-all --seed 42 --budget tiny";
  RunResult a = run_cli(cmd);
  RunResult b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"all_pass\": true") != std::string::npos);

  SUBCASE("worker count does not change the bytes") {
    RunResult one = run_cli("mc --masses 1/3,1/3,1/3 --n 12 --walks 30000 "
                            "--seed 5 --jobs 1");
    RunResult flag = run_cli("mc --masses 1/3,1/3,1/3 --n 12 --walks 30000 "
                             "--seed 5 --jobs 3");
    RunResult env = run_cli("mc --masses 1/3,1/3,1/3 --n 12 --walks 30000 "
                            "--seed 5",
                            "RENEWAL_LAB_JOBS=4");
    CHECK(one.out == flag.out);
    CHECK(one.out == env.out);
  }
}
