#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "kc/corpus.hpp"

using Json = nlohmann::ordered_json;

namespace {

std::string cli_path() {
  const char* p = std::getenv("KC_CLI");
  REQUIRE_MESSAGE(p != nullptr, "KC_CLI must point at the binary");
  return p;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string scratch_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("stats on a braid word") {
  RunResult r = run_cli("stats \"2: 1 1 1\"");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["w"] == 3);
  CHECK(j["O"] == 2);
  CHECK(j["O_gt"] == 2);
  CHECK(j["components"] == 1);
  // byte-identical output on identical input
  CHECK(run_cli("stats \"2: 1 1 1\"").out == r.out);
}

TEST_CASE("stats accepts the diagram grammar on stdin") {
  std::string data = scratch_file("kc_trefoil.pd");
  {
    std::ofstream f(data);
    f << "X + 1 2 0 3\nX + 3 4 2 5\nX + 5 0 4 1\n";
  }
  RunResult r = run_cli("stats --file " + data);
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.out)["O"] == 2);
}

TEST_CASE("input errors exit 2 with a machine-readable reason") {
  RunResult r = run_cli("stats \"2: 3\"");
  CHECK(r.exit_code == 2);
  Json j = Json::parse(r.out);
  CHECK(j["error"]["code"] == 2);
  CHECK(j["error"].contains("reason"));
  CHECK(j["error"]["position"] == 3);

  CHECK(run_cli("stats").exit_code == 2);  // no input source
}

TEST_CASE("caps exit 3") {
  RunResult r = run_cli("homfly \"2: 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1\"");
  CHECK(r.exit_code == 3);
  CHECK(Json::parse(r.out)["error"]["code"] == 3);
  // override succeeds
  CHECK(run_cli("homfly \"2: 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1\" --max-crossings 17")
            .exit_code == 0);
  CHECK(run_cli("moy circle --n 5000").exit_code == 3);
}

TEST_CASE("verifiers exit 0 and report holds") {
  RunResult r = run_cli("verify composition theta --m 1 --n 1");
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.out)["holds"] == true);

  r = run_cli("verify mfw \"2: 1 1 1\"");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["holds"] == true);
  CHECK(j["framed_min_a"] == 1);
  CHECK(j["framed_max_a"] == 5);

  r = run_cli("verify support \"2: 1 1 1\" --n 2");
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.out)["holds"] == true);

  r = run_cli("verify support theta --n 2");
  CHECK(r.exit_code == 0);
}

TEST_CASE("bounds report") {
  RunResult r = run_cli("bounds \"2: 1 1 1\" --n 2");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["thm3_interval"] == Json::array({1, 5}));
  CHECK(j["thm4"]["case"] == "positive");
  CHECK(j["thm4"]["gp_min_exact"] == 1);
  CHECK(j["chi_s_exact"] == -1);
  CHECK(run_cli("bounds \"2: 1 1 1\" --format text").out.find("case: positive") !=
        std::string::npos);
}

TEST_CASE("polynomial commands") {
  RunResult r = run_cli("homfly \"2: 1 1 1\"");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["text"] == "+2*a^2*z^0 +1*a^2*z^2 -1*a^4*z^0");
  CHECK(j["mfw"]["holds"] == true);

  r = run_cli("sln \"2: 1 1 1\" --n 2");
  CHECK(Json::parse(r.out)["sln"]["text"] == "+1*q^1 +1*q^3 +1*q^5 -1*q^9");

  r = run_cli("moy theta --n 2");
  CHECK(Json::parse(r.out)["text"] == "+1*q^-1 +1*q^1");

  r = run_cli("labelings theta2");
  CHECK(Json::parse(r.out).size() == 6);

  r = run_cli("resolve \"3: 1 -2\"");
  CHECK(Json::parse(r.out).size() == 4);
}

TEST_CASE("corpus run with a malformed line") {
  std::string path = scratch_file("kc_corpus_bad.txt");
  {
    std::ofstream f(path);
    f << "# small corpus\n2: 1 1 1\nnot a braid\n3: 1 -2\n";
  }
  RunResult r = run_cli("corpus " + path + " --checks mfw --format json");
  CHECK(r.exit_code == 2);
  Json j = Json::parse(r.out);
  CHECK(j["passed"] == 2);
  CHECK(j["failed"] == 0);
  CHECK(j["bad_input"] == 1);

  // all-good corpus exits 0
  std::string good = scratch_file("kc_corpus_good.txt");
  {
    std::ofstream f(good);
    f << "2: 1 1 1\n3: 1 -2\n";
  }
  CHECK(run_cli("corpus " + good + " --checks mfw,support,sln --n 2").exit_code == 0);
}

TEST_CASE("exit-code contract of the corpus summary") {
  // every mathematically honest input verifies, so the failure branch of
  // the contract is pinned at the mapping level
  kc::CorpusSummary s;
  CHECK(s.exit_code() == 0);
  s.bad_input = 1;
  CHECK(s.exit_code() == 2);
  s.failed = 1;
  CHECK(s.exit_code() == 1);  // verification failure outranks bad input
  s.bad_input = 0;
  s.skipped = 5;
  CHECK(s.exit_code() == 1);
  s.failed = 0;
  CHECK(s.exit_code() == 0);  // cap skips alone do not fail the run
}

TEST_CASE("bundled corpus passes the framed-degree check") {
  std::string bundled = std::string(std::getenv("KC_TEST_DATA_DIR")) + "/corpus_3s5l.txt";
  RunResult r = run_cli("corpus " + bundled + " --checks mfw --format json");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["passed"] == 1429);
  CHECK(j["failed"] == 0);
  CHECK(j["bad_input"] == 0);
}
