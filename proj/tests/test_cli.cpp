#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "wsp/cli.hpp"

namespace {

using Json = nlohmann::json;

struct Run {
  int code = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(WSP_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(WSP_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("usage errors exit 2 with a JSON error") {
  for (const char* args : {"", "frobnicate", "realize --degrees 2,3,4", "realize --bogus 1",
                           "classify --input /nonexistent/file.json",
                           "classify --input " WSP_FIXTURE_DIR "/bad3.json --height-bound 0",
                           "homology --degrees 2,3,4 --coeffs " WSP_FIXTURE_DIR
                           "/coeffs_trivial.json --which nothing"}) {
    INFO(args);
    const Run r = cli(args);
    CHECK(r.code == wsp::kExitUsage);
    CHECK(r.json()["error"] == "UsageError");
  }
  const Run both = cli("verify --input " + fixture("trivial.json") + " --degrees 2,3,4 --coeffs " +
                       fixture("coeffs_trivial.json"));
  CHECK(both.code == wsp::kExitUsage);
}

TEST_CASE("domain errors exit 1 with their kind") {
  const Run small = cli("realize --degrees 1,2,3 --coeffs " + fixture("coeffs_trivial.json"));
  CHECK(small.code == wsp::kExitDomain);
  CHECK(small.json()["error"] == "DegreeTooSmall");

  const Run sing = cli("alt2-section --matrix " + fixture("coeffs_trivial.json"));
  CHECK(sing.code == wsp::kExitDomain);
  CHECK(sing.json().contains("error"));
}

TEST_CASE("realize with verification") {
  const Run r = cli("realize --degrees 2,3,4 --coeffs " + fixture("coeffs_mixed.json") + " --verify");
  REQUIRE(r.code == wsp::kExitOk);
  const Json j = r.json();
  CHECK(j["verified"] == true);
  CHECK(j["axiom_violations"].empty());
  CHECK(j["coefficients"]["123"] == "6");
}

TEST_CASE("homology views") {
  const std::string base = "homology --degrees 2,2,2 --coeffs " + fixture("coeffs_mixed.json");
  const Json b = cli(base + " --which boundary").json();
  CHECK(b["homology"][0]["free_rank"] == 1);
  CHECK(b["homology"][5]["free_rank"] == 1);
  const Run eta = cli(base + " --which eta");
  CHECK(eta.code == wsp::kExitOk);
  // 2 * 1 * 3 / lcm(2, 1, 3)
  CHECK(eta.json()["expected_multiplier"] == "1");
  CHECK(cli(base + " --which generators").code == wsp::kExitOk);
}

TEST_CASE("classification from fixtures") {
  const Json bad = cli("classify --input " + fixture("bad3.json")).json();
  CHECK(bad["outcome"] == "NotWeightedCertified");
  const Json ok = cli("classify --input " + fixture("trivial.json")).json();
  CHECK(ok["outcome"] == "Weighted");
}

TEST_CASE("verify accepts orders and coefficient pairs") {
  CHECK(cli("verify --input " + fixture("trivial.json")).json()["ok"] == true);
  const Run r = cli("verify --degrees 2,3,4 --coeffs " + fixture("coeffs_mixed.json"));
  CHECK(r.code == wsp::kExitOk);
  CHECK(r.json()["ok"] == true);
}

TEST_CASE("alt2 section") {
  const Json j = cli("alt2-section --matrix " + fixture("alt2_matrix.json")).json();
  CHECK(j["round_trip"] == true);
}

TEST_CASE("selftest reports each case") {
  const Run r = cli("selftest");
  const Json j = r.json();
  REQUIRE(j["cases"].is_array());
  bool allOk = true;
  for (const auto& c : j["cases"]) allOk = allOk && c["ok"].get<bool>();
  CHECK(r.code == (allOk ? wsp::kExitOk : wsp::kExitDomain));
  CHECK(j.contains("error") == !allOk);
}

TEST_CASE("output is deterministic and can go to a file") {
  const std::string args = "classify --input " + fixture("bad3.json");
  const Run a = cli(args), b = cli(args);
  CHECK(a.out == b.out);

  const auto path = std::filesystem::temp_directory_path() / "wsp_cli_output_test.json";
  std::filesystem::remove(path);
  const Run f = cli("--output " + path.string() + " " + args);
  CHECK(f.code == wsp::kExitOk);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(Json::parse(ss.str()) == a.json());
  std::filesystem::remove(path);
}

TEST_CASE("degree list parsing") {
  CHECK(wsp::parseDegreeList("2,3,4") == wsp::Degrees{2, 3, 4});
  CHECK(wsp::parseDegreeList(" 5, 6 ,7") == wsp::Degrees{5, 6, 7});
  CHECK_THROWS(wsp::parseDegreeList("2,3"));
  CHECK_THROWS(wsp::parseDegreeList("2,x,4"));
}
