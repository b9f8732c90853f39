#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "catch_amalgamated.hpp"

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(std::string const& args) {
  std::string const cmd = std::string(KPOLY_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int const status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("compute emits polynomial JSON", "[cli]") {
  auto const r = run("compute --family kaon --a 0,3,0,2 --json");
  REQUIRE(r.code == 0);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j.at("n") == 4);
  CHECK(j.at("terms").size() == 24);
  CHECK(j.at("family") == "kaon");
  CHECK(j.at("index") == nlohmann::json({0, 3, 0, 2}));
  CHECK(j.at("beta").is_null());
}

TEST_CASE("compute specializes beta and prints text", "[cli]") {
  auto const r = run("compute --family glide --a 0,1 --beta 0");
  REQUIRE(r.code == 0);
  CHECK(r.out == "x^(0,1) + x^(1,0)\n");
  auto const q = run("compute --family quasi-grothendieck --a 1 --n 2 --json");
  REQUIRE(q.code == 0);
  CHECK(nlohmann::json::parse(q.out).at("n") == 2);
}

TEST_CASE("expand a Lascoux polynomial in atoms", "[cli]") {
  auto const r = run("expand --target lascoux --a 0,1,0,3 --basis lascoux-atom --json");
  REQUIRE(r.code == 0);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j.at("basis") == "lascoux-atom");
  CHECK(j.at("terms").size() == 10);
}

TEST_CASE("product reports positivity", "[cli]") {
  auto const r = run("product --left kaon --a 2,0,1 --right glide --b 1,0,2 --basis kaon --json");
  REQUIRE(r.code == 0);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j.at("positive") == true);
  CHECK(j.at("terms").size() == 5);
}

TEST_CASE("fillings lists and counts", "[cli]") {
  auto const r = run("fillings --variant lascoux --a 1,0,2 --json");
  REQUIRE(r.code == 0);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j.at("count") == 13);
  CHECK(j.at("fillings").size() == 13);
  auto const h = run("fillings --variant atom --a 1,0,2 --highest --json");
  REQUIRE(h.code == 0);
  CHECK(nlohmann::json::parse(h.out).at("count") == 2);
  CHECK(run("fillings --variant key --a 1,0,2 --highest").code == 1);
}

TEST_CASE("scan writes JSON lines and exits cleanly", "[cli]") {
  std::string const path = "cli_scan_test.jsonl";
  auto const r = run("scan --conjecture euler --max-weight 3 --max-len 2 --jobs 1 --out " + path);
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    CHECK(nlohmann::json::parse(line).at("ok") == true);
    ++lines;
  }
  CHECK(lines > 0);
  std::remove(path.c_str());
}

TEST_CASE("verify runs a filtered suite", "[cli]") {
  auto const r = run("verify --max-weight 3 --max-len 3 --filter glide --json");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("ok") == true);
}

TEST_CASE("usage errors exit with status 1", "[cli]") {
  CHECK(run("compute --family kaon --a 1,,2").code == 1);
  CHECK(run("compute --family nope --a 1").code == 1);
  CHECK(run("compute --a 1").code == 1);
  CHECK(run("").code == 1);
  CHECK(run("expand --target glide --a 1 --basis schur").code == 1);
  CHECK(run("compute --family kaon --a 1 --n 2").code == 1);
}
