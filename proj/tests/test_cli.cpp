#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + ROOTHK_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string freeness_status(const std::string& out) {
  const auto j = nlohmann::json::parse(out);
  for (const auto& c : j["checks"])
    if (c["name"].get<std::string>().ends_with("/freeness")) return c["status"];
  return "";
}

}  // namespace

TEST_CASE("successful commands exit 0") {
  const Run a = run("analyze A 2 --lattice dual");
  CHECK(a.code == 0);
  CHECK(nlohmann::json::parse(a.out)["command"] == "analyze");
  CHECK(run("lemma-check --max-rank 3 --format tsv").code == 0);
  CHECK(run("sublattices C 3").code == 0);
  CHECK(run("analyze e 6 --lattice index:0 --format tsv").code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("analyze A 0").code == 2);
  CHECK(run("analyze E 9").code == 2);
  CHECK(run("analyze H 3").code == 2);
  CHECK(run("analyze Q 3").code == 2);
  CHECK(run("analyze A 3 --lattice weights").code == 2);
  CHECK(run("analyze B 3 --lattice index:9").code == 2);
  CHECK(run("report --suite nonsense").code == 2);
  CHECK(run("lemma-check --format xml").code == 2);
  CHECK(run("analyze A 3 --group-cap zero").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("group cap from environment and flag") {
  CHECK(freeness_status(run("analyze A 3").out) == "pass");
  CHECK(freeness_status(run("analyze A 3", "ROOTHK_GROUP_CAP=10").out) == "skipped");
  // flag wins over the environment
  CHECK(freeness_status(run("analyze A 3 --group-cap 100", "ROOTHK_GROUP_CAP=10").out) == "pass");
  CHECK(run("analyze A 3", "ROOTHK_GROUP_CAP=abc").code == 2);
  CHECK(run("analyze E 8").code == 0);
}

TEST_CASE("timing is opt-in") {
  CHECK_FALSE(nlohmann::json::parse(run("analyze A 1").out).contains("timing_ms"));
  CHECK(nlohmann::json::parse(run("--timing analyze A 1").out).contains("timing_ms"));
}
