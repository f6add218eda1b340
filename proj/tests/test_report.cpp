#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "roothk/report.hpp"

using namespace roothk;
using nlohmann::json;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("json layout") {
  const ReportDocument doc = cmd_lemma_check(3);
  const json j = json::parse(render_json(doc));
  CHECK(j["tool"] == "roothk");
  CHECK(j["tool_version"] == kToolVersion);
  CHECK(j["command"] == "lemma-check");
  CHECK_FALSE(j.contains("timing_ms"));
  REQUIRE(j["checks"].is_array());
  CHECK(j["checks"].size() == doc.checks.size());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c["status"] == "pass");
    CHECK(c["values"].is_object());
    CHECK(c["paper_ref"].is_string());
  }
  CHECK(j["summary"]["pass"] == doc.checks.size());
  CHECK(j["summary"]["fail"] == 0);
  CHECK(doc.exit_code() == 0);
}

TEST_CASE("lemma rows cover every supported root system") {
  const ReportDocument doc = cmd_lemma_check(4);
  std::size_t lemma_rows = 0;
  for (const auto& c : doc.checks) lemma_rows += c.name.rfind("lemma/", 0) == 0;
  CHECK(lemma_rows == supported_specs(4).size());
  const json j = json::parse(render_json(doc));
  const auto& first = j["checks"][0];
  CHECK(first["name"] == "lemma/A1");
  CHECK(first["values"]["sym2_inv"] == 1);
  CHECK(first["values"]["wedge2_inv"] == 0);
  CHECK(first["values"]["wedge2_doubled_inv"] == 1);
}

TEST_CASE("tsv mirrors json") {
  const ReportDocument doc = cmd_sublattices({Family::B, 4});
  const auto tsv = lines(render_tsv(doc));
  REQUIRE(tsv.size() == doc.checks.size() + 1);
  CHECK(tsv[0] == "name\tstatus\tvalues\tpaper_ref");
  const json j = json::parse(render_json(doc));
  for (std::size_t i = 0; i < doc.checks.size(); ++i) {
    const std::string& line = tsv[i + 1];
    CHECK(line.rfind(j["checks"][i]["name"].get<std::string>() + "\t", 0) == 0);
  }
  CHECK(tsv[1].find("labels=D4,Z4,D4*") != std::string::npos);
}

TEST_CASE("exact values are rendered as strings or integers") {
  ReportDocument doc;
  doc.command = "unit";
  CheckRecord c;
  c.name = "values";
  c.add("i", Integer(-7)).add("q", Rational(3, 4)).add("b", true).add("s", std::string("x"));
  doc.checks.push_back(c);
  const json j = json::parse(render_json(doc));
  CHECK(j["checks"][0]["values"]["i"] == -7);
  CHECK(j["checks"][0]["values"]["q"] == "3/4");
  CHECK(j["checks"][0]["values"]["b"] == true);
  CHECK(lines(render_tsv(doc))[1] == "values\tpass\ti=-7;q=3/4;b=true;s=x\t");
}

TEST_CASE("failures and skips drive the summary and exit code") {
  ReportDocument doc;
  doc.command = "unit";
  doc.checks.push_back({"a", CheckStatus::Pass, {}, ""});
  doc.checks.push_back({"b", CheckStatus::Skipped, {}, ""});
  CHECK(doc.exit_code() == 0);
  doc.checks.push_back({"c", CheckStatus::Fail, {}, ""});
  CHECK(doc.exit_code() == 1);
  CHECK(doc.count(CheckStatus::Skipped) == 1);
  doc.timing_ms = "12";
  CHECK(json::parse(render_json(doc))["timing_ms"] == "12");
}

TEST_CASE("rendering is deterministic") {
  const auto a = render_json(cmd_analyze({Family::A, 3}, LatticeSelector::parse("dual"), {}));
  const auto b = render_json(cmd_analyze({Family::A, 3}, LatticeSelector::parse("dual"), {}));
  CHECK(a == b);
  const auto e8 = json::parse(render_json(cmd_analyze({Family::E, 8}, LatticeSelector{}, {})));
  bool skipped = false;
  for (const auto& c : e8["checks"]) skipped |= c["status"] == "skipped";
  CHECK(skipped);
  CHECK(e8["summary"]["fail"] == 0);
}

TEST_CASE("unknown suite") {
  CHECK_THROWS_AS(cmd_report("everything", {}), InvalidSpec);
}

TEST_CASE("default suite table") {
  const auto specs = default_suite_specs();
  CHECK(specs.size() == 31);
  CHECK(specs.front().name() == "A1");
  CHECK(specs.back().name() == "G2");
}
