#include <doctest.h>

#include <json.hpp>

#include "hookpoly/error.hpp"
#include "hookpoly/harness.hpp"

using namespace hookpoly;
using nlohmann::json;

namespace {

SweepConfig small_config(int max_n) {
  SweepConfig c;
  c.max_n_identities = max_n;
  c.max_n_theorem_1_2 = std::min(max_n, 4);
  c.max_n_oracles = std::min(max_n, 4);
  c.jobs = 1;
  return c;
}

// Removes the timing object, which is outside the determinism guarantee.
json without_timing(const std::string& text) {
  json j = json::parse(text);
  j.erase("timing");
  return j;
}

}  // namespace

TEST_CASE("config validation") {
  SweepConfig c;
  CHECK_NOTHROW(c.validate());
  c.max_n_identities = 0;
  CHECK_THROWS_AS(c.validate(), Error);
  c.max_n_identities = 3;
  c.max_n_oracles = 8;
  CHECK_THROWS_AS(c.validate(), Error);
  CHECK(report_format_from_name("csv") == ReportFormat::Csv);
  CHECK_THROWS_AS(report_format_from_name("xml"), Error);
}

TEST_CASE("sweep of size 1") {
  const SweepReport r = run_sweep(small_config(1));
  CHECK(r.identities.size() == kAllIdentities.size());
  for (const auto& s : r.identities) {
    CHECK(s.total.checked == 1);
    CHECK(s.total.passed == 1);
    CHECK(s.failures.empty());
  }
  CHECK(r.failure_count() == 0);
}

TEST_CASE("selected identities and witness capture") {
  SweepConfig c = small_config(17);
  c.max_n_theorem_1_2 = 0;
  c.identities = {IdentityId::THM_4_2};
  c.capture_witnesses = true;
  c.jobs = 2;
  const SweepReport r = run_sweep(c);
  REQUIRE(r.identities.size() == 1);
  const auto& s = r.identities[0];
  CHECK(s.failures.empty());
  bool found = false;
  for (const auto& w : s.witnesses)
    if (w.partition == Partition({5, 5, 3, 3, 1})) {
      found = true;
      CHECK(w.rhs == R"([(2,"17/1"),(1,"-38/1"),(0,"-75/1")])");
    }
  CHECK(found);
  const json j = json::parse(render_report(r, ReportFormat::Json));
  CHECK(j["identities"]["THM_4_2"]["witnesses"].size() == s.witnesses.size());
}

TEST_CASE("injected fault is reported with both sides") {
  SweepConfig c = small_config(5);
  Perturbation p;
  p.target = Perturbation::Target::HookLength;
  p.shape = Partition({3, 1});
  p.cell = {1, 2};
  c.perturbation = p;
  const SweepReport r = run_sweep(c);
  CHECK(r.failure_count() >= 1);
  const json j = json::parse(render_report(r, ReportFormat::Json));
  bool any = false;
  for (const auto& [name, entry] : j["identities"].items()) {
    CHECK(entry["checked"].get<int>() == entry["passed"].get<int>() + entry["failed"].get<int>());
    CHECK(entry["failures"].size() == entry["failed"].get<std::size_t>());
    for (const auto& f : entry["failures"]) {
      any = true;
      CHECK(f.contains("identity"));
      CHECK(f["partition"].is_string());
      CHECK(f.contains("corner_index"));
      CHECK_FALSE(f["lhs"].get<std::string>().empty());
      CHECK_FALSE(f["rhs"].get<std::string>().empty());
    }
  }
  CHECK(any);
}

TEST_CASE("fail fast stops early") {
  SweepConfig c = small_config(8);
  Perturbation p;
  p.target = Perturbation::Target::GFactor;
  p.shape = Partition({1});
  p.factor = 1;
  c.perturbation = p;
  c.fail_fast = true;
  const SweepReport r = run_sweep(c);
  CHECK(r.failure_count() >= 1);
  CHECK(r.cancelled);
  CHECK(r.theorem_1_2.empty());
}

TEST_CASE("reports are deterministic and independent of worker count") {
  SweepConfig c = small_config(9);
  const std::string a = render_report(run_sweep(c), ReportFormat::Json);
  const std::string b = render_report(run_sweep(c), ReportFormat::Json);
  c.jobs = 4;
  const std::string d = render_report(run_sweep(c), ReportFormat::Json);
  CHECK(without_timing(a) == without_timing(b));
  CHECK(without_timing(a) == without_timing(d));
  // Byte-level: everything before "timing" is identical.
  CHECK(a.substr(0, a.find("\"timing\"")) == d.substr(0, d.find("\"timing\"")));

  c.format = ReportFormat::Csv;
  const SweepReport r = run_sweep(c);
  CHECK(render_report(r, ReportFormat::Csv) == render_report(run_sweep(small_config(9)), ReportFormat::Csv));
}

TEST_CASE("JSON schema") {
  const SweepReport r = run_sweep(small_config(3));
  const auto j = nlohmann::ordered_json::parse(render_report(r, ReportFormat::Json));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"config", "identities", "theorem_1_2", "totals", "timing"});
  CHECK(j["identities"].size() == kAllIdentities.size());
  CHECK(j["theorem_1_2"].size() == 4 + 2 * 3);
  CHECK(j["totals"]["failed"] == 0);
  CHECK(j["totals"]["checked"] == r.totals.checked);
  CHECK(j["timing"].contains("wall_time_seconds"));
  CHECK(j["config"]["max_n_identities"] == 3);
}

TEST_CASE("empty and single-pass reports") {
  SweepReport empty;
  const json j = json::parse(render_report(empty, ReportFormat::Json));
  CHECK(j["totals"]["checked"] == 0);
  CHECK(j["totals"]["failed"] == 0);

  SweepConfig c = small_config(1);
  c.identities = {IdentityId::COR_4_4};
  c.max_n_theorem_1_2 = 0;
  const SweepReport r = run_sweep(c);
  const json one = json::parse(render_report(r, ReportFormat::Json));
  CHECK(one["identities"].size() == 1);
  CHECK(one["identities"]["COR_4_4"]["checked"] == 1);
  CHECK(one["identities"]["COR_4_4"]["passed"] == 1);

  const std::string csv = render_report(r, ReportFormat::Csv);
  CHECK(csv.rfind("identity,n,checked,passed,failed\nCOR_4_4,1,1,1,0\n", 0) == 0);
  CHECK(render_report(r, ReportFormat::Text).find("COR_4_4") != std::string::npos);
}
