#include <doctest.h>

#include <string>

#include <json.hpp>

#include "hookpoly/hookpoly.h"

namespace {

std::string take(char* s) {
  std::string out(s ? s : "");
  hp_string_free(s);
  return out;
}

hp_partition* parse(const char* text) {
  hp_partition* p = nullptr;
  REQUIRE(hp_partition_parse(text, &p) == HP_OK);
  return p;
}

}  // namespace

TEST_CASE("partition handles") {
  hp_partition* p = parse("55331");
  CHECK(hp_partition_size(p) == 17);
  CHECK(hp_partition_length(p) == 5);
  char* s = nullptr;
  REQUIRE(hp_partition_format(p, &s) == HP_OK);
  CHECK(take(s) == "5,5,3,3,1");

  uint64_t h = 0;
  CHECK(hp_hook_length(p, 4, 1, &h) == HP_OK);
  CHECK(h == 4);
  CHECK(hp_hook_length(p, 6, 1, &h) == HP_ERR_INVALID_ARGUMENT);
  CHECK(std::string(hp_last_error()).find("outside") != std::string::npos);

  REQUIRE(hp_hook_product(p, &s) == HP_OK);
  CHECK(take(s) == "261273600");
  REQUIRE(hp_corner_sets_json(p, &s) == HP_OK);
  const auto j = nlohmann::json::parse(take(s));
  CHECK(j["T"] == nlohmann::json({2, 4, 5}));
  CHECK(j["B"] == nlohmann::json({1, 3, 5, 6}));
  CHECK(j["removals"]["5"] == "5,5,3,3");
  hp_partition_free(p);
}

TEST_CASE("parse errors map to status codes") {
  hp_partition* p = nullptr;
  CHECK(hp_partition_parse("3,5", &p) == HP_ERR_PARSE);
  CHECK(p == nullptr);
  CHECK(std::string(hp_last_error()).find("weakly decreasing") != std::string::npos);
  CHECK(hp_partition_parse(nullptr, &p) == HP_ERR_INVALID_ARGUMENT);
  CHECK(std::string(hp_status_name(HP_ERR_PARSE)) == "parse error");

  hp_partition* empty = parse("0");
  char* s = nullptr;
  CHECK(hp_corner_sets_json(empty, &s) == HP_ERR_INVALID_ARGUMENT);
  REQUIRE(hp_syt_count(empty, &s) == HP_OK);
  CHECK(take(s) == "1");
  hp_partition_free(empty);
}

TEST_CASE("polynomials") {
  hp_partition* p = parse("2,1");
  hp_poly* g = nullptr;
  REQUIRE(hp_g_poly(p, &g) == HP_OK);
  CHECK(hp_poly_degree(g) == 3);
  char* s = nullptr;
  REQUIRE(hp_poly_format(g, HP_POLY_PRETTY, &s) == HP_OK);
  CHECK(take(s) == "x^3-3x^2-x+3");
  REQUIRE(hp_poly_format(g, HP_POLY_SERIALIZED, &s) == HP_OK);
  CHECK(take(s) == R"([(3,"1/1"),(2,"-3/1"),(1,"-1/1"),(0,"3/1")])");
  REQUIRE(hp_poly_coefficient(g, 7, &s) == HP_OK);
  CHECK(take(s) == "0/1");
  hp_poly_free(g);
  hp_partition_free(p);
}

TEST_CASE("identity checks") {
  hp_partition* p = parse("5,5,3,3,1");
  int passed = 0;
  char* s = nullptr;
  REQUIRE(hp_check_identity("COR_4_4", p, &passed, &s) == HP_OK);
  CHECK(passed == 1);
  const auto j = nlohmann::json::parse(take(s));
  CHECK(j[0]["lhs"] == "17/1");
  REQUIRE(hp_check_identity("QUOTIENT_4_2", p, &passed, &s) == HP_OK);
  CHECK(nlohmann::json::parse(take(s)).size() == 3);
  CHECK(hp_check_identity("NOPE", p, &passed, &s) == HP_ERR_UNKNOWN_IDENTITY);
  hp_partition_free(p);

  hp_partition* empty = parse("0");
  CHECK(hp_check_identity("THM_1_1", empty, &passed, &s) == HP_ERR_INVALID_ARGUMENT);
  hp_partition_free(empty);
}

TEST_CASE("Schur expansions") {
  char* s = nullptr;
  REQUIRE(hp_schur_lhs_json(2, &s) == HP_OK);
  const std::string lhs = take(s);
  REQUIRE(hp_schur_rhs_json(2, &s) == HP_OK);
  CHECK(take(s) == lhs);
  CHECK(nlohmann::json::parse(lhs).size() == 2);
}

TEST_CASE("sweep through handles") {
  hp_sweep_config* c = hp_sweep_config_new();
  REQUIRE(c != nullptr);
  CHECK(hp_sweep_config_set_max_n(c, 6) == HP_OK);
  CHECK(hp_sweep_config_set_max_n_theorem_1_2(c, 3) == HP_OK);
  CHECK(hp_sweep_config_set_max_n_oracles(c, 3) == HP_OK);
  CHECK(hp_sweep_config_set_identities(c, "THM_1_1,COR_4_4") == HP_OK);
  CHECK(hp_sweep_config_set_identities(c, "THM_1_1,BOGUS") == HP_ERR_UNKNOWN_IDENTITY);
  CHECK(hp_sweep_config_set_identities(c, "THM_1_1,COR_4_4") == HP_OK);
  CHECK(hp_sweep_config_set_jobs(c, 2) == HP_OK);

  hp_report* r = nullptr;
  REQUIRE(hp_run_sweep(c, &r) == HP_OK);
  CHECK(hp_report_failure_count(r) == 0);
  CHECK(hp_report_checked_count(r) > 0);
  char* s = nullptr;
  REQUIRE(hp_report_render(r, HP_FORMAT_JSON, &s) == HP_OK);
  const auto j = nlohmann::json::parse(take(s));
  CHECK(j["identities"].size() == 2);
  hp_format f;
  CHECK(hp_format_from_name("xml", &f) == HP_ERR_UNKNOWN_FORMAT);
  CHECK(hp_format_from_name("text", &f) == HP_OK);
  CHECK(f == HP_FORMAT_TEXT);
  hp_report_free(r);

  hp_partition* shape = parse("2,1");
  CHECK(hp_sweep_config_perturb_hook(c, shape, 3, 3, 1) == HP_ERR_INVALID_ARGUMENT);
  CHECK(hp_sweep_config_perturb_hook(c, shape, 1, 1, 1) == HP_OK);
  REQUIRE(hp_run_sweep(c, &r) == HP_OK);
  CHECK(hp_report_failure_count(r) >= 1);
  hp_report_free(r);
  CHECK(hp_sweep_config_perturb_g_factor(c, shape, 4, 1) == HP_ERR_INVALID_ARGUMENT);
  CHECK(hp_sweep_config_perturb_g_factor(c, shape, 2, 1) == HP_OK);
  REQUIRE(hp_run_sweep(c, &r) == HP_OK);
  CHECK(hp_report_failure_count(r) >= 1);
  hp_report_free(r);
  hp_partition_free(shape);

  CHECK(hp_sweep_config_set_max_n(c, 0) == HP_OK);
  CHECK(hp_run_sweep(c, &r) == HP_ERR_INVALID_ARGUMENT);
  hp_sweep_config_free(c);
}

TEST_CASE("walkthrough") {
  char* s = nullptr;
  REQUIRE(hp_example_55331(&s) == HP_OK);
  const std::string text = take(s);
  CHECK(text.find("T={2,4,5}") != std::string::npos);
  CHECK(text.find("B={1,3,5,6}") != std::string::npos);
  CHECK(text.find("17x^2-38x-75") != std::string::npos);
  CHECK(text.find("(6)(2)(-2)(-4) / (4)(-1)(-3)") != std::string::npos);
}
