// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hookpoly/hookpoly.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CliError {
  std::string message;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using PartitionPtr = std::unique_ptr<hp_partition, Deleter<hp_partition, hp_partition_free>>;
using PolyPtr = std::unique_ptr<hp_poly, Deleter<hp_poly, hp_poly_free>>;
using ConfigPtr = std::unique_ptr<hp_sweep_config, Deleter<hp_sweep_config, hp_sweep_config_free>>;
using ReportPtr = std::unique_ptr<hp_report, Deleter<hp_report, hp_report_free>>;

void check(hp_status status) {
  if (status != HP_OK) throw CliError{std::string(hp_status_name(status)) + ": " + hp_last_error()};
}

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out(s ? s : "");
  hp_string_free(s);
  return out;
}

template <class Fn>
std::string fetch(Fn&& fn) {
  char* s = nullptr;
  check(fn(&s));
  return take(s);
}

PartitionPtr parse(const std::string& text) {
  hp_partition* p = nullptr;
  check(hp_partition_parse(text.c_str(), &p));
  return PartitionPtr(p);
}

std::string index_list(const nlohmann::json& arr) {
  std::string out = "{";
  for (std::size_t k = 0; k < arr.size(); ++k) out += (k ? "," : "") + std::to_string(arr[k].get<int>());
  return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hookpoly: hook lengths, shifted-parts g-functions, and exact identity checks"};
  app.require_subcommand(1, 1);

  std::string partition_text;
  std::string identity;
  unsigned schur_n = 0;
  bool serialized = false;
  bool check_json = false;

  auto* hooks = app.add_subcommand("hooks", "Hook-length grid and hook product H");
  hooks->add_option("partition", partition_text, "e.g. 5,5,3,3,1 or 55331")->required();

  auto* gpoly = app.add_subcommand("gpoly", "g-function prod_{i=1..n} (x + lambda_i - i)");
  gpoly->add_option("partition", partition_text)->required();
  gpoly->add_flag("--serialized", serialized, "print [(power,\"num/den\"),...]");

  auto* corners = app.add_subcommand("corners", "In-corner set T, out-corner set B, corner removals");
  corners->add_option("partition", partition_text)->required();

  auto* syt = app.add_subcommand("syt", "Number of standard Young tableaux n!/H");
  syt->add_option("partition", partition_text)->required();

  auto* schur_lhs = app.add_subcommand("schur-lhs", "Schur expansion of sum_k C(x+k-1,k) p1^k e_{n-k}");
  schur_lhs->add_option("n", schur_n)->required();
  auto* schur_rhs = app.add_subcommand("schur-rhs", "Schur expansion of sum_lambda g_lambda(x+n)/H_lambda s_lambda");
  schur_rhs->add_option("n", schur_n)->required();

  auto* check_cmd = app.add_subcommand("check", "Verify one identity for one partition");
  check_cmd->add_option("identity", identity, "THM_1_1, REC_1_2, REC_1_3, REMARK_DN, CORNER_RATIO_2_2, "
                                              "QUOTIENT_4_2, THM_4_1, EQ_4_6, THM_4_2, COR_4_4")
      ->required();
  check_cmd->add_option("partition", partition_text)->required();
  check_cmd->add_flag("--json", check_json, "print outcomes as JSON");

  int max_n = 25;
  int max_n_schur = 9;
  int max_n_oracles = -1;
  std::string identities = "all";
  unsigned jobs = 0;
  std::string format = "json";
  bool fail_fast = false;
  bool witnesses = false;
  std::string output;
  auto* sweep = app.add_subcommand("sweep", "Check every identity over all partitions up to a size");
  sweep->add_option("--max-n", max_n, "largest partition size for the identity catalog");
  sweep->add_option("--max-n-schur", max_n_schur, "largest n for the Schur identity and recurrences");
  sweep->add_option("--max-n-oracles", max_n_oracles, "largest n for the monomial-basis oracle (default min(8, max-n))");
  sweep->add_option("--identities", identities, "comma-separated identity names, or all");
  sweep->add_option("--jobs", jobs, "worker threads, 0 for all cores");
  sweep->add_option("--format", format, "json, csv or text");
  sweep->add_flag("--fail-fast", fail_fast, "stop after the first failure");
  sweep->add_flag("--witnesses", witnesses, "record both sides for passing checks too");
  sweep->add_option("--output", output, "write the report here instead of stdout");

  auto* example = app.add_subcommand("example-55331", "Walk through the 5,5,3,3,1 example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (hooks->parsed()) {
      auto p = parse(partition_text);
      std::cout << fetch([&](char** s) { return hp_hook_grid(p.get(), s); });
      std::cout << "H = " << fetch([&](char** s) { return hp_hook_product(p.get(), s); }) << '\n';
    } else if (gpoly->parsed()) {
      auto p = parse(partition_text);
      hp_poly* raw = nullptr;
      check(hp_g_poly(p.get(), &raw));
      PolyPtr poly(raw);
      std::cout << fetch([&](char** s) {
        return hp_poly_format(poly.get(), serialized ? HP_POLY_SERIALIZED : HP_POLY_PRETTY, s);
      }) << '\n';
    } else if (corners->parsed()) {
      auto p = parse(partition_text);
      const auto j = nlohmann::ordered_json::parse(
          fetch([&](char** s) { return hp_corner_sets_json(p.get(), s); }));
      std::cout << "T=" << index_list(j["T"]) << '\n' << "B=" << index_list(j["B"]) << '\n';
      for (const auto& [row, mu] : j["removals"].items())
        std::cout << "lambda^{" << row << "-}=" << mu.get<std::string>() << '\n';
    } else if (syt->parsed()) {
      auto p = parse(partition_text);
      std::cout << fetch([&](char** s) { return hp_syt_count(p.get(), s); }) << '\n';
    } else if (schur_lhs->parsed()) {
      std::cout << fetch([&](char** s) { return hp_schur_lhs_json(schur_n, s); }) << '\n';
    } else if (schur_rhs->parsed()) {
      std::cout << fetch([&](char** s) { return hp_schur_rhs_json(schur_n, s); }) << '\n';
    } else if (check_cmd->parsed()) {
      auto p = parse(partition_text);
      int passed = 0;
      const std::string json = fetch(
          [&](char** s) { return hp_check_identity(identity.c_str(), p.get(), &passed, s); });
      if (check_json) {
        std::cout << json << '\n';
      } else {
        for (const auto& o : nlohmann::ordered_json::parse(json)) {
          std::cout << o["identity"].get<std::string>() << ' ' << o["partition"].get<std::string>();
          if (!o["corner_index"].is_null()) std::cout << " corner " << o["corner_index"].get<int>();
          std::cout << ": " << o["status"].get<std::string>() << '\n'
                    << "  lhs " << o["lhs"].get<std::string>() << '\n'
                    << "  rhs " << o["rhs"].get<std::string>() << '\n';
        }
      }
      return passed ? kExitOk : kExitFailure;
    } else if (sweep->parsed()) {
      hp_format fmt;
      check(hp_format_from_name(format.c_str(), &fmt));
      ConfigPtr cfg(hp_sweep_config_new());
      if (!cfg) throw CliError{"out of memory"};
      check(hp_sweep_config_set_max_n(cfg.get(), max_n));
      check(hp_sweep_config_set_max_n_theorem_1_2(cfg.get(), max_n_schur));
      check(hp_sweep_config_set_max_n_oracles(cfg.get(), max_n_oracles < 0 ? std::min(8, max_n) : max_n_oracles));
      check(hp_sweep_config_set_identities(cfg.get(), identities.c_str()));
      check(hp_sweep_config_set_jobs(cfg.get(), jobs));
      check(hp_sweep_config_set_fail_fast(cfg.get(), fail_fast));
      check(hp_sweep_config_set_capture_witnesses(cfg.get(), witnesses));
      hp_report* raw = nullptr;
      check(hp_run_sweep(cfg.get(), &raw));
      ReportPtr report(raw);
      const std::string text = fetch([&](char** s) { return hp_report_render(report.get(), fmt, s); });
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream file(output, std::ios::binary);
        if (!file) throw CliError{"cannot open " + output};
        file << text;
      }
      return hp_report_failure_count(report.get()) == 0 ? kExitOk : kExitFailure;
    } else if (example->parsed()) {
      std::cout << fetch([](char** s) { return hp_example_55331(s); });
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
