#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hookpoly/shifted_parts.hpp"
#include "hookpoly/symfunc.hpp"

namespace hookpoly {

enum class ReportFormat { Json, Csv, Text };

// Throws Error(UnknownFormat).
ReportFormat report_format_from_name(std::string_view name);

struct SweepConfig {
  int max_n_identities = 25;
  int max_n_theorem_1_2 = 9;
  int max_n_oracles = 8;
  std::vector<IdentityId> identities;  // empty selects the whole catalog
  unsigned jobs = 0;                   // 0 = hardware concurrency
  ReportFormat format = ReportFormat::Json;
  bool fail_fast = false;
  bool capture_witnesses = false;
  std::optional<Perturbation> perturbation;

  // Throws Error(InvalidArgument) for non-positive bounds or an oracle bound
  // above the identity bound.
  void validate() const;
  std::vector<IdentityId> selected() const;
};

struct IdentityTally {
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t failed() const { return checked - passed; }
};

struct IdentitySummary {
  IdentityId identity{};
  IdentityTally total;
  std::vector<std::pair<int, IdentityTally>> per_n;  // ascending n
  std::vector<VerificationOutcome> failures;
  std::vector<VerificationOutcome> witnesses;  // passes, with capture on
};

struct SchurSummary {
  SchurCheckOutcome outcome;
  // Monomial-basis cross-check for THM_1_2 within the oracle bound.
  std::optional<bool> monomial_oracle;
};

struct SweepReport {
  SweepConfig config;
  std::vector<IdentitySummary> identities;  // catalog order
  std::vector<SchurSummary> theorem_1_2;    // by n, then check name
  IdentityTally totals;
  bool cancelled = false;
  unsigned jobs_used = 1;
  std::chrono::duration<double> wall_time{0};

  std::size_t failure_count() const { return totals.failed(); }
};

SweepReport run_sweep(const SweepConfig& config);

// JSON keys: config, identities, theorem_1_2, totals, timing. Everything but
// "timing" is a pure function of the configuration.
std::string render_report(const SweepReport& report, ReportFormat format);

}  // namespace hookpoly
