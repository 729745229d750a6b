#include "hookpoly/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hookpoly/error.hpp"

namespace hookpoly {

namespace {

using Json = nlohmann::ordered_json;

// Runs fn(i) for i in [0, count) on `jobs` workers. Workers pull indices from
// a shared counter and stop early once `cancel` is set.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, std::atomic<bool>& cancel, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      if (cancel.load(std::memory_order_relaxed)) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        cancel = true;
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

Json tally_json(const IdentityTally& t) {
  return {{"checked", t.checked}, {"passed", t.passed}, {"failed", t.failed()}};
}

Json outcome_json(const VerificationOutcome& o) {
  Json j;
  j["identity"] = identity_name(o.identity);
  j["partition"] = format_partition(o.partition);
  j["corner_index"] = o.corner_index ? Json(*o.corner_index) : Json(nullptr);
  j["lhs"] = o.lhs;
  j["rhs"] = o.rhs;
  return j;
}

Json config_json(const SweepConfig& c) {
  Json ids = Json::array();
  for (IdentityId id : c.selected()) ids.push_back(identity_name(id));
  Json j;
  j["max_n_identities"] = c.max_n_identities;
  j["max_n_theorem_1_2"] = c.max_n_theorem_1_2;
  j["max_n_oracles"] = c.max_n_oracles;
  j["identities"] = ids;
  j["fail_fast"] = c.fail_fast;
  j["capture_witnesses"] = c.capture_witnesses;
  if (c.perturbation) {
    const auto& p = *c.perturbation;
    Json pj;
    pj["shape"] = format_partition(p.shape);
    if (p.target == Perturbation::Target::HookLength) {
      pj["target"] = "hook_length";
      pj["row"] = p.cell.row;
      pj["col"] = p.cell.col;
    } else {
      pj["target"] = "g_factor";
      pj["factor"] = p.factor;
    }
    pj["delta"] = p.delta;
    j["perturbation"] = pj;
  } else {
    j["perturbation"] = nullptr;
  }
  return j;
}

std::string render_json(const SweepReport& r) {
  Json root;
  root["config"] = config_json(r.config);
  Json ids = Json::object();
  for (const auto& s : r.identities) {
    Json e = tally_json(s.total);
    Json per_n = Json::array();
    for (const auto& [n, t] : s.per_n) {
      Json row = {{"n", n}};
      row.update(tally_json(t));
      per_n.push_back(row);
    }
    e["per_n"] = per_n;
    Json failures = Json::array();
    for (const auto& f : s.failures) failures.push_back(outcome_json(f));
    e["failures"] = failures;
    if (r.config.capture_witnesses) {
      Json w = Json::array();
      for (const auto& o : s.witnesses) w.push_back(outcome_json(o));
      e["witnesses"] = w;
    }
    ids[std::string(identity_name(s.identity))] = e;
  }
  root["identities"] = ids;
  Json thm = Json::array();
  for (const auto& s : r.theorem_1_2) {
    Json e;
    e["check"] = s.outcome.check;
    e["n"] = s.outcome.n;
    e["status"] = s.outcome.passed ? "pass" : "fail";
    e["monomial_oracle"] = s.monomial_oracle ? Json(*s.monomial_oracle ? "pass" : "fail") : Json(nullptr);
    if (!s.outcome.lhs.empty()) {
      e["lhs"] = Json::parse(s.outcome.lhs);
      e["rhs"] = Json::parse(s.outcome.rhs);
    }
    thm.push_back(e);
  }
  root["theorem_1_2"] = thm;
  Json totals = tally_json(r.totals);
  totals["cancelled"] = r.cancelled;
  root["totals"] = totals;
  std::ostringstream wall;
  wall << std::fixed << std::setprecision(3) << r.wall_time.count();
  root["timing"] = {{"wall_time_seconds", std::stod(wall.str())}, {"jobs", r.jobs_used}};
  return root.dump(2) + "\n";
}

std::string render_csv(const SweepReport& r) {
  std::ostringstream os;
  os << "identity,n,checked,passed,failed\n";
  for (const auto& s : r.identities)
    for (const auto& [n, t] : s.per_n)
      os << identity_name(s.identity) << ',' << n << ',' << t.checked << ',' << t.passed << ','
         << t.failed() << '\n';
  for (const auto& s : r.theorem_1_2) {
    const bool ok = s.outcome.passed && s.monomial_oracle.value_or(true);
    os << s.outcome.check << ',' << s.outcome.n << ",1," << (ok ? 1 : 0) << ',' << (ok ? 0 : 1)
       << '\n';
  }
  return os.str();
}

std::string render_text(const SweepReport& r) {
  std::ostringstream os;
  os << "identity sweep, |lambda| <= " << r.config.max_n_identities << "\n\n";
  os << std::left << std::setw(18) << "identity" << std::right << std::setw(10) << "checked"
     << std::setw(10) << "passed" << std::setw(10) << "failed" << '\n';
  for (const auto& s : r.identities) {
    os << std::left << std::setw(18) << identity_name(s.identity) << std::right << std::setw(10)
       << s.total.checked << std::setw(10) << s.total.passed << std::setw(10) << s.total.failed()
       << '\n';
    for (const auto& f : s.failures) {
      os << "  FAIL " << format_partition(f.partition);
      if (f.corner_index) os << " corner " << *f.corner_index;
      os << "\n    lhs " << f.lhs << "\n    rhs " << f.rhs << '\n';
    }
  }
  if (!r.theorem_1_2.empty()) {
    os << "\nSchur identity, n <= " << r.config.max_n_theorem_1_2 << '\n';
    for (const auto& s : r.theorem_1_2) {
      os << "  " << std::left << std::setw(8) << s.outcome.check << " n=" << std::setw(3)
         << s.outcome.n << (s.outcome.passed ? "pass" : "FAIL");
      if (s.monomial_oracle) os << "  monomial oracle " << (*s.monomial_oracle ? "pass" : "FAIL");
      os << '\n';
    }
  }
  os << "\ntotal " << r.totals.checked << " checked, " << r.totals.passed << " passed, "
     << r.totals.failed() << " failed";
  if (r.cancelled) os << " (cancelled after first failure)";
  os << '\n';
  return os.str();
}

}  // namespace

ReportFormat report_format_from_name(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw Error(ErrorCode::UnknownFormat, "unknown report format '" + std::string(name) + "'");
}

void SweepConfig::validate() const {
  if (max_n_identities < 1 || max_n_theorem_1_2 < 0 || max_n_oracles < 1)
    throw Error(ErrorCode::InvalidArgument, "sweep bounds must be positive");
  if (max_n_oracles > max_n_identities)
    throw Error(ErrorCode::InvalidArgument, "oracle bound exceeds identity bound");
}

std::vector<IdentityId> SweepConfig::selected() const {
  if (identities.empty()) return {kAllIdentities.begin(), kAllIdentities.end()};
  std::vector<IdentityId> out;
  for (IdentityId id : kAllIdentities)
    if (std::find(identities.begin(), identities.end(), id) != identities.end()) out.push_back(id);
  return out;
}

SweepReport run_sweep(const SweepConfig& config) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();

  SweepReport report;
  report.config = config;
  report.jobs_used = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());

  // Partitions of each size, generated once and shared read-only.
  std::vector<std::vector<Partition>> by_size(config.max_n_identities + 1);
  for (int n = 1; n <= config.max_n_identities; ++n) by_size[n] = enumerate_partitions(n);

  struct Unit {
    IdentityId id;
    int n;
    std::size_t index;
  };
  const auto ids = config.selected();
  std::vector<Unit> units;
  for (IdentityId id : ids)
    for (int n = 1; n <= config.max_n_identities; ++n)
      for (std::size_t k = 0; k < by_size[n].size(); ++k) units.push_back({id, n, k});

  CheckOptions options;
  options.max_size = config.max_n_identities;
  options.capture_witness = config.capture_witnesses;
  if (config.perturbation) options.evaluator = ShapeEvaluator(*config.perturbation);

  std::atomic<bool> cancel{false};
  std::vector<std::vector<VerificationOutcome>> results(units.size());
  parallel_for(units.size(), report.jobs_used, cancel, [&](std::size_t i) {
    const Unit& u = units[i];
    auto outcomes = check_identity(u.id, by_size[u.n][u.index], options);
    if (config.fail_fast && std::any_of(outcomes.begin(), outcomes.end(),
                                        [](const auto& o) { return !o.passed; }))
      cancel = true;
    results[i] = std::move(outcomes);
  });

  // Single-threaded fold in work-list order.
  for (IdentityId id : ids) report.identities.push_back({id, {}, {}, {}, {}});
  for (std::size_t i = 0; i < units.size(); ++i) {
    const Unit& u = units[i];
    auto& summary = *std::find_if(report.identities.begin(), report.identities.end(),
                                  [&](const auto& s) { return s.identity == u.id; });
    if (summary.per_n.empty() || summary.per_n.back().first != u.n) summary.per_n.push_back({u.n, {}});
    auto& tally = summary.per_n.back().second;
    for (auto& o : results[i]) {
      ++tally.checked;
      ++summary.total.checked;
      if (o.passed) {
        ++tally.passed;
        ++summary.total.passed;
        if (config.capture_witnesses) summary.witnesses.push_back(std::move(o));
      } else {
        summary.failures.push_back(std::move(o));
      }
    }
  }
  for (const auto& s : report.identities) {
    report.totals.checked += s.total.checked;
    report.totals.passed += s.total.passed;
  }

  // Schur identity and its two recurrences, one unit per (n, check).
  struct SchurUnit {
    unsigned n;
    bool theorem;
  };
  std::vector<SchurUnit> schur_units;
  if (!(config.fail_fast && cancel)) {
    for (int n = 0; n <= config.max_n_theorem_1_2; ++n) {
      schur_units.push_back({static_cast<unsigned>(n), true});
      if (n >= 1) schur_units.push_back({static_cast<unsigned>(n), false});
    }
  }
  const unsigned schur_bound = static_cast<unsigned>(config.max_n_theorem_1_2);
  const int monomial_bound = std::min(config.max_n_oracles, 8);
  std::vector<std::vector<SchurSummary>> schur_results(schur_units.size());
  parallel_for(schur_units.size(), report.jobs_used, cancel, [&](std::size_t i) {
    const SchurUnit& u = schur_units[i];
    std::vector<SchurSummary> out;
    if (u.theorem) {
      SchurSummary s{check_theorem_1_2(u.n, schur_bound, config.capture_witnesses), std::nullopt};
      if (static_cast<int>(u.n) <= monomial_bound) {
        const auto reference = lhs_1_6_monomial(u.n);
        s.monomial_oracle = to_monomial(lhs_1_6(u.n), monomial_bound) == reference &&
                            to_monomial(rhs_1_6(u.n), monomial_bound) == reference;
      }
      out.push_back(std::move(s));
    } else {
      auto [r31, r32] = check_recurrences_3(u.n, schur_bound, config.capture_witnesses);
      out.push_back({std::move(r31), std::nullopt});
      out.push_back({std::move(r32), std::nullopt});
    }
    if (config.fail_fast && std::any_of(out.begin(), out.end(), [](const auto& s) {
          return !s.outcome.passed || s.monomial_oracle == false;
        }))
      cancel = true;
    schur_results[i] = std::move(out);
  });
  for (auto& batch : schur_results) {
    for (auto& s : batch) {
      ++report.totals.checked;
      if (s.outcome.passed && s.monomial_oracle.value_or(true)) ++report.totals.passed;
      report.theorem_1_2.push_back(std::move(s));
    }
  }

  report.cancelled = cancel.load();
  report.wall_time = std::chrono::steady_clock::now() - started;
  return report;
}

std::string render_report(const SweepReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return render_json(report);
    case ReportFormat::Csv: return render_csv(report);
    case ReportFormat::Text: return render_text(report);
  }
  throw Error(ErrorCode::UnknownFormat, "unknown report format");
}

}  // namespace hookpoly
