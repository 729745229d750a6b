#include "hookpoly/hookpoly.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "hookpoly/error.hpp"
#include "hookpoly/harness.hpp"
#include "hookpoly/walkthrough.hpp"

struct hp_partition {
  hookpoly::Partition value;
};
struct hp_poly {
  hookpoly::Polynomial value;
};
struct hp_sweep_config {
  hookpoly::SweepConfig value;
};
struct hp_report {
  hookpoly::SweepReport value;
};

namespace {

thread_local std::string last_error;

hp_status to_status(hookpoly::ErrorCode code) {
  using hookpoly::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return HP_ERR_PARSE;
    case ErrorCode::InvalidArgument: return HP_ERR_INVALID_ARGUMENT;
    case ErrorCode::BoundExceeded: return HP_ERR_BOUND_EXCEEDED;
    case ErrorCode::UnknownIdentity: return HP_ERR_UNKNOWN_IDENTITY;
    case ErrorCode::UnknownFormat: return HP_ERR_UNKNOWN_FORMAT;
    case ErrorCode::Internal: return HP_ERR_INTERNAL;
  }
  return HP_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
hp_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return HP_OK;
  } catch (const hookpoly::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HP_ERR_INTERNAL;
  }
}

void require(const void* ptr, const char* what) {
  if (!ptr)
    throw hookpoly::Error(hookpoly::ErrorCode::InvalidArgument, std::string("null ") + what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  require(out, "output pointer");
  *out = dup_string(s);
}

}  // namespace

using namespace hookpoly;

extern "C" {

const char* hp_last_error(void) { return last_error.c_str(); }

const char* hp_status_name(hp_status status) {
  switch (status) {
    case HP_OK: return "ok";
    case HP_ERR_PARSE: return "parse error";
    case HP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HP_ERR_BOUND_EXCEEDED: return "bound exceeded";
    case HP_ERR_UNKNOWN_IDENTITY: return "unknown identity";
    case HP_ERR_UNKNOWN_FORMAT: return "unknown format";
    case HP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void hp_string_free(char* s) { std::free(s); }

hp_status hp_partition_parse(const char* text, hp_partition** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output pointer");
    *out = new hp_partition{parse_partition(text)};
  });
}

void hp_partition_free(hp_partition* p) { delete p; }

hp_status hp_partition_format(const hp_partition* p, char** out) {
  return guarded([&] {
    require(p, "partition");
    emit(out, format_partition(p->value));
  });
}

size_t hp_partition_size(const hp_partition* p) { return p ? p->value.size() : 0; }
size_t hp_partition_length(const hp_partition* p) { return p ? p->value.length() : 0; }

hp_status hp_hook_length(const hp_partition* p, size_t row, size_t col, uint64_t* out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "output pointer");
    *out = hook_length(p->value, Cell{row, col});
  });
}

hp_status hp_hook_grid(const hp_partition* p, char** out) {
  return guarded([&] {
    require(p, "partition");
    emit(out, render_hook_grid(p->value));
  });
}

hp_status hp_hook_product(const hp_partition* p, char** out) {
  return guarded([&] {
    require(p, "partition");
    emit(out, hook_product(p->value).get_str());
  });
}

hp_status hp_syt_count(const hp_partition* p, char** out) {
  return guarded([&] {
    require(p, "partition");
    emit(out, syt_count(p->value).get_str());
  });
}

hp_status hp_corner_sets_json(const hp_partition* p, char** out) {
  return guarded([&] {
    require(p, "partition");
    const CornerData cd = corner_sets(p->value);
    nlohmann::ordered_json j;
    j["T"] = cd.in_corners;
    j["B"] = cd.out_corners;
    nlohmann::ordered_json removals = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < cd.in_corners.size(); ++k)
      removals[std::to_string(cd.in_corners[k])] = format_partition(cd.removals[k]);
    j["removals"] = removals;
    emit(out, j.dump());
  });
}

hp_status hp_g_poly(const hp_partition* p, hp_poly** out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "output pointer");
    *out = new hp_poly{g_poly(p->value)};
  });
}

void hp_poly_free(hp_poly* poly) { delete poly; }

long hp_poly_degree(const hp_poly* poly) {
  if (!poly) return -1;
  auto d = poly->value.degree();
  return d ? static_cast<long>(*d) : -1;
}

hp_status hp_poly_format(const hp_poly* poly, hp_poly_style style, char** out) {
  return guarded([&] {
    require(poly, "polynomial");
    emit(out, style == HP_POLY_SERIALIZED ? serialize(poly->value) : to_pretty(poly->value));
  });
}

hp_status hp_poly_coefficient(const hp_poly* poly, size_t power, char** out) {
  return guarded([&] {
    require(poly, "polynomial");
    emit(out, serialize(poly->value.coefficient(power)));
  });
}

hp_status hp_schur_lhs_json(unsigned n, char** out) {
  return guarded([&] { emit(out, to_json(lhs_1_6(n))); });
}

hp_status hp_schur_rhs_json(unsigned n, char** out) {
  return guarded([&] { emit(out, to_json(rhs_1_6(n))); });
}

hp_status hp_check_identity(const char* identity, const hp_partition* p, int* all_passed,
                            char** json) {
  return guarded([&] {
    require(identity, "identity");
    require(p, "partition");
    require(all_passed, "output pointer");
    const IdentityId id = identity_from_name(identity);
    CheckOptions options;
    options.capture_witness = true;
    options.max_size = std::max(options.max_size, p->value.size());
    const auto outcomes = check_identity(id, p->value, options);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    bool ok = true;
    for (const auto& o : outcomes) {
      ok = ok && o.passed;
      nlohmann::ordered_json j;
      j["identity"] = identity_name(o.identity);
      j["partition"] = format_partition(o.partition);
      j["corner_index"] = o.corner_index ? nlohmann::ordered_json(*o.corner_index)
                                         : nlohmann::ordered_json(nullptr);
      j["status"] = o.passed ? "pass" : "fail";
      j["lhs"] = o.lhs;
      j["rhs"] = o.rhs;
      arr.push_back(j);
    }
    *all_passed = ok ? 1 : 0;
    emit(json, arr.dump(2));
  });
}

hp_sweep_config* hp_sweep_config_new(void) { return new (std::nothrow) hp_sweep_config{}; }
void hp_sweep_config_free(hp_sweep_config* c) { delete c; }

hp_status hp_sweep_config_set_max_n(hp_sweep_config* c, int max_n) {
  return guarded([&] {
    require(c, "config");
    c->value.max_n_identities = max_n;
  });
}

hp_status hp_sweep_config_set_max_n_theorem_1_2(hp_sweep_config* c, int max_n) {
  return guarded([&] {
    require(c, "config");
    c->value.max_n_theorem_1_2 = max_n;
  });
}

hp_status hp_sweep_config_set_max_n_oracles(hp_sweep_config* c, int max_n) {
  return guarded([&] {
    require(c, "config");
    c->value.max_n_oracles = max_n;
  });
}

hp_status hp_sweep_config_set_identities(hp_sweep_config* c, const char* list) {
  return guarded([&] {
    require(c, "config");
    require(list, "identity list");
    std::vector<IdentityId> ids;
    std::string_view rest(list);
    if (rest != "all") {
      while (!rest.empty()) {
        auto comma = rest.find(',');
        ids.push_back(identity_from_name(rest.substr(0, comma)));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      }
    }
    c->value.identities = std::move(ids);
  });
}

hp_status hp_sweep_config_set_jobs(hp_sweep_config* c, unsigned jobs) {
  return guarded([&] {
    require(c, "config");
    c->value.jobs = jobs;
  });
}

hp_status hp_sweep_config_set_fail_fast(hp_sweep_config* c, int fail_fast) {
  return guarded([&] {
    require(c, "config");
    c->value.fail_fast = fail_fast != 0;
  });
}

hp_status hp_sweep_config_set_capture_witnesses(hp_sweep_config* c, int capture) {
  return guarded([&] {
    require(c, "config");
    c->value.capture_witnesses = capture != 0;
  });
}

hp_status hp_sweep_config_perturb_hook(hp_sweep_config* c, const hp_partition* shape, size_t row,
                                       size_t col, int delta) {
  return guarded([&] {
    require(c, "config");
    require(shape, "shape");
    if (!contains(shape->value, Cell{row, col}))
      throw Error(ErrorCode::InvalidArgument, "cell outside the diagram");
    Perturbation p;
    p.target = Perturbation::Target::HookLength;
    p.shape = shape->value;
    p.cell = Cell{row, col};
    p.delta = delta;
    c->value.perturbation = p;
  });
}

hp_status hp_sweep_config_perturb_g_factor(hp_sweep_config* c, const hp_partition* shape,
                                           size_t factor, int delta) {
  return guarded([&] {
    require(c, "config");
    require(shape, "shape");
    if (factor < 1 || factor > static_cast<size_t>(shape->value.size()))
      throw Error(ErrorCode::InvalidArgument, "g-factor index out of range");
    Perturbation p;
    p.target = Perturbation::Target::GFactor;
    p.shape = shape->value;
    p.factor = factor;
    p.delta = delta;
    c->value.perturbation = p;
  });
}

hp_status hp_run_sweep(const hp_sweep_config* c, hp_report** out) {
  return guarded([&] {
    require(c, "config");
    require(out, "output pointer");
    *out = new hp_report{run_sweep(c->value)};
  });
}

void hp_report_free(hp_report* r) { delete r; }

size_t hp_report_failure_count(const hp_report* r) { return r ? r->value.failure_count() : 0; }
size_t hp_report_checked_count(const hp_report* r) { return r ? r->value.totals.checked : 0; }

hp_status hp_report_render(const hp_report* r, hp_format format, char** out) {
  return guarded([&] {
    require(r, "report");
    ReportFormat f;
    switch (format) {
      case HP_FORMAT_JSON: f = ReportFormat::Json; break;
      case HP_FORMAT_CSV: f = ReportFormat::Csv; break;
      case HP_FORMAT_TEXT: f = ReportFormat::Text; break;
      default: throw Error(ErrorCode::UnknownFormat, "unknown report format");
    }
    emit(out, render_report(r->value, f));
  });
}

hp_status hp_format_from_name(const char* name, hp_format* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "output pointer");
    switch (report_format_from_name(name)) {
      case ReportFormat::Json: *out = HP_FORMAT_JSON; break;
      case ReportFormat::Csv: *out = HP_FORMAT_CSV; break;
      case ReportFormat::Text: *out = HP_FORMAT_TEXT; break;
    }
  });
}

hp_status hp_example_55331(char** out) {
  return guarded([&] { emit(out, walkthrough_55331()); });
}

}  // extern "C"
