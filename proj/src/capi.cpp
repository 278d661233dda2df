#include "clca.h"

#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "clca/engine.hpp"
#include "clca/error.hpp"
#include "clca/lab.hpp"
#include "clca/project.hpp"
#include "clca/render.hpp"
#include "clca/streets.hpp"

struct clca_project {
  clca::project::Project project;
  std::string error;
};

struct clca_buf {
  std::string text;
};

namespace {

thread_local std::string g_open_error;

template <typename F>
int guarded(clca_project* p, F&& body) {
  if (!p) return CLCA_E_ARG;
  try {
    body();
    p->error.clear();
    return CLCA_OK;
  } catch (const clca::Error& e) {
    p->error = e.what();
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    p->error = e.what();
    return CLCA_E_DOMAIN;
  }
}

void put(clca_buf** out, std::string text) {
  if (out) *out = new clca_buf{std::move(text)};
}

clca::engine::MarginalReport report_for(const clca_project& p, double population) {
  const clca::lab::Baseline& base = p.project.baseline;
  if (population <= 0) return clca::lab::assess_baseline(base);
  auto efs = clca::lab::compose_all(base, clca::lab::resolve_mix(base, base.baseline_mix_code));
  auto report = clca::engine::assess(clca::lab::with_population(base.delta, population), efs,
                                     "baseline");
  report.year = base.year;
  return report;
}

std::vector<std::string> string_list(const char* const* items, size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.emplace_back(items[i] ? items[i] : "");
  return out;
}

int emit_sweep(clca_project* p, clca_buf** csv_out, clca_buf** fit_out, int digits,
               const clca::lab::SweepResult& result) {
  put(csv_out, clca::render::sweep_csv(result, digits));
  put(fit_out, clca::render::fit_json(result.fit, digits));
  (void)p;
  return CLCA_OK;
}

} // namespace

extern "C" {

const char* clca_version(void) { return "1.0.0"; }

int clca_project_open(const char* config_path, clca_project** out) {
  if (!config_path || !out) return CLCA_E_ARG;
  try {
    auto* p = new clca_project{clca::project::load(config_path), {}};
    *out = p;
    g_open_error.clear();
    return CLCA_OK;
  } catch (const clca::Error& e) {
    g_open_error = e.what();
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    g_open_error = e.what();
    return CLCA_E_DOMAIN;
  }
}

void clca_project_close(clca_project* p) { delete p; }

const char* clca_project_error(const clca_project* p) { return p ? p->error.c_str() : ""; }

const char* clca_last_error(void) { return g_open_error.c_str(); }

int clca_shift_csv(clca_project* p, double population, int digits, clca_buf** out) {
  if (!out) return CLCA_E_ARG;
  return guarded(p, [&] {
    const auto& base = p->project.baseline;
    auto delta =
        population <= 0 ? base.delta : clca::lab::with_population(base.delta, population);
    put(out, clca::render::shift_csv(p->project, delta, digits));
  });
}

int clca_factors_csv(clca_project* p, const char* mix_code, int digits, clca_buf** out) {
  if (!out) return CLCA_E_ARG;
  return guarded(p, [&] {
    const auto& base = p->project.baseline;
    const std::string code = mix_code ? mix_code : base.baseline_mix_code;
    auto efs = clca::lab::compose_all(base, clca::lab::resolve_mix(base, code));
    put(out, clca::render::factors_csv(base.mode_order, efs, digits));
  });
}

int clca_assess_csv(clca_project* p, double population, int digits, clca_buf** out) {
  if (!out) return CLCA_E_ARG;
  return guarded(p, [&] { put(out, clca::render::report_csv(report_for(*p, population), digits)); });
}

int clca_assess_json(clca_project* p, double population, int digits, clca_buf** out) {
  if (!out) return CLCA_E_ARG;
  return guarded(p,
                 [&] { put(out, clca::render::report_json(report_for(*p, population), digits)); });
}

int clca_assess_total(clca_project* p, double population, double* total_kg) {
  if (!total_kg) return CLCA_E_ARG;
  return guarded(p, [&] { *total_kg = report_for(*p, population).total; });
}

int clca_sweep_lifetime_csv(clca_project* p, const double* grid_km, size_t n, int digits,
                            clca_buf** csv, clca_buf** fit_json) {
  if (!csv) return CLCA_E_ARG;
  return guarded(p, [&] {
    std::vector<double> grid;
    if (grid_km && n > 0)
      grid.assign(grid_km, grid_km + n);
    else
      grid = clca::lab::default_lifetime_grid(n == 0 ? 25 : n);
    emit_sweep(p, csv, fit_json, digits, clca::lab::sweep_lifetime(p->project.baseline, grid));
  });
}

int clca_sweep_servicing_csv(clca_project* p, const char* const* names, size_t n, int digits,
                             clca_buf** csv, clca_buf** fit_json) {
  if (!csv) return CLCA_E_ARG;
  return guarded(p, [&] {
    std::vector<std::string> list;
    if (names && n > 0) {
      list = string_list(names, n);
    } else {
      list = p->project.baseline.servicing_order;
      list.push_back("none");
    }
    emit_sweep(p, csv, fit_json, digits, clca::lab::sweep_servicing(p->project.baseline, list));
  });
}

int clca_sweep_mix_csv(clca_project* p, const char* const* codes, size_t n, int digits,
                       clca_buf** csv, clca_buf** fit_json) {
  if (!csv) return CLCA_E_ARG;
  return guarded(p, [&] {
    std::vector<std::string> list;
    if (codes && n > 0)
      list = string_list(codes, n);
    else
      for (const auto& mix : p->project.baseline.mixes) list.push_back(mix.code);
    emit_sweep(p, csv, fit_json, digits, clca::lab::sweep_mix(p->project.baseline, list));
  });
}

int clca_breakeven_mix(clca_project* p, double* intensity, double* alpha, double* beta,
                       int* from_above) {
  return guarded(p, [&] {
    auto be = clca::lab::break_even_mix(p->project.baseline);
    if (intensity) *intensity = be.intensity;
    if (alpha) *alpha = be.alpha;
    if (beta) *beta = be.beta;
    if (from_above) *from_above = be.from_above ? 1 : 0;
  });
}

int clca_breakeven_ffes(clca_project* p, double* ef_kg_pkt) {
  if (!ef_kg_pkt) return CLCA_E_ARG;
  return guarded(p, [&] { *ef_kg_pkt = clca::lab::break_even_ffes_ef(p->project.baseline); });
}

int clca_street_flows_csv(clca_project* p, const char* street_id, int digits, clca_buf** out) {
  if (!out || !street_id) return CLCA_E_ARG;
  return guarded(p, [&] {
    for (const auto& spec : p->project.streets()) {
      if (spec.id == street_id) {
        put(out, clca::render::flows_csv(clca::streets::annualized_flows(spec), digits));
        return;
      }
    }
    clca::fail(clca::errc::link, std::string("unknown street \"") + street_id + "\"");
  });
}

const char* clca_buf_data(const clca_buf* b) { return b ? b->text.c_str() : ""; }

size_t clca_buf_size(const clca_buf* b) { return b ? b->text.size() : 0; }

void clca_buf_free(clca_buf* b) { delete b; }

} // extern "C"
