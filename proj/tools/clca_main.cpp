// Command-line front end. Deliberately a pure client of the C API in clca.h:
// if something is expressible here, any language binding can do it too.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clca.h"

namespace {

std::string default_project() {
  if (const char* env = std::getenv("CLCA_DATA_DIR"); env && *env) return env;
#ifdef CLCA_DEFAULT_DATA_DIR
  return CLCA_DEFAULT_DATA_DIR;
#else
  return "data/paris-2019";
#endif
}

// Accept either the config file itself or the dataset directory.
std::string config_path(const std::string& p) {
  std::error_code ec;
  if (std::filesystem::is_directory(p, ec)) return p + "/project.conf";
  return p;
}

struct Options {
  std::string project = default_project();
  std::string out;    // empty = stdout
  int digits = 0;     // 0 = full precision
};

struct Handle {
  clca_project* p = nullptr;
  ~Handle() { clca_project_close(p); }
};

struct Buf {
  clca_buf* b = nullptr;
  ~Buf() { clca_buf_free(b); }
  std::string str() const { return {clca_buf_data(b), clca_buf_size(b)}; }
};

int report_error(const std::string& msg, int status) {
  std::cerr << "error: " << msg << '\n';
  return status;
}

int open_project(const Options& opt, Handle& h) {
  int rc = clca_project_open(config_path(opt.project).c_str(), &h.p);
  if (rc != CLCA_OK) return report_error(clca_last_error(), rc);
  return CLCA_OK;
}

int write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (f) f << text;
  if (!f) return report_error("cannot write " + path, CLCA_E_IO);
  return 0;
}

int deliver(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return 0;
  }
  return write_file(opt.out, text);
}

// Sweeps carry two documents: the table and the fit descriptor. On stdout the
// fit rides along as a trailing comment; with --out it lands in FILE.fit.json.
int deliver_sweep(const Options& opt, const std::string& table, const std::string& fit) {
  if (opt.out.empty()) return deliver(opt, table + "# fit " + fit);
  if (int rc = write_file(opt.out, table)) return rc;
  return write_file(opt.out + ".fit.json", fit);
}

int run(const Options& opt, int rc, const Handle& h, const Buf& out) {
  if (rc != CLCA_OK) return report_error(clca_project_error(h.p), rc);
  return deliver(opt, out.str());
}

int key_value_csv(const Options& opt, const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string text = "quantity,value\n";
  for (const auto& [k, v] : kv) text += k + "," + v + "\n";
  return deliver(opt, text);
}

std::string num(double v, int digits) {
  // The engine formats numbers itself everywhere else; the break-even
  // quantities are the one place the CLI touches raw doubles.
  char tmp[64];
  std::snprintf(tmp, sizeof tmp, "%.*e", digits > 0 ? digits - 1 : 16, v);
  return tmp;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"consequential life-cycle assessment of a shared-mobility disruption"};
  app.require_subcommand(1);
  app.fallthrough();  // --project/--out/--digits are valid after the subcommand too

  Options opt;
  app.add_option("--project", opt.project,
                 "project config file or dataset directory (default: $CLCA_DATA_DIR)");
  app.add_option("--out", opt.out, "write the result to this file instead of stdout");
  app.add_option("--digits", opt.digits,
                 "round to N significant digits (0 = full precision; 3 matches published tables)");
  app.set_version_flag("--version", clca_version());

  int rc = 0;

  auto* shift = app.add_subcommand("shift", "modal-shift vector, passenger-km per year");
  double shift_pop = 0;
  shift->add_option("--population", shift_pop, "rescale to this user population");
  shift->callback([&] {
    Handle h;
    if ((rc = open_project(opt, h))) return;
    Buf out;
    rc = run(opt, clca_shift_csv(h.p, shift_pop, opt.digits, &out.b), h, out);
  });

  auto* factors = app.add_subcommand("factors", "per-mode emission factors by life-cycle stage");
  std::string factors_mix;
  factors->add_option("--mix", factors_mix, "electricity mix code (default: dataset baseline)");
  factors->callback([&] {
    Handle h;
    if ((rc = open_project(opt, h))) return;
    Buf out;
    rc = run(opt,
             clca_factors_csv(h.p, factors_mix.empty() ? nullptr : factors_mix.c_str(),
                              opt.digits, &out.b),
             h, out);
  });

  auto* assess = app.add_subcommand("assess", "marginal impact of the disruption, kg CO2eq/yr");
  double assess_pop = 0;
  std::string format = "csv";
  assess->add_option("--population", assess_pop, "rescale to this user population");
  assess->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  assess->callback([&] {
    Handle h;
    if ((rc = open_project(opt, h))) return;
    Buf out;
    int status = format == "json" ? clca_assess_json(h.p, assess_pop, opt.digits, &out.b)
                                  : clca_assess_csv(h.p, assess_pop, opt.digits, &out.b);
    rc = run(opt, status, h, out);
  });

  auto* sweep = app.add_subcommand("sweep", "one-at-a-time sensitivity sweeps");
  sweep->require_subcommand(1);

  auto* sw_life = sweep->add_subcommand("lifetime", "scooter lifetime mileage sweep");
  std::vector<double> grid;
  std::size_t points = 0;
  sw_life->add_option("--grid", grid, "explicit mileage grid, km")->delimiter(',');
  sw_life->add_option("--points", points, "log-spaced default grid size (default 25)");
  sw_life->callback([&] {
    Handle h;
    if ((rc = open_project(opt, h))) return;
    Buf table, fit;
    int status = clca_sweep_lifetime_csv(h.p, grid.empty() ? nullptr : grid.data(),
                                         grid.empty() ? points : grid.size(), opt.digits,
                                         &table.b, &fit.b);
    if (status != CLCA_OK) {
      rc = report_error(clca_project_error(h.p), status);
      return;
    }
    rc = deliver_sweep(opt, table.str(), fit.str());
  });

  auto* sw_serv = sweep->add_subcommand("servicing", "servicing scenario comparison");
  std::vector<std::string> scenario_names;
  sw_serv->add_option("names", scenario_names,
                      "scenario names ('none' = no servicing; default: all plus none)");
  sw_serv->callback([&] {
    Handle h;
    if ((rc = open_project(opt, h))) return;
    std::vector<const char*> raw;
    raw.reserve(scenario_names.size());
    for (const std::string& s : scenario_names) raw.push_back(s.c_str());
    Buf table, fit;
    int status = clca_sweep_servicing_csv(h.p, raw.empty() ? nullptr : raw.data(), raw.size(),
                                          opt.digits, &table.b, &fit.b);
    if (status != CLCA_OK) {
      rc = report_error(clca_project_error(h.p), status);
      return;
    }
    rc = deliver_sweep(opt, table.str(), fit.str());
  });

  auto* sw_mix = sweep->add_subcommand("mix", "electricity mix sweep");
  std::vector<std::string> mix_codes;
  sw_mix->add_option("codes", mix_codes, "mix codes (default: every mix in the dataset)");
  sw_mix->callback([&] {
    Handle h;
    if ((rc = open_project(opt, h))) return;
    std::vector<const char*> raw;
    raw.reserve(mix_codes.size());
    for (const std::string& s : mix_codes) raw.push_back(s.c_str());
    Buf table, fit;
    int status = clca_sweep_mix_csv(h.p, raw.empty() ? nullptr : raw.data(), raw.size(),
                                    opt.digits, &table.b, &fit.b);
    if (status != CLCA_OK) {
      rc = report_error(clca_project_error(h.p), status);
      return;
    }
    rc = deliver_sweep(opt, table.str(), fit.str());
  });

  auto* breakeven = app.add_subcommand("breakeven", "break-even solvers");
  breakeven->require_subcommand(1);

  auto* be_mix = breakeven->add_subcommand("mix", "grid intensity where the total crosses zero");
  be_mix->callback([&] {
    Handle h;
    if ((rc = open_project(opt, h))) return;
    double intensity = 0, alpha = 0, beta = 0;
    int from_above = 0;
    int status = clca_breakeven_mix(h.p, &intensity, &alpha, &beta, &from_above);
    if (status != CLCA_OK) {
      rc = report_error(clca_project_error(h.p), status);
      return;
    }
    rc = key_value_csv(opt, {{"intensity_kg_kwh", num(intensity, opt.digits)},
                             {"alpha_kg", num(alpha, opt.digits)},
                             {"beta_kg_per_unit_intensity", num(beta, opt.digits)},
                             {"from_above", from_above ? "1" : "0"}});
  });

  auto* be_ffes = breakeven->add_subcommand(
      "ffes", "scooter emission factor at which the assessment breaks even");
  be_ffes->callback([&] {
    Handle h;
    if ((rc = open_project(opt, h))) return;
    double ef = 0;
    int status = clca_breakeven_ffes(h.p, &ef);
    if (status != CLCA_OK) {
      rc = report_error(clca_project_error(h.p), status);
      return;
    }
    rc = key_value_csv(opt, {{"ffes_breakeven_ef_kg_pkt", num(ef, opt.digits)}});
  });

  auto* infra = app.add_subcommand("infra", "infrastructure inspection");
  infra->require_subcommand(1);
  auto* flows = infra->add_subcommand("flows", "annualized construction flows of a street type");
  std::string street_id;
  flows->add_option("street", street_id, "street id from the dataset's street description")
      ->required();
  flows->callback([&] {
    Handle h;
    if ((rc = open_project(opt, h))) return;
    Buf out;
    rc = run(opt, clca_street_flows_csv(h.p, street_id.c_str(), opt.digits, &out.b), h, out);
  });

  CLI11_PARSE(app, argc, argv);
  return rc;
}
