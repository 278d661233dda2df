#include "clca/project.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "clca/csv.hpp"
#include "clca/error.hpp"

namespace clca::project {

namespace {

const std::set<std::string> kFileKeys = {"survey_records", "survey_sums", "kinematics",
                                         "mode_profiles",  "servicing",   "mixes",
                                         "assets",         "traffic",     "streets"};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string dir_of(const std::string& path) {
  std::size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
}

std::string resolve(const std::string& dir, const std::string& rel) {
  if (!rel.empty() && rel.front() == '/') return rel;
  return dir + "/" + rel;
}

[[noreturn]] void conf_fail(const std::string& path, std::size_t line, const std::string& msg) {
  fail(errc::schema, path + ":" + std::to_string(line) + ": " + msg);
}

[[noreturn]] void row_fail(const csv::Table& t, std::size_t row, const std::string& msg) {
  fail(errc::schema,
       t.source + ":" + std::to_string(t.line_numbers[row]) + ": " + msg);
}

double checked(const csv::Table& t, std::size_t row, int col, double min, bool strict_min) {
  double v = csv::to_number(t, row, col);
  bool bad = strict_min ? !(v > min) : !(v >= min);
  if (bad)
    row_fail(t, row, "column \"" + t.header[static_cast<std::size_t>(col)] + "\" must be " +
                         (strict_min ? "> " : ">= ") + csv::format_sig(min, 3));
  return v;
}

int checked_year(const csv::Table& t, std::size_t row, int col) {
  double v = csv::to_number(t, row, col);
  int year = static_cast<int>(v);
  if (static_cast<double>(year) != v || year < 1800 || year > 3000)
    row_fail(t, row, "column \"year\" is not a plausible calendar year");
  return year;
}

} // namespace

const std::string& Config::path(const std::string& key) const {
  auto it = files.find(key);
  if (it == files.end())
    fail(errc::link, "project \"" + name + "\" defines no \"" + key + "\" table");
  return it->second;
}

Config load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io, "cannot open " + path);
  Config c;
  c.dir = dir_of(path);

  std::set<std::string> seen;
  bool have_year = false, have_population = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    std::size_t eq = text.find('=');
    if (eq == std::string::npos) conf_fail(path, lineno, "expected key = value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) conf_fail(path, lineno, "empty key");
    if (value.empty()) conf_fail(path, lineno, "empty value for \"" + key + "\"");
    if (!seen.insert(key).second) conf_fail(path, lineno, "duplicate key \"" + key + "\"");

    if (key == "name") {
      c.name = value;
    } else if (key == "year") {
      double v = csv::parse_number(value, "year");
      c.year = static_cast<int>(v);
      if (static_cast<double>(c.year) != v || c.year < 1800 || c.year > 3000)
        conf_fail(path, lineno, "\"year\" is not a plausible calendar year");
      have_year = true;
    } else if (key == "population") {
      c.population = csv::parse_number(value, "population");
      if (!(c.population > 0)) conf_fail(path, lineno, "\"population\" must be > 0");
      have_population = true;
    } else if (key == "survey_sample_n") {
      double v = csv::parse_number(value, "survey_sample_n");
      if (!(v >= 1) || v != std::floor(v))
        conf_fail(path, lineno, "\"survey_sample_n\" must be a positive integer");
      c.survey_sample_n = static_cast<std::size_t>(v);
    } else if (key == "walk_speed_kmh") {
      c.walk_speed_kmh = csv::parse_number(value, "walk_speed_kmh");
      if (!(c.walk_speed_kmh > 0)) conf_fail(path, lineno, "\"walk_speed_kmh\" must be > 0");
    } else if (key == "baseline_mix") {
      c.baseline_mix = value;
    } else if (key == "ffes_mode") {
      c.ffes_mode = value;
    } else if (kFileKeys.count(key)) {
      c.files[key] = resolve(c.dir, value);
    } else {
      conf_fail(path, lineno, "unknown key \"" + key + "\"");
    }
  }

  if (!have_year) fail(errc::schema, path + ": missing \"year\"");
  if (!have_population) fail(errc::schema, path + ": missing \"population\"");
  for (const char* required : {"kinematics", "mode_profiles", "servicing", "assets", "traffic"})
    if (!c.has(required)) fail(errc::schema, path + ": missing \"" + std::string(required) + "\"");
  const bool records = c.has("survey_records"), sums = c.has("survey_sums");
  if (records == sums)
    fail(errc::schema, path + ": need exactly one of \"survey_records\" / \"survey_sums\"");
  if (sums && c.survey_sample_n == 0)
    fail(errc::schema, path + ": \"survey_sums\" requires \"survey_sample_n\"");
  return c;
}

namespace {

std::map<std::string, survey::ModeKinematics> load_kinematics(const std::string& path) {
  csv::Table t = csv::read_file(path);
  const int mode = t.require("mode"), speed = t.require("speed_kmh"),
            access = t.require("access_walk_m");
  std::map<std::string, survey::ModeKinematics> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    survey::ModeKinematics k;
    k.mode = t.cell(r, mode);
    if (k.mode.empty()) row_fail(t, r, "empty mode");
    k.speed_kmh = checked(t, r, speed, 0, true);
    k.access_walk_m = checked(t, r, access, 0, false);
    if (!out.emplace(k.mode, k).second) row_fail(t, r, "duplicate mode \"" + k.mode + "\"");
  }
  return out;
}

void load_profiles(const std::string& path, std::vector<std::string>& order,
                   std::map<std::string, factors::ModeProfile>& profiles) {
  csv::Table t = csv::read_file(path);
  const int mode = t.require("mode"), ef1 = t.require("ef_one_vehicle_kg"),
            life = t.require("lifetime_km"), occ = t.require("occupancy"),
            exhaust = t.require("exhaust_kg_pkt"), upstream = t.require("upstream_kg_pkt"),
            elec = t.require("electricity_kwh_pkt"), serv = t.require("servicing_scenario");
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    factors::ModeProfile p;
    const std::string& m = t.cell(r, mode);
    if (m.empty()) row_fail(t, r, "empty mode");
    p.vehicle = {m, checked(t, r, ef1, 0, false), checked(t, r, life, 0, true),
                 checked(t, r, occ, 0, true)};
    p.use = {m, checked(t, r, exhaust, 0, false), checked(t, r, upstream, 0, false),
             checked(t, r, elec, 0, false)};
    p.servicing = t.cell(r, serv);
    if (!profiles.emplace(m, p).second) row_fail(t, r, "duplicate mode \"" + m + "\"");
    order.push_back(m);
  }
  if (order.empty()) fail(errc::empty, path + ": no mode profiles");
}

void load_servicing(const std::string& path, std::vector<std::string>& order,
                    std::map<std::string, factors::ServicingScenario>& out) {
  csv::Table t = csv::read_file(path);
  const int name = t.require("name"), ef = t.require("service_vehicle_ef_kg_vkt"),
            km = t.require("km_per_unit_day"), mileage = t.require("unit_daily_mileage");
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    factors::ServicingScenario s;
    s.name = t.cell(r, name);
    if (s.name.empty()) row_fail(t, r, "empty scenario name");
    s.service_vehicle_ef_kg_vkt = checked(t, r, ef, 0, false);
    s.km_per_unit_day = checked(t, r, km, 0, false);
    s.unit_daily_mileage = checked(t, r, mileage, 0, true);
    if (!out.emplace(s.name, s).second) row_fail(t, r, "duplicate scenario \"" + s.name + "\"");
    order.push_back(s.name);
  }
}

std::vector<factors::ElectricityMix> load_mixes(const std::string& path) {
  csv::Table t = csv::read_file(path);
  const int code = t.require("code"), intensity = t.require("intensity_kg_kwh");
  std::vector<factors::ElectricityMix> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    factors::ElectricityMix mix;
    mix.code = t.cell(r, code);
    if (mix.code.empty()) row_fail(t, r, "empty mix code");
    for (const auto& prior : out)
      if (prior.code == mix.code) row_fail(t, r, "duplicate mix \"" + mix.code + "\"");
    mix.intensity_kg_kwh = checked(t, r, intensity, 0, false);
    out.push_back(mix);
  }
  return out;
}

std::vector<infra::InfrastructureAsset> load_assets(const std::string& path) {
  csv::Table t = csv::read_file(path);
  const int id = t.require("infra_id"), unit = t.require("unit"),
            quantity = t.require("quantity"), ef = t.require("ef_per_unit_year");
  std::vector<infra::InfrastructureAsset> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    infra::InfrastructureAsset a;
    a.infra_id = t.cell(r, id);
    if (a.infra_id.empty()) row_fail(t, r, "empty infra_id");
    for (const auto& prior : out)
      if (prior.infra_id == a.infra_id)
        row_fail(t, r, "duplicate infrastructure \"" + a.infra_id + "\"");
    a.unit = t.cell(r, unit);
    a.quantity = checked(t, r, quantity, 0, true);
    a.ef_per_unit_year = checked(t, r, ef, 0, false);
    out.push_back(a);
  }
  if (out.empty()) fail(errc::empty, path + ": no infrastructure assets");
  return out;
}

std::vector<infra::TrafficRecord> load_traffic(const std::string& path,
                                               const std::vector<infra::InfrastructureAsset>& assets,
                                               int analysis_year) {
  csv::Table t = csv::read_file(path);
  const int mode = t.require("mode"), infra_col = t.require("infra"), pkt = t.require("pkt"),
            vkt = t.require("vkt"), weight = t.require("weight"), year = t.require("year");
  std::vector<infra::TrafficRecord> out;
  std::set<std::string> keys;
  bool year_seen = false;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    infra::TrafficRecord rec;
    rec.mode = t.cell(r, mode);
    rec.infra = t.cell(r, infra_col);
    if (rec.mode.empty() || rec.infra.empty()) row_fail(t, r, "empty mode or infra");
    rec.pkt = checked(t, r, pkt, 0, false);
    rec.vkt = checked(t, r, vkt, 0, false);
    rec.weight = checked(t, r, weight, 0, false);
    rec.year = checked_year(t, r, year);
    if (std::none_of(assets.begin(), assets.end(), [&](const infra::InfrastructureAsset& a) {
          return a.infra_id == rec.infra;
        }))
      fail(errc::link, t.source + ":" + std::to_string(t.line_numbers[r]) +
                           ": unknown infrastructure \"" + rec.infra + "\"");
    if (!keys.insert(rec.mode + "\x1f" + rec.infra + "\x1f" + std::to_string(rec.year)).second)
      row_fail(t, r, "duplicate (mode, infra, year) row");
    year_seen = year_seen || rec.year == analysis_year;
    out.push_back(rec);
  }
  if (!year_seen)
    fail(errc::link, path + ": analysis year " + std::to_string(analysis_year) +
                         " absent from the traffic table");
  return out;
}

std::vector<survey::SurveyRecord> load_records(const std::string& path) {
  csv::Table t = csv::read_file(path);
  const int id = t.require("id"), freq = t.require("frequency"),
            mode = t.require("original_mode"), dur = t.require("original_duration_min"),
            walk = t.require("ffes_access_walk_min"), dist = t.require("ffes_distance_km"),
            ffes_dur = t.require("ffes_duration_min"), induced = t.require("induced"),
            intermodal = t.require("intermodal");
  std::vector<survey::SurveyRecord> out;
  std::set<std::string> ids;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    survey::SurveyRecord rec;
    rec.id = t.cell(r, id);
    if (rec.id.empty()) row_fail(t, r, "empty id");
    if (!ids.insert(rec.id).second) row_fail(t, r, "duplicate id \"" + rec.id + "\"");
    try {
      rec.frequency = survey::parse_frequency(t.cell(r, freq));
    } catch (const Error& e) {
      row_fail(t, r, e.what());
    }
    rec.original_mode = t.cell(r, mode);
    rec.original_duration_min = checked(t, r, dur, 0, false);
    rec.ffes_access_walk_min = checked(t, r, walk, 0, false);
    rec.ffes_trip_distance_km = checked(t, r, dist, 0, true);
    rec.ffes_trip_duration_min = checked(t, r, ffes_dur, 0, false);
    rec.induced = csv::to_flag(t, r, induced);
    rec.intermodal = csv::to_flag(t, r, intermodal);
    if (rec.induced && !rec.original_mode.empty())
      row_fail(t, r, "induced trip with an original mode");
    if (!rec.induced && rec.original_mode.empty())
      row_fail(t, r, "substitution trip without an original mode");
    out.push_back(rec);
  }
  return out;
}

std::vector<std::pair<std::string, double>> load_sums(const std::string& path) {
  csv::Table t = csv::read_file(path);
  const int mode = t.require("mode"), sum = t.require("survey_sum_km");
  std::vector<std::pair<std::string, double>> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const std::string& m = t.cell(r, mode);
    if (m.empty()) row_fail(t, r, "empty mode");
    for (const auto& prior : out)
      if (prior.first == m) row_fail(t, r, "duplicate mode \"" + m + "\"");
    out.emplace_back(m, csv::to_number(t, r, sum));
  }
  return out;
}

} // namespace

Project load(const std::string& config_path) {
  Project p;
  p.config = load_config(config_path);
  const Config& c = p.config;

  p.kinematics = load_kinematics(c.path("kinematics"));
  lab::Baseline& base = p.baseline;
  load_profiles(c.path("mode_profiles"), base.mode_order, base.profiles);
  load_servicing(c.path("servicing"), base.servicing_order, base.servicing);
  if (c.has("mixes")) base.mixes = load_mixes(c.path("mixes"));
  p.assets = load_assets(c.path("assets"));
  p.traffic = load_traffic(c.path("traffic"), p.assets, c.year);

  // Dangling references are configuration errors, caught before any math.
  for (const std::string& mode : base.mode_order) {
    const std::string& scenario = base.profiles.at(mode).servicing;
    if (!scenario.empty() && !base.servicing.count(scenario))
      fail(errc::link, "mode \"" + mode + "\" references unknown servicing scenario \"" +
                           scenario + "\"");
  }
  if (!base.profiles.count(c.ffes_mode))
    fail(errc::link, "scooter mode \"" + c.ffes_mode + "\" has no mode profile");

  if (c.has("survey_records")) {
    p.has_records = true;
    std::vector<survey::SurveyRecord> raw = load_records(c.path("survey_records"));
    for (const survey::SurveyRecord& r : raw)
      if (!r.induced && !p.kinematics.count(r.original_mode))
        fail(errc::link, "survey record \"" + r.id + "\": no kinematics for mode \"" +
                             r.original_mode + "\"");
    p.records = survey::clean(std::move(raw), c.walk_speed_kmh, &p.cleaning);
    const std::size_t n = c.survey_sample_n ? c.survey_sample_n : p.cleaning.kept;
    base.delta = survey::aggregate(p.records, n, c.population, c.walk_speed_kmh, p.kinematics,
                                   c.ffes_mode);
  } else {
    auto sums = load_sums(c.path("survey_sums"));
    for (const auto& [mode, km] : sums)
      if (!p.kinematics.count(mode))
        fail(errc::link, "survey sums: no kinematics for mode \"" + mode + "\"");
    base.delta = survey::scale_sums(sums, c.survey_sample_n, c.population, c.ffes_mode);
  }

  for (const std::string& mode : base.delta.modes)
    if (!base.profiles.count(mode))
      fail(errc::link, "shifted mode \"" + mode + "\" has no mode profile");

  std::vector<infra::TrafficRecord> this_year;
  for (const infra::TrafficRecord& rec : p.traffic)
    if (rec.year == c.year) this_year.push_back(rec);
  for (const std::string& mode : base.mode_order)
    base.infra_ef[mode] = infra::infra_ef_per_pkt(mode, p.assets, this_year);

  base.baseline_mix_code = c.baseline_mix;
  base.ffes_mode = c.ffes_mode;
  base.year = c.year;
  return p;
}

std::vector<streets::StreetSpec> Project::streets() const {
  return streets::load_specs(config.path("streets"));
}

} // namespace clca::project
