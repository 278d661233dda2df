#include <doctest.h>

#include <map>
#include <string>

#include "clca/csv.hpp"
#include "clca/project.hpp"
#include "clca/render.hpp"
#include "helpers.hpp"

using namespace clca;

namespace {

// A minimal three-mode dataset, written into a TempDir and perturbed one
// piece at a time by the error-path subcases.
struct MiniFiles {
  std::map<std::string, std::string> files{
      {"kin.csv", "mode,speed_kmh,access_walk_m\nwalk,4.7,0\ncar,15,0\nffes,17,0\n"},
      {"prof.csv",
       "mode,ef_one_vehicle_kg,lifetime_km,occupancy,exhaust_kg_pkt,upstream_kg_pkt,"
       "electricity_kwh_pkt,servicing_scenario\n"
       "ffes,208.5,3750,1.0,0,0,0.019,svc\n"
       "walk,0,15000,1.0,0,0,0,\n"
       "car,5674.5,150000,1.3,0.13,0.043,0,\n"},
      {"svc.csv", "name,service_vehicle_ef_kg_vkt,km_per_unit_day,unit_daily_mileage\n"
                  "svc,0.63,0.9,11\n"},
      {"assets.csv", "infra_id,unit,quantity,ef_per_unit_year\n"
                     "road,square-meter,1000,2.0\n"
                     "lane,linear-meter,100,1.0\n"
                     "side,square-meter,500,0.5\n"},
      {"traffic.csv", "mode,infra,pkt,vkt,weight,year\n"
                      "walk,side,1e6,1e6,1,2024\n"
                      "ffes,lane,2e5,2e5,1,2024\n"
                      "car,road,5e5,5e5,1,2024\n"},
      {"sums.csv", "mode,survey_sum_km\nffes,100\ncar,-50\nwalk,-20\n"},
      {"mixes.csv", "code,intensity_kg_kwh\nFR,0.0636\n"},
  };
  std::string conf = "name = tiny\nyear = 2024\npopulation = 1000\nsurvey_sample_n = 10\n"
                     "baseline_mix = FR\n"
                     "survey_sums = sums.csv\nkinematics = kin.csv\nmode_profiles = prof.csv\n"
                     "servicing = svc.csv\nmixes = mixes.csv\nassets = assets.csv\n"
                     "traffic = traffic.csv\n";

  std::string materialize(const TempDir& dir) const {
    for (const auto& [name, content] : files) dir.write(name, content);
    return dir.write("project.conf", conf);
  }
};

} // namespace

TEST_SUITE("io") {

TEST_CASE("loading the city dataset end to end") {
  project::Project p = project::load(paris_dir() + "/project.conf");

  CHECK(p.config.name == "paris-2019");
  CHECK(p.config.year == 2018);
  CHECK(p.config.population == 1e6);
  CHECK(p.config.survey_sample_n == 411);
  CHECK(p.config.walk_speed_kmh == 4.7);
  CHECK(p.config.baseline_mix == "FR");
  CHECK(p.config.ffes_mode == "ffes");
  CHECK_FALSE(p.has_records);
  CHECK(p.cleaning.input == 0);  // nothing to clean: precomputed sums

  CHECK(p.assets.size() == 7);
  CHECK(p.traffic.size() == 36);  // both survey years stay loaded

  const lab::Baseline& base = p.baseline;
  REQUIRE(base.mode_order.size() == 13);
  CHECK(base.mode_order.front() == "ffes");
  CHECK(base.year == 2018);
  CHECK(base.baseline_mix_code == "FR");
  CHECK(base.servicing_order.size() == 8);
  CHECK(base.mixes.size() == 12);

  // population-scaled shift vector (population / n x weighted sums)
  CHECK(base.delta.sample_n == 411);
  CHECK(base.delta.get("ffes") == 2.3673965936739659e8);
  CHECK(base.delta.get("metro") == -1.9172749391727492e8);
  CHECK(base.delta.get("streetcar") == doctest::Approx(-9.82968369829683681e5).epsilon(1e-12));

  // per-mode infrastructure factors for the analysis year
  CHECK(base.infra_ef.at("ffes") == doctest::Approx(1.13e-3).epsilon(1e-12));
  CHECK(base.infra_ef.at("walk") == doctest::Approx(2.23e-3).epsilon(1e-12));
  CHECK(base.infra_ef.at("bus") == doctest::Approx(7.08e-3).epsilon(1e-12));
  CHECK(base.infra_ef.at("car") == doctest::Approx(6.03e-3).epsilon(1e-12));

  // street specs load on demand
  CHECK(p.streets().size() == 3);
}

TEST_CASE("loading a raw-records dataset runs the survey pipeline") {
  project::Project p = project::load(minicity_dir() + "/project.conf");

  CHECK(p.has_records);
  CHECK(p.cleaning.input == 11);
  CHECK(p.cleaning.kept == 5);
  CHECK(p.cleaning.removed_frequency == 2);         // "once" and "stopped"
  CHECK(p.cleaning.removed_intermodal == 1);
  CHECK(p.cleaning.removed_undefined_speed == 1);   // zero scooter duration
  CHECK(p.cleaning.removed_speed == 1);             // 33 km/h trip
  CHECK(p.cleaning.removed_negative_distance == 1); // access walk > trip
  CHECK(p.records.size() == 5);

  // without survey_sample_n, scaling divides by the cleaned record count
  const survey::DeltaPkt& d = p.baseline.delta;
  CHECK(d.sample_n == 5);
  CHECK(d.modes == std::vector<std::string>{"ffes", "car", "walk", "bus"});
  CHECK(d.get("ffes") == 365104.0);
  CHECK(d.get("car") == -312000.0);
  CHECK(d.get("walk") == -73320.0);
  CHECK(d.get("bus") == -46800.0);
  CHECK(d.survey_sum_km.at("ffes") == doctest::Approx(1825.52).epsilon(1e-12));

  // no streets table in this dataset
  CHECK(error_kind([&] { p.streets(); }) == errc::link);
}

TEST_CASE("config parsing rejects malformed projects") {
  MiniFiles mini;

  SUBCASE("the unperturbed miniature dataset loads") {
    TempDir tmp;
    project::Project p = project::load(mini.materialize(tmp));
    CHECK(p.baseline.delta.get("ffes") == 10000.0);  // 1000/10 x 100 km
    CHECK(p.baseline.delta.get("car") == -5000.0);
    CHECK(lab::assess_baseline(p.baseline).total != 0.0);
  }
  SUBCASE("unknown key") {
    TempDir tmp;
    mini.conf += "turbo = on\n";
    auto msg = error_text([&] { project::load(mini.materialize(tmp)); });
    CHECK(error_kind([&] { project::load(mini.materialize(tmp)); }) == errc::schema);
    CHECK(msg.find("turbo") != std::string::npos);
  }
  SUBCASE("duplicate key") {
    TempDir tmp;
    mini.conf += "year = 2025\n";
    CHECK(error_kind([&] { project::load(mini.materialize(tmp)); }) == errc::schema);
  }
  SUBCASE("missing year") {
    TempDir tmp;
    mini.conf = "name = t\npopulation = 1000\nsurvey_sample_n = 10\n"
                "survey_sums = sums.csv\nkinematics = kin.csv\nmode_profiles = prof.csv\n"
                "servicing = svc.csv\nassets = assets.csv\ntraffic = traffic.csv\n";
    CHECK(error_kind([&] { project::load(mini.materialize(tmp)); }) == errc::schema);
  }
  SUBCASE("implausible year") {
    TempDir tmp;
    mini.conf.replace(mini.conf.find("2024"), 4, "0099");
    CHECK(error_kind([&] { project::load(mini.materialize(tmp)); }) == errc::schema);
  }
  SUBCASE("both survey flavors at once") {
    TempDir tmp;
    mini.conf += "survey_records = sums.csv\n";
    CHECK(error_kind([&] { project::load(mini.materialize(tmp)); }) == errc::schema);
  }
  SUBCASE("precomputed sums without a sample size") {
    TempDir tmp;
    mini.conf.erase(mini.conf.find("survey_sample_n = 10\n"), 21);
    CHECK(error_kind([&] { project::load(mini.materialize(tmp)); }) == errc::schema);
  }
  SUBCASE("referenced table file does not exist") {
    TempDir tmp;
    mini.files.erase("kin.csv");
    CHECK(error_kind([&] { project::load(mini.materialize(tmp)); }) == errc::io);
  }
}

TEST_CASE("cross-reference validation between tables") {
  MiniFiles mini;

  SUBCASE("traffic row names an unknown infrastructure") {
    TempDir tmp;
    mini.files["traffic.csv"] += "car,bridge,1e5,1e5,1,2024\n";
    auto msg = error_text([&] { project::load(mini.materialize(tmp)); });
    CHECK(error_kind([&] { project::load(mini.materialize(tmp)); }) == errc::link);
    CHECK(msg.find("bridge") != std::string::npos);
    CHECK(msg.find("traffic.csv:5") != std::string::npos);
  }
  SUBCASE("duplicate traffic row for one mode, infrastructure and year") {
    TempDir tmp;
    mini.files["traffic.csv"] += "car,road,5e5,5e5,1,2024\n";
    CHECK(error_kind([&] { project::load(mini.materialize(tmp)); }) == errc::schema);
  }
  SUBCASE("analysis year absent from the traffic table") {
    TempDir tmp;
    mini.conf.replace(mini.conf.find("2024"), 4, "2025");
    CHECK(error_kind([&] { project::load(mini.materialize(tmp)); }) == errc::link);
  }
  SUBCASE("survey sums for a mode without kinematics") {
    TempDir tmp;
    mini.files["sums.csv"] += "bus,-10\n";
    auto msg = error_text([&] { project::load(mini.materialize(tmp)); });
    CHECK(error_kind([&] { project::load(mini.materialize(tmp)); }) == errc::link);
    CHECK(msg.find("bus") != std::string::npos);
  }
  SUBCASE("shifted mode without a life-cycle profile") {
    TempDir tmp;
    mini.files["kin.csv"] += "bus,12.5,0\n";
    mini.files["sums.csv"] += "bus,-10\n";
    auto msg = error_text([&] { project::load(mini.materialize(tmp)); });
    CHECK(error_kind([&] { project::load(mini.materialize(tmp)); }) == errc::link);
    CHECK(msg.find("bus") != std::string::npos);
  }
  SUBCASE("scooter mode itself needs a profile") {
    TempDir tmp;
    mini.conf += "ffes_mode = scoot\n";
    CHECK(error_kind([&] { project::load(mini.materialize(tmp)); }) == errc::link);
  }
  SUBCASE("profile referencing an undefined servicing scenario") {
    TempDir tmp;
    auto& prof = mini.files["prof.csv"];
    prof.replace(prof.find(",svc\n"), 5, ",ghost\n");
    auto msg = error_text([&] { project::load(mini.materialize(tmp)); });
    CHECK(error_kind([&] { project::load(mini.materialize(tmp)); }) == errc::link);
    CHECK(msg.find("ghost") != std::string::npos);
  }
  SUBCASE("survey record whose original mode has no kinematics") {
    TempDir tmp;
    mini.conf.erase(mini.conf.find("survey_sample_n = 10\n"), 21);
    mini.conf.replace(mini.conf.find("survey_sums = sums.csv"), 22,
                      "survey_records = rec.csv");
    mini.files["rec.csv"] =
        "id,frequency,original_mode,original_duration_min,ffes_access_walk_min,"
        "ffes_distance_km,ffes_duration_min,induced,intermodal\n"
        "x1,>5/week,pogo,10,0,2.0,8,0,0\n";
    auto msg = error_text([&] { project::load(mini.materialize(tmp)); });
    CHECK(error_kind([&] { project::load(mini.materialize(tmp)); }) == errc::link);
    CHECK(msg.find("pogo") != std::string::npos);
    CHECK(msg.find("x1") != std::string::npos);
  }
  SUBCASE("row-level range violations name file, line and column") {
    TempDir tmp;
    auto& prof = mini.files["prof.csv"];
    prof.replace(prof.find("150000"), 6, "0");  // car lifetime
    auto msg = error_text([&] { project::load(mini.materialize(tmp)); });
    CHECK(error_kind([&] { project::load(mini.materialize(tmp)); }) == errc::schema);
    CHECK(msg.find("prof.csv:4") != std::string::npos);
    CHECK(msg.find("lifetime_km") != std::string::npos);
  }
}

TEST_CASE("rendered tables round-trip through the CSV reader") {
  project::Project p = project::load(minicity_dir() + "/project.conf");

  SUBCASE("shift table") {
    std::string text = render::shift_csv(p, p.baseline.delta, 0);
    csv::Table t = csv::read_string(text, "shift");
    REQUIRE(t.rows.size() == 4);
    int mode = t.require("mode"), pkt = t.require("delta_pkt");
    CHECK(t.cell(0, mode) == "ffes");
    CHECK(csv::to_number(t, 0, pkt) == 365104.0);  // full precision: exact round-trip
    CHECK(csv::to_number(t, 1, pkt) == -312000.0);
    // audit comments carry the cleaning tallies
    CHECK(text.find("11 records read, 5 kept") != std::string::npos);
  }
  SUBCASE("assessment report") {
    auto report = lab::assess_baseline(p.baseline);
    std::string text = render::report_csv(report, 0);
    csv::Table t = csv::read_string(text, "report");
    REQUIRE(t.rows.size() == 5);  // 4 modes + closing total row
    int mode = t.require("mode"), total = t.require("total_kg");
    CHECK(t.cell(4, mode) == "total");
    CHECK(csv::to_number(t, 4, total) == report.total);
    double sum = 0;
    for (std::size_t r = 0; r < 4; ++r) sum += csv::to_number(t, r, total);
    CHECK(sum == doctest::Approx(report.total).epsilon(1e-12));
  }
  SUBCASE("sweep table and fit sidecar") {
    auto sweep = lab::sweep_lifetime(p.baseline, {300.0, 3750.0});
    std::string text = render::sweep_csv(sweep, 0);
    csv::Table t = csv::read_string(text, "sweep");
    REQUIRE(t.rows.size() == 2);
    CHECK(csv::to_number(t, 0, t.require("parameter")) == 300.0);
    CHECK(csv::to_number(t, 1, t.require("total_kg")) == sweep.totals[1]);

    std::string fit = render::fit_json(sweep.fit, 0);
    CHECK(fit.find("\"model\":\"reciprocal\"") != std::string::npos);
    CHECK(fit.back() == '\n');
  }
}

} // TEST_SUITE("io")
