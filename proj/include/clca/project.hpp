#pragma once
// Dataset loading: a key=value project config naming the input tables, loaded
// and cross-referenced into an immutable baseline ready for assessment.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "clca/factors.hpp"
#include "clca/infra.hpp"
#include "clca/lab.hpp"
#include "clca/streets.hpp"
#include "clca/survey.hpp"

namespace clca::project {

struct Config {
  std::string name;
  int year = 0;
  double population = 0;
  std::size_t survey_sample_n = 0;  // 0 = use the cleaned record count
  double walk_speed_kmh = 4.7;
  std::string baseline_mix;  // may stay empty; resolved when a command needs it
  std::string ffes_mode = "ffes";
  std::string dir;  // directory holding the config file
  std::map<std::string, std::string> files;  // table key -> resolved path

  bool has(const std::string& key) const { return files.count(key) != 0; }
  // Resolved path for a table key; configuration error when absent.
  const std::string& path(const std::string& key) const;
};

Config load_config(const std::string& path);

struct Project {
  Config config;
  std::map<std::string, survey::ModeKinematics> kinematics;
  std::vector<infra::InfrastructureAsset> assets;
  std::vector<infra::TrafficRecord> traffic;   // every year in the table
  bool has_records = false;                    // raw survey microdata vs sums
  std::vector<survey::SurveyRecord> records;   // cleaned microdata (if any)
  survey::CleaningStats cleaning;
  lab::Baseline baseline;  // delta, profiles, servicing, mixes, infra factors

  // Street construction specs; loaded on demand so datasets without one still
  // support every other command.
  std::vector<streets::StreetSpec> streets() const;
};

// Parse everything, validate row-level invariants (errors name file, row and
// column), cross-reference modes/scenarios/infrastructures, run the survey
// pipeline and precompute per-mode infrastructure factors for the analysis
// year.
Project load(const std::string& config_path);

} // namespace clca::project
