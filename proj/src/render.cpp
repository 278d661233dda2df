#include "clca/render.hpp"

#include <json.hpp>

#include "clca/csv.hpp"
#include "clca/error.hpp"

namespace clca::render {

namespace {

using nlohmann::json;

double rounded(double v, int digits) { return csv::round_sig(v, digits); }

} // namespace

std::string shift_csv(const project::Project& p, const survey::DeltaPkt& delta, int digits) {
  std::vector<std::string> comments;
  if (p.has_records) {
    const survey::CleaningStats& s = p.cleaning;
    comments.push_back("survey: " + std::to_string(s.input) + " records read, " +
                       std::to_string(s.kept) + " kept");
    comments.push_back("removed: frequency=" + std::to_string(s.removed_frequency) +
                       " intermodal=" + std::to_string(s.removed_intermodal) +
                       " undefined-speed=" + std::to_string(s.removed_undefined_speed) +
                       " over-speed-cap=" + std::to_string(s.removed_speed) +
                       " negative-distance=" + std::to_string(s.removed_negative_distance));
  } else {
    comments.push_back("survey: precomputed sums");
  }
  comments.push_back("scaling: population " + csv::format(delta.population, digits) + " / sample " +
                     std::to_string(delta.sample_n));

  std::vector<std::vector<std::string>> rows;
  for (const std::string& mode : delta.modes) {
    auto sum = delta.survey_sum_km.find(mode);
    rows.push_back({mode,
                    csv::format(sum == delta.survey_sum_km.end() ? 0.0 : sum->second, digits),
                    csv::format(delta.get(mode), digits)});
  }
  return csv::write({"mode", "survey_sum_km", "delta_pkt"}, rows, comments);
}

std::string factors_csv(const std::vector<std::string>& mode_order,
                        const std::map<std::string, factors::EmissionFactor>& efs, int digits) {
  std::vector<std::vector<std::string>> rows;
  for (const std::string& mode : mode_order) {
    auto it = efs.find(mode);
    if (it == efs.end()) fail(errc::link, "no emission factor for mode \"" + mode + "\"");
    const factors::EmissionFactor& ef = it->second;
    rows.push_back({mode, csv::format(ef.vehicle, digits), csv::format(ef.use, digits),
                    csv::format(ef.servicing, digits), csv::format(ef.infrastructure, digits),
                    csv::format(ef.total(), digits)});
  }
  return csv::write({"mode", "vehicle_kg_pkt", "use_kg_pkt", "servicing_kg_pkt",
                     "infrastructure_kg_pkt", "total_kg_pkt"},
                    rows);
}

std::string report_csv(const engine::MarginalReport& report, int digits) {
  std::vector<std::string> comments = {"scenario: " + report.scenario,
                                       "population: " + csv::format(report.population, digits)};
  std::vector<std::vector<std::string>> rows;
  std::array<double, 4> column_sum{};
  for (const std::string& mode : report.modes) {
    const std::array<double, 4>& stages = report.per_stage.at(mode);
    std::vector<std::string> row = {mode};
    for (std::size_t s = 0; s < stages.size(); ++s) {
      row.push_back(csv::format(stages[s], digits));
      column_sum[s] += stages[s];
    }
    row.push_back(csv::format(report.per_mode.at(mode), digits));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> total_row = {"total"};
  for (double s : column_sum) total_row.push_back(csv::format(s, digits));
  total_row.push_back(csv::format(report.total, digits));
  rows.push_back(std::move(total_row));
  return csv::write({"mode", "vehicle_kg", "use_kg", "servicing_kg", "infrastructure_kg",
                     "total_kg"},
                    rows, comments);
}

std::string report_json(const engine::MarginalReport& report, int digits) {
  json j;
  j["scenario"] = report.scenario;
  j["population"] = rounded(report.population, digits);
  if (report.year != 0) j["year"] = report.year;
  j["total_kg"] = rounded(report.total, digits);
  json modes = json::object();
  for (const std::string& mode : report.modes) {
    const std::array<double, 4>& stages = report.per_stage.at(mode);
    json entry;
    for (std::size_t s = 0; s < stages.size(); ++s)
      entry[std::string(engine::kStageNames[s]) + "_kg"] = rounded(stages[s], digits);
    entry["total_kg"] = rounded(report.per_mode.at(mode), digits);
    modes[mode] = std::move(entry);
  }
  j["modes"] = std::move(modes);
  double abs_sum = 0;
  for (double v : report.stage_abs) abs_sum += v;
  if (abs_sum > 0) {
    const std::array<double, 4> shares = report.stage_shares();
    json share_obj;
    for (std::size_t s = 0; s < shares.size(); ++s)
      share_obj[engine::kStageNames[s]] = rounded(shares[s], digits);
    j["stage_shares"] = std::move(share_obj);
  }
  return j.dump(2) + "\n";
}

std::string sweep_csv(const lab::SweepResult& result, int digits) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < result.labels.size(); ++i) {
    std::string parameter =
        result.numeric ? csv::format(result.values[i], digits) : result.labels[i];
    rows.push_back({std::move(parameter), csv::format(result.totals[i], digits)});
  }
  return csv::write({"parameter", "total_kg"}, rows);
}

std::string fit_json(const lab::FitDescriptor& fit, int digits) {
  json j;
  j["model"] = fit.model;
  if (fit.model != "categorical") {
    j["a"] = rounded(fit.a, digits);
    j["b"] = rounded(fit.b, digits);
  }
  // Compact single line: embeddable as a trailing CSV comment and still a
  // valid standalone .json document.
  return j.dump() + "\n";
}

std::string flows_csv(const streets::FlowVector& flows, int digits) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& [flow, amount] : flows.flows)
    rows.push_back({flow, csv::format(amount, digits)});
  return csv::write({"flow", "amount_per_fu_year"}, rows);
}

} // namespace clca::render
