#include "clca/survey.hpp"

#include <algorithm>
#include <cmath>

#include "clca/error.hpp"

namespace clca::survey {

std::optional<double> weight_of(FrequencyClass f) noexcept {
  switch (f) {
    case FrequencyClass::more_than_5_per_week: return 312.0;   // 6 rides x 52 weeks
    case FrequencyClass::four_to_5_per_week: return 234.0;     // 4.5 x 52
    case FrequencyClass::two_to_3_per_week: return 130.0;      // 2.5 x 52
    case FrequencyClass::once_per_week: return 52.0;
    case FrequencyClass::less_than_once_per_week: return 15.0;
    case FrequencyClass::not_considered: return std::nullopt;
  }
  return std::nullopt;
}

FrequencyClass parse_frequency(const std::string& label) {
  if (label == ">5/week" || label == "more than 5 times a week")
    return FrequencyClass::more_than_5_per_week;
  if (label == "4-5/week" || label == "4 to 5 times a week")
    return FrequencyClass::four_to_5_per_week;
  if (label == "2-3/week" || label == "2 to 3 times a week")
    return FrequencyClass::two_to_3_per_week;
  if (label == "1/week" || label == "once a week")
    return FrequencyClass::once_per_week;
  if (label == "<1/week" || label == "less than once a week")
    return FrequencyClass::less_than_once_per_week;
  if (label == "once" || label == "stopped" || label == "I only used ES once" ||
      label == "I stopped using the ES")
    return FrequencyClass::not_considered;
  fail(errc::parse, "unknown frequency class \"" + label + "\"");
}

const char* frequency_label(FrequencyClass f) noexcept {
  switch (f) {
    case FrequencyClass::more_than_5_per_week: return ">5/week";
    case FrequencyClass::four_to_5_per_week: return "4-5/week";
    case FrequencyClass::two_to_3_per_week: return "2-3/week";
    case FrequencyClass::once_per_week: return "1/week";
    case FrequencyClass::less_than_once_per_week: return "<1/week";
    case FrequencyClass::not_considered: return "not-considered";
  }
  return "?";
}

double ffes_distance(const SurveyRecord& r, double v_walk_kmh) {
  if (v_walk_kmh <= 0)
    fail(errc::domain, "walking speed must be positive");
  double d = r.ffes_trip_distance_km - v_walk_kmh * (r.ffes_access_walk_min / 60.0);
  if (d <= 0)
    fail(errc::domain, "record " + r.id +
                           ": access walk longer than the declared trip (net distance " +
                           std::to_string(d) + " km)");
  return d;
}

OriginalDistance original_distance(const SurveyRecord& r, const ModeKinematics& kin,
                                   double v_walk_kmh) {
  if (r.induced)
    fail(errc::domain, "record " + r.id + ": induced trip has no original mode");
  if (v_walk_kmh <= 0)
    fail(errc::domain, "walking speed must be positive");
  if (kin.speed_kmh <= 0)
    fail(errc::link, "kinematics for mode \"" + kin.mode + "\" has non-positive speed");
  double residual_h = r.original_duration_min / 60.0 - (kin.access_walk_m / 1000.0) / v_walk_kmh;
  if (residual_h <= 0) {
    // Declared duration does not even cover the access walk; keep the trip
    // length actually ridden on the scooter instead.
    return {ffes_distance(r, v_walk_kmh), true};
  }
  return {kin.speed_kmh * residual_h, false};
}

std::vector<SurveyRecord> clean(std::vector<SurveyRecord> records, double v_walk_kmh,
                                CleaningStats* stats) {
  CleaningStats local;
  local.input = records.size();
  std::vector<SurveyRecord> kept;
  kept.reserve(records.size());
  for (auto& r : records) {
    if (!weight_of(r.frequency)) {
      ++local.removed_frequency;
      continue;
    }
    if (r.intermodal) {
      ++local.removed_intermodal;
      continue;
    }
    if (r.ffes_trip_duration_min <= 0) {
      ++local.removed_undefined_speed;
      continue;
    }
    double speed = r.ffes_trip_distance_km / (r.ffes_trip_duration_min / 60.0);
    if (speed > kSpeedCapKmh) {
      ++local.removed_speed;
      continue;
    }
    double net = r.ffes_trip_distance_km - v_walk_kmh * (r.ffes_access_walk_min / 60.0);
    if (net <= 0) {
      ++local.removed_negative_distance;
      continue;
    }
    kept.push_back(std::move(r));
  }
  local.kept = kept.size();
  if (stats) *stats = local;
  return kept;
}

double DeltaPkt::get(const std::string& mode) const {
  auto it = pkt.find(mode);
  return it == pkt.end() ? 0.0 : it->second;
}

namespace {

void push_mode(std::vector<std::string>& order, std::map<std::string, double>& sums,
               const std::string& mode) {
  if (sums.emplace(mode, 0.0).second) order.push_back(mode);
}

DeltaPkt scale(std::vector<std::string> order, std::map<std::string, double> sums, std::size_t n,
               double population) {
  DeltaPkt d;
  d.modes = std::move(order);
  d.survey_sum_km = std::move(sums);
  d.population = population;
  d.sample_n = n;
  double factor = population / static_cast<double>(n);
  for (const auto& [mode, s] : d.survey_sum_km) d.pkt[mode] = s * factor;
  return d;
}

} // namespace

DeltaPkt aggregate(const std::vector<SurveyRecord>& records, std::size_t n, double population,
                   double v_walk_kmh, const std::map<std::string, ModeKinematics>& kinematics,
                   const std::string& ffes_mode) {
  if (n == 0 || records.empty())
    fail(errc::empty, "no survey records to aggregate");
  if (population <= 0)
    fail(errc::domain, "population must be positive");
  std::vector<std::string> order;
  std::map<std::string, double> sums;
  push_mode(order, sums, ffes_mode);
  for (const auto& r : records) {
    auto wf = weight_of(r.frequency);
    if (!wf)
      fail(errc::domain, "record " + r.id + ": excluded frequency class; run clean() first");
    sums[ffes_mode] += ffes_distance(r, v_walk_kmh) * *wf;
    if (r.induced) continue;  // new mobility: nothing substituted
    auto kin = kinematics.find(r.original_mode);
    if (kin == kinematics.end())
      fail(errc::link, "record " + r.id + ": no kinematics for mode \"" + r.original_mode + "\"");
    push_mode(order, sums, r.original_mode);
    sums[r.original_mode] -= original_distance(r, kin->second, v_walk_kmh).km * *wf;
  }
  return scale(std::move(order), std::move(sums), n, population);
}

DeltaPkt scale_sums(const std::vector<std::pair<std::string, double>>& sums, std::size_t n,
                    double population, const std::string& ffes_mode) {
  if (n == 0 || sums.empty())
    fail(errc::empty, "no survey sums to scale");
  if (population <= 0)
    fail(errc::domain, "population must be positive");
  std::vector<std::string> order;
  std::map<std::string, double> acc;
  for (const auto& [mode, s] : sums) {
    if (!std::isfinite(s))
      fail(errc::domain, "survey sum for \"" + mode + "\" is not finite");
    if (mode == ffes_mode && s < 0)
      fail(errc::domain, "survey sum for the scooter mode must be non-negative");
    if (mode != ffes_mode && s > 0)
      fail(errc::domain, "survey sum for substituted mode \"" + mode + "\" must be non-positive");
    push_mode(order, acc, mode);
    acc[mode] += s;
  }
  return scale(std::move(order), std::move(acc), n, population);
}

} // namespace clca::survey
