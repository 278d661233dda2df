#pragma once
// Survey pipeline: turn last-trip declarations into a population-scaled,
// kilometer-based modal-shift vector.
//
// Distances are km, speeds km/h, durations minutes at the API boundary
// (converted to hours internally). The shift vector is signed: kilometers
// gained by the scooter service are positive, kilometers withdrawn from a
// substituted mode are negative.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clca::survey {

// Declared usage frequency. Exactly six classes; the last one groups the two
// declarations ("only used once" / "stopped using") that carry no annual
// weight and exclude the record from aggregation.
enum class FrequencyClass {
  more_than_5_per_week,
  four_to_5_per_week,
  two_to_3_per_week,
  once_per_week,
  less_than_once_per_week,
  not_considered,
};

// Annual number of rides for a class; nullopt for the excluded class.
std::optional<double> weight_of(FrequencyClass f) noexcept;

// Accepts both the long declaration strings and compact aliases
// (">5/week", "4-5/week", "2-3/week", "1/week", "<1/week", "once", "stopped").
FrequencyClass parse_frequency(const std::string& label);
const char* frequency_label(FrequencyClass f) noexcept;

struct ModeKinematics {
  std::string mode;
  double speed_kmh = 0;      // > 0
  double access_walk_m = 0;  // >= 0; nonzero only for shared/transit modes
};

struct SurveyRecord {
  std::string id;
  FrequencyClass frequency = FrequencyClass::not_considered;
  std::string original_mode;  // empty iff induced
  double original_duration_min = 0;
  double ffes_access_walk_min = 0;
  double ffes_trip_distance_km = 0;
  double ffes_trip_duration_min = 0;
  bool induced = false;
  bool intermodal = false;
};

// Scooter-trip distance net of the declared access walk:
// declared length minus walking speed x access time.
// Throws a domain error when the declaration is inconsistent (<= 0 result).
double ffes_distance(const SurveyRecord& r, double v_walk_kmh);

struct OriginalDistance {
  double km = 0;
  bool fallback = false;  // negative residual time: scooter length used instead
};

// Length of the trip previously made with the original mode: mode speed x
// (declared duration minus the mode's access walk at walking speed). A
// negative residual falls back to the scooter trip length, flagged for audit.
OriginalDistance original_distance(const SurveyRecord& r, const ModeKinematics& kin,
                                   double v_walk_kmh);

struct CleaningStats {
  std::size_t input = 0;
  std::size_t kept = 0;
  std::size_t removed_speed = 0;              // scooter trip over the speed cap
  std::size_t removed_undefined_speed = 0;    // zero scooter duration
  std::size_t removed_frequency = 0;          // excluded frequency class
  std::size_t removed_intermodal = 0;         // combined with other modes
  std::size_t removed_negative_distance = 0;  // access walk longer than trip
};

// Plausibility cap on the average scooter trip speed.
inline constexpr double kSpeedCapKmh = 30.0;

// Drop records that cannot be aggregated; reasons are counted in `stats`.
// Idempotent: cleaning an already-clean set changes nothing.
std::vector<SurveyRecord> clean(std::vector<SurveyRecord> records, double v_walk_kmh,
                                CleaningStats* stats = nullptr);

struct DeltaPkt {
  std::vector<std::string> modes;               // output order
  std::map<std::string, double> pkt;            // signed passenger-km per period
  std::map<std::string, double> survey_sum_km;  // weighted survey sums (same sign)
  double population = 0;
  std::size_t sample_n = 0;

  double get(const std::string& mode) const;  // 0 when absent
};

// Weighted aggregation and population scaling:
//   shift_j = (population / n) * sum_i (+/-) d_ij * weight_i
// with + for the scooter mode and - for substituted modes. Induced trips only
// contribute to the scooter mode. Records must be cleaned first.
DeltaPkt aggregate(const std::vector<SurveyRecord>& records, std::size_t n, double population,
                   double v_walk_kmh, const std::map<std::string, ModeKinematics>& kinematics,
                   const std::string& ffes_mode = "ffes");

// Same scaling applied to precomputed per-mode survey sums (signed), for
// datasets that ship aggregates instead of microdata.
DeltaPkt scale_sums(const std::vector<std::pair<std::string, double>>& sums, std::size_t n,
                    double population, const std::string& ffes_mode = "ffes");

} // namespace clca::survey
