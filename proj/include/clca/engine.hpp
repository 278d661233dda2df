#pragma once
// Marginal territorial impact: combine a modal-shift vector with per-mode
// emission factors into signed per-mode contributions, a grand total, and a
// life-cycle stage breakdown.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "clca/factors.hpp"
#include "clca/survey.hpp"

namespace clca::engine {

// Fixed stage order used everywhere a per-stage array appears.
inline constexpr std::array<const char*, 4> kStageNames = {"vehicle", "use", "servicing",
                                                           "infrastructure"};

struct MarginalReport {
  std::vector<std::string> modes;                          // reporting order
  std::map<std::string, double> per_mode;                  // ei_i, kg/yr, signed
  std::map<std::string, std::array<double, 4>> per_stage;  // ei_i split by stage
  double total = 0;  // Σ ei_i, accumulated in sorted-mode order
  std::array<double, 4> stage_abs{};  // Σ_i |stage contribution|, kg/yr
  double population = 0;
  int year = 0;
  std::string scenario;

  // Fractions of absolute marginal emissions by stage; errors when every
  // stage contribution is zero.
  std::array<double, 4> stage_shares() const;
};

// ei_i = EF_i.total × ΔPKT_i for every shifted mode; a mode without a factor
// is a configuration error.
MarginalReport assess(const survey::DeltaPkt& delta,
                      const std::map<std::string, factors::EmissionFactor>& efs,
                      const std::string& scenario_name);

// General before/after form: ei_i = EF'_i × PKT'_i − EF_i × PKT_i. The
// constant-factor assessment above is the special case PKT' − PKT = ΔPKT with
// EF' = EF.
struct ModeChange {
  double pkt_before = 0;
  double pkt_after = 0;
  factors::EmissionFactor before;
  factors::EmissionFactor after;
};

MarginalReport assess_change(const std::map<std::string, ModeChange>& changes,
                             const std::string& scenario_name);

} // namespace clca::engine
