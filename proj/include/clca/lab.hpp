#pragma once
// One-at-a-time sensitivity sweeps and break-even solvers over a loaded
// baseline: scooter lifetime mileage, scooter servicing scenario, electricity
// mix, population. Every sweep point is a full re-composition and
// re-assessment, so the identity override reproduces the baseline total
// bit-for-bit.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clca/engine.hpp"
#include "clca/factors.hpp"
#include "clca/survey.hpp"

namespace clca::lab {

// Everything needed to (re)compose emission factors and assess. Built once by
// the project loader; the mix is resolved lazily so datasets without a mix
// table still support every non-mix command.
struct Baseline {
  survey::DeltaPkt delta;
  std::vector<std::string> mode_order;  // profile-table order, scooter mode first
  std::map<std::string, factors::ModeProfile> profiles;
  std::map<std::string, factors::ServicingScenario> servicing;
  std::vector<std::string> servicing_order;
  std::vector<factors::ElectricityMix> mixes;  // dataset order; may be empty
  std::map<std::string, double> infra_ef;      // per mode, kg/pkt
  std::string baseline_mix_code;
  std::string ffes_mode = "ffes";
  int year = 0;
};

// Mix by code; unknown or absent table is a configuration error.
const factors::ElectricityMix& resolve_mix(const Baseline& base, const std::string& code);

// Compose the per-mode factors with optional scooter-only overrides:
//  - ffes_lifetime replaces the scooter vehicle lifetime mileage;
//  - ffes_servicing: nullopt keeps the profile's scenario, "" disables
//    servicing, any other value names a scenario to swap in.
// Other modes always keep their own profile servicing.
std::map<std::string, factors::EmissionFactor> compose_all(
    const Baseline& base, const factors::ElectricityMix& mix,
    std::optional<double> ffes_lifetime = std::nullopt,
    const std::optional<std::string>& ffes_servicing = std::nullopt);

engine::MarginalReport assess_baseline(const Baseline& base);

// The shift vector linearly rescaled to another population.
survey::DeltaPkt with_population(const survey::DeltaPkt& delta, double population);

struct Scenario {
  std::string name;
  std::optional<double> lifetime_km;
  std::optional<std::string> servicing;  // "" = none
  std::optional<std::string> mix;
  std::optional<double> population;
};

// Total marginal impact under a scenario; at least one override is required.
double scenario_total(const Baseline& base, const Scenario& s);

struct FitDescriptor {
  std::string model;  // "reciprocal" (a + b/x), "affine" (a + b*x), "categorical"
  double a = 0;
  double b = 0;
};

struct SweepResult {
  std::vector<std::string> labels;  // parameter column values
  std::vector<double> values;       // numeric axis (mileage, or mix intensity);
                                    // empty for the servicing sweep
  std::vector<double> totals;       // kg/yr, same length as labels
  bool numeric = false;             // parameter column prints a number, not a name
  FitDescriptor fit;
};

// Totals over a grid of scooter lifetime mileages (strictly decreasing and
// convex in the mileage). The fit is the analytically exact a + b/L form.
SweepResult sweep_lifetime(const Baseline& base, const std::vector<double>& grid_km);

// Totals per servicing scenario name; "none" (or "") disables servicing.
SweepResult sweep_servicing(const Baseline& base, const std::vector<std::string>& names);

// Totals per electricity-mix code; exactly affine in the mix intensity.
SweepResult sweep_mix(const Baseline& base, const std::vector<std::string>& codes);

// Log-spaced mileage grid over [300, 15000] km with exact endpoints.
std::vector<double> default_lifetime_grid(std::size_t n = 25);

struct MixBreakEven {
  double alpha = 0;      // total at zero-carbon electricity
  double beta = 0;       // d(total)/d(intensity)
  double intensity = 0;  // -alpha/beta, kg/kWh
  bool from_above = false;  // true when totals fall as the mix gets dirtier
};

// Grid intensity at which the total crosses zero. Errors when the total does
// not depend on the mix at all.
MixBreakEven break_even_mix(const Baseline& base);

// Scooter total emission factor (kg/pkt) at which the assessment breaks even;
// plugged back in, the total vanishes.
double break_even_ffes_ef(const Baseline& base);

} // namespace clca::lab
