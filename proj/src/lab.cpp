#include "clca/lab.hpp"

#include <cmath>

#include "clca/csv.hpp"
#include "clca/error.hpp"

namespace clca::lab {

namespace {

const factors::ModeProfile& profile_of(const Baseline& base, const std::string& mode) {
  auto it = base.profiles.find(mode);
  if (it == base.profiles.end()) fail(errc::link, "no mode profile for \"" + mode + "\"");
  return it->second;
}

double servicing_component(const Baseline& base, const std::string& scenario_name) {
  if (scenario_name.empty()) return 0.0;
  auto it = base.servicing.find(scenario_name);
  if (it == base.servicing.end())
    fail(errc::link, "unknown servicing scenario \"" + scenario_name + "\"");
  return factors::servicing_ef_per_pkt(it->second);
}

double total_with(const Baseline& base, const factors::ElectricityMix& mix,
                  std::optional<double> lifetime, const std::optional<std::string>& servicing,
                  const std::string& label) {
  return engine::assess(base.delta, compose_all(base, mix, lifetime, servicing), label).total;
}

} // namespace

const factors::ElectricityMix& resolve_mix(const Baseline& base, const std::string& code) {
  if (base.mixes.empty()) fail(errc::link, "dataset has no electricity-mix table");
  for (const factors::ElectricityMix& mix : base.mixes)
    if (mix.code == code) return mix;
  fail(errc::link, "unknown electricity mix \"" + code + "\"");
}

std::map<std::string, factors::EmissionFactor> compose_all(
    const Baseline& base, const factors::ElectricityMix& mix, std::optional<double> ffes_lifetime,
    const std::optional<std::string>& ffes_servicing) {
  std::map<std::string, factors::EmissionFactor> out;
  for (const std::string& mode : base.mode_order) {
    const factors::ModeProfile& profile = profile_of(base, mode);
    const bool is_ffes = mode == base.ffes_mode;

    factors::VehicleProfile vp = profile.vehicle;
    if (is_ffes && ffes_lifetime) vp.lifetime_km = *ffes_lifetime;

    std::string scenario = profile.servicing;
    if (is_ffes && ffes_servicing) scenario = *ffes_servicing;

    auto infra = base.infra_ef.find(mode);
    out.emplace(mode, factors::compose(mode, factors::vehicle_ef_per_pkt(vp),
                                       factors::use_ef_per_pkt(profile.use, mix),
                                       servicing_component(base, scenario),
                                       infra == base.infra_ef.end() ? 0.0 : infra->second));
  }
  return out;
}

survey::DeltaPkt with_population(const survey::DeltaPkt& delta, double population) {
  if (population <= 0) fail(errc::domain, "population must be positive");
  survey::DeltaPkt out = delta;
  const double ratio = population / delta.population;
  for (auto& [mode, pkt] : out.pkt) pkt *= ratio;
  out.population = population;
  return out;
}

engine::MarginalReport assess_baseline(const Baseline& base) {
  engine::MarginalReport report =
      engine::assess(base.delta, compose_all(base, resolve_mix(base, base.baseline_mix_code)),
                     "baseline");
  report.year = base.year;
  return report;
}

double scenario_total(const Baseline& base, const Scenario& s) {
  if (!s.lifetime_km && !s.servicing && !s.mix && !s.population)
    fail(errc::argument, "scenario \"" + s.name + "\" overrides nothing");
  if (s.lifetime_km && *s.lifetime_km <= 0)
    fail(errc::domain, "scenario \"" + s.name + "\": lifetime mileage must be positive");
  const factors::ElectricityMix& mix =
      resolve_mix(base, s.mix ? *s.mix : base.baseline_mix_code);
  auto efs = compose_all(base, mix, s.lifetime_km, s.servicing);
  const survey::DeltaPkt delta =
      s.population ? with_population(base.delta, *s.population) : base.delta;
  return engine::assess(delta, efs, s.name).total;
}

SweepResult sweep_lifetime(const Baseline& base, const std::vector<double>& grid_km) {
  if (grid_km.empty()) fail(errc::empty, "empty lifetime grid");
  const factors::ElectricityMix& mix = resolve_mix(base, base.baseline_mix_code);
  SweepResult result;
  result.numeric = true;
  for (double km : grid_km) {
    if (!(km > 0)) fail(errc::domain, "lifetime mileage must be positive");
    result.labels.push_back(csv::format_full(km));
    result.values.push_back(km);
    result.totals.push_back(total_with(base, mix, km, std::nullopt, "lifetime"));
  }
  // total(L) = a + b/L exactly: only the scooter vehicle term depends on L.
  const factors::ModeProfile& ffes = profile_of(base, base.ffes_mode);
  result.fit.model = "reciprocal";
  result.fit.b = ffes.vehicle.ef_one_vehicle_kg * base.delta.get(base.ffes_mode) /
                 ffes.vehicle.occupancy;
  result.fit.a = total_with(base, mix, std::nullopt, std::nullopt, "lifetime") -
                 result.fit.b / ffes.vehicle.lifetime_km;
  return result;
}

SweepResult sweep_servicing(const Baseline& base, const std::vector<std::string>& names) {
  if (names.empty()) fail(errc::empty, "no servicing scenarios to sweep");
  const factors::ElectricityMix& mix = resolve_mix(base, base.baseline_mix_code);
  SweepResult result;
  result.fit.model = "categorical";
  for (const std::string& name : names) {
    const bool none = name.empty() || name == "none";
    if (!none && !base.servicing.count(name))
      fail(errc::link, "unknown servicing scenario \"" + name + "\"");
    result.labels.push_back(none ? "none" : name);
    result.totals.push_back(
        total_with(base, mix, std::nullopt, none ? std::string() : name, "servicing"));
  }
  return result;
}

SweepResult sweep_mix(const Baseline& base, const std::vector<std::string>& codes) {
  if (codes.empty()) fail(errc::empty, "no mix codes to sweep");
  SweepResult result;
  for (const std::string& code : codes) {
    const factors::ElectricityMix& mix = resolve_mix(base, code);
    result.labels.push_back(code);
    result.values.push_back(mix.intensity_kg_kwh);
    result.totals.push_back(total_with(base, mix, std::nullopt, std::nullopt, "mix"));
  }
  // The total is affine in the intensity; two synthetic evaluations pin the
  // coefficients without regression noise.
  const double at0 = total_with(base, {"synthetic", 0.0}, std::nullopt, std::nullopt, "mix");
  const double at1 = total_with(base, {"synthetic", 1.0}, std::nullopt, std::nullopt, "mix");
  result.fit.model = "affine";
  result.fit.a = at0;
  result.fit.b = at1 - at0;
  return result;
}

std::vector<double> default_lifetime_grid(std::size_t n) {
  if (n < 2) fail(errc::argument, "lifetime grid needs at least two points");
  constexpr double lo = 300.0, hi = 15000.0;
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i)
    grid[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

MixBreakEven break_even_mix(const Baseline& base) {
  MixBreakEven be;
  be.alpha = total_with(base, {"synthetic", 0.0}, std::nullopt, std::nullopt, "break-even");
  const double at1 =
      total_with(base, {"synthetic", 1.0}, std::nullopt, std::nullopt, "break-even");
  be.beta = at1 - be.alpha;
  if (be.beta == 0.0)
    fail(errc::domain, "no break-even: the total does not depend on the mix intensity");
  be.intensity = -be.alpha / be.beta;
  be.from_above = be.beta < 0.0;
  return be;
}

double break_even_ffes_ef(const Baseline& base) {
  const double d_ffes = base.delta.get(base.ffes_mode);
  if (d_ffes == 0.0)
    fail(errc::domain, "break-even factor undefined: no scooter kilometers shifted");
  auto efs = compose_all(base, resolve_mix(base, base.baseline_mix_code));
  double others = 0;
  for (const std::string& mode : base.delta.modes) {
    if (mode == base.ffes_mode) continue;
    auto it = efs.find(mode);
    if (it == efs.end()) fail(errc::link, "no emission factor for shifted mode \"" + mode + "\"");
    others += it->second.total() * base.delta.get(mode);
  }
  return -others / d_ffes;
}

} // namespace clca::lab
