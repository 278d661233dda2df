#include "clca/factors.hpp"

#include <cmath>

#include "clca/error.hpp"

namespace clca::factors {

double vehicle_ef_per_pkt(const VehicleProfile& p) {
  if (p.lifetime_km <= 0)
    fail(errc::domain, "mode \"" + p.mode + "\": lifetime mileage must be positive");
  if (p.occupancy <= 0)
    fail(errc::domain, "mode \"" + p.mode + "\": occupancy must be positive");
  if (p.ef_one_vehicle_kg < 0)
    fail(errc::domain, "mode \"" + p.mode + "\": vehicle impact must be non-negative");
  return p.ef_one_vehicle_kg / (p.lifetime_km * p.occupancy);
}

double use_ef_per_pkt(const UseProfile& p, const ElectricityMix& mix) {
  return p.exhaust_kg_pkt + p.upstream_kg_pkt + p.electricity_kwh_pkt * mix.intensity_kg_kwh;
}

double servicing_ef_per_pkt(const ServicingScenario& s) {
  if (s.unit_daily_mileage <= 0)
    fail(errc::domain, "servicing \"" + s.name + "\": unit daily mileage must be positive");
  if (s.service_vehicle_ef_kg_vkt < 0 || s.km_per_unit_day < 0)
    fail(errc::domain, "servicing \"" + s.name + "\": parameters must be non-negative");
  return s.service_vehicle_ef_kg_vkt * s.km_per_unit_day / s.unit_daily_mileage;
}

EmissionFactor compose(const std::string& mode, double vehicle, double use, double servicing,
                       double infrastructure) {
  for (double c : {vehicle, use, servicing, infrastructure})
    if (c < 0 || !std::isfinite(c))
      fail(errc::domain, "mode \"" + mode + "\": factor components must be finite and >= 0");
  EmissionFactor ef;
  ef.mode = mode;
  ef.vehicle = vehicle;
  ef.use = use;
  ef.servicing = servicing;
  ef.infrastructure = infrastructure;
  return ef;
}

} // namespace clca::factors
