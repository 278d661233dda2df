#pragma once
// Per-mode, per-passenger-kilometer emission factors, composed from four
// stages: vehicle (manufacture/maintenance/EoL amortized over the lifetime
// mileage), use (exhaust + fuel supply chain + electricity x grid intensity),
// servicing (shared-fleet logistics), and allocated infrastructure.

#include <string>

namespace clca::factors {

struct VehicleProfile {
  std::string mode;
  double ef_one_vehicle_kg = 0;  // whole-vehicle life cycle excluding use, >= 0
  double lifetime_km = 0;        // > 0
  double occupancy = 0;          // passengers per vehicle, > 0
};

struct UseProfile {
  std::string mode;
  double exhaust_kg_pkt = 0;      // tail-pipe CO2
  double upstream_kg_pkt = 0;     // fuel/energy supply chain
  double electricity_kwh_pkt = 0; // grid electricity demand
};

struct ServicingScenario {
  std::string name;
  double service_vehicle_ef_kg_vkt = 0;  // impact per servicing-vehicle km
  double km_per_unit_day = 0;            // servicing km attributed to one shared vehicle per day
  double unit_daily_mileage = 11.0;      // km ridden per shared vehicle per day, > 0
};

struct ElectricityMix {
  std::string code;
  double intensity_kg_kwh = 0;  // >= 0
};

struct EmissionFactor {
  std::string mode;
  double vehicle = 0;
  double use = 0;
  double servicing = 0;
  double infrastructure = 0;
  // Always the exact component sum, in this fixed order.
  double total() const noexcept { return vehicle + use + servicing + infrastructure; }
};

// ef_one_vehicle / (lifetime x occupancy). Throws on non-positive lifetime or
// occupancy.
double vehicle_ef_per_pkt(const VehicleProfile& p);

// exhaust + upstream + electricity x mix intensity. Affine in the intensity.
double use_ef_per_pkt(const UseProfile& p, const ElectricityMix& mix);

// service_vehicle_ef x km_per_unit_day / unit_daily_mileage.
double servicing_ef_per_pkt(const ServicingScenario& s);

// Bundle the four stages; all components must be non-negative and finite.
EmissionFactor compose(const std::string& mode, double vehicle, double use, double servicing,
                       double infrastructure);

// One mode's full profile as loaded from the dataset.
struct ModeProfile {
  VehicleProfile vehicle;
  UseProfile use;
  std::string servicing;  // scenario name; empty = no servicing
};

} // namespace clca::factors
