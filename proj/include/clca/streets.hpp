#pragma once
// Layered street construction -> annualized material and transport flows per
// functional unit (one linear meter-year or one square meter-year), plus a
// generic flows x factors characterization product.

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clca::streets {

struct Layer {
  std::string name;
  double thickness_m = 0;     // > 0
  double density_t_m3 = 0;    // > 0
  double binder_fraction = 0; // [0, 1]; > 0 marks a bound (asphalt) layer
  bool hot_mixed = false;
  double lifespan_yr = 0;     // > 0
};

enum class FunctionalUnit { linear_meter, square_meter };

struct Curb {
  double mass_kg_per_m = 0;
  int count = 0;
  double lifespan_yr = 1;
};

struct StreetSpec {
  std::string id;
  FunctionalUnit functional_unit = FunctionalUnit::square_meter;
  double width_m = 0;  // required (> 0) for the linear functional unit
  std::vector<Layer> layers;
  std::optional<Curb> curb;  // only meaningful on linear specs
  double transport_distance_km = 0;
};

// Named flow amounts per functional unit per year. Amounts may be negative in
// generic inventories (avoided-burden credits); the street flows produced by
// annualized_flows are always non-negative.
struct FlowVector {
  std::vector<std::pair<std::string, double>> flows;  // ordered, unique names

  double get(const std::string& name) const;  // 0 when absent
  void add(const std::string& name, double amount);
};

// Canonical flow names, matching the published inventory tables verbatim.
inline constexpr const char* kBinderFlow = "Binder (kg)";
inline constexpr const char* kGravelFlow = "Gravel (kg)";
inline constexpr const char* kConcreteFlow = "Concrete block (kg)";
inline constexpr const char* kTransportFlow = "Truck transportation (tkm)";
inline constexpr const char* kHmaFlow = "HMA manufacturing (kg)";

// Annualize a street spec:
//  - each layer contributes width(linear only) x thickness x density x 1000 /
//    lifespan kg/yr, split into binder and gravel for bound layers;
//  - hot-mixed layer masses also count as HMA manufacturing throughput;
//  - curbs contribute count x mass / lifespan as concrete;
//  - transport = total transported tonnage x distance.
FlowVector annualized_flows(const StreetSpec& spec);

struct ImpactResult {
  double impact = 0;
  std::vector<std::string> missing;  // nonzero flows without a factor
};

// Dot product of flows with per-flow characterization factors. In strict mode
// a nonzero flow without a factor is an error listing the offenders; in audit
// mode they are skipped and reported in `missing`.
ImpactResult inventory_impact(const FlowVector& flows,
                              const std::map<std::string, double>& factors, bool strict);

// Street specs from the dataset's JSON description.
std::vector<StreetSpec> load_specs(const std::string& json_path);

// Generic inventory fixture: CSV with columns flow,unit,amount.
FlowVector load_flows(const std::string& csv_path);

} // namespace clca::streets
