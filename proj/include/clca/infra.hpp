#pragma once
// Infrastructure burden allocation: the annual impact of maintaining a whole
// network (quantity x per-unit-year factor) is split across the modes using
// it in proportion to weight x vehicle-km, then divided by each mode's
// passenger-km to give a per-pkt factor.

#include <map>
#include <string>
#include <vector>

namespace clca::infra {

struct InfrastructureAsset {
  std::string infra_id;
  std::string unit;  // "linear-meter" or "square-meter" (informative)
  double quantity = 0;          // > 0
  double ef_per_unit_year = 0;  // >= 0
};

struct TrafficRecord {
  std::string mode;
  std::string infra;
  double pkt = 0;     // passenger-km/yr of this mode on this infrastructure
  double vkt = 0;     // vehicle-km/yr
  double weight = 0;  // allocation weight, >= 0 (0 = exempt from this network)
  int year = 0;
};

// quantity x ef_per_unit_year.
double network_annual_impact(const InfrastructureAsset& a);

// Shares of one infrastructure's burden across the records using it
// (all records must refer to the same infrastructure):
//   share_i = weight_i x vkt_i / sum(weight x vkt).
// Shares sum to 1; throws when every weight x vkt is zero.
std::map<std::string, double> allocation_share(const std::vector<TrafficRecord>& on_infra);

// Per-pkt infrastructure factor of `mode`: sum over the infrastructures the
// mode appears on of share x network annual impact / pkt. `traffic` must
// already be filtered to a single analysis year.
double infra_ef_per_pkt(const std::string& mode, const std::vector<InfrastructureAsset>& assets,
                        const std::vector<TrafficRecord>& traffic);

} // namespace clca::infra
