#include "clca/infra.hpp"

#include <cmath>

#include "clca/error.hpp"

namespace clca::infra {

double network_annual_impact(const InfrastructureAsset& a) {
  if (a.quantity <= 0)
    fail(errc::domain, "infrastructure \"" + a.infra_id + "\": quantity must be positive");
  if (a.ef_per_unit_year < 0)
    fail(errc::domain, "infrastructure \"" + a.infra_id + "\": per-unit factor must be >= 0");
  return a.quantity * a.ef_per_unit_year;
}

std::map<std::string, double> allocation_share(const std::vector<TrafficRecord>& on_infra) {
  if (on_infra.empty())
    fail(errc::empty, "no traffic records for this infrastructure");
  const std::string& infra = on_infra.front().infra;
  double denom = 0;
  for (const auto& r : on_infra) {
    if (r.infra != infra)
      fail(errc::argument, "allocation_share: mixed infrastructures (" + infra + " vs " + r.infra + ")");
    if (r.weight < 0 || r.vkt < 0)
      fail(errc::domain, "traffic " + r.mode + "/" + r.infra + ": negative weight or vkt");
    denom += r.weight * r.vkt;
  }
  if (denom <= 0)
    fail(errc::domain, "infrastructure \"" + infra + "\": all allocation weights are zero (degenerate)");
  std::map<std::string, double> shares;
  for (const auto& r : on_infra) shares[r.mode] += r.weight * r.vkt / denom;
  return shares;
}

double infra_ef_per_pkt(const std::string& mode, const std::vector<InfrastructureAsset>& assets,
                        const std::vector<TrafficRecord>& traffic) {
  double total = 0;
  for (const auto& rec : traffic) {
    if (rec.mode != mode) continue;
    // Gather everybody on the same infrastructure for the share denominator.
    std::vector<TrafficRecord> group;
    for (const auto& r : traffic)
      if (r.infra == rec.infra) group.push_back(r);
    auto shares = allocation_share(group);
    double share = shares[mode];
    if (share == 0) continue;  // exempt from this network
    const InfrastructureAsset* asset = nullptr;
    for (const auto& a : assets)
      if (a.infra_id == rec.infra) {
        asset = &a;
        break;
      }
    if (!asset)
      fail(errc::link, "traffic references unknown infrastructure \"" + rec.infra + "\"");
    if (rec.pkt <= 0)
      fail(errc::domain, "mode \"" + mode + "\" uses \"" + rec.infra + "\" with zero pkt");
    total += share * network_annual_impact(*asset) / rec.pkt;
  }
  return total;
}

} // namespace clca::infra
