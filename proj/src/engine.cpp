#include "clca/engine.hpp"

#include <cmath>

#include "clca/error.hpp"

namespace clca::engine {

namespace {

std::array<double, 4> stage_values(const factors::EmissionFactor& ef) {
  return {ef.vehicle, ef.use, ef.servicing, ef.infrastructure};
}

} // namespace

std::array<double, 4> MarginalReport::stage_shares() const {
  double denom = 0;
  for (double v : stage_abs) denom += v;
  if (denom <= 0) fail(errc::domain, "stage shares undefined: no nonzero contributions");
  std::array<double, 4> shares{};
  for (std::size_t s = 0; s < shares.size(); ++s) shares[s] = stage_abs[s] / denom;
  return shares;
}

MarginalReport assess(const survey::DeltaPkt& delta,
                      const std::map<std::string, factors::EmissionFactor>& efs,
                      const std::string& scenario_name) {
  MarginalReport report;
  report.modes = delta.modes;
  report.population = delta.population;
  report.scenario = scenario_name;
  for (const std::string& mode : delta.modes) {
    auto it = efs.find(mode);
    if (it == efs.end()) fail(errc::link, "no emission factor for shifted mode \"" + mode + "\"");
    const double pkt = delta.get(mode);
    const std::array<double, 4> stages = stage_values(it->second);
    std::array<double, 4> contrib{};
    double ei = 0;
    for (std::size_t s = 0; s < stages.size(); ++s) {
      contrib[s] = stages[s] * pkt;
      ei += contrib[s];
    }
    report.per_mode[mode] = ei;
    report.per_stage[mode] = contrib;
  }
  // Accumulate totals over the sorted maps, not the caller's mode order, so a
  // permuted input produces bit-identical sums.
  for (const auto& [mode, ei] : report.per_mode) report.total += ei;
  for (const auto& [mode, contrib] : report.per_stage)
    for (std::size_t s = 0; s < contrib.size(); ++s)
      report.stage_abs[s] += std::fabs(contrib[s]);
  return report;
}

MarginalReport assess_change(const std::map<std::string, ModeChange>& changes,
                             const std::string& scenario_name) {
  MarginalReport report;
  report.scenario = scenario_name;
  for (const auto& [mode, change] : changes) {
    report.modes.push_back(mode);
    const std::array<double, 4> pre = stage_values(change.before);
    const std::array<double, 4> post = stage_values(change.after);
    std::array<double, 4> contrib{};
    double ei = 0;
    for (std::size_t s = 0; s < contrib.size(); ++s) {
      contrib[s] = post[s] * change.pkt_after - pre[s] * change.pkt_before;
      report.stage_abs[s] += std::fabs(contrib[s]);
      ei += contrib[s];
    }
    report.per_mode[mode] = ei;
    report.per_stage[mode] = contrib;
    report.total += ei;
  }
  return report;
}

} // namespace clca::engine
