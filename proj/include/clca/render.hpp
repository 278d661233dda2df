#pragma once
// Deterministic CSV/JSON serialization of every result type. `digits` <= 0
// means full precision (outputs re-parse bit for bit); 3 matches the rounding
// of published reference tables for diffing.

#include <map>
#include <string>
#include <vector>

#include "clca/engine.hpp"
#include "clca/factors.hpp"
#include "clca/lab.hpp"
#include "clca/project.hpp"
#include "clca/streets.hpp"

namespace clca::render {

// mode,survey_sum_km,delta_pkt plus cleaning/scaling audit comments.
std::string shift_csv(const project::Project& p, const survey::DeltaPkt& delta, int digits);

// mode,vehicle_kg_pkt,use_kg_pkt,servicing_kg_pkt,infrastructure_kg_pkt,total_kg_pkt.
std::string factors_csv(const std::vector<std::string>& mode_order,
                        const std::map<std::string, factors::EmissionFactor>& efs, int digits);

// Mode x stage matrix with a closing total row.
std::string report_csv(const engine::MarginalReport& report, int digits);
std::string report_json(const engine::MarginalReport& report, int digits);

// parameter,total_kg.
std::string sweep_csv(const lab::SweepResult& result, int digits);
// Single-line JSON: {"a":...,"b":...,"model":...}.
std::string fit_json(const lab::FitDescriptor& fit, int digits);

// flow,amount_per_fu_year.
std::string flows_csv(const streets::FlowVector& flows, int digits);

} // namespace clca::render
