#include "clca/streets.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "clca/csv.hpp"
#include "clca/error.hpp"

namespace clca::streets {

double FlowVector::get(const std::string& name) const {
  for (const auto& [flow, amount] : flows)
    if (flow == name) return amount;
  return 0.0;
}

void FlowVector::add(const std::string& name, double amount) {
  if (!std::isfinite(amount)) fail(errc::domain, "non-finite amount for flow \"" + name + "\"");
  for (auto& [flow, existing] : flows) {
    if (flow == name) {
      existing += amount;
      return;
    }
  }
  flows.emplace_back(name, amount);
}

FlowVector annualized_flows(const StreetSpec& spec) {
  const bool linear = spec.functional_unit == FunctionalUnit::linear_meter;
  if (linear && spec.width_m <= 0)
    fail(errc::domain, "street \"" + spec.id + "\": linear-meter unit needs a positive width");
  if (spec.layers.empty()) fail(errc::domain, "street \"" + spec.id + "\" has no layers");

  FlowVector out;
  out.add(kBinderFlow, 0.0);
  out.add(kGravelFlow, 0.0);
  out.add(kConcreteFlow, 0.0);
  out.add(kTransportFlow, 0.0);
  out.add(kHmaFlow, 0.0);

  for (const Layer& layer : spec.layers) {
    if (layer.thickness_m <= 0 || layer.density_t_m3 <= 0 || layer.lifespan_yr <= 0)
      fail(errc::domain, "street \"" + spec.id + "\", layer \"" + layer.name +
                             "\": thickness, density and lifespan must be positive");
    if (layer.binder_fraction < 0 || layer.binder_fraction > 1)
      fail(errc::domain, "street \"" + spec.id + "\", layer \"" + layer.name +
                             "\": binder fraction outside [0, 1]");
    // kg of material renewed per functional unit per year.
    double mass = layer.thickness_m * layer.density_t_m3 * 1000.0 / layer.lifespan_yr;
    if (linear) mass *= spec.width_m;
    if (layer.binder_fraction > 0) {
      out.add(kBinderFlow, mass * layer.binder_fraction);
      out.add(kGravelFlow, mass * (1.0 - layer.binder_fraction));
    } else {
      out.add(kGravelFlow, mass);
    }
    if (layer.hot_mixed) out.add(kHmaFlow, mass);
  }

  if (spec.curb) {
    if (!linear) fail(errc::domain, "street \"" + spec.id + "\": curbs need a linear-meter unit");
    if (spec.curb->lifespan_yr <= 0 || spec.curb->mass_kg_per_m <= 0 || spec.curb->count <= 0)
      fail(errc::domain, "street \"" + spec.id + "\": curb mass, count and lifespan must be positive");
    out.add(kConcreteFlow, spec.curb->count * spec.curb->mass_kg_per_m / spec.curb->lifespan_yr);
  }

  if (spec.transport_distance_km < 0)
    fail(errc::domain, "street \"" + spec.id + "\": negative transport distance");
  double tonnes = (out.get(kBinderFlow) + out.get(kGravelFlow) + out.get(kConcreteFlow)) / 1000.0;
  out.add(kTransportFlow, tonnes * spec.transport_distance_km);
  return out;
}

ImpactResult inventory_impact(const FlowVector& flows, const std::map<std::string, double>& factors,
                              bool strict) {
  ImpactResult result;
  for (const auto& [flow, amount] : flows.flows) {
    auto it = factors.find(flow);
    if (it == factors.end()) {
      if (amount != 0.0) result.missing.push_back(flow);
      continue;
    }
    result.impact += amount * it->second;
  }
  if (strict && !result.missing.empty()) {
    std::string joined;
    for (const std::string& name : result.missing) {
      if (!joined.empty()) joined += ", ";
      joined += '"' + name + '"';
    }
    fail(errc::link, "no characterization factor for: " + joined);
  }
  return result;
}

namespace {

using nlohmann::json;

double require_number(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) fail(errc::schema, where + ": missing \"" + key + "\"");
  const json& v = obj.at(key);
  if (!v.is_number()) fail(errc::schema, where + ": \"" + key + "\" is not a number");
  return v.get<double>();
}

Layer parse_layer(const json& obj, const std::string& where) {
  if (!obj.is_object()) fail(errc::schema, where + ": layer is not an object");
  Layer layer;
  if (!obj.contains("name") || !obj.at("name").is_string())
    fail(errc::schema, where + ": layer needs a string \"name\"");
  layer.name = obj.at("name").get<std::string>();
  const std::string at = where + ", layer \"" + layer.name + "\"";
  layer.thickness_m = require_number(obj, "thickness_m", at);
  layer.density_t_m3 = require_number(obj, "density_t_m3", at);
  layer.binder_fraction = require_number(obj, "binder_fraction", at);
  if (!obj.contains("hot_mixed") || !obj.at("hot_mixed").is_boolean())
    fail(errc::schema, at + ": needs a boolean \"hot_mixed\"");
  layer.hot_mixed = obj.at("hot_mixed").get<bool>();
  layer.lifespan_yr = require_number(obj, "lifespan_yr", at);
  if (layer.thickness_m <= 0 || layer.density_t_m3 <= 0 || layer.lifespan_yr <= 0)
    fail(errc::schema, at + ": thickness, density and lifespan must be positive");
  if (layer.binder_fraction < 0 || layer.binder_fraction > 1)
    fail(errc::schema, at + ": binder fraction outside [0, 1]");
  return layer;
}

} // namespace

std::vector<StreetSpec> load_specs(const std::string& json_path) {
  std::ifstream in(json_path, std::ios::binary);
  if (!in) fail(errc::io, "cannot open " + json_path);
  json doc;
  try {
    doc = json::parse(in, nullptr, /*allow_exceptions=*/true, /*ignore_comments=*/false);
  } catch (const json::parse_error& e) {
    fail(errc::parse, json_path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("streets") || !doc.at("streets").is_array())
    fail(errc::schema, json_path + ": expected an object with a \"streets\" array");

  std::vector<StreetSpec> specs;
  for (const json& entry : doc.at("streets")) {
    if (!entry.is_object()) fail(errc::schema, json_path + ": street entry is not an object");
    StreetSpec spec;
    if (!entry.contains("id") || !entry.at("id").is_string())
      fail(errc::schema, json_path + ": street entry needs a string \"id\"");
    spec.id = entry.at("id").get<std::string>();
    const std::string where = json_path + ": street \"" + spec.id + "\"";
    for (const StreetSpec& prior : specs)
      if (prior.id == spec.id) fail(errc::schema, where + " appears twice");

    if (!entry.contains("functional_unit") || !entry.at("functional_unit").is_string())
      fail(errc::schema, where + ": needs a string \"functional_unit\"");
    const std::string fu = entry.at("functional_unit").get<std::string>();
    if (fu == "linear-meter")
      spec.functional_unit = FunctionalUnit::linear_meter;
    else if (fu == "square-meter")
      spec.functional_unit = FunctionalUnit::square_meter;
    else
      fail(errc::schema, where + ": unknown functional unit \"" + fu + "\"");

    if (spec.functional_unit == FunctionalUnit::linear_meter) {
      spec.width_m = require_number(entry, "width_m", where);
      if (spec.width_m <= 0) fail(errc::schema, where + ": width must be positive");
    } else if (entry.contains("width_m")) {
      fail(errc::schema, where + ": width only applies to the linear-meter unit");
    }

    if (!entry.contains("layers") || !entry.at("layers").is_array() || entry.at("layers").empty())
      fail(errc::schema, where + ": needs a non-empty \"layers\" array");
    for (const json& layer : entry.at("layers")) spec.layers.push_back(parse_layer(layer, where));

    if (entry.contains("curb")) {
      if (spec.functional_unit != FunctionalUnit::linear_meter)
        fail(errc::schema, where + ": curbs only apply to the linear-meter unit");
      const json& curb = entry.at("curb");
      if (!curb.is_object()) fail(errc::schema, where + ": \"curb\" is not an object");
      Curb c;
      c.mass_kg_per_m = require_number(curb, "mass_kg_per_m", where + " curb");
      c.count = static_cast<int>(require_number(curb, "count", where + " curb"));
      c.lifespan_yr = require_number(curb, "lifespan_yr", where + " curb");
      if (c.mass_kg_per_m <= 0 || c.count <= 0 || c.lifespan_yr <= 0)
        fail(errc::schema, where + ": curb mass, count and lifespan must be positive");
      spec.curb = c;
    }

    spec.transport_distance_km = require_number(entry, "transport_distance_km", where);
    if (spec.transport_distance_km < 0)
      fail(errc::schema, where + ": negative transport distance");
    specs.push_back(std::move(spec));
  }
  if (specs.empty()) fail(errc::empty, json_path + ": no streets defined");
  return specs;
}

FlowVector load_flows(const std::string& csv_path) {
  csv::Table table = csv::read_file(csv_path);
  int flow_col = table.require("flow");
  table.require("unit");  // carried for documentation; not interpreted here
  int amount_col = table.require("amount");
  FlowVector out;
  for (std::size_t row = 0; row < table.rows.size(); ++row) {
    const std::string& name = table.cell(row, flow_col);
    if (name.empty())
      fail(errc::schema, table.source + ":" + std::to_string(table.line_numbers[row]) +
                             ": empty flow name");
    for (const auto& [flow, amount] : out.flows)
      if (flow == name)
        fail(errc::schema, table.source + ":" + std::to_string(table.line_numbers[row]) +
                               ": duplicate flow \"" + name + "\"");
    out.add(name, csv::to_number(table, row, amount_col));
  }
  if (out.flows.empty()) fail(errc::empty, csv_path + ": no flows");
  return out;
}

} // namespace clca::streets
