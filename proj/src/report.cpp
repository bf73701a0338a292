#include "reconf/report.hpp"

#include <sstream>

#include "json.hpp"
#include "reconf/model_io.hpp"

namespace reconf {

namespace {

using nlohmann::json;

json atom_json(const GroundAtom& a) { return to_string(a); }

json atoms_json(const std::vector<GroundAtom>& atoms) {
  json out = json::array();
  for (const GroundAtom& a : atoms) out.push_back(atom_json(a));
  return out;
}

json atoms_json(const std::set<GroundAtom>& atoms) { return atoms_json(std::vector<GroundAtom>(atoms.begin(), atoms.end())); }

// Configuration as {predicate: [args...]}; unary predicates list bare ids.
json configuration_json(const Configuration& config) {
  json out = json::object();
  for (const GroundAtom& a : config.atoms()) {
    json& list = out[std::string(pred_name(a.pred))];
    if (pred_arity(a.pred) == 1) {
      list.push_back(a.a);
    } else {
      list.push_back(json::array({a.a, a.b}));
    }
  }
  return out;
}

json cost_json(const CostBreakdown& cost) {
  json items = json::array();
  for (const CostItem& item : cost.items) {
    items.push_back({{"action", item.action}, {"atom", atom_json(item.atom)}, {"weight", item.weight}});
  }
  return {{"total", cost.total}, {"items", items}};
}

json actions_json(const ActionSet& actions) {
  return {{"reuse", atoms_json(actions.reuse)}, {"delete", atoms_json(actions.del)},
          {"create", atoms_json(actions.create)}};
}

void facts_block(std::ostringstream& out, const Solution& s, bool withActions) {
  out << "% cost " << s.cost.total << "\n";
  for (const CostItem& item : s.cost.items) {
    if (item.weight != 0) out << "%   " << item.action << " " << to_string(item.atom) << " " << item.weight << "\n";
  }
  out << facts::serialize(to_facts(s.config));
  if (withActions) out << facts::serialize(to_facts(s.actions));
}

}  // namespace

std::string render_result(const SolveResult& result, Format format, bool withActions) {
  if (format == Format::Json) {
    json out;
    out["status"] = to_string(result.status);
    json incumbents = json::array();
    for (const ProgressEvent& e : result.incumbents) {
      incumbents.push_back({{"cost", e.cost}, {"nodes", e.nodes}, {"elapsedMs", e.elapsedMs}});
    }
    out["stats"] = {{"nodes", result.nodes}, {"elapsedMs", result.elapsedMs}, {"incumbents", incumbents}};
    if (result.best) {
      out["cost"] = cost_json(result.best->cost);
      out["configuration"] = configuration_json(result.best->config);
      if (withActions) out["actions"] = actions_json(result.best->actions);
    } else {
      out["cost"] = nullptr;
      out["configuration"] = nullptr;
    }
    if (!result.optima.empty()) {
      json optima = json::array();
      for (const Solution& s : result.optima) {
        json entry = {{"cost", s.cost.total}, {"configuration", configuration_json(s.config)}};
        if (withActions) entry["actions"] = actions_json(s.actions);
        optima.push_back(entry);
      }
      out["optima"] = optima;
    }
    return out.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "% status " << to_string(result.status) << "\n";
  if (!result.optima.empty()) {
    for (std::size_t k = 0; k < result.optima.size(); ++k) {
      out << "% optimum " << k + 1 << " of " << result.optima.size() << "\n";
      facts_block(out, result.optima[k], withActions);
    }
  } else if (result.best) {
    facts_block(out, *result.best, withActions);
  }
  return out.str();
}

std::string render_cost(const CostBreakdown& cost, Format format) {
  if (format == Format::Json) return cost_json(cost).dump(2) + "\n";
  std::ostringstream out;
  for (const CostItem& item : cost.items) {
    out << item.action << "\t" << to_string(item.atom) << "\t" << item.weight << "\n";
  }
  out << "total\t" << cost.total << "\n";
  return out.str();
}

std::string render_report(const ValidationReport& report, Format format) {
  if (format == Format::Json) {
    json violations = json::array();
    for (const Violation& v : report.violations) {
      violations.push_back({{"check", v.check}, {"atoms", atoms_json(v.atoms)}, {"message", v.message}});
    }
    return json{{"valid", report.valid}, {"violations", violations}}.dump(2) + "\n";
  }
  return to_text(report);
}

}  // namespace reconf
