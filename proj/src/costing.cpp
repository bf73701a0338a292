#include "reconf/costing.hpp"

#include <algorithm>

namespace reconf {

namespace {

std::string delete_key(Pred p) {
  switch (p) {
    case Pred::Person: return "deletePersonCost";
    case Pred::Thing: return "deleteThingCost";
    case Pred::PersonToThing: return "deletePersonTOthingCost";
    case Pred::Cabinet: return "deleteCabinetCost";
    case Pred::Room: return "deleteRoomCost";
    case Pred::CabinetToThing: return "deleteCabinetTOthingCost";
    case Pred::RoomToCabinet: return "deleteRoomTOcabinetCost";
    case Pred::PersonToRoom: return "deletePersonTOroomCost";
    default: throw CostError("atoms of " + std::string(pred_name(p)) + " are never deleted");
  }
}

}  // namespace

const std::vector<std::string>& known_cost_predicates() {
  static const std::vector<std::string> keys = {
      "cabinetCost", "cabinetSmallCost", "cabinetHighCost", "roomCost",
      "cabinetTOthingCost", "roomTOcabinetCost", "personTOroomCost",
      "reuseCabinetAsSmallCost", "reuseCabinetAsHighCost", "reuseRoomCost",
      "reuseCabinetTOthingCost", "reuseRoomTOcabinetCost", "reusePersonTOroomCost",
      "deleteCabinetCost", "deleteRoomCost", "deleteCabinetTOthingCost",
      "deleteRoomTOcabinetCost", "deletePersonTOroomCost", "deletePersonCost",
      "deleteThingCost", "deletePersonTOthingCost",
  };
  return keys;
}

Weight CostModel::weight(const std::string& key) const {
  auto it = weights.find(key);
  if (it == weights.end()) throw CostError("no weight given for " + key);
  return it->second;
}

Weight CostModel::create_weight(const GroundAtom& atom) const {
  switch (atom.pred) {
    case Pred::Cabinet: return weight("cabinetCost");
    case Pred::CabinetSmall: return weight("cabinetSmallCost");
    case Pred::CabinetHigh: return weight("cabinetHighCost");
    case Pred::Room: return weight("roomCost");
    case Pred::CabinetToThing: return weight("cabinetTOthingCost");
    case Pred::RoomToCabinet: return weight("roomTOcabinetCost");
    case Pred::PersonToRoom: return weight("personTOroomCost");
    default: throw CostError(std::string(pred_name(atom.pred)) + " atoms are given, not created");
  }
}

Weight CostModel::reuse_weight(const GroundAtom& atom, Height cabinetHeight) const {
  switch (atom.pred) {
    case Pred::Person:
    case Pred::Thing:
    case Pred::PersonToThing:
      return 0;
    case Pred::Cabinet:
      return weight(cabinetHeight == Height::High ? "reuseCabinetAsHighCost" : "reuseCabinetAsSmallCost");
    case Pred::Room: return weight("reuseRoomCost");
    case Pred::CabinetToThing: return weight("reuseCabinetTOthingCost");
    case Pred::RoomToCabinet: return weight("reuseRoomTOcabinetCost");
    case Pred::PersonToRoom: return weight("reusePersonTOroomCost");
    default: throw CostError(std::string(pred_name(atom.pred)) + " atoms are never reused");
  }
}

Weight CostModel::delete_weight(const GroundAtom& atom) const { return weight(delete_key(atom.pred)); }

CostModel CostModel::uniform(Weight value) {
  CostModel m;
  for (const std::string& k : known_cost_predicates()) m.weights[k] = value;
  return m;
}

CostModel CostModel::with(const std::map<std::string, Weight>& overrides) {
  CostModel m = uniform(0);
  for (const auto& [k, w] : overrides) {
    if (!m.weights.count(k)) throw CostError("unknown cost predicate " + k);
    m.weights[k] = w;
  }
  return m;
}

CostModel cost_model_from_facts(const facts::FactFile& file, std::vector<std::string>* warnings) {
  std::map<std::string, Weight> given;
  std::optional<Weight> deleteDefault;
  for (const facts::Atom& a : file.facts) {
    const std::string& p = a.predicate;
    const bool cost = p.size() > 4 && p.compare(p.size() - 4, 4, "Cost") == 0;
    if (!cost) continue;
    if (a.args.size() != 1 || a.args[0].is_atom()) throw CostError("malformed cost fact " + facts::to_string(a));
    const Weight w = a.args[0].value;
    if (w < 0) throw CostError("negative weight in " + facts::to_string(a));
    if (p == "deleteDefaultCost") {
      deleteDefault = w;
      continue;
    }
    const auto& keys = known_cost_predicates();
    if (std::find(keys.begin(), keys.end(), p) == keys.end()) throw CostError("unknown cost predicate " + p);
    if (given.count(p) && given[p] != w) throw CostError("conflicting weights for " + p);
    given[p] = w;
  }

  CostModel model;
  std::vector<std::string> defaulted;
  for (const std::string& k : known_cost_predicates()) {
    if (auto it = given.find(k); it != given.end()) {
      model.weights[k] = it->second;
    } else if (deleteDefault && k.rfind("delete", 0) == 0) {
      model.weights[k] = *deleteDefault;
    } else {
      model.weights[k] = 0;
      defaulted.push_back(k);
    }
  }
  if (warnings && !defaulted.empty()) {
    std::string msg = "weights default to 0:";
    for (const std::string& k : defaulted) msg += " " + k;
    warnings->push_back(msg);
  }
  return model;
}

facts::FactFile to_facts(const CostModel& model) {
  facts::FactFile f;
  for (const auto& [k, w] : model.weights) f.facts.push_back(facts::make_atom(k, {w}));
  return f;
}

CostBreakdown config_cost(const Configuration& config, const CostModel& model) {
  CostBreakdown out;
  for (const GroundAtom& a : config.atoms()) {
    const Weight w = model.create_weight(a);
    out.items.push_back({"create", a, w});
    out.total += w;
  }
  return out;
}

CostBreakdown reconfig_cost(const LegacyConfiguration& legacy, const Configuration& config,
                            const ActionSet& actions, const CostModel& model) {
  (void)legacy;
  CostBreakdown out;
  for (const GroundAtom& a : actions.create) {
    const Weight w = model.create_weight(a);
    out.items.push_back({"create", a, w});
    out.total += w;
  }
  for (const GroundAtom& a : actions.reuse) {
    const Height h = config.cabinetHigh.count(a.a) && a.pred == Pred::Cabinet ? Height::High : Height::Small;
    const Weight w = model.reuse_weight(a, h);
    out.items.push_back({"reuse", a, w});
    out.total += w;
  }
  for (const GroundAtom& a : actions.del) {
    const Weight w = model.delete_weight(a);
    out.items.push_back({"delete", a, w});
    out.total += w;
  }
  return out;
}

}  // namespace reconf
