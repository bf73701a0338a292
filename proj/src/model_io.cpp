#include "reconf/model_io.hpp"

#include <algorithm>

namespace reconf {

using facts::Atom;
using facts::FactFile;

facts::Atom to_fact(const GroundAtom& atom) {
  if (pred_arity(atom.pred) == 2) return facts::make_atom(std::string(pred_name(atom.pred)), {atom.a, atom.b});
  return facts::make_atom(std::string(pred_name(atom.pred)), {atom.a});
}

std::optional<GroundAtom> from_fact(const Atom& atom) {
  auto pred = pred_from_name(atom.predicate);
  if (!pred) return std::nullopt;
  const int arity = pred_arity(*pred);
  if (static_cast<int>(atom.args.size()) != arity) {
    throw ConfigError("arity mismatch in " + facts::to_string(atom));
  }
  for (const auto& arg : atom.args) {
    if (arg.is_atom()) throw ConfigError("nested term in " + facts::to_string(atom));
  }
  GroundAtom g{*pred, atom.args[0].value, arity == 2 ? atom.args[1].value : 0};
  return g;
}

Instance instance_from_facts(const FactFile& file) {
  Instance in;
  std::set<Id> cabDomain, cabDomainNew, roomDomain, roomDomainNew;
  for (const Atom& a : file.facts) {
    const std::string& p = a.predicate;
    auto value = [&a]() { return a.args.at(0).value; };
    if (p == "cabinetDomain") {
      cabDomain.insert(value());
    } else if (p == "cabinetDomainNew") {
      cabDomainNew.insert(value());
    } else if (p == "roomDomain") {
      roomDomain.insert(value());
    } else if (p == "roomDomainNew") {
      roomDomainNew.insert(value());
    } else if (p == "cabinetLower") {
      in.cabinetOverride.lower = static_cast<int>(value());
    } else if (p == "cabinetUpper") {
      in.cabinetOverride.upper = static_cast<int>(value());
    } else if (p == "roomLower") {
      in.roomOverride.lower = static_cast<int>(value());
    } else if (p == "roomUpper") {
      in.roomOverride.upper = static_cast<int>(value());
    }
    if (facts::is_wrapper(p)) continue;
    auto g = from_fact(a);
    if (!g) continue;
    switch (g->pred) {
      case Pred::Person: in.persons.insert(g->a); break;
      case Pred::Thing: in.things.insert(g->a); break;
      case Pred::PersonToThing: {
        auto [it, fresh] = in.owner.emplace(g->b, g->a);
        if (!fresh && it->second != g->a) {
          throw ConfigError("thing " + std::to_string(g->b) + " has two owners");
        }
        break;
      }
      case Pred::ThingLong:
      case Pred::ThingShort: {
        const Length len = g->pred == Pred::ThingLong ? Length::Long : Length::Short;
        auto [it, fresh] = in.length.emplace(g->a, len);
        if (!fresh && it->second != len) {
          throw ConfigError("thing " + std::to_string(g->a) + " is both long and short");
        }
        break;
      }
      default: break;
    }
  }
  // Things without a length are short once lengths are in play.
  if (!in.length.empty()) {
    for (Id t : in.things) in.length.emplace(t, Length::Short);
  }

  auto apply_domain = [](const std::set<Id>& ids, BoundOverrides& o, bool fresh, const char* name) {
    if (ids.empty()) return;
    const Id lo = *ids.begin();
    const Id hi = *ids.rbegin();
    if (hi - lo + 1 != static_cast<Id>(ids.size())) {
      throw ConfigError(std::string(name) + " must be a contiguous interval");
    }
    if (fresh) {
      o.newOffset = lo - 1;
    } else {
      o.offset = lo - 1;
    }
    if (!o.upper) o.upper = static_cast<int>(ids.size());
  };
  apply_domain(cabDomainNew, in.cabinetOverride, true, "cabinetDomainNew");
  apply_domain(cabDomain, in.cabinetOverride, false, "cabinetDomain");
  apply_domain(roomDomainNew, in.roomOverride, true, "roomDomainNew");
  apply_domain(roomDomain, in.roomOverride, false, "roomDomain");
  return in;
}

Configuration configuration_from_facts(const FactFile& file) {
  Configuration config;
  auto take = [&config](const Atom& a) {
    auto g = from_fact(a);
    if (!g) return;
    switch (g->pred) {
      case Pred::Person:
      case Pred::Thing:
      case Pred::PersonToThing:
      case Pred::ThingLong:
      case Pred::ThingShort:
        return;
      default:
        config.insert(*g);
    }
  };
  for (const Atom& a : file.facts) {
    if (a.predicate == "legacyConfig") {
      take(a.args.at(0).atom());
    } else if (!facts::is_wrapper(a.predicate)) {
      take(a);
    }
  }
  return config;
}

LegacyConfiguration legacy_from_facts(const FactFile& file) {
  const bool wrapped = std::any_of(file.facts.begin(), file.facts.end(),
                                   [](const Atom& a) { return a.predicate == "legacyConfig"; });
  LegacyConfiguration legacy;
  for (const Atom& a : file.facts) {
    const Atom* inner = nullptr;
    if (wrapped) {
      if (a.predicate != "legacyConfig") continue;
      inner = &a.args.at(0).atom();
    } else {
      if (facts::is_wrapper(a.predicate)) continue;
      inner = &a;
    }
    auto g = from_fact(*inner);
    if (!g) continue;
    switch (g->pred) {
      case Pred::Person: legacy.persons.insert(g->a); break;
      case Pred::Thing: legacy.things.insert(g->a); break;
      case Pred::PersonToThing: legacy.personToThing.insert({g->a, g->b}); break;
      case Pred::ThingLong:
      case Pred::ThingShort: break;
      default: legacy.config.insert(*g);
    }
  }
  return legacy;
}

ActionSet actions_from_facts(const FactFile& file) {
  ActionSet actions;
  for (const Atom& a : file.facts) {
    std::set<GroundAtom>* target = nullptr;
    if (a.predicate == "reuse") target = &actions.reuse;
    if (a.predicate == "delete") target = &actions.del;
    if (a.predicate == "create") target = &actions.create;
    if (!target) continue;
    auto g = from_fact(a.args.at(0).atom());
    if (!g) throw ConfigError("action on non-schema atom " + facts::to_string(a));
    target->insert(*g);
  }
  return actions;
}

bool has_actions(const FactFile& file) {
  return std::any_of(file.facts.begin(), file.facts.end(), [](const Atom& a) {
    return a.predicate == "reuse" || a.predicate == "delete" || a.predicate == "create";
  });
}

FactFile to_facts(const Instance& in) {
  FactFile f;
  for (const GroundAtom& a : instance_atoms(in)) f.facts.push_back(to_fact(a));
  for (auto [t, len] : in.length) {
    f.facts.push_back(to_fact({len == Length::Long ? Pred::ThingLong : Pred::ThingShort, t, 0}));
  }
  auto bound = [&f](const BoundOverrides& o, const std::string& type) {
    if (o.lower) f.facts.push_back(facts::make_atom(type + "Lower", {*o.lower}));
    if (o.upper) f.facts.push_back(facts::make_atom(type + "Upper", {*o.upper}));
    // Domains can only be written back as intervals of known length.
    if (!o.upper) return;
    if (o.offset) {
      for (Id x = *o.offset + 1; x <= *o.offset + *o.upper; ++x) {
        f.facts.push_back(facts::make_atom(type + "Domain", {x}));
      }
    }
    if (o.newOffset) {
      for (Id x = *o.newOffset + 1; x <= *o.newOffset + *o.upper; ++x) {
        f.facts.push_back(facts::make_atom(type + "DomainNew", {x}));
      }
    }
  };
  bound(in.cabinetOverride, "cabinet");
  bound(in.roomOverride, "room");
  return f;
}

FactFile to_facts(const Configuration& config) {
  FactFile f;
  for (const GroundAtom& a : config.atoms()) f.facts.push_back(to_fact(a));
  return f;
}

FactFile to_facts(const LegacyConfiguration& legacy) {
  FactFile f;
  for (const GroundAtom& a : legacy.atoms()) f.facts.push_back(facts::make_wrapped("legacyConfig", to_fact(a)));
  // Heights are not part of atoms() but are kept so that parsing gives back the same object.
  for (Id c : legacy.config.cabinetSmall) {
    f.facts.push_back(facts::make_wrapped("legacyConfig", to_fact({Pred::CabinetSmall, c, 0})));
  }
  for (Id c : legacy.config.cabinetHigh) {
    f.facts.push_back(facts::make_wrapped("legacyConfig", to_fact({Pred::CabinetHigh, c, 0})));
  }
  return f;
}

FactFile to_facts(const ActionSet& actions) {
  FactFile f;
  for (const GroundAtom& a : actions.reuse) f.facts.push_back(facts::make_wrapped("reuse", to_fact(a)));
  for (const GroundAtom& a : actions.del) f.facts.push_back(facts::make_wrapped("delete", to_fact(a)));
  for (const GroundAtom& a : actions.create) f.facts.push_back(facts::make_wrapped("create", to_fact(a)));
  return f;
}

}  // namespace reconf
