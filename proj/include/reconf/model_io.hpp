// Conversions between fact files and the core model.
#pragma once

#include "reconf/facts.hpp"
#include "reconf/model.hpp"

namespace reconf {

facts::Atom to_fact(const GroundAtom& atom);
/// Returns nullopt for atoms outside the solution schema (costs, bounds, ...).
std::optional<GroundAtom> from_fact(const facts::Atom& atom);

/// Reads person/thing/ownership/length facts plus bound overrides
/// (cabinetDomain, cabinetDomainNew, cabinetLower, ... and the room variants).
/// Bounds are not derived here.
Instance instance_from_facts(const facts::FactFile& file);

/// Reads cabinet/room/height/relation atoms. legacyConfig(...) wrappers are
/// unwrapped so a legacy file can be checked as a plain configuration.
Configuration configuration_from_facts(const facts::FactFile& file);

/// Reads legacyConfig(...) atoms; a file without any wrapper is read as a
/// plain list of legacy atoms.
LegacyConfiguration legacy_from_facts(const facts::FactFile& file);

/// Reads reuse(...), delete(...) and create(...) atoms.
ActionSet actions_from_facts(const facts::FactFile& file);
bool has_actions(const facts::FactFile& file);

facts::FactFile to_facts(const Instance& instance);
facts::FactFile to_facts(const Configuration& config);
facts::FactFile to_facts(const LegacyConfiguration& legacy);
facts::FactFile to_facts(const ActionSet& actions);

}  // namespace reconf
