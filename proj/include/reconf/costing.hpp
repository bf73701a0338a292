// Objective functions: per-predicate create/reuse/delete weights summed over
// the atoms of a configuration or the actions of a reconfiguration.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "reconf/facts.hpp"
#include "reconf/model.hpp"

namespace reconf {

using Weight = std::int64_t;

class CostError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weights keyed by their cost-file predicate (roomCost, reuseCabinetAsHighCost,
/// deleteCabinetCost, ...). See known_cost_predicates() for the vocabulary.
struct CostModel {
  std::map<std::string, Weight> weights;

  /// Throws CostError when the key is absent.
  Weight weight(const std::string& key) const;

  Weight create_weight(const GroundAtom& atom) const;
  /// Reused cabinets are priced by the height they end up with.
  Weight reuse_weight(const GroundAtom& atom, Height cabinetHeight = Height::Small) const;
  Weight delete_weight(const GroundAtom& atom) const;

  /// Every known weight set to `value`.
  static CostModel uniform(Weight value);
  /// Every known weight zero, then `overrides` applied.
  static CostModel with(const std::map<std::string, Weight>& overrides);
};

const std::vector<std::string>& known_cost_predicates();

/// Builds a model from cost facts. Unspecified delete weights fall back to
/// deleteDefaultCost when given; anything else unspecified is 0. Each
/// defaulted weight is reported in `warnings`.
CostModel cost_model_from_facts(const facts::FactFile& file, std::vector<std::string>* warnings = nullptr);
facts::FactFile to_facts(const CostModel& model);

struct CostItem {
  std::string action;  // "create", "reuse" or "delete"
  GroundAtom atom;
  Weight weight = 0;

  bool operator==(const CostItem&) const = default;
};

struct CostBreakdown {
  std::vector<CostItem> items;
  Weight total = 0;
};

/// f(S): one create item per atom of the configuration.
CostBreakdown config_cost(const Configuration& config, const CostModel& model);

/// g(S,R): create items for new atoms, reuse items (reused cabinets priced by
/// their height in `config`) and delete items.
CostBreakdown reconfig_cost(const LegacyConfiguration& legacy, const Configuration& config,
                            const ActionSet& actions, const CostModel& model);

}  // namespace reconf
