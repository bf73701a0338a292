// Requirement checks for configurations and reconfigurations.
//
// Check ids:
//   C1..C11  configuration requirements (C5 is vacuous and never reported)
//   T1..T5   transformation constraints between legacy and new configuration
//   B1, B2   bounded-type cardinality and identifier domains
//   S1       atom refers to an individual that is not part of the configuration
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "reconf/model.hpp"

namespace reconf {

struct Violation {
  std::string check;
  std::vector<GroundAtom> atoms;
  std::string message;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;

  bool has(std::string_view check) const;
  void add(std::string check, std::vector<GroundAtom> atoms, std::string message);
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks `config` against the requirements of `instance`. When `legacy` is
/// given its cabinet and room ids count as members of the respective domains.
ValidationReport check_configuration(const Instance& instance, const Configuration& config,
                                     const LegacyConfiguration* legacy = nullptr);

/// Requirement 11: all legacy cabinets are small.
ValidationReport check_legacy(const LegacyConfiguration& legacy);

/// Throws PreconditionError when `actions` does not mention every legacy atom.
ValidationReport check_reconfiguration(const ReconfigProblem& problem, const Configuration& config,
                                       const ActionSet& actions);

/// One violation per line: check id, offending atoms, message.
std::string to_text(const ValidationReport& report);

}  // namespace reconf
