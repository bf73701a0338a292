// Rendering of solver results, cost breakdowns and validation reports as
// fact text or JSON.
#pragma once

#include <string>

#include "reconf/costing.hpp"
#include "reconf/solver.hpp"
#include "reconf/validator.hpp"

namespace reconf {

enum class Format { Facts, Json };

/// Configuration and (when `withActions`) the action set as facts, preceded by
/// status and cost comments. With several optima each gets its own block.
std::string render_result(const SolveResult& result, Format format, bool withActions);

std::string render_cost(const CostBreakdown& cost, Format format);

std::string render_report(const ValidationReport& report, Format format);

}  // namespace reconf
