#pragma once

#include "emf/instance.hpp"

namespace emf {

/// Deterministic JSON reports for the command surface. Exact values are
/// canonical strings; decimal `approx` fields are readability only.
Json report_validate(const ProblemInstance& inst, const InstanceContext& ctx);
Json report_milnor(const InstanceContext& ctx);
Json report_residue(const InstanceContext& ctx);
Json report_chern(const InstanceContext& ctx);
/// method: "hrr", "oracle", or "both".
Json report_euler(const ProblemInstance& inst, const InstanceContext& ctx,
                  const std::string& method);
Json report_positivity(const ProblemInstance& inst, const InstanceContext& ctx);
Json report_conjd(const InstanceContext& ctx);

std::string render_report(const Json& report);

}  // namespace emf
