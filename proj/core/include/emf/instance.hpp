#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emf/euler.hpp"
#include "emf/mf.hpp"

#include <json.hpp>

namespace emf {

using Json = nlohmann::ordered_json;

/// One problem: a cyclotomic ground field, a potential with isolated
/// singularity, a finite matrix group leaving it invariant, and labeled
/// equivariant factorizations. Mirrors the JSON document layout.
struct ProblemInstance {
  unsigned field_order = 1;
  std::vector<std::string> variables;
  FieldPtr field;
  RingPtr ring;
  Poly f;
  std::vector<ScalarMatrix> generators;
  // Named representations, one matrix per generator; objects may reference
  // them by name instead of writing matrices inline.
  std::map<std::string, std::vector<ScalarMatrix>> representations;

  struct Object {
    std::string label;
    PolyMatrix A, B;
    std::vector<ScalarMatrix> rho0, rho1;  // per generator
    std::optional<std::string> rho0_ref, rho1_ref;
  };
  std::vector<Object> objects;

  std::optional<unsigned> cutoff;   // oracle truncation cutoff
  unsigned precision = 128;         // starting bits for sign certification
};

/// Parse and fully validate. Throws parse_error for malformed documents and
/// validation_error (with the violated invariant named) for semantic errors.
ProblemInstance parse_instance(const std::string& path);
ProblemInstance parse_instance_json(const Json& doc);

/// Canonical serialization; parse(serialize(i)) reproduces i exactly.
Json serialize_instance(const ProblemInstance& inst);

/// Equality of every semantic field (used by the round-trip property).
bool instances_equal(const ProblemInstance& a, const ProblemInstance& b);

/// Everything derived from an instance that commands share: the closed
/// group, one sector per element, and the validated objects with
/// equivariance matrices extended to all elements.
struct InstanceContext {
  GroupAction group;
  std::vector<Sector> sectors;
  std::vector<EquivariantMF> objects;
};

InstanceContext build_context(const ProblemInstance& inst);

}  // namespace emf
