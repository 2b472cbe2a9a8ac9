#pragma once

#include <string>

#include "emf/poly.hpp"

namespace emf {

/// Parse a polynomial expression over the ring's variables. The grammar is
/// `+ - * / ^` with parentheses; integer literals, rationals "p/q"; the name
/// "z" (when not a declared variable) denotes the field generator zeta_m.
/// Division is only permitted by constant (scalar) subexpressions.
Poly parse_poly(const std::string& text, const RingPtr& ring);

/// Parse a scalar: same grammar with no polynomial variables in scope.
Scalar parse_scalar(const std::string& text, const FieldPtr& field);

}  // namespace emf
