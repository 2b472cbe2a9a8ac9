#pragma once

#include "emf/instance.hpp"

namespace emf {

/// Ready-to-run instance templates.
///
/// Families and parameters:
///   spinor                        f = x^2 with the sign action of Z/2
///   quadric   nvars=2|4           sum of squares; 2 vars: both branch
///                                 objects over Q(i); 4 vars: Z/2 action
///                                 diag(1,1,-1,-1) with product objects
///   an_suspended n, a, group      f = x^{n+1} + y^2, 2x2 product object
///                                 (x^a, x^{n+1-a}) x (y, y); group one of
///                                 "trivial", "mu" (x -> zeta x), "z2" (y -> -y)
///   d4 (k=4..6)                   f = x^{k-1} + x y^2, Koszul objects
///   e6 / e7 / e8                  f = x^3 + y^4 / x^3 + x y^3 / x^3 + y^5
///
/// Throws validation_error for unsupported parameter combinations.
ProblemInstance generate_corpus(const std::string& family, const Json& params);

std::vector<std::string> corpus_families();

/// The instances exercised by the acceptance properties, labeled.
std::vector<std::pair<std::string, ProblemInstance>> default_corpus();

}  // namespace emf
