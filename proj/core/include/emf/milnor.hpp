#pragma once

#include <optional>
#include <vector>

#include "emf/groebner.hpp"
#include "emf/poly.hpp"

namespace emf {

/// The Milnor algebra Q[x]/J_f of an isolated hypersurface singularity:
/// reduced Groebner basis of the Jacobi ideal, standard monomial basis,
/// Milnor number, and the Hessian class.
struct MilnorAlgebra {
  RingPtr ring;
  Poly f;
  std::vector<Poly> partials;
  GroebnerBasis gb;                      // of the partials
  std::vector<Monomial> basis_monomials; // standard monomials, ascending degrevlex
  unsigned mu = 0;
  Poly hessian;        // det Hess f, unreduced
  Poly hessian_class;  // its normal form

  Poly normal_form(const Poly& p) const { return gb.normal_form(p); }
  /// Coordinates of NF(p) in the standard monomial basis.
  std::vector<Scalar> coordinates(const Poly& p) const;
};

/// Builds the Milnor algebra. Throws validation_error when f has nonzero
/// constant term or the Jacobi ideal is not m-primary (non-isolated
/// singularity or critical points away from the origin).
MilnorAlgebra milnor_algebra(const Poly& f);

/// Determinant of a square polynomial matrix by Laplace expansion
/// (desk-scale sizes only).
Poly poly_det(const std::vector<std::vector<Poly>>& m);

/// Strictly positive integer weights making f weighted-homogeneous, if any.
std::optional<std::vector<long>> quasi_weights(const Poly& f);

/// Weighted degree when p is weighted-homogeneous under the given weights.
std::optional<long> weighted_degree(const Poly& p, const std::vector<long>& weights);

}  // namespace emf
