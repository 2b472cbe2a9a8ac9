#pragma once

#include <optional>

#include "emf/linalg.hpp"
#include "emf/milnor.hpp"

namespace emf {

/// Grothendieck residue functional res[h dx / (f_0,...,f_n)] on a Milnor
/// algebra, evaluated through the transformation law to pure variable powers:
/// chosen x_i^{k_i} are lifted over the Jacobi generators, and the residue is
/// coefficient extraction against x^{k-1} after multiplying by det of the
/// cofactor matrix.
class ResidueFunctional {
 public:
  explicit ResidueFunctional(const MilnorAlgebra& milnor);

  const MilnorAlgebra& milnor() const { return *milnor_; }
  const std::vector<unsigned>& pure_powers() const { return pure_powers_; }
  const Poly& det_cofactor() const { return det_cofactor_; }

  /// res[h dx/(f_0,...,f_n)]; linear in h, vanishes on the Jacobi ideal.
  Scalar residue(const Poly& h) const;

  /// Res_f(h1, h2) = res[h1*h2 dx/(f_0,...,f_n)]; symmetric bilinear.
  Scalar pairing(const Poly& h1, const Poly& h2) const;

  /// Gram matrix of the pairing on the standard monomial basis.
  ScalarMatrix gram_on_basis() const;

  /// Quasi-homogeneous socle fast path, when available: res(h) read off the
  /// socle coefficient of NF(h), normalized so res(hessian) = mu. Returns
  /// nullopt when f is not quasi-homogeneous or the socle is not unique.
  std::optional<Scalar> residue_socle(const Poly& h) const;

 private:
  std::shared_ptr<const MilnorAlgebra> milnor_;
  std::vector<unsigned> pure_powers_;            // k_i
  std::vector<std::vector<Poly>> lift_matrix_;   // a_ij: x_i^{k_i} = sum_j a_ij f_j
  Poly det_cofactor_;                            // det(a_ij), unreduced
  Monomial socle_target_;                        // prod x_i^{k_i - 1}

  // socle fast-path data
  std::optional<Monomial> socle_monomial_;
  std::optional<Scalar> socle_scale_;  // res(socle monomial)
};

}  // namespace emf
