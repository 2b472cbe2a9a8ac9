#pragma once

#include <optional>

#include "emf/chern.hpp"
#include "emf/mf.hpp"
#include "emf/residue.hpp"

namespace emf {

/// Euler pairing chi(E', E) by the closed Riemann-Roch formula: sum over
/// group elements h of
///   sign(h) * Res_{f_h}(ch(E')_{h^{-1}}, ch(E)_h) / (|G| * det(id - h on U/U^h))
/// with sign(h) = (-1)^{binom(n_h+1, 2)}. Even-dimensional positive sectors
/// contribute zero; zero-dimensional sectors pair by plain multiplication.
/// `sectors` must hold one entry per group element, indexed by element.
Scalar euler_hrr(const EquivariantMF& ep, const EquivariantMF& e, const GroupAction& group,
                 const std::vector<Sector>& sectors);

/// Independent Euler number: chi = dim H^0 - dim H^1 of the G-invariant part
/// of the Z/2-graded morphism complex Hom(E', E) with differential
/// phi -> delta_E phi - (-1)^{|phi|} phi delta_E'.
///
/// For quasi-homogeneous f the complex splits by weighted degree and each
/// piece is finite exact linear algebra; homology is computed degree by
/// degree up to a bound derived from the Hessian degree and verified to have
/// stabilized over a window beyond it. Without quasi-homogeneity a total
/// degree `cutoff` must be supplied; the filtered Euler number is then
/// required to agree on three consecutive cutoffs.
/// Throws computation_error on non-stabilization.
long euler_oracle(const EquivariantMF& ep, const EquivariantMF& e, const GroupAction& group,
                  const Poly& f, std::optional<unsigned> cutoff = std::nullopt);

/// Polarization value of one odd-dimensional sector:
///   (-1)^{p_g} * Res_{f_g}(conj(ch_pv(dual_shifted(E))_{g^{-1}}), ch_pv(E)_g),
/// the Hermitian form obtained by conjugating the dual-side class.
struct PositivityResult {
  Scalar value;
  bool real = false;       // fixed by conjugation (exact check)
  int sign = 0;            // certified sign of the real value
  bool chern_zero = false; // sector class has zero normal form
};
PositivityResult sector_positivity(const EquivariantMF& e, const GroupAction& group,
                                   const std::vector<Sector>& sectors, size_t g,
                                   unsigned precision_bits = 128);

/// Full pairing matrix on a list of objects, its right and left radicals,
/// the stacked sector Chern coordinate matrix, and the comparison of the
/// right radical with the Chern kernel.
struct GramReport {
  std::vector<std::string> labels;
  std::vector<std::vector<Scalar>> gram;  // gram[i][j] = chi(E_i, E_j)
  std::vector<std::vector<Scalar>> radical_basis;       // right radical
  std::vector<std::vector<Scalar>> left_radical_basis;
  std::vector<std::vector<Scalar>> chern_matrix;  // rows: (sector, basis monomial)
  std::vector<std::vector<Scalar>> chern_kernel_basis;
  bool holds = false;
  std::string witness;  // nonempty description when the comparison fails
};
GramReport gram_and_kernels(const std::vector<EquivariantMF>& objects, const GroupAction& group,
                            const std::vector<Sector>& sectors);

}  // namespace emf
