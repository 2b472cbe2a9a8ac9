#pragma once

#include <string>
#include <vector>

#include "emf/group.hpp"
#include "emf/poly.hpp"

namespace emf {

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix pm_zero(size_t rows, size_t cols, const RingPtr& ring);
PolyMatrix pm_identity_times(size_t n, const Poly& f);
PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pm_add(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pm_neg(const PolyMatrix& a);
PolyMatrix pm_transpose(const PolyMatrix& a);
PolyMatrix pm_from_scalar(const ScalarMatrix& m, const RingPtr& ring);
bool pm_equal(const PolyMatrix& a, const PolyMatrix& b);
/// Entry-wise group action p |-> p(M^{-1} x).
PolyMatrix pm_act(const PolyMatrix& a, const ScalarMatrix& M);
/// Kronecker product.
PolyMatrix pm_kron(const PolyMatrix& a, const PolyMatrix& b);
ScalarMatrix sm_kron(const ScalarMatrix& a, const ScalarMatrix& b);

/// G-equivariant matrix factorization (A, B) of f with constant equivariance
/// matrices rho0, rho1 stored per group element.
struct EquivariantMF {
  std::string label;
  size_t rank = 0;  // r; A, B are r x r
  PolyMatrix A, B;
  std::vector<ScalarMatrix> rho0, rho1;  // indexed by group element
};

/// Checks all defining identities exactly; returns the list of violations
/// (empty means valid): AB = BA = f*I, rho homomorphisms, and the
/// equivariance relations on every generator.
std::vector<std::string> validate_mf(const EquivariantMF& e, const Poly& f,
                                     const GroupAction& group);

/// Builds an MF from per-generator equivariance matrices, extending them to
/// the whole group (and verifying the extension is a homomorphism).
EquivariantMF make_mf(std::string label, PolyMatrix A, PolyMatrix B,
                      const std::vector<ScalarMatrix>& rho0_gens,
                      const std::vector<ScalarMatrix>& rho1_gens, const GroupAction& group);

/// (A, -B)^* = (B^T, A^T) with equivariance matrices g -> rho(g^{-1})^T; a
/// valid factorization of the same f.
EquivariantMF dual_shifted(const EquivariantMF& e, const GroupAction& group);

/// Block d-fold copy twisted by a representation (given per element).
EquivariantMF tensor_rep(const EquivariantMF& e, const std::vector<ScalarMatrix>& rho,
                         const GroupAction& group);

/// Direct sum.
EquivariantMF direct_sum(const EquivariantMF& a, const EquivariantMF& b,
                         const GroupAction& group);

/// Z/2-graded external tensor over disjoint variable blocks: E (over the
/// first nx variables) and F (over the remaining) combine to a factorization
/// of f_E + f_F on the joint ring. `embed_e`/`embed_f` map each factor's
/// variables into the joint ring's indices.
EquivariantMF external_tensor(const EquivariantMF& e, const EquivariantMF& f,
                              const RingPtr& joint_ring, const std::vector<size_t>& embed_e,
                              const std::vector<size_t>& embed_f, const GroupAction& group);

/// Restriction of (A, B) to the fixed locus of a sector.
struct RestrictedMF {
  PolyMatrix A, B;  // over sector.locus.sub_ring
};
RestrictedMF restrict_sector(const EquivariantMF& e, const Sector& sector);

}  // namespace emf
