#pragma once

#include <optional>
#include <vector>

#include "emf/linalg.hpp"
#include "emf/milnor.hpp"
#include "emf/residue.hpp"

namespace emf {

/// A finite matrix group over Q(zeta_m) acting linearly on the variables,
/// enumerated from its generators with a full multiplication table.
class GroupAction {
 public:
  /// Enumerates the closure; throws validation_error if it exceeds max_order.
  explicit GroupAction(std::vector<ScalarMatrix> generators, const RingPtr& ring,
                       size_t max_order = 1024);

  const RingPtr& ring() const { return ring_; }
  size_t size() const { return elements_.size(); }
  size_t identity() const { return 0; }
  const ScalarMatrix& matrix(size_t i) const { return elements_[i]; }
  const std::vector<unsigned>& word(size_t i) const { return words_[i]; }
  size_t num_generators() const { return generators_.size(); }
  size_t generator_index(size_t gen) const { return gen_elem_[gen]; }

  size_t mul(size_t a, size_t b) const { return table_[a * size() + b]; }
  size_t inverse(size_t a) const { return inverse_[a]; }
  unsigned element_order(size_t a) const;

  const std::vector<std::vector<size_t>>& conjugacy_classes() const { return classes_; }
  size_t class_of(size_t a) const { return class_of_[a]; }
  bool is_abelian() const;

  /// Full character table for abelian groups: table[chi][element].
  /// Throws computation_error for non-abelian groups.
  const std::vector<std::vector<Scalar>>& characters() const;

  /// Verifies act_linear(f, M_g) == f for every generator.
  void check_invariance(const Poly& f) const;

 private:
  RingPtr ring_;
  std::vector<ScalarMatrix> generators_;
  std::vector<size_t> gen_elem_;
  std::vector<ScalarMatrix> elements_;
  std::vector<std::vector<unsigned>> words_;
  std::vector<size_t> table_;
  std::vector<size_t> inverse_;
  std::vector<std::vector<size_t>> classes_;
  std::vector<size_t> class_of_;
  mutable std::vector<std::vector<Scalar>> characters_;  // computed lazily
};

/// Per-element sector data: fixed locus, restricted potential, dimension
/// parity, twist determinant, and (when positive-dimensional) the Milnor
/// algebra and residue functional of f_g.
struct Sector {
  size_t element = 0;
  FixedLocus locus;
  Poly f_g;          // over locus.sub_ring (empty ring when zero-dimensional)
  int n_g = 0;       // dim(fixed locus) - 1; -1 for zero-dimensional sectors
  int p_g = -1;      // (n_g + 1)/2 when n_g odd
  Scalar twist_det;  // det(id - g on U/U^g); 1 for the identity
  int parity_sign = 1;  // (-1)^{binom(n_g+1, 2)}
  bool zero_dimensional = false;
  std::optional<MilnorAlgebra> milnor;
  std::optional<ResidueFunctional> residue;
};

/// Builds the sector of g; validates isolatedness of f_g on
/// positive-dimensional fixed loci.
Sector make_sector(const GroupAction& group, size_t g, const Poly& f);

/// Class function [g] -> tr(rho(g)) for representation matrices given per
/// generator; validated to extend to a homomorphism on the whole group.
/// Returns one value per conjugacy class, in class order.
std::vector<Scalar> bg_character(const GroupAction& group,
                                 const std::vector<ScalarMatrix>& rho_generators);

/// Builds rho(g) for every element from per-generator matrices, verifying the
/// extension is a well-defined homomorphism.
std::vector<ScalarMatrix> extend_representation(const GroupAction& group,
                                                const std::vector<ScalarMatrix>& rho_generators);

/// Virtual character supported on the class of g^{-1}: coefficients over the
/// irreducible characters and the resulting class function (values per
/// element). Abelian groups only, unless a character table is supplied.
struct VirtualCharacter {
  std::vector<Scalar> irreducible_coeffs;  // over group.characters()
  std::vector<Scalar> values;              // per element
};

VirtualCharacter dual_class_character(const GroupAction& group, size_t g);
VirtualCharacter dual_class_character(const GroupAction& group, size_t g,
                                      const std::vector<std::vector<Scalar>>& character_table);

}  // namespace emf
