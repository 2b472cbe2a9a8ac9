#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "emf/poly.hpp"

namespace emf {

/// Reduced degrevlex Groebner basis with cofactor tracking: every basis
/// element carries its exact representation in terms of the input generators,
/// which feeds the residue transformation law.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(std::vector<Poly> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& input() const { return input_; }
  const std::vector<Poly>& generators() const { return basis_; }

  /// cofactors(k)[j] satisfy basis[k] = sum_j cofactors(k)[j] * input[j].
  const std::vector<Poly>& cofactors(size_t k) const { return cof_[k]; }

  /// Unique remainder of p modulo the basis; linear and idempotent.
  Poly normal_form(const Poly& p) const;

  /// Remainder plus quotients q with p = sum_k q[k]*basis[k] + remainder.
  std::pair<Poly, std::vector<Poly>> reduce_tracked(const Poly& p) const;

  /// Cofactors of p in terms of the *input* generators, or nullopt when p is
  /// not in the ideal. Reconstruction is verified exactly before returning.
  std::optional<std::vector<Poly>> lift_cofactors(const Poly& p) const;

 private:
  RingPtr ring_;
  std::vector<Poly> input_;
  std::vector<Poly> basis_;
  std::vector<std::vector<Poly>> cof_;
};

}  // namespace emf
