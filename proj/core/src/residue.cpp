#include "emf/residue.hpp"

namespace emf {

ResidueFunctional::ResidueFunctional(const MilnorAlgebra& milnor)
    : milnor_(std::make_shared<MilnorAlgebra>(milnor)) {
  const RingPtr& ring = milnor_->ring;
  size_t n = ring->nvars();

  // Minimal pure powers x_i^{k_i} with zero normal form.
  pure_powers_.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (unsigned k = 1; k <= 4 * milnor_->mu + 4; ++k) {
      Poly pw = Poly::variable(ring, i, k);
      if (milnor_->gb.normal_form(pw).is_zero()) {
        pure_powers_[i] = k;
        break;
      }
    }
    if (pure_powers_[i] == 0)
      throw computation_error("no vanishing pure power found for " + ring->vars[i]);
  }

  lift_matrix_.assign(n, {});
  for (size_t i = 0; i < n; ++i) {
    Poly pw = Poly::variable(ring, i, pure_powers_[i]);
    auto cof = milnor_->gb.lift_cofactors(pw);
    if (!cof) throw computation_error("pure power not liftable over the Jacobi ideal");
    lift_matrix_[i] = std::move(*cof);
  }
  det_cofactor_ = poly_det(lift_matrix_);

  socle_target_.assign(n, 0);
  for (size_t i = 0; i < n; ++i)
    socle_target_[i] = static_cast<std::uint16_t>(pure_powers_[i] - 1);

  // Socle fast path: for quasi-homogeneous f the top-weighted-degree standard
  // monomial is unique and spans the socle.
  if (auto w = quasi_weights(milnor_->f)) {
    auto wdeg = [&](const Monomial& m) {
      long d = 0;
      for (size_t i = 0; i < m.size(); ++i) d += (*w)[i] * static_cast<long>(m[i]);
      return d;
    };
    long best = -1;
    int count = 0;
    Monomial top;
    for (const auto& m : milnor_->basis_monomials) {
      long d = wdeg(m);
      if (d > best) {
        best = d;
        top = m;
        count = 1;
      } else if (d == best) {
        ++count;
      }
    }
    if (count == 1) {
      socle_monomial_ = top;
      // res on the socle monomial via the transformation law
      Poly mono = Poly::monomial(ring, top, Scalar::one(ring->field));
      Poly prod = mono * det_cofactor_;
      socle_scale_ = prod.coeff(socle_target_);
    }
  }
}

Scalar ResidueFunctional::residue(const Poly& h) const {
  Poly prod = h * det_cofactor_;
  return prod.coeff(socle_target_);
}

Scalar ResidueFunctional::pairing(const Poly& h1, const Poly& h2) const {
  return residue(h1 * h2);
}

ScalarMatrix ResidueFunctional::gram_on_basis() const {
  const RingPtr& ring = milnor_->ring;
  size_t mu = milnor_->basis_monomials.size();
  ScalarMatrix g(mu, mu, ring->field);
  std::vector<Poly> basis;
  for (const auto& m : milnor_->basis_monomials)
    basis.push_back(Poly::monomial(ring, m, Scalar::one(ring->field)));
  for (size_t i = 0; i < mu; ++i)
    for (size_t j = i; j < mu; ++j) {
      g.at(i, j) = pairing(basis[i], basis[j]);
      g.at(j, i) = g.at(i, j);
    }
  return g;
}

std::optional<Scalar> ResidueFunctional::residue_socle(const Poly& h) const {
  if (!socle_monomial_ || !socle_scale_ || socle_scale_->is_zero()) return std::nullopt;
  Poly nf = milnor_->gb.normal_form(h);
  return nf.coeff(*socle_monomial_) * *socle_scale_;
}

}  // namespace emf
