#pragma once

#include <cstdint>
#include <map>

#include "emf/mf.hpp"

namespace emf {

/// Polynomial-coefficient exterior form on the fixed-locus variables:
/// bitmask of wedge factors (bit i = dy_i) -> coefficient. Only masks with a
/// nonzero coefficient are stored.
using FormPoly = std::map<uint32_t, Poly>;
using FormMatrix = std::vector<std::vector<FormPoly>>;

/// Sign of moving the wedge factors of t past those of s into sorted order;
/// 0 when the masks overlap (the product vanishes).
int koszul_sign(uint32_t s, uint32_t t);
FormPoly form_mul(const FormPoly& a, const FormPoly& b);
void form_add_inplace(FormPoly& a, const FormPoly& b);
FormMatrix fm_mul(const FormMatrix& a, const FormMatrix& b);
/// Entry-wise exterior derivative of a polynomial matrix; entries become
/// 1-forms sum_i (dp/dy_i) dy_i.
FormMatrix fm_d(const PolyMatrix& m);

/// Sector Chern character via the supertrace of (d delta)^{n_g+1} twisted by
/// the equivariance matrices of g, reduced into the Milnor algebra of f_g.
/// Zero for even-dimensional positive sectors; the constant
/// tr rho0(g) - tr rho1(g) for zero-dimensional sectors.
Poly chern_hh(const EquivariantMF& e, const Sector& sector);

/// The same class computed from 2 tr((dA dB)^{p_g} rho0(g)) / (n_g+1)!
/// (restricted to the fixed locus). Independent route used to cross-check
/// chern_hh on odd-dimensional sectors.
Poly chern_pv(const EquivariantMF& e, const Sector& sector);

/// Coordinates of a reduced sector value over the sector's standard monomial
/// basis; a single coordinate for zero-dimensional sectors.
std::vector<Scalar> chern_coordinates(const Poly& value, const Sector& sector);

}  // namespace emf
