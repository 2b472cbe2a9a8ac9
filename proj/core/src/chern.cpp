#include "emf/chern.hpp"

#include <bit>

namespace emf {

int koszul_sign(uint32_t s, uint32_t t) {
  if (s & t) return 0;
  // Count pairs (i in s, j in t) with i > j: each is one transposition.
  int inversions = 0;
  for (uint32_t rest = t; rest; rest &= rest - 1) {
    uint32_t j = rest & -rest;
    inversions += std::popcount(s & ~(j | (j - 1)));
  }
  return inversions % 2 ? -1 : 1;
}

void form_add_inplace(FormPoly& a, const FormPoly& b) {
  for (const auto& [mask, p] : b) {
    auto it = a.find(mask);
    if (it == a.end()) {
      if (!p.is_zero()) a.emplace(mask, p);
    } else {
      it->second += p;
      if (it->second.is_zero()) a.erase(it);
    }
  }
}

FormPoly form_mul(const FormPoly& a, const FormPoly& b) {
  FormPoly out;
  for (const auto& [s, ps] : a)
    for (const auto& [t, pt] : b) {
      int sign = koszul_sign(s, t);
      if (sign == 0) continue;
      Poly prod = ps * pt;
      if (prod.is_zero()) continue;
      if (sign < 0) prod = -prod;
      auto it = out.find(s | t);
      if (it == out.end()) {
        out.emplace(s | t, std::move(prod));
      } else {
        it->second += prod;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

FormMatrix fm_mul(const FormMatrix& a, const FormMatrix& b) {
  size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
  FormMatrix r(n, std::vector<FormPoly>(p));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].empty()) continue;
      for (size_t j = 0; j < p; ++j) form_add_inplace(r[i][j], form_mul(a[i][t], b[t][j]));
    }
  return r;
}

FormMatrix fm_d(const PolyMatrix& m) {
  size_t n = m.size(), c = n ? m[0].size() : 0;
  FormMatrix r(n, std::vector<FormPoly>(c));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < c; ++j) {
      size_t nv = m[i][j].ring()->vars.size();
      for (size_t v = 0; v < nv; ++v) {
        Poly d = m[i][j].derivative(v);
        if (!d.is_zero()) r[i][j].emplace(uint32_t(1) << v, std::move(d));
      }
    }
  return r;
}

namespace {

// tr(M * rho) picking only the top-degree form coefficient of each entry.
Poly top_trace(const FormMatrix& m, const ScalarMatrix& rho, uint32_t top_mask,
               const RingPtr& ring) {
  Poly out = Poly::zero(ring);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) {
      auto it = m[i][j].find(top_mask);
      if (it == m[i][j].end()) continue;
      if (rho.at(j, i).is_zero()) continue;
      out += it->second * Poly::constant(ring, rho.at(j, i));
    }
  return out;
}

Scalar inverse_factorial(const FieldPtr& field, int k) {
  Rational r(1);
  for (int i = 2; i <= k; ++i) r /= i;
  return Scalar::from_rational(field, r);
}

Poly zero_dim_supertrace(const EquivariantMF& e, const Sector& sector) {
  size_t g = sector.element;
  Scalar value = e.rho0[g].trace() - e.rho1[g].trace();
  return Poly::constant(sector.locus.sub_ring, value);
}

}  // namespace

Poly chern_hh(const EquivariantMF& e, const Sector& sector) {
  if (sector.zero_dimensional) return zero_dim_supertrace(e, sector);
  const RingPtr& ring = sector.locus.sub_ring;
  int k = sector.n_g + 1;  // number of fixed-locus variables
  if (k % 2 != 0) return Poly::zero(ring);

  RestrictedMF r = restrict_sector(e, sector);
  FormMatrix dA = fm_d(r.A), dB = fm_d(r.B);
  FormMatrix ab = fm_mul(dA, dB), ba = fm_mul(dB, dA);
  FormMatrix p = ab, q = ba;
  for (int i = 1; i < sector.p_g; ++i) {
    p = fm_mul(p, ab);
    q = fm_mul(q, ba);
  }
  uint32_t top = (uint32_t(1) << k) - 1;
  size_t g = sector.element;
  Poly str = top_trace(p, e.rho0[g], top, ring) - top_trace(q, e.rho1[g], top, ring);
  // (-1)^{n_g+1} = +1 here since k is even.
  Poly value = str * Poly::constant(ring, inverse_factorial(ring->field, k));
  return sector.milnor->normal_form(value);
}

Poly chern_pv(const EquivariantMF& e, const Sector& sector) {
  if (sector.zero_dimensional) return zero_dim_supertrace(e, sector);
  const RingPtr& ring = sector.locus.sub_ring;
  int k = sector.n_g + 1;
  if (k % 2 != 0) return Poly::zero(ring);

  RestrictedMF r = restrict_sector(e, sector);
  FormMatrix ab = fm_mul(fm_d(r.A), fm_d(r.B));
  FormMatrix p = ab;
  for (int i = 1; i < sector.p_g; ++i) p = fm_mul(p, ab);
  uint32_t top = (uint32_t(1) << k) - 1;
  Poly tr = top_trace(p, e.rho0[sector.element], top, ring);
  Scalar two = Scalar::from_int(ring->field, 2);
  Poly value = tr * Poly::constant(ring, two * inverse_factorial(ring->field, k));
  return sector.milnor->normal_form(value);
}

std::vector<Scalar> chern_coordinates(const Poly& value, const Sector& sector) {
  if (sector.zero_dimensional) return {value.constant_term()};
  return sector.milnor->coordinates(value);
}

}  // namespace emf
