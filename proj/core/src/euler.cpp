#include "emf/euler.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <tuple>

namespace emf {

Scalar euler_hrr(const EquivariantMF& ep, const EquivariantMF& e, const GroupAction& group,
                 const std::vector<Sector>& sectors) {
  const FieldPtr& field = group.ring()->field;
  Scalar order = Scalar::from_int(field, static_cast<long>(group.size()));
  Scalar total = Scalar::zero(field);
  for (size_t h = 0; h < group.size(); ++h) {
    const Sector& sec = sectors[h];
    if (!sec.zero_dimensional && (sec.n_g + 1) % 2 != 0) continue;  // even n_h
    Poly ch_e = chern_hh(e, sec);
    Poly ch_ep = chern_hh(ep, sectors[group.inverse(h)]);
    Scalar paired;
    if (sec.zero_dimensional) {
      paired = ch_ep.constant_term() * ch_e.constant_term();
    } else {
      // The fixed loci of h and h^{-1} carry identical adapted coordinates
      // (same kernel, same canonical basis), so the classes pair in the
      // Milnor algebra of f_h.
      paired = sec.residue->pairing(transport(ch_ep, sec.locus.sub_ring), ch_e);
    }
    Scalar sign = Scalar::from_int(field, sec.parity_sign);
    total += sign * paired / (order * sec.twist_det);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Morphism-complex Euler number.
//
// Hom(E', E) splits as even maps (phi0: E'0 -> E0, phi1: E'1 -> E1) and odd
// maps (sigma: E'1 -> E0, tau: E'0 -> E1) with
//   D0(phi0, phi1) = (A phi1 - phi0 A',  B phi0 - phi1 B')
//   D1(sigma, tau) = (A tau + sigma B',  B sigma + tau A').
// D1 D0 = D0 D1 = 0 because both differentials square to the same f.
// ---------------------------------------------------------------------------

namespace {

struct BasisElem {
  int block;   // 0 or 1 within the parity (phi0/phi1 resp. sigma/tau)
  size_t i, j; // target row, source column
  Monomial m;
};

struct HomBasis {
  std::vector<BasisElem> elems;
  std::map<std::tuple<int, size_t, size_t, Monomial>, size_t> index;

  void push(int block, size_t i, size_t j, Monomial m) {
    index.emplace(std::make_tuple(block, i, j, m), elems.size());
    elems.push_back({block, i, j, std::move(m)});
  }
  size_t size() const { return elems.size(); }
};

// All monomials of exact weighted degree w (weights strictly positive).
void monomials_of_weight(const std::vector<long>& weights, long w, size_t var, Monomial& cur,
                         std::vector<Monomial>& out) {
  if (var == weights.size()) {
    if (w == 0) out.push_back(cur);
    return;
  }
  if (w < 0) return;
  for (long k = 0; k * weights[var] <= w; ++k) {
    cur[var] = static_cast<uint16_t>(k);
    monomials_of_weight(weights, w - k * weights[var], var + 1, cur, out);
  }
  cur[var] = 0;
}

std::vector<Monomial> monomials_of_weight(const std::vector<long>& weights, long w) {
  std::vector<Monomial> out;
  if (w < 0) return out;
  Monomial cur(weights.size(), 0);
  monomials_of_weight(weights, w, 0, cur, out);
  return out;
}

// All monomials of total degree <= n.
std::vector<Monomial> monomials_up_to(size_t nvars, unsigned n) {
  std::vector<Monomial> out;
  std::vector<long> weights(nvars, 1);
  for (unsigned w = 0; w <= n; ++w) {
    auto layer = monomials_of_weight(weights, static_cast<long>(w));
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// Internal shifts s0_i, s1_j of a factorization under the grading:
// wdeg(A_ij) = c + s1_j - s0_i and wdeg(B_ij) = c + s0_j - s1_i.
// Assigned by flood fill over nonzero entries; every entry must be
// weighted-homogeneous and every shift equation consistent.
struct Shifts {
  std::vector<long> s0, s1;
};

std::optional<Shifts> assign_shifts(const EquivariantMF& e, const std::vector<long>& weights,
                                    long c) {
  size_t r = e.rank;
  Shifts sh;
  sh.s0.assign(r, 0);
  sh.s1.assign(r, 0);
  std::vector<bool> seen0(r, false), seen1(r, false);

  auto entry_degree = [&](const Poly& p) -> std::optional<long> {
    if (p.is_zero()) return std::nullopt;
    return weighted_degree(p, weights);
  };

  // propose(parity, index, value): assign or check one shift; enqueue on
  // first sight. Returns false on an inconsistency.
  std::vector<std::pair<int, size_t>> queue;
  bool ok = true;
  auto propose = [&](int parity, size_t idx, long value) {
    std::vector<bool>& seen = parity == 0 ? seen0 : seen1;
    std::vector<long>& s = parity == 0 ? sh.s0 : sh.s1;
    if (!seen[idx]) {
      seen[idx] = true;
      s[idx] = value;
      queue.emplace_back(parity, idx);
    } else if (s[idx] != value) {
      ok = false;
    }
  };

  for (size_t start = 0; start < r; ++start) {
    if (!seen0[start]) propose(0, start, 0);
    while (ok && !queue.empty()) {
      auto [parity, idx] = queue.back();
      queue.pop_back();
      for (size_t other = 0; other < r && ok; ++other) {
        if (parity == 0) {
          // A_{idx,other}: wdeg = c + s1_other - s0_idx
          if (!e.A[idx][other].is_zero()) {
            auto d = entry_degree(e.A[idx][other]);
            if (!d) return std::nullopt;
            propose(1, other, sh.s0[idx] + *d - c);
          }
          // B_{other,idx}: wdeg = c + s0_idx - s1_other
          if (!e.B[other][idx].is_zero()) {
            auto d = entry_degree(e.B[other][idx]);
            if (!d) return std::nullopt;
            propose(1, other, sh.s0[idx] - *d + c);
          }
        } else {
          // A_{other,idx}: wdeg = c + s1_idx - s0_other
          if (!e.A[other][idx].is_zero()) {
            auto d = entry_degree(e.A[other][idx]);
            if (!d) return std::nullopt;
            propose(0, other, sh.s1[idx] - *d + c);
          }
          // B_{idx,other}: wdeg = c + s0_other - s1_idx
          if (!e.B[idx][other].is_zero()) {
            auto d = entry_degree(e.B[idx][other]);
            if (!d) return std::nullopt;
            propose(0, other, sh.s1[idx] + *d - c);
          }
        }
      }
    }
    if (!ok) return std::nullopt;
  }
  for (size_t j = 0; j < r; ++j)
    if (!seen1[j]) sh.s1[j] = 0;  // odd component with zero row and column
  return sh;
}

// The four blocks of one parity: target index space and source index space
// plus the degree offset of entry (i, j).
struct BlockSpec {
  size_t rows, cols;
  const std::vector<long>* tgt_shift;
  const std::vector<long>* src_shift;
};

HomBasis hom_basis_graded(const std::array<BlockSpec, 2>& blocks, const std::vector<long>& weights,
                          long t) {
  HomBasis basis;
  for (int b = 0; b < 2; ++b) {
    const BlockSpec& spec = blocks[b];
    for (size_t i = 0; i < spec.rows; ++i)
      for (size_t j = 0; j < spec.cols; ++j) {
        long w = t + (*spec.src_shift)[j] - (*spec.tgt_shift)[i];
        for (auto& m : monomials_of_weight(weights, w)) basis.push(b, i, j, std::move(m));
      }
  }
  return basis;
}

HomBasis hom_basis_filtered(size_t rows0, size_t cols0, size_t rows1, size_t cols1, size_t nvars,
                            unsigned cutoff) {
  HomBasis basis;
  auto monos = monomials_up_to(nvars, cutoff);
  for (size_t i = 0; i < rows0; ++i)
    for (size_t j = 0; j < cols0; ++j)
      for (const auto& m : monos) basis.push(0, i, j, m);
  for (size_t i = 0; i < rows1; ++i)
    for (size_t j = 0; j < cols1; ++j)
      for (const auto& m : monos) basis.push(1, i, j, m);
  return basis;
}

// Accumulates poly * coeff into the column `col` of `mat`, locating each term
// in `out`'s index (terms absent from the output basis must not arise).
void scatter(ScalarMatrix& mat, const HomBasis& out, int block, size_t i, size_t j,
             const Poly& p, size_t col) {
  for (const auto& [m, c] : p.terms()) {
    auto it = out.index.find(std::make_tuple(block, i, j, m));
    if (it == out.index.end())
      throw computation_error("morphism complex: image term falls outside the output basis");
    mat.at(it->second, col) += c;
  }
}

using Scatter = void (*)(ScalarMatrix&, const HomBasis&, int, size_t, size_t, const Poly&, size_t);

// Matrix of D0: even basis -> odd basis.
//   sigma = A phi1 - phi0 A',  tau = B phi0 - phi1 B'.
ScalarMatrix differential_even(const HomBasis& in, const HomBasis& out, const EquivariantMF& ep,
                               const EquivariantMF& e, const RingPtr& ring, Scatter put) {
  ScalarMatrix mat(out.size(), in.size(), ring->field);
  for (size_t col = 0; col < in.size(); ++col) {
    const BasisElem& el = in.elems[col];
    Poly mono = Poly::monomial(ring, el.m, Scalar::one(ring->field));
    if (el.block == 0) {  // phi0 at (i, j)
      for (size_t l = 0; l < ep.rank; ++l) {
        Poly v = mono * ep.A[el.j][l];  // -(phi0 A')_{i,l}
        if (!v.is_zero()) put(mat, out, 0, el.i, l, -v, col);
      }
      for (size_t k = 0; k < e.rank; ++k) {
        Poly v = e.B[k][el.i] * mono;  // (B phi0)_{k,j}
        if (!v.is_zero()) put(mat, out, 1, k, el.j, v, col);
      }
    } else {  // phi1 at (i, j)
      for (size_t k = 0; k < e.rank; ++k) {
        Poly v = e.A[k][el.i] * mono;  // (A phi1)_{k,j}
        if (!v.is_zero()) put(mat, out, 0, k, el.j, v, col);
      }
      for (size_t l = 0; l < ep.rank; ++l) {
        Poly v = mono * ep.B[el.j][l];  // -(phi1 B')_{i,l}
        if (!v.is_zero()) put(mat, out, 1, el.i, l, -v, col);
      }
    }
  }
  return mat;
}

// Matrix of D1: odd basis -> even basis.
//   phi0 = A tau + sigma B',  phi1 = B sigma + tau A'.
ScalarMatrix differential_odd(const HomBasis& in, const HomBasis& out, const EquivariantMF& ep,
                              const EquivariantMF& e, const RingPtr& ring, Scatter put) {
  ScalarMatrix mat(out.size(), in.size(), ring->field);
  for (size_t col = 0; col < in.size(); ++col) {
    const BasisElem& el = in.elems[col];
    Poly mono = Poly::monomial(ring, el.m, Scalar::one(ring->field));
    if (el.block == 0) {  // sigma at (i, j): E'1 -> E0
      for (size_t l = 0; l < ep.rank; ++l) {
        Poly v = mono * ep.B[el.j][l];  // (sigma B')_{i,l}
        if (!v.is_zero()) put(mat, out, 0, el.i, l, v, col);
      }
      for (size_t k = 0; k < e.rank; ++k) {
        Poly v = e.B[k][el.i] * mono;  // (B sigma)_{k,j}
        if (!v.is_zero()) put(mat, out, 1, k, el.j, v, col);
      }
    } else {  // tau at (i, j): E'0 -> E1
      for (size_t k = 0; k < e.rank; ++k) {
        Poly v = e.A[k][el.i] * mono;  // (A tau)_{k,j}
        if (!v.is_zero()) put(mat, out, 0, k, el.j, v, col);
      }
      for (size_t l = 0; l < ep.rank; ++l) {
        Poly v = mono * ep.A[el.j][l];  // (tau A')_{i,l}
        if (!v.is_zero()) put(mat, out, 1, el.i, l, v, col);
      }
    }
  }
  return mat;
}

// Matrix on one basis of the averaging projector (1/|G|) sum_g rho_tgt(g)
// act_g(.) rho_src(g)^{-1}; its fixed space is the invariant subspace.
// tgt/src pick out which equivariance matrices apply to each block:
//   even: block 0 = (rho0_E, rho0_E'), block 1 = (rho1_E, rho1_E')
//   odd:  block 0 = (rho0_E, rho1_E'), block 1 = (rho1_E, rho0_E').
ScalarMatrix averaging_projector(const HomBasis& basis, const GroupAction& group,
                                 const std::array<const std::vector<ScalarMatrix>*, 2>& tgt,
                                 const std::array<const std::vector<ScalarMatrix>*, 2>& src) {
  const RingPtr& ring = group.ring();
  const FieldPtr& field = ring->field;
  size_t n = basis.size();
  ScalarMatrix sum(n, n, field);
  for (size_t g = 0; g < group.size(); ++g) {
    const ScalarMatrix& M = group.matrix(g);
    size_t ginv = group.inverse(g);
    for (size_t col = 0; col < n; ++col) {
      const BasisElem& el = basis.elems[col];
      const ScalarMatrix& rt = (*tgt[el.block])[g];
      const ScalarMatrix& rs = (*src[el.block])[ginv];
      Poly acted = act_linear(Poly::monomial(ring, el.m, Scalar::one(field)), M);
      for (size_t k = 0; k < rt.rows(); ++k) {
        if (rt.at(k, el.i).is_zero()) continue;
        for (size_t l = 0; l < rs.cols(); ++l) {
          Scalar c = rt.at(k, el.i) * rs.at(el.j, l);
          if (c.is_zero()) continue;
          for (const auto& [m, pc] : acted.terms()) {
            auto it = basis.index.find(std::make_tuple(el.block, k, l, m));
            if (it == basis.index.end())
              throw computation_error(
                  "morphism complex: group action does not preserve the degree decomposition");
            sum.at(it->second, col) += c * pc;
          }
        }
      }
    }
  }
  Scalar inv_order = Scalar::from_int(field, static_cast<long>(group.size())).inverse();
  return sum * inv_order;
}

// Column basis of the fixed space of a projector P (kernel of P - I).
ScalarMatrix fixed_space(const ScalarMatrix& p) {
  ScalarMatrix shifted = p - ScalarMatrix::identity(p.rows(), p.field());
  auto cols = shifted.kernel();
  ScalarMatrix v(p.rows(), cols.size(), p.field());
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < p.rows(); ++i) v.at(i, j) = cols[j][i];
  return v;
}

struct DegreePiece {
  HomBasis even, odd;
  ScalarMatrix even_inv, odd_inv;  // invariant bases as columns
};

}  // namespace

long euler_oracle(const EquivariantMF& ep, const EquivariantMF& e, const GroupAction& group,
                  const Poly& f, std::optional<unsigned> cutoff) {
  if (ep.rank == 0 || e.rank == 0) return 0;
  const RingPtr& ring = f.ring();
  const FieldPtr& field = ring->field;
  size_t nvars = ring->nvars();

  auto weights_opt = quasi_weights(f);
  std::optional<Shifts> she, shep;
  long c = 0;
  std::vector<long> weights;
  if (weights_opt) {
    weights = *weights_opt;
    long d = *weighted_degree(f, weights);
    if (d % 2 != 0) {  // double so the differential degree is integral
      for (auto& w : weights) w *= 2;
      d *= 2;
    }
    c = d / 2;
    she = assign_shifts(e, weights, c);
    shep = assign_shifts(ep, weights, c);
  }

  const std::array<const std::vector<ScalarMatrix>*, 2> even_tgt{&e.rho0, &e.rho1};
  const std::array<const std::vector<ScalarMatrix>*, 2> even_src{&ep.rho0, &ep.rho1};
  const std::array<const std::vector<ScalarMatrix>*, 2> odd_tgt{&e.rho0, &e.rho1};
  const std::array<const std::vector<ScalarMatrix>*, 2> odd_src{&ep.rho1, &ep.rho0};

  if (weights_opt && she && shep) {
    // Graded path. The group must preserve the weights for the degree
    // pieces to be G-stable.
    for (size_t g = 0; g < group.size(); ++g) {
      const ScalarMatrix& M = group.matrix(g);
      for (size_t i = 0; i < nvars; ++i)
        for (size_t j = 0; j < nvars; ++j)
          if (!M.at(i, j).is_zero() && weights[i] != weights[j])
            throw computation_error("morphism complex: group action does not preserve weights");
    }

    const std::array<BlockSpec, 2> even_blocks{
        BlockSpec{e.rank, ep.rank, &she->s0, &shep->s0},
        BlockSpec{e.rank, ep.rank, &she->s1, &shep->s1}};
    const std::array<BlockSpec, 2> odd_blocks{
        BlockSpec{e.rank, ep.rank, &she->s0, &shep->s1},
        BlockSpec{e.rank, ep.rank, &she->s1, &shep->s0}};

    long shift_span = 0;
    for (long a : she->s0) shift_span = std::max(shift_span, std::abs(a));
    for (long a : she->s1) shift_span = std::max(shift_span, std::abs(a));
    for (long a : shep->s0) shift_span = std::max(shift_span, std::abs(a));
    for (long a : shep->s1) shift_span = std::max(shift_span, std::abs(a));
    long t_min = -2 * shift_span;

    long sum_w = 0;
    for (long w : weights) sum_w += w;
    long hess_deg = std::max<long>(0, static_cast<long>(nvars) * 2 * c - 2 * sum_w);
    long entry_deg = 0;
    auto bump = [&](const PolyMatrix& m) {
      for (const auto& row : m)
        for (const auto& p : row)
          if (!p.is_zero()) entry_deg = std::max(entry_deg, *weighted_degree(p, weights));
    };
    bump(e.A);
    bump(e.B);
    bump(ep.A);
    bump(ep.B);
    long t_bound = 2 * hess_deg + entry_deg + 2 * shift_span;
    long window = 2 * c;

    std::map<long, DegreePiece> pieces;
    auto piece = [&](long t) -> DegreePiece& {
      auto it = pieces.find(t);
      if (it != pieces.end()) return it->second;
      DegreePiece p;
      p.even = hom_basis_graded(even_blocks, weights, t);
      p.odd = hom_basis_graded(odd_blocks, weights, t);
      p.even_inv = fixed_space(averaging_projector(p.even, group, even_tgt, even_src));
      p.odd_inv = fixed_space(averaging_projector(p.odd, group, odd_tgt, odd_src));
      return pieces.emplace(t, std::move(p)).first->second;
    };

    auto rank_d0 = [&](long t) -> size_t {
      DegreePiece& in = piece(t);
      if (in.even_inv.cols() == 0) return 0;
      DegreePiece& out = piece(t + c);
      ScalarMatrix d = differential_even(in.even, out.odd, ep, e, ring, scatter);
      return (d * in.even_inv).rank();
    };
    auto rank_d1 = [&](long t) -> size_t {
      DegreePiece& in = piece(t);
      if (in.odd_inv.cols() == 0) return 0;
      DegreePiece& out = piece(t + c);
      ScalarMatrix d = differential_odd(in.odd, out.even, ep, e, ring, scatter);
      return (d * in.odd_inv).rank();
    };

    long chi = 0;
    bool tail_clean = true;
    for (long t = t_min; t <= t_bound + window; ++t) {
      size_t dim0 = piece(t).even_inv.cols();
      size_t dim1 = piece(t).odd_inv.cols();
      long h0 = static_cast<long>(dim0) - static_cast<long>(rank_d0(t)) -
                static_cast<long>(rank_d1(t - c));
      long h1 = static_cast<long>(dim1) - static_cast<long>(rank_d1(t)) -
                static_cast<long>(rank_d0(t - c));
      if (t <= t_bound) {
        chi += h0 - h1;
      } else if (h0 != 0 || h1 != 0) {
        tail_clean = false;
      }
    }
    if (!tail_clean)
      throw computation_error(
          "morphism complex: homology did not vanish beyond the degree bound");
    return chi;
  }

  if (!cutoff)
    throw computation_error(
        "morphism complex: potential is not quasi-homogeneous (or the factorization is not "
        "gradable); supply a degree cutoff for the filtered computation");

  // Filtered path: Euler numbers of the complexes truncated at total degree
  // N must agree for three consecutive cutoffs.
  unsigned entry_deg = 0;
  auto bump = [&](const PolyMatrix& m) {
    for (const auto& row : m)
      for (const auto& p : row)
        if (!p.is_zero()) entry_deg = std::max(entry_deg, p.degree());
  };
  bump(e.A);
  bump(e.B);
  bump(ep.A);
  bump(ep.B);

  auto chi_at = [&](unsigned n) -> long {
    HomBasis even = hom_basis_filtered(e.rank, ep.rank, e.rank, ep.rank, nvars, n);
    HomBasis odd = even;  // identical block shapes either parity
    HomBasis even_lo = hom_basis_filtered(e.rank, ep.rank, e.rank, ep.rank, nvars,
                                          n >= entry_deg ? n - entry_deg : 0);
    HomBasis odd_lo = even_lo;
    HomBasis even_hi = hom_basis_filtered(e.rank, ep.rank, e.rank, ep.rank, nvars, n + entry_deg);
    HomBasis odd_hi = even_hi;

    ScalarMatrix even_inv = fixed_space(averaging_projector(even, group, even_tgt, even_src));
    ScalarMatrix odd_inv = fixed_space(averaging_projector(odd, group, odd_tgt, odd_src));
    ScalarMatrix even_lo_inv =
        fixed_space(averaging_projector(even_lo, group, even_tgt, even_src));
    ScalarMatrix odd_lo_inv = fixed_space(averaging_projector(odd_lo, group, odd_tgt, odd_src));

    ScalarMatrix d0 = differential_even(even, odd_hi, ep, e, ring, scatter);
    ScalarMatrix d1 = differential_odd(odd, even_hi, ep, e, ring, scatter);
    ScalarMatrix d0_lo = differential_even(even_lo, odd_hi, ep, e, ring, scatter);
    ScalarMatrix d1_lo = differential_odd(odd_lo, even_hi, ep, e, ring, scatter);

    long h0 = static_cast<long>(even_inv.cols()) - static_cast<long>((d0 * even_inv).rank()) -
              static_cast<long>((d1_lo * odd_lo_inv).rank());
    long h1 = static_cast<long>(odd_inv.cols()) - static_cast<long>((d1 * odd_inv).rank()) -
              static_cast<long>((d0_lo * even_lo_inv).rank());
    return h0 - h1;
  };

  unsigned n = *cutoff;
  if (n < 2) n = 2;
  long a = chi_at(n - 2), b = chi_at(n - 1), d = chi_at(n);
  if (a != b || b != d)
    throw computation_error("morphism complex: filtered Euler number has not stabilized at the "
                            "supplied cutoff (values " +
                            std::to_string(a) + ", " + std::to_string(b) + ", " +
                            std::to_string(d) + ")");
  return d;
}

PositivityResult sector_positivity(const EquivariantMF& e, const GroupAction& group,
                                   const std::vector<Sector>& sectors, size_t g,
                                   unsigned precision_bits) {
  const Sector& sec = sectors[g];
  if (sec.zero_dimensional || sec.n_g % 2 == 0)
    throw validation_error("sector positivity requires an odd-dimensional sector");
  const FieldPtr& field = group.ring()->field;

  EquivariantMF dual = dual_shifted(e, group);
  Poly ch = chern_pv(e, sec);
  Poly ch_dual = transport(chern_pv(dual, sectors[group.inverse(g)]), sec.locus.sub_ring);
  // Hermitian pairing: conjugate the dual-side class coefficientwise.
  Poly ch_dual_conj = Poly::zero(ch_dual.ring());
  for (const auto& [m, c] : ch_dual.terms()) ch_dual_conj.add_term(m, c.conjugate());
  Scalar paired = sec.residue->pairing(ch_dual_conj, ch);
  Scalar sign_pg = Scalar::from_int(field, sec.p_g % 2 == 0 ? 1 : -1);

  PositivityResult out;
  out.value = sign_pg * paired;
  out.chern_zero = ch.is_zero();
  out.real = out.value.is_real();
  if (out.real) out.sign = out.value.certified_sign(precision_bits);
  return out;
}

GramReport gram_and_kernels(const std::vector<EquivariantMF>& objects, const GroupAction& group,
                            const std::vector<Sector>& sectors) {
  if (objects.empty()) throw validation_error("pairing report requires at least one object");
  const FieldPtr& field = group.ring()->field;
  size_t n = objects.size();

  GramReport report;
  for (const auto& o : objects) report.labels.push_back(o.label);

  ScalarMatrix gram(n, n, field);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) gram.at(i, j) = euler_hrr(objects[i], objects[j], group, sectors);
  report.gram.assign(n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) report.gram[i][j] = gram.at(i, j);

  report.radical_basis = gram.kernel();
  report.left_radical_basis = gram.transpose().kernel();

  // Stacked Chern coordinates: one row per (sector, basis monomial), one
  // column per object; zero rows of even positive-dimensional sectors are
  // included for shape transparency but never affect the kernel.
  std::vector<std::vector<Scalar>> rows;
  for (size_t g = 0; g < group.size(); ++g) {
    const Sector& sec = sectors[g];
    size_t dim = sec.zero_dimensional ? 1 : sec.milnor->basis_monomials.size();
    std::vector<std::vector<Scalar>> block(dim,
                                           std::vector<Scalar>(n, Scalar::zero(field)));
    for (size_t obj = 0; obj < n; ++obj) {
      auto coords = chern_coordinates(chern_hh(objects[obj], sec), sec);
      for (size_t k = 0; k < dim; ++k) block[k][obj] = coords[k];
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }
  report.chern_matrix = rows;

  ScalarMatrix chmat(rows.size(), n, field);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < n; ++j) chmat.at(i, j) = rows[i][j];
  report.chern_kernel_basis = chmat.kernel();

  auto as_rows = [&](const std::vector<std::vector<Scalar>>& vecs) {
    ScalarMatrix m(vecs.size(), n, field);
    for (size_t i = 0; i < vecs.size(); ++i)
      for (size_t j = 0; j < n; ++j) m.at(i, j) = vecs[i][j];
    return m;
  };
  ScalarMatrix rad = as_rows(report.radical_basis);
  ScalarMatrix ker = as_rows(report.chern_kernel_basis);

  report.holds = true;
  if (report.radical_basis.size() != report.chern_kernel_basis.size()) {
    report.holds = false;
    std::ostringstream os;
    os << "dimension mismatch: radical " << report.radical_basis.size() << ", Chern kernel "
       << report.chern_kernel_basis.size();
    report.witness = os.str();
  } else if (!rows_contained_in_span(rad, ker)) {
    report.holds = false;
    report.witness = "a radical vector falls outside the Chern kernel";
  } else if (!rows_contained_in_span(ker, rad)) {
    report.holds = false;
    report.witness = "a Chern kernel vector falls outside the radical";
  }
  return report;
}

}  // namespace emf
