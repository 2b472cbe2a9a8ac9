#include "emf/mf.hpp"

#include <sstream>

namespace emf {

PolyMatrix pm_zero(size_t rows, size_t cols, const RingPtr& ring) {
  return PolyMatrix(rows, std::vector<Poly>(cols, Poly::zero(ring)));
}

PolyMatrix pm_identity_times(size_t n, const Poly& f) {
  PolyMatrix m = pm_zero(n, n, f.ring());
  for (size_t i = 0; i < n; ++i) m[i][i] = f;
  return m;
}

PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b) {
  size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
  const RingPtr& ring = n && !a[0].empty() ? a[0][0].ring() : nullptr;
  PolyMatrix r = pm_zero(n, p, ring);
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < p; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

PolyMatrix pm_add(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

PolyMatrix pm_neg(const PolyMatrix& a) {
  PolyMatrix r = a;
  for (auto& row : r)
    for (auto& e : row) e = -e;
  return r;
}

PolyMatrix pm_transpose(const PolyMatrix& a) {
  size_t n = a.size(), m = n ? a[0].size() : 0;
  PolyMatrix r(m, std::vector<Poly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
  return r;
}

PolyMatrix pm_from_scalar(const ScalarMatrix& m, const RingPtr& ring) {
  PolyMatrix r = pm_zero(m.rows(), m.cols(), ring);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r[i][j] = Poly::constant(ring, m.at(i, j));
  return r;
}

bool pm_equal(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

PolyMatrix pm_act(const PolyMatrix& a, const ScalarMatrix& M) {
  PolyMatrix r = a;
  for (auto& row : r)
    for (auto& e : row) e = act_linear(e, M);
  return r;
}

PolyMatrix pm_kron(const PolyMatrix& a, const PolyMatrix& b) {
  size_t ar = a.size(), ac = ar ? a[0].size() : 0;
  size_t br = b.size(), bc = br ? b[0].size() : 0;
  const RingPtr& ring = ar && ac ? a[0][0].ring() : nullptr;
  PolyMatrix r = pm_zero(ar * br, ac * bc, ring);
  for (size_t i = 0; i < ar; ++i)
    for (size_t j = 0; j < ac; ++j) {
      if (a[i][j].is_zero()) continue;
      for (size_t k = 0; k < br; ++k)
        for (size_t l = 0; l < bc; ++l) r[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    }
  return r;
}

ScalarMatrix sm_kron(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
  return r;
}

std::vector<std::string> validate_mf(const EquivariantMF& e, const Poly& f,
                                     const GroupAction& group) {
  std::vector<std::string> issues;
  size_t r = e.rank;
  const RingPtr& ring = f.ring();

  auto shape_ok = [&](const PolyMatrix& m) {
    if (m.size() != r) return false;
    for (const auto& row : m)
      if (row.size() != r) return false;
    return true;
  };
  if (!shape_ok(e.A) || !shape_ok(e.B)) {
    issues.push_back("A or B is not " + std::to_string(r) + "x" + std::to_string(r));
    return issues;
  }

  auto check_product = [&](const PolyMatrix& p, const char* name) {
    PolyMatrix target = pm_identity_times(r, f);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j)
        if (p[i][j] != target[i][j]) {
          std::ostringstream os;
          os << name << " != f*I at entry (" << i + 1 << "," << j + 1 << "): got "
             << p[i][j].str();
          issues.push_back(os.str());
        }
  };
  check_product(pm_mul(e.A, e.B), "A*B");
  check_product(pm_mul(e.B, e.A), "B*A");

  size_t N = group.size();
  if (e.rho0.size() != N || e.rho1.size() != N) {
    issues.push_back("equivariance matrices missing for some group elements");
    return issues;
  }
  for (size_t a = 0; a < N; ++a)
    for (unsigned gi = 0; gi < group.num_generators(); ++gi) {
      size_t gen = group.generator_index(gi);
      size_t ag = group.mul(a, gen);
      if (e.rho0[ag] != e.rho0[a] * e.rho0[gen])
        issues.push_back("rho0 is not a homomorphism");
      if (e.rho1[ag] != e.rho1[a] * e.rho1[gen])
        issues.push_back("rho1 is not a homomorphism");
    }

  // A maps the odd piece (rho1) to the even piece (rho0); B the other way.
  for (unsigned gi = 0; gi < group.num_generators(); ++gi) {
    size_t gen = group.generator_index(gi);
    const ScalarMatrix& M = group.matrix(gen);
    PolyMatrix lhsA = pm_mul(pm_from_scalar(e.rho0[gen], ring), pm_act(e.A, M));
    PolyMatrix rhsA = pm_mul(e.A, pm_from_scalar(e.rho1[gen], ring));
    if (!pm_equal(lhsA, rhsA))
      issues.push_back("equivariance fails for A on generator " + std::to_string(gi + 1));
    PolyMatrix lhsB = pm_mul(pm_from_scalar(e.rho1[gen], ring), pm_act(e.B, M));
    PolyMatrix rhsB = pm_mul(e.B, pm_from_scalar(e.rho0[gen], ring));
    if (!pm_equal(lhsB, rhsB))
      issues.push_back("equivariance fails for B on generator " + std::to_string(gi + 1));
  }
  return issues;
}

EquivariantMF make_mf(std::string label, PolyMatrix A, PolyMatrix B,
                      const std::vector<ScalarMatrix>& rho0_gens,
                      const std::vector<ScalarMatrix>& rho1_gens, const GroupAction& group) {
  EquivariantMF e;
  e.label = std::move(label);
  e.rank = A.size();
  e.A = std::move(A);
  e.B = std::move(B);
  e.rho0 = extend_representation(group, rho0_gens);
  e.rho1 = extend_representation(group, rho1_gens);
  // zero-generator groups still need identity matrices of the right size
  if (group.num_generators() == 0) {
    const FieldPtr& field = group.ring()->field;
    e.rho0.assign(1, ScalarMatrix::identity(e.rank, field));
    e.rho1.assign(1, ScalarMatrix::identity(e.rank, field));
  }
  return e;
}

EquivariantMF dual_shifted(const EquivariantMF& e, const GroupAction& group) {
  EquivariantMF d;
  d.label = e.label + "^*";
  d.rank = e.rank;
  d.A = pm_transpose(e.B);
  d.B = pm_transpose(e.A);
  size_t N = group.size();
  d.rho0.reserve(N);
  d.rho1.reserve(N);
  for (size_t g = 0; g < N; ++g) {
    d.rho0.push_back(e.rho0[group.inverse(g)].transpose());
    d.rho1.push_back(e.rho1[group.inverse(g)].transpose());
  }
  return d;
}

EquivariantMF tensor_rep(const EquivariantMF& e, const std::vector<ScalarMatrix>& rho,
                         const GroupAction& group) {
  size_t N = group.size();
  if (rho.size() != N) throw validation_error("representation not given per element");
  size_t d = rho[0].rows();
  const RingPtr& ring = e.A.empty() ? nullptr : e.A[0][0].ring();
  PolyMatrix id_d = pm_identity_times(d, Poly::constant(ring, Scalar::one(ring->field)));

  EquivariantMF t;
  t.label = e.label + "(x)rep";
  t.rank = e.rank * d;
  t.A = pm_kron(e.A, id_d);
  t.B = pm_kron(e.B, id_d);
  for (size_t g = 0; g < N; ++g) {
    t.rho0.push_back(sm_kron(e.rho0[g], rho[g]));
    t.rho1.push_back(sm_kron(e.rho1[g], rho[g]));
  }
  return t;
}

EquivariantMF direct_sum(const EquivariantMF& a, const EquivariantMF& b,
                         const GroupAction& group) {
  const RingPtr& ring = a.A.empty() ? (b.A.empty() ? nullptr : b.A[0][0].ring())
                                    : a.A[0][0].ring();
  size_t r = a.rank + b.rank;
  EquivariantMF s;
  s.label = a.label + "(+)" + b.label;
  s.rank = r;
  s.A = pm_zero(r, r, ring);
  s.B = pm_zero(r, r, ring);
  for (size_t i = 0; i < a.rank; ++i)
    for (size_t j = 0; j < a.rank; ++j) {
      s.A[i][j] = a.A[i][j];
      s.B[i][j] = a.B[i][j];
    }
  for (size_t i = 0; i < b.rank; ++i)
    for (size_t j = 0; j < b.rank; ++j) {
      s.A[a.rank + i][a.rank + j] = b.A[i][j];
      s.B[a.rank + i][a.rank + j] = b.B[i][j];
    }
  const FieldPtr& field = group.ring()->field;
  for (size_t g = 0; g < group.size(); ++g) {
    ScalarMatrix r0(r, r, field), r1(r, r, field);
    for (size_t i = 0; i < a.rank; ++i)
      for (size_t j = 0; j < a.rank; ++j) {
        r0.at(i, j) = a.rho0[g].at(i, j);
        r1.at(i, j) = a.rho1[g].at(i, j);
      }
    for (size_t i = 0; i < b.rank; ++i)
      for (size_t j = 0; j < b.rank; ++j) {
        r0.at(a.rank + i, a.rank + j) = b.rho0[g].at(i, j);
        r1.at(a.rank + i, a.rank + j) = b.rho1[g].at(i, j);
      }
    s.rho0.push_back(std::move(r0));
    s.rho1.push_back(std::move(r1));
  }
  return s;
}

namespace {

PolyMatrix pm_embed(const PolyMatrix& m, const RingPtr& joint, const std::vector<size_t>& embed) {
  std::vector<Poly> images;
  for (size_t idx : embed) images.push_back(Poly::variable(joint, idx));
  PolyMatrix out = pm_zero(m.size(), m.empty() ? 0 : m[0].size(), joint);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) out[i][j] = m[i][j].substitute(images, joint);
  return out;
}

// Block assembly helper: writes src into dst at (row, col).
void pm_paste(PolyMatrix& dst, const PolyMatrix& src, size_t row, size_t col) {
  for (size_t i = 0; i < src.size(); ++i)
    for (size_t j = 0; j < src[i].size(); ++j) dst[row + i][col + j] = src[i][j];
}

void sm_paste(ScalarMatrix& dst, const ScalarMatrix& src, size_t row, size_t col) {
  for (size_t i = 0; i < src.rows(); ++i)
    for (size_t j = 0; j < src.cols(); ++j) dst.at(row + i, col + j) = src.at(i, j);
}

}  // namespace

EquivariantMF external_tensor(const EquivariantMF& e, const EquivariantMF& f,
                              const RingPtr& joint_ring, const std::vector<size_t>& embed_e,
                              const std::vector<size_t>& embed_f, const GroupAction& group) {
  for (size_t a : embed_e)
    for (size_t b : embed_f)
      if (a == b) throw validation_error("external tensor factors share a variable");

  const FieldPtr& field = joint_ring->field;
  size_t re = e.rank, rf = f.rank;
  PolyMatrix Ae = pm_embed(e.A, joint_ring, embed_e);
  PolyMatrix Be = pm_embed(e.B, joint_ring, embed_e);
  PolyMatrix Af = pm_embed(f.A, joint_ring, embed_f);
  PolyMatrix Bf = pm_embed(f.B, joint_ring, embed_f);
  Poly one = Poly::constant(joint_ring, Scalar::one(field));
  PolyMatrix Ie = pm_identity_times(re, one);
  PolyMatrix If = pm_identity_times(rf, one);

  // Graded tensor differential with Koszul signs. Basis order:
  // even part = E0(x)F0 then E1(x)F1; odd part = E1(x)F0 then E0(x)F1.
  size_t r = 2 * re * rf;
  EquivariantMF t;
  t.label = e.label + "(x)" + f.label;
  t.rank = r;
  t.A = pm_zero(r, r, joint_ring);
  t.B = pm_zero(r, r, joint_ring);
  size_t half = re * rf;
  pm_paste(t.A, pm_kron(Ae, If), 0, 0);
  pm_paste(t.A, pm_kron(Ie, Af), 0, half);
  pm_paste(t.A, pm_neg(pm_kron(Ie, Bf)), half, 0);
  pm_paste(t.A, pm_kron(Be, If), half, half);

  pm_paste(t.B, pm_kron(Be, If), 0, 0);
  pm_paste(t.B, pm_neg(pm_kron(Ie, Af)), 0, half);
  pm_paste(t.B, pm_kron(Ie, Bf), half, 0);
  pm_paste(t.B, pm_kron(Ae, If), half, half);

  for (size_t g = 0; g < group.size(); ++g) {
    ScalarMatrix r0(r, r, field), r1(r, r, field);
    sm_paste(r0, sm_kron(e.rho0[g], f.rho0[g]), 0, 0);
    sm_paste(r0, sm_kron(e.rho1[g], f.rho1[g]), half, half);
    sm_paste(r1, sm_kron(e.rho1[g], f.rho0[g]), 0, 0);
    sm_paste(r1, sm_kron(e.rho0[g], f.rho1[g]), half, half);
    t.rho0.push_back(std::move(r0));
    t.rho1.push_back(std::move(r1));
  }
  return t;
}

RestrictedMF restrict_sector(const EquivariantMF& e, const Sector& sector) {
  RestrictedMF out;
  const RingPtr& sub = sector.locus.sub_ring;
  out.A = pm_zero(e.rank, e.rank, sub);
  out.B = pm_zero(e.rank, e.rank, sub);
  for (size_t i = 0; i < e.rank; ++i)
    for (size_t j = 0; j < e.rank; ++j) {
      out.A[i][j] = restrict_to_fixed(e.A[i][j], sector.locus);
      out.B[i][j] = restrict_to_fixed(e.B[i][j], sector.locus);
    }
  return out;
}

}  // namespace emf
