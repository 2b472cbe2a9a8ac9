#include "emf/group.hpp"

#include <algorithm>

namespace emf {

GroupAction::GroupAction(std::vector<ScalarMatrix> generators, const RingPtr& ring,
                         size_t max_order)
    : ring_(ring), generators_(std::move(generators)) {
  size_t n = ring->nvars();
  const FieldPtr& field = ring->field;
  for (const auto& g : generators_) {
    if (g.rows() != n || g.cols() != n)
      throw validation_error("group generator has wrong dimension");
    g.inverse();  // throws if singular
  }

  elements_.push_back(ScalarMatrix::identity(n, field));
  words_.push_back({});

  auto find = [&](const ScalarMatrix& m) -> int {
    for (size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i] == m) return static_cast<int>(i);
    return -1;
  };

  // BFS closure under right multiplication by generators.
  for (size_t i = 0; i < elements_.size(); ++i) {
    for (unsigned gi = 0; gi < generators_.size(); ++gi) {
      ScalarMatrix prod = elements_[i] * generators_[gi];
      if (find(prod) >= 0) continue;
      if (elements_.size() >= max_order)
        throw validation_error("group closure exceeds the order bound");
      std::vector<unsigned> w = words_[i];
      w.push_back(gi);
      elements_.push_back(std::move(prod));
      words_.push_back(std::move(w));
    }
  }

  gen_elem_.resize(generators_.size());
  for (unsigned gi = 0; gi < generators_.size(); ++gi) {
    int idx = find(generators_[gi]);
    if (idx < 0) throw validation_error("generator lost during closure (unexpected)");
    gen_elem_[gi] = static_cast<size_t>(idx);
  }

  size_t N = elements_.size();
  table_.assign(N * N, 0);
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b) {
      int idx = find(elements_[a] * elements_[b]);
      if (idx < 0) throw validation_error("closure not closed (unexpected)");
      table_[a * N + b] = static_cast<size_t>(idx);
    }

  inverse_.assign(N, 0);
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b)
      if (mul(a, b) == 0) inverse_[a] = b;

  // conjugacy classes
  class_of_.assign(N, SIZE_MAX);
  for (size_t a = 0; a < N; ++a) {
    if (class_of_[a] != SIZE_MAX) continue;
    size_t cid = classes_.size();
    std::vector<size_t> cls;
    for (size_t h = 0; h < N; ++h) {
      size_t c = mul(mul(h, a), inverse_[h]);
      if (class_of_[c] == SIZE_MAX) {
        class_of_[c] = cid;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

unsigned GroupAction::element_order(size_t a) const {
  unsigned k = 1;
  size_t cur = a;
  while (cur != 0) {
    cur = mul(cur, a);
    ++k;
  }
  return k;
}

bool GroupAction::is_abelian() const {
  for (size_t a = 0; a < size(); ++a)
    for (size_t b = a + 1; b < size(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

const std::vector<std::vector<Scalar>>& GroupAction::characters() const {
  if (!characters_.empty()) return characters_;
  if (!is_abelian())
    throw computation_error(
        "character table construction implemented for abelian groups only; "
        "supply a character table for non-abelian groups");

  const FieldPtr& field = ring_->field;
  unsigned m = field->order();
  size_t N = size();

  // Discrete log of a root of unity in Q(zeta_m).
  auto dlog = [&](const Scalar& s) -> long {
    for (unsigned t = 0; t < m; ++t)
      if (Scalar::zeta_power(field, t) == s) return t;
    throw computation_error("character value is not an m-th root of unity; "
                            "field order does not cover the group exponent");
  };

  // Incrementally extend characters along the subgroup chain generated by
  // the generators. Subgroup H tracked as element index set; characters as
  // value-per-element over the current H (zero Scalar marks "outside H").
  std::vector<bool> in_H(N, false);
  in_H[0] = true;
  std::vector<std::vector<Scalar>> chars(1, std::vector<Scalar>(N, Scalar::zero(field)));
  chars[0][0] = Scalar::one(field);

  for (size_t gidx : gen_elem_) {
    if (in_H[gidx]) continue;
    // smallest d >= 1 with a^d in H
    unsigned d = 1;
    size_t pw = gidx;
    while (!in_H[pw]) {
      pw = mul(pw, gidx);
      ++d;
    }
    size_t a_to_d = pw;

    std::vector<std::vector<Scalar>> next;
    for (const auto& chi : chars) {
      long t = dlog(chi[a_to_d]);
      // solutions s of d*s = t (mod m): exactly d of them since d | m here
      for (unsigned s = 0; s < m; ++s) {
        if ((static_cast<unsigned long>(d) * s) % m != (static_cast<unsigned long>(t) % m))
          continue;
        Scalar omega = Scalar::zeta_power(field, s);
        std::vector<Scalar> ext(N, Scalar::zero(field));
        Scalar wpow = Scalar::one(field);
        size_t apow = 0;  // identity
        for (unsigned j = 0; j < d; ++j) {
          for (size_t h = 0; h < N; ++h) {
            if (!in_H[h]) continue;
            ext[mul(h, apow)] = chi[h] * wpow;
          }
          wpow *= omega;
          apow = mul(apow, gidx);
        }
        next.push_back(std::move(ext));
      }
    }
    chars = std::move(next);
    // enlarge H
    std::vector<bool> new_in_H(N, false);
    size_t apow = 0;
    for (unsigned j = 0; j < d; ++j) {
      for (size_t h = 0; h < N; ++h)
        if (in_H[h]) new_in_H[mul(h, apow)] = true;
      apow = mul(apow, gidx);
    }
    in_H = std::move(new_in_H);
  }

  if (chars.size() != N)
    throw computation_error("abelian character construction produced wrong count");
  characters_ = std::move(chars);
  return characters_;
}

void GroupAction::check_invariance(const Poly& f) const {
  for (size_t gi = 0; gi < generators_.size(); ++gi) {
    if (act_linear(f, generators_[gi]) != f)
      throw validation_error("potential is not invariant under group generator " +
                             std::to_string(gi + 1));
  }
}

Sector make_sector(const GroupAction& group, size_t g, const Poly& f) {
  Sector s;
  s.element = g;
  const FieldPtr& field = group.ring()->field;
  s.locus = fixed_locus(group.matrix(g), group.ring());
  s.n_g = static_cast<int>(s.locus.fixed_dim) - 1;
  s.zero_dimensional = (s.locus.fixed_dim == 0);
  s.p_g = ((s.n_g + 1) % 2 == 0) ? (s.n_g + 1) / 2 : -1;
  long c2 = static_cast<long>(s.n_g + 1) * s.n_g / 2;  // binom(n_g+1, 2)
  s.parity_sign = (c2 % 2 == 0) ? 1 : -1;

  s.twist_det = Scalar::one(field);
  for (const auto& lambda : s.locus.nonfixed_eigenvalues)
    s.twist_det *= (Scalar::one(field) - lambda);
  if (s.twist_det.is_zero())
    throw validation_error("twist determinant vanishes (unexpected eigenvalue 1)");

  s.f_g = restrict_to_fixed(f, s.locus);
  if (!s.zero_dimensional) {
    s.milnor = milnor_algebra(s.f_g);
    s.residue = ResidueFunctional(*s.milnor);
  }
  return s;
}

std::vector<ScalarMatrix> extend_representation(const GroupAction& group,
                                                const std::vector<ScalarMatrix>& rho_generators) {
  if (rho_generators.size() != group.num_generators())
    throw validation_error("representation must provide one matrix per group generator");
  size_t N = group.size();
  size_t dim = rho_generators.empty() ? 1 : rho_generators[0].rows();
  const FieldPtr& field = group.ring()->field;
  for (const auto& r : rho_generators)
    if (r.rows() != dim || r.cols() != dim)
      throw validation_error("representation matrices have inconsistent dimensions");

  std::vector<ScalarMatrix> rho(N, ScalarMatrix::identity(dim, field));
  for (size_t i = 0; i < N; ++i) {
    ScalarMatrix m = ScalarMatrix::identity(dim, field);
    for (unsigned gi : group.word(i)) m = m * rho_generators[gi];
    rho[i] = std::move(m);
  }
  // Well-definedness: rho(a * gen) == rho(a) * rho(gen) for all a, gen
  // extends multiplicativity to the whole group by induction on word length.
  for (size_t a = 0; a < N; ++a)
    for (unsigned gi = 0; gi < group.num_generators(); ++gi) {
      size_t ag = group.mul(a, group.generator_index(gi));
      if (rho[ag] != rho[a] * rho_generators[gi])
        throw validation_error("representation matrices do not define a homomorphism");
    }
  return rho;
}

std::vector<Scalar> bg_character(const GroupAction& group,
                                 const std::vector<ScalarMatrix>& rho_generators) {
  auto rho = extend_representation(group, rho_generators);
  std::vector<Scalar> out;
  for (const auto& cls : group.conjugacy_classes()) out.push_back(rho[cls.front()].trace());
  return out;
}

VirtualCharacter dual_class_character(const GroupAction& group, size_t g,
                                      const std::vector<std::vector<Scalar>>& table) {
  const FieldPtr& field = group.ring()->field;
  size_t N = group.size();
  size_t ginv = group.inverse(g);
  Scalar invN = Scalar::from_int(field, static_cast<long>(N)).inverse();

  VirtualCharacter out;
  out.values.assign(N, Scalar::zero(field));
  // eta = (1/|G|) sum_chi conj(chi(g^{-1})) * chi  picks out the class of g^{-1}
  for (const auto& chi : table) {
    Scalar coeff = chi[ginv].conjugate() * invN;
    out.irreducible_coeffs.push_back(coeff);
    if (coeff.is_zero()) continue;
    for (size_t h = 0; h < N; ++h) out.values[h] += coeff * chi[h];
  }
  return out;
}

VirtualCharacter dual_class_character(const GroupAction& group, size_t g) {
  return dual_class_character(group, g, group.characters());
}

}  // namespace emf
