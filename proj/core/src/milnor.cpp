#include "emf/milnor.hpp"

#include <algorithm>
#include <numeric>

#include "emf/linalg.hpp"

namespace emf {

std::vector<Scalar> MilnorAlgebra::coordinates(const Poly& p) const {
  Poly nf = gb.normal_form(p);
  std::vector<Scalar> out;
  out.reserve(basis_monomials.size());
  for (const auto& m : basis_monomials) out.push_back(nf.coeff(m));
  return out;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  size_t n = m.size();
  if (n == 0) throw computation_error("determinant of empty matrix");
  const RingPtr& ring = m[0][0].ring();
  if (n == 1) return m[0][0];
  Poly det(ring);
  std::vector<std::vector<Poly>> minor(n - 1, std::vector<Poly>(n - 1, Poly::zero(ring)));
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    Poly term = m[0][j] * poly_det(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

MilnorAlgebra milnor_algebra(const Poly& f) {
  const RingPtr& ring = f.ring();
  size_t n = ring->nvars();
  if (n == 0) throw validation_error("milnor_algebra requires at least one variable");
  if (!f.constant_term().is_zero())
    throw validation_error("potential must vanish at the origin (f not in m)");

  std::vector<Poly> partials;
  for (size_t i = 0; i < n; ++i) partials.push_back(f.derivative(i));

  bool all_zero = std::all_of(partials.begin(), partials.end(),
                              [](const Poly& p) { return p.is_zero(); });
  if (all_zero) throw validation_error("Jacobi ideal is zero (non-isolated singularity)");

  GroebnerBasis gb(partials);

  // m-primariness: the leading-term ideal must contain a pure power of each
  // variable; that bounds the staircase and makes the quotient finite.
  std::vector<unsigned> caps(n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (const auto& g : gb.generators()) {
      const Monomial& lm = g.leading_monomial();
      bool pure = lm[i] > 0;
      for (size_t j = 0; j < n && pure; ++j)
        if (j != i && lm[j] > 0) pure = false;
      if (pure) {
        caps[i] = caps[i] == 0 ? lm[i] : std::min<unsigned>(caps[i], lm[i]);
      }
    }
    if (caps[i] == 0)
      throw validation_error("Jacobi ideal not m-primary in variable " + ring->vars[i] +
                             " (non-isolated singularity or critical point off the origin)");
  }

  // Standard monomials: below the staircase within the pure-power box.
  std::vector<Monomial> std_monos;
  Monomial cur(n, 0);
  auto divisible_by_lt = [&](const Monomial& m) {
    for (const auto& g : gb.generators())
      if (mono_divides(g.leading_monomial(), m)) return true;
    return false;
  };
  // iterate the box [0, caps_i)
  for (;;) {
    if (!divisible_by_lt(cur)) std_monos.push_back(cur);
    size_t i = 0;
    while (i < n) {
      if (cur[i] + 1u < caps[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  DegRevLexLess less;
  std::sort(std_monos.begin(), std_monos.end(), less);

  std::vector<std::vector<Poly>> hess(n, std::vector<Poly>(n, Poly::zero(ring)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) hess[i][j] = partials[i].derivative(j);
  Poly h = poly_det(hess);

  MilnorAlgebra out{ring, f, std::move(partials), std::move(gb), std::move(std_monos), 0,
                    h,    Poly(ring)};
  out.mu = static_cast<unsigned>(out.basis_monomials.size());
  out.hessian_class = out.gb.normal_form(h);
  return out;
}

std::optional<std::vector<long>> quasi_weights(const Poly& f) {
  const RingPtr& ring = f.ring();
  const FieldPtr& field = ring->field;
  size_t n = ring->nvars();
  if (f.is_zero() || n == 0) return std::nullopt;

  std::vector<Monomial> monos;
  for (const auto& [m, c] : f.terms()) monos.push_back(m);

  ScalarMatrix constraints(monos.size() - 1, n, field);
  for (size_t j = 1; j < monos.size(); ++j)
    for (size_t i = 0; i < n; ++i)
      constraints.at(j - 1, i) =
          Scalar::from_int(field, static_cast<long>(monos[j][i]) - static_cast<long>(monos[0][i]));

  std::vector<std::vector<Scalar>> ker =
      monos.size() > 1 ? constraints.kernel()
                       : std::vector<std::vector<Scalar>>{std::vector<Scalar>(
                             n, Scalar::one(field))};
  if (ker.empty()) return std::nullopt;

  auto to_rationals = [&](const std::vector<Scalar>& v) -> std::optional<std::vector<Rational>> {
    std::vector<Rational> out;
    for (const auto& s : v) {
      if (!s.is_rational()) return std::nullopt;
      out.push_back(s.rational_part());
    }
    return out;
  };
  auto all_positive = [](const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q > 0; });
  };

  std::vector<std::vector<Rational>> candidates;
  std::vector<Rational> sum(n, 0);
  for (const auto& kv : ker) {
    auto r = to_rationals(kv);
    if (!r) return std::nullopt;
    // orient so the first nonzero entry is positive
    for (const auto& q : *r) {
      if (q == 0) continue;
      if (q < 0)
        for (auto& x : *r) x = -x;
      break;
    }
    for (size_t i = 0; i < n; ++i) sum[i] += (*r)[i];
    candidates.push_back(*r);
  }
  candidates.insert(candidates.begin(), sum);

  for (const auto& cand : candidates) {
    if (!all_positive(cand)) continue;
    // scale to coprime positive integers
    mpz_class l = 1;
    for (const auto& q : cand) l = lcm(l, q.get_den());
    std::vector<mpz_class> ints;
    mpz_class g = 0;
    for (const auto& q : cand) {
      mpz_class v = q.get_num() * (l / q.get_den());
      ints.push_back(v);
      g = gcd(g, v);
    }
    std::vector<long> w;
    for (const auto& v : ints) w.push_back(mpz_class(v / g).get_si());
    return w;
  }
  return std::nullopt;
}

std::optional<long> weighted_degree(const Poly& p, const std::vector<long>& weights) {
  if (p.is_zero()) return 0;
  std::optional<long> deg;
  for (const auto& [m, c] : p.terms()) {
    long d = 0;
    for (size_t i = 0; i < m.size(); ++i) d += weights[i] * static_cast<long>(m[i]);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

}  // namespace emf
