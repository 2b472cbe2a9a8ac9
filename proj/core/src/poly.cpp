#include "emf/poly.hpp"

#include <algorithm>
#include <sstream>

#include "emf/linalg.hpp"

namespace emf {

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(b[i] - a[i]);
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool DegRevLexLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // a < b iff at the rightmost differing position a has the larger exponent
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

int PolyRing::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

Poly Poly::constant(const RingPtr& ring, const Scalar& c) {
  Poly p(ring);
  if (!c.is_zero()) p.terms_.emplace(Monomial(ring->nvars(), 0), c);
  return p;
}

Poly Poly::variable(const RingPtr& ring, size_t i, unsigned power) {
  Poly p(ring);
  Monomial m(ring->nvars(), 0);
  m.at(i) = static_cast<std::uint16_t>(power);
  p.terms_.emplace(std::move(m), Scalar::one(ring->field));
  return p;
}

Poly Poly::monomial(const RingPtr& ring, const Monomial& m, const Scalar& c) {
  Poly p(ring);
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Scalar Poly::constant_term() const {
  Monomial z(ring_->nvars(), 0);
  auto it = terms_.find(z);
  return it == terms_.end() ? Scalar::zero(ring_->field) : it->second;
}

unsigned Poly::degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

const Monomial& Poly::leading_monomial() const { return terms_.rbegin()->first; }
const Scalar& Poly::leading_coeff() const { return terms_.rbegin()->second; }

Scalar Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(ring_->field) : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(ring_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
  return r;
}

Poly Poly::operator*(const Scalar& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, c0] : terms_) r.add_term(m, c0 * c);
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r = Poly::constant(ring_, Scalar::one(ring_->field));
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    base = base * base;
    k >>= 1u;
  }
  return r;
}

Poly Poly::derivative(size_t i) const {
  if (i >= ring_->nvars()) throw computation_error("derivative index out of range");
  Poly r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    unsigned e = d[i];
    d[i] = static_cast<std::uint16_t>(e - 1);
    r.add_term(d, c * Scalar::from_int(ring_->field, static_cast<long>(e)));
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images, const RingPtr& target) const {
  Poly r(target);
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(target, c);
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      t = t * images[i].pow(m[i]);
    }
    r += t;
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending degrevlex
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    const Scalar& c = it->second;
    std::string cs = c.str();
    bool negated = false;
    if (c.is_rational() && c.rational_part() < 0) {
      negated = true;
      cs = (-c).str();
    }
    if (first) {
      if (negated) os << "-";
      first = false;
    } else {
      os << (negated ? " - " : " + ");
    }
    bool needs_parens = cs.find(' ') != std::string::npos;
    bool has_vars = total_degree(m) > 0;
    std::string cpart;
    if (!has_vars || cs != "1") {
      cpart = needs_parens ? "(" + cs + ")" : cs;
    }
    os << cpart;
    bool printed = !cpart.empty();
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (printed) os << "*";
      os << ring_->vars[i];
      if (m[i] > 1) os << "^" << m[i];
      printed = true;
    }
  }
  return os.str();
}

Poly act_linear(const Poly& p, const ScalarMatrix& M) {
  const RingPtr& ring = p.ring();
  size_t n = ring->nvars();
  if (M.rows() != n || M.cols() != n)
    throw validation_error("group element matrix has wrong dimension");
  ScalarMatrix inv = M.inverse();  // throws if singular
  std::vector<Poly> images;
  images.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    Poly li(ring);
    for (size_t j = 0; j < n; ++j) {
      if (inv.at(i, j).is_zero()) continue;
      li += Poly::variable(ring, j) * inv.at(i, j);
    }
    images.push_back(std::move(li));
  }
  return p.substitute(images, ring);
}

FixedLocus fixed_locus(const ScalarMatrix& M, const RingPtr& ring) {
  size_t n = ring->nvars();
  const FieldPtr& field = ring->field;
  unsigned m = field->order();

  std::vector<std::vector<Scalar>> columns;  // eigenvectors, fixed first
  std::vector<Scalar> nonfixed_eigs;
  unsigned fixed_dim = 0;

  std::vector<std::vector<Scalar>> nonfixed_cols;
  for (unsigned k = 0; k < m; ++k) {
    Scalar lambda = Scalar::zeta_power(field, k);
    ScalarMatrix shifted = M - ScalarMatrix::identity(n, field) * lambda;
    auto ker = shifted.kernel();
    if (ker.empty()) continue;
    if (k == 0) {
      fixed_dim = static_cast<unsigned>(ker.size());
      for (auto& v : ker) columns.push_back(std::move(v));
    } else {
      for (auto& v : ker) {
        nonfixed_cols.push_back(std::move(v));
        nonfixed_eigs.push_back(lambda);
      }
    }
  }
  if (columns.size() + nonfixed_cols.size() != n)
    throw validation_error("group element is not diagonalizable over Q(zeta_m)");
  for (auto& v : nonfixed_cols) columns.push_back(std::move(v));

  FixedLocus out;
  out.fixed_dim = fixed_dim;
  out.nonfixed_eigenvalues = std::move(nonfixed_eigs);
  out.P.assign(n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) out.P[i][j] = columns[j][i];

  std::vector<std::string> yvars;
  for (unsigned i = 0; i < fixed_dim; ++i) yvars.push_back("y" + std::to_string(i + 1));
  out.sub_ring = std::make_shared<PolyRing>(field, std::move(yvars));
  return out;
}

Poly restrict_to_fixed(const Poly& p, const FixedLocus& locus) {
  const RingPtr& ring = p.ring();
  size_t n = ring->nvars();
  std::vector<Poly> images;
  images.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    Poly li(locus.sub_ring);
    for (size_t j = 0; j < locus.fixed_dim; ++j) {
      if (locus.P[i][j].is_zero()) continue;
      li += Poly::variable(locus.sub_ring, j) * locus.P[i][j];
    }
    images.push_back(std::move(li));
  }
  return p.substitute(images, locus.sub_ring);
}

Poly transport(const Poly& p, const RingPtr& target) {
  Poly out = Poly::zero(target);
  for (const auto& [m, c] : p.terms()) out.add_term(m, c);
  return out;
}

}  // namespace emf
