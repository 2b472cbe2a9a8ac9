#include "emf/scalar.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace emf {

namespace {

// Exact division of integer polynomials, num / den with den monic-leading.
// Both are coefficient vectors, lowest degree first.
std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num,
                                         const std::vector<mpz_class>& den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<mpz_class> quot(dn - dd + 1, 0);
  for (int k = dn - dd; k >= 0; --k) {
    mpz_class c = num[k + dd] / den[dd];
    quot[k] = c;
    for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  return quot;
}

std::vector<mpz_class> cyclotomic_polynomial(unsigned m) {
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  std::vector<mpz_class> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

}  // namespace

CyclotomicField::CyclotomicField(unsigned order) : order_(order) {
  if (order == 0) throw validation_error("cyclotomic order must be positive");
  modulus_ = cyclotomic_polynomial(order);
  degree_ = static_cast<unsigned>(modulus_.size()) - 1;

  unsigned top = std::max(2 * degree_ >= 1 ? 2 * degree_ - 1 : 1, order_ + 1);
  powers_.resize(top);
  for (unsigned k = 0; k < top; ++k) {
    if (k < degree_) {
      powers_[k].assign(degree_, 0);
      powers_[k][k] = 1;
    } else {
      // z^k = z * z^{k-1}, then reduce the overflow coordinate by the modulus:
      // z^degree = -(modulus_[0] + ... + modulus_[degree-1] z^{degree-1})
      std::vector<Rational> prev = powers_[k - 1];
      Rational carry = prev.empty() ? Rational(0) : prev[degree_ - 1];
      std::vector<Rational> cur(degree_, 0);
      for (unsigned i = degree_ - 1; i >= 1; --i) cur[i] = prev[i - 1];
      cur[0] = 0;
      if (carry != 0) {
        for (unsigned i = 0; i < degree_; ++i) cur[i] -= carry * Rational(modulus_[i]);
      }
      powers_[k] = std::move(cur);
    }
  }
}

Scalar::Scalar(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->degree())
    throw validation_error("scalar coefficient vector has wrong length");
  for (auto& c : coeffs_) c.canonicalize();
}

Scalar Scalar::zero(const FieldPtr& field) {
  return Scalar(field, std::vector<Rational>(field->degree(), 0));
}

Scalar Scalar::one(const FieldPtr& field) { return from_int(field, 1); }

Scalar Scalar::from_rational(const FieldPtr& field, const Rational& q) {
  std::vector<Rational> c(field->degree(), 0);
  c[0] = q;
  return Scalar(field, std::move(c));
}

Scalar Scalar::from_int(const FieldPtr& field, long n) {
  return from_rational(field, Rational(n));
}

Scalar Scalar::zeta_power(const FieldPtr& field, long k) {
  long m = field->order();
  long r = ((k % m) + m) % m;
  return Scalar(field, field->power(static_cast<unsigned>(r)));
}

bool Scalar::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Scalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool Scalar::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

void require_same_field(const Scalar& a, const Scalar& b) {
  if (!a.field() || !b.field() || a.field()->order() != b.field()->order())
    throw validation_error("scalars from different cyclotomic fields");
}

Scalar Scalar::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x = -x;
  return Scalar(field_, std::move(c));
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(*this, o);
  std::vector<Rational> c(coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return Scalar(field_, std::move(c));
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(*this, o);
  std::vector<Rational> c(coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return Scalar(field_, std::move(c));
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(*this, o);
  unsigned d = field_->degree();
  std::vector<Rational> raw(2 * d - 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < d; ++j) {
      if (o.coeffs_[j] == 0) continue;
      raw[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  std::vector<Rational> out(d, 0);
  for (unsigned k = 0; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    const auto& basis = field_->power(k);
    for (unsigned i = 0; i < d; ++i) out[i] += raw[k] * basis[i];
  }
  return Scalar(field_, std::move(out));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw computation_error("division by zero scalar");
  // Extended Euclid in Q[z] for gcd(a, Phi_m) = 1: find u with u*a = 1 mod Phi.
  unsigned d = field_->degree();
  std::vector<Rational> r0(field_->modulus().size());
  for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(field_->modulus()[i]);
  std::vector<Rational> r1(coeffs_);
  std::vector<Rational> s0(1, 0), s1(1, 1);  // coefficients of `a` in r0, r1

  auto degree_of = [](const std::vector<Rational>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
      if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
  };

  while (true) {
    int d1 = degree_of(r1);
    if (d1 < 0) throw computation_error("scalar not invertible (unexpected)");
    if (d1 == 0) {
      // r1 is a nonzero constant: inverse = s1 / r1
      std::vector<Rational> out(d, 0);
      for (size_t i = 0; i < s1.size() && i < d; ++i) out[i] = s1[i] / r1[0];
      return Scalar(field_, std::move(out));
    }
    // r0 = q*r1 + r2 by polynomial long division
    std::vector<Rational> rem(r0);
    std::vector<Rational> q(std::max<size_t>(rem.size(), 1), 0);
    int dr = degree_of(rem);
    while (dr >= d1) {
      Rational c = rem[static_cast<size_t>(dr)] / r1[static_cast<size_t>(d1)];
      q[static_cast<size_t>(dr - d1)] += c;
      for (int j = 0; j <= d1; ++j)
        rem[static_cast<size_t>(dr - d1 + j)] -= c * r1[static_cast<size_t>(j)];
      dr = degree_of(rem);
    }
    // s2 = s0 - q*s1
    std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size()), 0);
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(*this, o);
  return coeffs_ == o.coeffs_;
}

Scalar Scalar::conjugate() const {
  unsigned d = field_->degree();
  unsigned m = field_->order();
  std::vector<Rational> out(d, 0);
  for (unsigned i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& basis = field_->power((m - i) % m);
    for (unsigned j = 0; j < d; ++j) out[j] += coeffs_[i] * basis[j];
  }
  return Scalar(field_, std::move(out));
}

ComplexInterval Scalar::embed(unsigned precision_bits) const {
  unsigned m = field_->order();
  ComplexInterval acc{Interval(precision_bits), Interval(precision_bits)};
  for (unsigned i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Interval c = Interval::from_rational(coeffs_[i], precision_bits);
    ComplexInterval zi{Interval::cos_angle(static_cast<long>(i), m, precision_bits),
                       Interval::sin_angle(static_cast<long>(i), m, precision_bits)};
    acc = acc + ComplexInterval{c * zi.re, c * zi.im};
  }
  return acc;
}

int Scalar::certified_sign(unsigned start_bits, unsigned max_bits) const {
  if (is_zero()) return 0;
  if (!is_real())
    throw computation_error("certified_sign requires a conjugation-fixed scalar");
  if (is_rational()) return sgn(coeffs_[0]);
  for (unsigned bits = start_bits; bits <= max_bits; bits *= 2) {
    Interval re = embed(bits).re;
    if (re.is_positive()) return 1;
    if (re.is_negative()) return -1;
  }
  throw computation_error("sign certification exhausted precision budget");
}

std::string Scalar::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string Scalar::approx(unsigned digits) const {
  ComplexInterval e = embed(64 + 4 * digits);
  std::ostringstream os;
  os.precision(digits);
  double re = e.re.mid(), im = e.im.mid();
  os << re;
  if (!is_real()) {
    os << (im >= 0 ? "+" : "-");
    std::ostringstream os2;
    os2.precision(digits);
    os2 << std::abs(im);
    os << os2.str() << "i";
  }
  return os.str();
}

}  // namespace emf
