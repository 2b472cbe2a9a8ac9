#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "emf/error.hpp"
#include "emf/interval.hpp"

namespace emf {

using Rational = mpq_class;

/// The cyclotomic field Q(zeta_m) in the power basis 1, z, ..., z^{phi(m)-1}
/// modulo the m-th cyclotomic polynomial. One field instance is shared by all
/// scalars of a problem instance.
class CyclotomicField {
 public:
  explicit CyclotomicField(unsigned order);

  unsigned order() const { return order_; }
  unsigned degree() const { return degree_; }  // phi(m)

  /// Coordinates of z^k in the power basis, for 0 <= k < max(2*degree-1, order).
  const std::vector<Rational>& power(unsigned k) const { return powers_.at(k); }

  /// Monic m-th cyclotomic polynomial, coefficient vector of length degree+1.
  const std::vector<mpz_class>& modulus() const { return modulus_; }

 private:
  unsigned order_;
  unsigned degree_;
  std::vector<mpz_class> modulus_;
  std::vector<std::vector<Rational>> powers_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Exact element of Q(zeta_m). Immutable value type; arithmetic is exact and
/// results are reduced to the canonical power-basis normal form.
class Scalar {
 public:
  Scalar() = default;  // invalid until assigned; field() is null
  Scalar(FieldPtr field, std::vector<Rational> coeffs);

  static Scalar zero(const FieldPtr& field);
  static Scalar one(const FieldPtr& field);
  static Scalar from_rational(const FieldPtr& field, const Rational& q);
  static Scalar from_int(const FieldPtr& field, long n);
  /// zeta_m^k
  static Scalar zeta_power(const FieldPtr& field, long k);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Constant coefficient; exact value when is_rational().
  const Rational& rational_part() const { return coeffs_.at(0); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar inverse() const;                   // throws on zero

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Image under zeta_m -> zeta_m^{-1}; a field automorphism fixing Q.
  Scalar conjugate() const;
  bool is_real() const { return conjugate() == *this; }

  /// Interval enclosure of the image under zeta_m -> exp(2*pi*i/m).
  ComplexInterval embed(unsigned precision_bits = 128) const;

  /// Exact sign of a conjugation-fixed (real) scalar: -1, 0, +1.
  /// Certified by interval evaluation with doubling precision; exact-zero
  /// scalars short-circuit. Throws computation_error if the value is not
  /// real or certification exhausts the precision budget.
  int certified_sign(unsigned start_bits = 128, unsigned max_bits = 1 << 20) const;

  /// Canonical string: rationals as "p/q", otherwise a polynomial in z,
  /// descending powers, e.g. "1/2*z^3 - 2".
  std::string str() const;
  /// Decimal approximation for report readability (not used in verdicts).
  std::string approx(unsigned digits = 12) const;

 private:
  void reduce_tail(std::vector<Rational>& raw) const;  // degree < 2d-1 assumed

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

void require_same_field(const Scalar& a, const Scalar& b);

}  // namespace emf
