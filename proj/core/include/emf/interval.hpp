#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace emf {

/// Closed real interval [lo, hi] with mpfr endpoints and outward rounding.
/// Small helper used only for sign certification and report approximations;
/// verdict-grade comparisons always go back to exact arithmetic.
class Interval {
 public:
  Interval();                                  // [0, 0] at default precision
  explicit Interval(unsigned precision_bits);  // [0, 0]
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(Interval o);
  ~Interval();

  static Interval from_rational(const mpq_class& q, unsigned precision_bits);
  /// Enclosure of cos(2*pi*k/m), sin(2*pi*k/m).
  static Interval cos_angle(long k, unsigned long m, unsigned precision_bits);
  static Interval sin_angle(long k, unsigned long m, unsigned precision_bits);

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;

  bool contains_zero() const;
  bool is_positive() const;  // lo > 0
  bool is_negative() const;  // hi < 0
  double mid() const;
  double width() const;

  std::string str() const;

 private:
  Interval(unsigned precision_bits, int /*tag*/);
  void swap(Interval& o) noexcept;
  static Interval trig_enclosure(long k, unsigned long m, unsigned prec,
                                 int (*fn)(mpfr_t, const mpfr_t, mpfr_rnd_t));

  mpfr_t lo_, hi_;
  unsigned prec_;

  friend class ComplexInterval;
};

/// Rectangular complex enclosure.
struct ComplexInterval {
  Interval re, im;

  ComplexInterval operator+(const ComplexInterval& o) const;
  ComplexInterval operator*(const ComplexInterval& o) const;

  std::string str() const;
};

}  // namespace emf
