#include "emf/interval.hpp"

#include <algorithm>
#include <sstream>

namespace emf {

Interval::Interval() : Interval(64u) {}

Interval::Interval(unsigned precision_bits) : prec_(precision_bits) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(unsigned precision_bits, int) : prec_(precision_bits) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
  swap(o);
  return *this;
}

void Interval::swap(Interval& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(prec_, o.prec_);
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_rational(const mpq_class& q, unsigned precision_bits) {
  Interval r(precision_bits, 0);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

namespace {

// Enclosure of the angle 2*pi*k/m into [theta_lo, theta_hi].
void angle_bounds(long k, unsigned long m, unsigned prec, mpfr_t theta_lo, mpfr_t theta_hi) {
  mpfr_t pi_lo, pi_hi;
  mpfr_init2(pi_lo, prec);
  mpfr_init2(pi_hi, prec);
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);
  // 2k/m as exact rational
  mpq_class r(2 * k, static_cast<long>(m));
  r.canonicalize();
  if (r >= 0) {
    mpfr_mul_q(theta_lo, pi_lo, r.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(theta_hi, pi_hi, r.get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(theta_lo, pi_hi, r.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(theta_hi, pi_lo, r.get_mpq_t(), MPFR_RNDU);
  }
  mpfr_clear(pi_lo);
  mpfr_clear(pi_hi);
}

}  // namespace

// Enclosure of fn over a thin angle interval via the Lipschitz bound |fn'| <= 1.
Interval Interval::trig_enclosure(long k, unsigned long m, unsigned prec,
                                  int (*fn)(mpfr_t, const mpfr_t, mpfr_rnd_t)) {
  mpfr_t tlo, thi, w, v_lo, v_hi;
  mpfr_init2(tlo, prec);
  mpfr_init2(thi, prec);
  mpfr_init2(w, prec);
  mpfr_init2(v_lo, prec);
  mpfr_init2(v_hi, prec);
  angle_bounds(k, m, prec, tlo, thi);
  mpfr_sub(w, thi, tlo, MPFR_RNDU);  // width of the angle enclosure

  fn(v_lo, tlo, MPFR_RNDD);
  fn(v_hi, tlo, MPFR_RNDU);

  Interval out(prec, 0);
  mpfr_sub(out.lo_, v_lo, w, MPFR_RNDD);
  mpfr_add(out.hi_, v_hi, w, MPFR_RNDU);

  mpfr_clear(tlo);
  mpfr_clear(thi);
  mpfr_clear(w);
  mpfr_clear(v_lo);
  mpfr_clear(v_hi);
  return out;
}

Interval Interval::cos_angle(long k, unsigned long m, unsigned precision_bits) {
  return trig_enclosure(k, m, precision_bits, mpfr_cos);
}

Interval Interval::sin_angle(long k, unsigned long m, unsigned precision_bits) {
  return trig_enclosure(k, m, precision_bits, mpfr_sin);
}

Interval Interval::operator+(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_), 0);
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_), 0);
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  unsigned prec = std::max(prec_, o.prec_);
  mpfr_t p;
  mpfr_init2(p, prec);
  Interval r(prec, 0);
  bool first = true;
  const mpfr_t* as[2] = {&lo_, &hi_};
  const mpfr_t* bs[2] = {&o.lo_, &o.hi_};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(p, *as[i], *bs[j], MPFR_RNDD);
      if (first || mpfr_cmp(p, r.lo_) < 0) mpfr_set(r.lo_, p, MPFR_RNDD);
      mpfr_mul(p, *as[i], *bs[j], MPFR_RNDU);
      if (first || mpfr_cmp(p, r.hi_) > 0) mpfr_set(r.hi_, p, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(p);
  return r;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }

double Interval::mid() const {
  return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2.0;
}

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

std::string Interval::str() const {
  std::ostringstream os;
  os << "[" << mpfr_get_d(lo_, MPFR_RNDD) << ", " << mpfr_get_d(hi_, MPFR_RNDU) << "]";
  return os.str();
}

ComplexInterval ComplexInterval::operator+(const ComplexInterval& o) const {
  return {re + o.re, im + o.im};
}

ComplexInterval ComplexInterval::operator*(const ComplexInterval& o) const {
  return {re * o.re - im * o.im, re * o.im + im * o.re};
}

std::string ComplexInterval::str() const { return re.str() + " + " + im.str() + "*i"; }

}  // namespace emf
