#include <doctest.h>

#include "emf/parser.hpp"
#include "emf/scalar.hpp"

using namespace emf;

TEST_CASE("cyclotomic field structure") {
  CyclotomicField q4(4);
  CHECK(q4.degree() == 2);  // Phi_4 = z^2 + 1
  CyclotomicField q12(12);
  CHECK(q12.degree() == 4);
  CyclotomicField q1(1);
  CHECK(q1.degree() == 1);
}

TEST_CASE("arithmetic in Q(i)") {
  auto f = std::make_shared<CyclotomicField>(4);
  Scalar i = Scalar::zeta_power(f, 1);
  CHECK(i * i == Scalar::from_int(f, -1));
  CHECK(i.inverse() == -i);
  CHECK(i * i.inverse() == Scalar::one(f));
  CHECK((i + i.conjugate()).is_zero());
  CHECK_FALSE(i.is_real());
  CHECK((i * i.conjugate()).is_one());
}

TEST_CASE("arithmetic in Q(zeta_3): 1 + z + z^2 = 0") {
  auto f = std::make_shared<CyclotomicField>(3);
  Scalar z = Scalar::zeta_power(f, 1);
  Scalar sum = Scalar::one(f) + z + z * z;
  CHECK(sum.is_zero());
  CHECK(Scalar::zeta_power(f, 3).is_one());
  CHECK(Scalar::zeta_power(f, -1) == z * z);
}

TEST_CASE("rational detection and division") {
  auto f = std::make_shared<CyclotomicField>(8);
  Scalar z = Scalar::zeta_power(f, 1);
  Scalar two = Scalar::from_int(f, 2);
  // z * z^{-1} rationalizes.
  CHECK((z / z).is_rational());
  CHECK((two / two).is_one());
  CHECK_THROWS(two / Scalar::zero(f));
  // zeta_8^2 = i is a primitive 4th root; (z^2)^2 = -1.
  Scalar z2 = z * z;
  CHECK(z2 * z2 == Scalar::from_int(f, -1));
}

TEST_CASE("certified sign") {
  auto f = std::make_shared<CyclotomicField>(5);
  Scalar z = Scalar::zeta_power(f, 1);
  // z + z^4 = 2 cos(2 pi / 5) > 0
  Scalar c = z + Scalar::zeta_power(f, 4);
  CHECK(c.is_real());
  CHECK(c.certified_sign() == 1);
  // z^2 + z^3 = 2 cos(4 pi / 5) < 0
  Scalar d = Scalar::zeta_power(f, 2) + Scalar::zeta_power(f, 3);
  CHECK(d.certified_sign() == -1);
  CHECK(Scalar::zero(f).certified_sign() == 0);
  CHECK_THROWS_AS(z.certified_sign(), computation_error);
  // Golden-ratio identity: (z + z^4)^2 + (z + z^4) - 1 = 0.
  CHECK((c * c + c - Scalar::one(f)).is_zero());
}

TEST_CASE("string round trip through the scalar parser") {
  auto f = std::make_shared<CyclotomicField>(12);
  Scalar v = Scalar::zeta_power(f, 5) * Scalar::from_rational(f, Rational(3, 7)) +
             Scalar::from_int(f, -2);
  Scalar back = parse_scalar(v.str(), f);
  CHECK(back == v);
  CHECK(parse_scalar("1/2 * z^3 - 2", f) ==
        Scalar::zeta_power(f, 3) * Scalar::from_rational(f, Rational(1, 2)) -
            Scalar::from_int(f, 2));
}
