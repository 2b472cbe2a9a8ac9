#include <doctest.h>

#include "helpers.hpp"

#include "emf/linalg.hpp"
#include "emf/parser.hpp"
#include "emf/poly.hpp"

using namespace emf;
using emf::testing::make_ring;

TEST_CASE("parser and canonical strings") {
  RingPtr r = make_ring(4, {"x", "y"});
  Poly p = parse_poly("(x + z*y)^2 - x^2", r);
  // (x + iy)^2 - x^2 = 2 i x y - y^2
  Poly q = parse_poly("2*z*x*y - y^2", r);
  CHECK(p == q);
  CHECK(parse_poly(p.str(), r) == p);
  CHECK_THROWS_AS(parse_poly("x +* y", r), parse_error);
  CHECK_THROWS_AS(parse_poly("x / y", r), parse_error);  // non-constant divisor
  CHECK(parse_poly("x / 2", r) == parse_poly("1/2 * x", r));
}

TEST_CASE("degrevlex order and leading terms") {
  RingPtr r = make_ring(1, {"x", "y", "z1"});
  Poly p = parse_poly("x*y^2 + x^2*y + x^3 + y", r);
  CHECK(p.leading_monomial() == Monomial{3, 0, 0});
  CHECK(p.degree() == 3);
}

TEST_CASE("derivative and substitution") {
  RingPtr r = make_ring(1, {"x", "y"});
  Poly f = parse_poly("x^3 + x*y^2", r);
  CHECK(f.derivative(0) == parse_poly("3*x^2 + y^2", r));
  CHECK(f.derivative(1) == parse_poly("2*x*y", r));
  std::vector<Poly> images = {parse_poly("y", r), parse_poly("x + y", r)};
  CHECK(f.substitute(images, r) == parse_poly("y^3 + y*(x+y)^2", r));
}

TEST_CASE("linear action is a left group action") {
  RingPtr r = make_ring(4, {"x", "y"});
  const FieldPtr& F = r->field;
  ScalarMatrix M(2, 2, F);
  M.at(0, 0) = Scalar::zero(F);
  M.at(0, 1) = -Scalar::one(F);
  M.at(1, 0) = Scalar::one(F);
  M.at(1, 1) = Scalar::zero(F);  // rotation by 90 degrees
  Poly f = parse_poly("x^2 + y^2", r);
  CHECK(act_linear(f, M) == f);
  Poly x = parse_poly("x", r);
  // act by M then by M again equals act by M^2.
  CHECK(act_linear(act_linear(x, M), M) == act_linear(x, M * M));
  CHECK(act_linear(x, M) != x);
}

TEST_CASE("fixed locus of a diagonal involution") {
  RingPtr r = make_ring(2, {"x", "y", "w"});
  const FieldPtr& F = r->field;
  ScalarMatrix M = ScalarMatrix::identity(3, F);
  M.at(2, 2) = Scalar::from_int(F, -1);
  FixedLocus loc = fixed_locus(M, r);
  CHECK(loc.fixed_dim == 2);
  CHECK(loc.sub_ring->nvars() == 2);
  REQUIRE(loc.nonfixed_eigenvalues.size() == 1);
  CHECK(loc.nonfixed_eigenvalues[0] == Scalar::from_int(F, -1));
  Poly f = parse_poly("x^3 + y^2 + w^2", r);
  Poly g = restrict_to_fixed(f, loc);
  RingPtr sub = loc.sub_ring;
  CHECK(g == parse_poly(sub->vars[0] + "^3 + " + sub->vars[1] + "^2", sub));
}

TEST_CASE("non-diagonalizable matrices are rejected") {
  RingPtr r = make_ring(1, {"x", "y"});
  const FieldPtr& F = r->field;
  ScalarMatrix M = ScalarMatrix::identity(2, F);
  M.at(0, 1) = Scalar::one(F);  // Jordan block
  CHECK_THROWS_AS(fixed_locus(M, r), validation_error);
}

TEST_CASE("transport copies terms between same-width rings") {
  RingPtr a = make_ring(4, {"x", "y"});
  RingPtr b = make_ring(4, {"u", "v"});
  Poly p = parse_poly("x^2 - z*y", a);
  Poly q = transport(p, b);
  CHECK(q == parse_poly("u^2 - z*v", b));
  CHECK(transport(q, a) == p);
}
