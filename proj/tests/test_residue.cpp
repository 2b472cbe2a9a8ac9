#include <doctest.h>

#include "helpers.hpp"

#include "emf/parser.hpp"
#include "emf/residue.hpp"

using namespace emf;
using emf::testing::make_ring;

TEST_CASE("node residue: res(1) = 1/4 for x^2 + y^2") {
  RingPtr r = make_ring(4, {"x", "y"});
  MilnorAlgebra m = milnor_algebra(parse_poly("x^2 + y^2", r));
  ResidueFunctional res(m);
  CHECK(res.residue(parse_poly("1", r)) == Scalar::from_rational(r->field, Rational(1, 4)));
  // res(hessian) = mu = 1.
  CHECK(res.residue(m.hessian) == Scalar::from_int(r->field, 1));
}

TEST_CASE("residue of the Hessian equals the Milnor number") {
  RingPtr r = make_ring(1, {"x", "y"});
  for (const char* s : {"x^2 + y^2", "x^3 + y^2", "x^4 + y^2", "x^3 + x*y^2", "x^3 + y^4",
                        "x^3 + x*y^3", "x^3 + y^5"}) {
    CAPTURE(s);
    MilnorAlgebra m = milnor_algebra(parse_poly(s, r));
    ResidueFunctional res(m);
    CHECK(res.residue(m.hessian) == Scalar::from_int(r->field, m.mu));
  }
}

TEST_CASE("residue is linear and kills the Jacobi ideal") {
  RingPtr r = make_ring(1, {"x", "y"});
  MilnorAlgebra m = milnor_algebra(parse_poly("x^3 + y^4", r));
  ResidueFunctional res(m);
  Poly p = parse_poly("x*y^2 + 3*x - 1", r);
  Poly q = parse_poly("y^3 + x*y", r);
  CHECK(res.residue(p + q) == res.residue(p) + res.residue(q));
  CHECK(res.residue(m.partials[0] * p).is_zero());
  CHECK(res.residue(m.partials[1] * q).is_zero());
  // Pairing is symmetric.
  CHECK(res.pairing(p, q) == res.pairing(q, p));
}

TEST_CASE("residue Gram matrix is nonsingular") {
  RingPtr r = make_ring(1, {"x", "y"});
  for (const char* s : {"x^3 + x*y^2", "x^3 + y^4", "x^3 + y^5", "x^5 + y^2"}) {
    CAPTURE(s);
    MilnorAlgebra m = milnor_algebra(parse_poly(s, r));
    ResidueFunctional res(m);
    ScalarMatrix gram = res.gram_on_basis();
    CHECK_FALSE(gram.determinant().is_zero());
  }
}

TEST_CASE("socle fast path agrees with the transformation law") {
  RingPtr r = make_ring(1, {"x", "y"});
  MilnorAlgebra m = milnor_algebra(parse_poly("x^3 + x*y^2", r));
  ResidueFunctional res(m);
  for (const char* s : {"1", "x", "y^2", "x*y^2 + 2*x^2 - y", "x^2*y^2"}) {
    Poly p = parse_poly(s, r);
    auto fast = res.residue_socle(p);
    REQUIRE(fast.has_value());
    CHECK(*fast == res.residue(p));
  }
}
