#include <doctest.h>

#include "helpers.hpp"

#include "emf/milnor.hpp"
#include "emf/parser.hpp"

using namespace emf;
using emf::testing::make_ring;
using emf::testing::truncated_quotient_dimension;

TEST_CASE("Milnor numbers of the ADE plane-curve singularities") {
  RingPtr r = make_ring(1, {"x", "y"});
  struct Case {
    std::string f;
    unsigned mu;
  };
  std::vector<Case> cases;
  for (unsigned n = 1; n <= 8; ++n)
    cases.push_back({"x^" + std::to_string(n + 1) + " + y^2", n});  // A_n
  for (unsigned k = 4; k <= 6; ++k)
    cases.push_back({"x^" + std::to_string(k - 1) + " + x*y^2", k});  // D_k
  cases.push_back({"x^3 + y^4", 6});   // E6
  cases.push_back({"x^3 + x*y^3", 7});  // E7
  cases.push_back({"x^3 + y^5", 8});   // E8

  for (const Case& c : cases) {
    CAPTURE(c.f);
    MilnorAlgebra m = milnor_algebra(parse_poly(c.f, r));
    CHECK(m.mu == c.mu);
    CHECK(m.basis_monomials.size() == c.mu);
    // Cross-check against the truncation oracle.
    CHECK(truncated_quotient_dimension(m.partials, r) == static_cast<long>(c.mu));
    // Hessian class is a nonzero element of the socle direction.
    CHECK_FALSE(m.hessian_class.is_zero());
    CHECK(m.normal_form(m.hessian) == m.hessian_class);
  }
}

TEST_CASE("three-variable example x^2 + y^2 + w^2") {
  RingPtr r = make_ring(1, {"x", "y", "w"});
  MilnorAlgebra m = milnor_algebra(parse_poly("x^2 + y^2 + w^2", r));
  CHECK(m.mu == 1);
}

TEST_CASE("non-isolated singularities are rejected") {
  RingPtr r = make_ring(1, {"x", "y"});
  CHECK_THROWS_AS(milnor_algebra(parse_poly("x^2*y^2", r)), validation_error);
  CHECK_THROWS_AS(milnor_algebra(parse_poly("x^2", r)), validation_error);  // y-line critical
  CHECK_THROWS_AS(milnor_algebra(parse_poly("x^2 + y^2 + 1", r)), validation_error);
}

TEST_CASE("quasi-homogeneous weights") {
  RingPtr r = make_ring(1, {"x", "y"});
  auto w = quasi_weights(parse_poly("x^3 + x*y^2", r));
  REQUIRE(w.has_value());
  // x has weight d/3 and y weight d/3 as well only if 3wx = wx + 2wy.
  CHECK(3 * (*w)[0] == (*w)[0] + 2 * (*w)[1]);
  CHECK_FALSE(quasi_weights(parse_poly("x^3 + y^4 + x*y^3", r)).has_value());

  Poly p = parse_poly("x^2*y", r);
  auto d = weighted_degree(p, {1, 2});
  REQUIRE(d.has_value());
  CHECK(*d == 4);
  CHECK_FALSE(weighted_degree(parse_poly("x + y", r), {1, 2}).has_value());
}

TEST_CASE("polynomial determinant") {
  RingPtr r = make_ring(1, {"x", "y"});
  Poly x = parse_poly("x", r), y = parse_poly("y", r);
  std::vector<std::vector<Poly>> m = {{x, y}, {-y, x}};
  CHECK(poly_det(m) == parse_poly("x^2 + y^2", r));
}
