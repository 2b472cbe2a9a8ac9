#include <doctest.h>

#include "helpers.hpp"

#include "emf/groebner.hpp"
#include "emf/parser.hpp"

using namespace emf;
using emf::testing::make_ring;
using emf::testing::truncated_quotient_dimension;

TEST_CASE("groebner basis of the D4 Jacobi ideal") {
  RingPtr r = make_ring(1, {"x", "y"});
  Poly f = parse_poly("x^3 + x*y^2", r);
  std::vector<Poly> gens = {f.derivative(0), f.derivative(1)};
  GroebnerBasis gb(gens);

  // Normal form is idempotent and linear, and kills the generators.
  for (const Poly& g : gens) CHECK(gb.normal_form(g).is_zero());
  Poly p = parse_poly("x^4 + 2*x*y + 1", r);
  Poly q = parse_poly("y^5 - x", r);
  CHECK(gb.normal_form(gb.normal_form(p)) == gb.normal_form(p));
  CHECK(gb.normal_form(p + q) == gb.normal_form(p) + gb.normal_form(q));

  // Every basis element reproduces exactly from its tracked cofactors.
  for (size_t k = 0; k < gb.generators().size(); ++k) {
    Poly acc = Poly::zero(r);
    for (size_t j = 0; j < gens.size(); ++j) acc += gb.cofactors(k)[j] * gens[j];
    CHECK(acc == gb.generators()[k]);
  }
}

TEST_CASE("cofactor lift solves ideal membership") {
  RingPtr r = make_ring(1, {"x", "y"});
  Poly f = parse_poly("x^3 + y^4", r);
  std::vector<Poly> gens = {f.derivative(0), f.derivative(1)};
  GroebnerBasis gb(gens);

  Poly member = parse_poly("x^2*y + y^3", r) * gens[0] + parse_poly("x - 7", r) * gens[1];
  auto lift = gb.lift_cofactors(member);
  REQUIRE(lift.has_value());
  Poly acc = Poly::zero(r);
  for (size_t j = 0; j < gens.size(); ++j) acc += (*lift)[j] * gens[j];
  CHECK(acc == member);

  CHECK_FALSE(gb.lift_cofactors(parse_poly("x", r)).has_value());
}

TEST_CASE("quotient dimension matches the truncated linear-algebra oracle") {
  RingPtr r = make_ring(1, {"x", "y"});
  struct Case {
    const char* f;
    long expected;
  };
  for (const Case& c : {Case{"x^3 + x*y^2", 4},    // D4
                        Case{"x^3 + y^4", 6},      // E6
                        Case{"x^5 + y^2", 4}}) {   // A4
    Poly f = parse_poly(c.f, r);
    std::vector<Poly> gens = {f.derivative(0), f.derivative(1)};
    GroebnerBasis gb(gens);
    // Standard monomials: those not divisible by any leading monomial.
    long standard = truncated_quotient_dimension(gens, r);
    CHECK(standard == c.expected);
  }
}
