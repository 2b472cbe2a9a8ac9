#include <doctest.h>

#include "helpers.hpp"

#include "emf/group.hpp"
#include "emf/parser.hpp"

using namespace emf;
using emf::testing::make_ring;

namespace {

ScalarMatrix diag(const RingPtr& r, const std::vector<Scalar>& d) {
  ScalarMatrix m(d.size(), d.size(), r->field);
  for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

}  // namespace

TEST_CASE("cyclic group closure and structure") {
  RingPtr r = make_ring(4, {"x", "y"});
  const FieldPtr& F = r->field;
  ScalarMatrix g = diag(r, {Scalar::zeta_power(F, 1), Scalar::one(F)});
  GroupAction G({g}, r);
  CHECK(G.size() == 4);
  CHECK(G.is_abelian());
  size_t gi = G.generator_index(0);
  CHECK(G.element_order(gi) == 4);
  CHECK(G.mul(gi, G.inverse(gi)) == G.identity());
  CHECK(G.conjugacy_classes().size() == 4);
}

TEST_CASE("character table orthogonality for Z/4") {
  RingPtr r = make_ring(4, {"x", "y"});
  const FieldPtr& F = r->field;
  GroupAction G({diag(r, {Scalar::zeta_power(F, 1), Scalar::one(F)})}, r);
  const auto& chars = G.characters();
  REQUIRE(chars.size() == 4);
  for (size_t a = 0; a < 4; ++a)
    for (size_t b = 0; b < 4; ++b) {
      Scalar acc = Scalar::zero(F);
      for (size_t e = 0; e < G.size(); ++e) acc += chars[a][e] * chars[b][e].conjugate();
      CHECK(acc == Scalar::from_int(F, a == b ? 4 : 0));
    }
}

TEST_CASE("invariance check") {
  RingPtr r = make_ring(4, {"x", "y"});
  const FieldPtr& F = r->field;
  GroupAction G({diag(r, {Scalar::zeta_power(F, 1), Scalar::one(F)})}, r);
  G.check_invariance(parse_poly("x^4 + y^2", r));
  CHECK_THROWS_AS(G.check_invariance(parse_poly("x^3 + y^2", r)), validation_error);
}

TEST_CASE("sector data for the sign involution on one variable of three") {
  RingPtr r = make_ring(2, {"x", "y", "w"});
  const FieldPtr& F = r->field;
  ScalarMatrix s = diag(r, {Scalar::one(F), Scalar::one(F), Scalar::from_int(F, -1)});
  GroupAction G({s}, r);
  Poly f = parse_poly("x^3 + y^2 + w^2", r);
  G.check_invariance(f);

  Sector id = make_sector(G, G.identity(), f);
  CHECK(id.n_g == 2);
  CHECK(id.twist_det.is_one());
  CHECK_FALSE(id.zero_dimensional);
  REQUIRE(id.milnor.has_value());
  CHECK(id.milnor->mu == 2);

  size_t gi = G.generator_index(0);
  Sector sec = make_sector(G, gi, f);
  CHECK(sec.n_g == 1);
  CHECK(sec.p_g == 1);
  // det(id - g on the moving line) = 1 - (-1) = 2.
  CHECK(sec.twist_det == Scalar::from_int(F, 2));
  CHECK(sec.parity_sign == -1);  // (-1)^{binom(2,2)}
  REQUIRE(sec.milnor.has_value());
  CHECK(sec.milnor->mu == 2);  // x^3 + y^2 is A_2
}

TEST_CASE("zero-dimensional sector") {
  RingPtr r = make_ring(2, {"x"});
  const FieldPtr& F = r->field;
  GroupAction G({diag(r, {Scalar::from_int(F, -1)})}, r);
  Sector sec = make_sector(G, G.generator_index(0), parse_poly("x^2", r));
  CHECK(sec.zero_dimensional);
  CHECK(sec.n_g == -1);
  CHECK(sec.twist_det == Scalar::from_int(F, 2));
}

TEST_CASE("representation extension validates homomorphisms") {
  RingPtr r = make_ring(4, {"x", "y"});
  const FieldPtr& F = r->field;
  GroupAction G({diag(r, {Scalar::zeta_power(F, 1), Scalar::one(F)})}, r);
  // The image of an order-4 generator must itself have order dividing 4.
  auto rho_bad = std::vector<ScalarMatrix>{diag(r, {Scalar::from_int(F, 2)})};
  CHECK_THROWS_AS(extend_representation(G, rho_bad), validation_error);
  auto rho_good = std::vector<ScalarMatrix>{diag(r, {Scalar::zeta_power(F, 1)})};
  auto ext = extend_representation(G, rho_good);
  CHECK(ext.size() == 4);
  for (size_t a = 0; a < 4; ++a)
    for (size_t b = 0; b < 4; ++b) CHECK(ext[G.mul(a, b)] == ext[a] * ext[b]);
}

TEST_CASE("dual class character is supported on the inverse class") {
  RingPtr r = make_ring(4, {"x", "y"});
  const FieldPtr& F = r->field;
  GroupAction G({diag(r, {Scalar::zeta_power(F, 1), Scalar::one(F)})}, r);
  size_t gi = G.generator_index(0);
  VirtualCharacter vc = dual_class_character(G, gi);
  for (size_t e = 0; e < G.size(); ++e) {
    if (e == G.inverse(gi))
      CHECK_FALSE(vc.values[e].is_zero());
    else
      CHECK(vc.values[e].is_zero());
  }
}
