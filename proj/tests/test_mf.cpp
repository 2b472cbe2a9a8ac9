#include <doctest.h>

#include "helpers.hpp"

#include "emf/mf.hpp"
#include "emf/parser.hpp"

using namespace emf;
using emf::testing::make_ring;

namespace {

ScalarMatrix diag(const FieldPtr& F, const std::vector<Scalar>& d) {
  ScalarMatrix m(d.size(), d.size(), F);
  for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

/// The suspended A_3 object over the order-4 scaling group x -> zeta x.
struct MuFixture {
  RingPtr r = make_ring(4, {"x", "y"});
  FieldPtr F = r->field;
  Poly f = parse_poly("x^4 + y^2", r);
  GroupAction G{{diag(F, {Scalar::zeta_power(F, 1), Scalar::one(F)})}, r};
  EquivariantMF E;

  MuFixture() {
    PolyMatrix A = {{parse_poly("x", r), parse_poly("y", r)},
                    {parse_poly("-y", r), parse_poly("x^3", r)}};
    PolyMatrix B = {{parse_poly("x^3", r), parse_poly("-y", r)},
                    {parse_poly("y", r), parse_poly("x", r)}};
    // A maps the rho1 piece to the rho0 piece.
    std::vector<ScalarMatrix> rho0 = {diag(F, {Scalar::one(F), Scalar::zeta_power(F, 3)})};
    std::vector<ScalarMatrix> rho1 = {diag(F, {Scalar::zeta_power(F, 3), Scalar::one(F)})};
    E = make_mf("suspended", A, B, rho0, rho1, G);
  }
};

}  // namespace

TEST_CASE("validate_mf accepts a correct object and reports violations") {
  MuFixture fx;
  CHECK(validate_mf(fx.E, fx.f, fx.G).empty());

  EquivariantMF broken = fx.E;
  broken.A[0][0] = parse_poly("x^2", fx.r);
  auto issues = validate_mf(broken, fx.f, fx.G);
  CHECK_FALSE(issues.empty());

  EquivariantMF wrong_rho = fx.E;
  std::swap(wrong_rho.rho0, wrong_rho.rho1);
  CHECK_FALSE(validate_mf(wrong_rho, fx.f, fx.G).empty());
}

TEST_CASE("dual is a valid factorization with inverse-transpose equivariance") {
  MuFixture fx;
  EquivariantMF dual = dual_shifted(fx.E, fx.G);
  CHECK(validate_mf(dual, fx.f, fx.G).empty());
  CHECK(pm_equal(dual.A, pm_transpose(fx.E.B)));
  CHECK(pm_equal(dual.B, pm_transpose(fx.E.A)));
  // Double dual returns the original matrices and equivariance data.
  EquivariantMF dd = dual_shifted(dual, fx.G);
  CHECK(pm_equal(dd.A, fx.E.A));
  CHECK(pm_equal(dd.B, fx.E.B));
  for (size_t e = 0; e < fx.G.size(); ++e) {
    CHECK(dd.rho0[e] == fx.E.rho0[e]);
    CHECK(dd.rho1[e] == fx.E.rho1[e]);
  }
}

TEST_CASE("direct sum and representation twist stay valid") {
  MuFixture fx;
  EquivariantMF sum = direct_sum(fx.E, dual_shifted(fx.E, fx.G), fx.G);
  CHECK(sum.rank == 4);
  CHECK(validate_mf(sum, fx.f, fx.G).empty());

  // Twist by the order-4 character sending the generator to zeta.
  std::vector<ScalarMatrix> chi;
  for (size_t e = 0; e < fx.G.size(); ++e) {
    ScalarMatrix m(1, 1, fx.F);
    m.at(0, 0) = Scalar::zeta_power(fx.F, static_cast<long>(fx.G.word(e).size()));
    chi.push_back(m);
  }
  EquivariantMF twisted = tensor_rep(fx.E, chi, fx.G);
  CHECK(twisted.rank == 2);
  CHECK(validate_mf(twisted, fx.f, fx.G).empty());
}

TEST_CASE("external tensor implements Knoerrer periodicity blocks") {
  // E = (x, x) over Q[x] with trivial group, F = (y, y) over Q[y].
  RingPtr rx = make_ring(1, {"x"});
  RingPtr ry = make_ring(1, {"y"});
  RingPtr joint = make_ring(1, {"x", "y"});
  GroupAction Gx({}, rx);
  GroupAction Gy({}, ry);
  GroupAction Gj({}, joint);

  auto one_by_one = [](const RingPtr& r, const char* s) {
    return PolyMatrix{{parse_poly(s, r)}};
  };
  EquivariantMF Ex = make_mf("ex", one_by_one(rx, "x"), one_by_one(rx, "x"), {}, {}, Gx);
  EquivariantMF Ey = make_mf("ey", one_by_one(ry, "y"), one_by_one(ry, "y"), {}, {}, Gy);

  EquivariantMF T = external_tensor(Ex, Ey, joint, {0}, {1}, Gj);
  CHECK(T.rank == 2);
  Poly total = parse_poly("x^2 + y^2", joint);
  CHECK(validate_mf(T, total, Gj).empty());
}

TEST_CASE("sector restriction of the matrices") {
  RingPtr r = make_ring(2, {"x", "y"});
  const FieldPtr& F = r->field;
  GroupAction G({diag(F, {Scalar::one(F), Scalar::from_int(F, -1)})}, r);
  Poly f = parse_poly("x^3 + y^2", r);
  PolyMatrix A = {{parse_poly("x", r), parse_poly("y", r)},
                  {parse_poly("-y", r), parse_poly("x^2", r)}};
  PolyMatrix B = {{parse_poly("x^2", r), parse_poly("-y", r)},
                  {parse_poly("y", r), parse_poly("x", r)}};
  std::vector<ScalarMatrix> rho = {diag(F, {Scalar::one(F), Scalar::from_int(F, -1)})};
  EquivariantMF E = make_mf("a2", A, B, rho, rho, G);
  CHECK(validate_mf(E, f, G).empty());

  Sector sec = make_sector(G, G.generator_index(0), f);
  RestrictedMF res = restrict_sector(E, sec);
  RingPtr sub = sec.locus.sub_ring;
  // On the fixed line y = 0 the object restricts to (x, x^2) + zero blocks.
  CHECK(res.A[0][0] == parse_poly(sub->vars[0], sub));
  CHECK(res.A[0][1].is_zero());
  CHECK(res.A[1][0].is_zero());
}
