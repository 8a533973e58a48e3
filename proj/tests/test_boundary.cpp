#include <doctest.h>

#include "crsym/boundary.hpp"

using namespace crsym;

namespace {

// d/dz^a + (i/2) g_a zb^a d/dsigma and its conjugate, written out by hand.
LaurentPoly hol_oracle(const BoundaryModel& m, int a, const LaurentPoly& F) {
  GaussianRational c(Rational(0), make_rational(m.g[static_cast<std::size_t>(a)], 2));
  return F.diff(m.z(a)) + m.gen(m.zb(a)) * F.diff(m.sigma()) * c;
}

LaurentPoly antihol_oracle(const BoundaryModel& m, int a, const LaurentPoly& F) {
  GaussianRational c(Rational(0), make_rational(-m.g[static_cast<std::size_t>(a)], 2));
  return F.diff(m.zb(a)) + m.gen(m.z(a)) * F.diff(m.sigma()) * c;
}

}  // namespace

TEST_CASE("section lies on the null cone") {
  for (int n = 1; n <= 3; ++n) {
    BoundaryModel m = make_boundary(n);
    CHECK(phi_pullback(m, r_poly(m.amb)).is_zero());
    CHECK(phi_pullback(m, m.amb.x_up(1)) == m.gen(m.z(0)));
    LaurentPoly s = (m.amb.x_up(m.amb.inf()) - m.amb.x_low(0)) * GaussianRational(Rational(0), make_rational(-1, 2));
    CHECK(phi_pullback(m, s) == m.gen(m.sigma()));
  }
}

TEST_CASE("frame identities") {
  for (int n = 1; n <= 3; ++n) {
    VerificationReport rep = frame_identities_check(make_boundary(n));
    CHECK_MESSAGE(rep.passed(), rep.summary());
  }
  CHECK(frame_identities_check(make_boundary(2, {1, -1})).passed());
}

TEST_CASE("extension of 1 and pullback of extensions") {
  BoundaryModel m = make_boundary(2);
  Exponents e(m.amb.ring->arity(), 0);
  e[m.amb.up(0)] = -1;
  e[m.amb.low(m.amb.inf())] = -1;
  CHECK(extend(m, m.constant(GaussianRational(1)), -1, -1) == LaurentPoly::monomial(m.amb.ring, e, GaussianRational(1)));
  for (const auto& F : boundary_monomials(m, 3)) CHECK(phi_pullback(m, extend(m, F, 0, -2)) == F);
}

TEST_CASE("tangential derivatives match the chain-rule formula") {
  for (const auto& g : std::vector<std::vector<int>>{{1, 1}, {1, -1}}) {
    BoundaryModel m = make_boundary(2, g);
    TangentialOps t = tangential_ops(m);
    for (const auto& F : boundary_monomials(m, 3))
      for (int a = 0; a < 2; ++a) {
        CHECK(weyl_apply(t.d[static_cast<std::size_t>(a)], F) == hol_oracle(m, a, F));
        CHECK(weyl_apply(t.dbar[static_cast<std::size_t>(a)], F) == antihol_oracle(m, a, F));
        CHECK(operational_derivative(m, Direction::hol, a, F, 0, 0) == hol_oracle(m, a, F));
        CHECK(operational_derivative(m, Direction::antihol, a, F, 0, 0) == antihol_oracle(m, a, F));
      }
    CHECK(verify_tangential(m, 2, -1, -1).passed());
  }
}

TEST_CASE("only the mixed commutator survives") {
  BoundaryModel m = make_boundary(2, {1, -1});
  TangentialOps t = tangential_ops(m);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
      CHECK(weyl_commutator(t.d[ua], t.d[ub]).is_zero());
      WeylOperator expect(m.ring);
      if (a == b) expect = t.dsigma * GaussianRational(Rational(0), Rational(m.g[ua]));
      CHECK(weyl_commutator(t.dbar[ua], t.d[ub]) == expect);
    }
}

TEST_CASE("sub-Laplacian on simple inputs") {
  BoundaryModel m = make_boundary(1);
  CHECK(weyl_apply(sublaplacian(m, -1, -1), m.constant(GaussianRational(1))).is_zero());
  CHECK(weyl_apply(sublaplacian(m, 0, -1), m.gen(m.z(0))).is_zero());
  CHECK(weyl_apply(sublaplacian(m, 0, -1), m.gen(m.sigma())) ==
        m.constant(GaussianRational(Rational(0), make_rational(1, 2))));
}

TEST_CASE("reduction to the sub-Laplacian") {
  for (int n = 1; n <= 2; ++n) {
    VerificationReport rep = reduction_sweep(make_boundary(n), 3, 4);
    CHECK_MESSAGE(rep.passed(), rep.summary());
  }
  BoundaryModel m = make_boundary(1);
  CHECK(verify_reduction(m, m.gen(m.z(0)) * m.gen(m.zb(0)), 0, -1).passed());
  CHECK(reduction_sweep(make_boundary(2, {1, -1}), 2, 2).passed());
  CHECK(admissible_weights(2, 4).size() == 5);
  CHECK(admissible_weights(1, 4).size() == 4);
}

TEST_CASE("Laplacian of r times h") {
  BoundaryModel m = make_boundary(2);
  for (const auto& h : boundary_monomials(m, 2)) {
    CHECK(verify_rh_lemma(m, h, 0, -2).passed());
    CHECK(verify_rh_lemma(m, h, 1, 1).passed());
  }
}

TEST_CASE("induced operators") {
  BoundaryModel m = make_boundary(2);
  Rng rng(8);
  ExactMatrix V = random_traceless(4, rng);
  CHECK(verify_induced_symmetry(m, dv(m.amb, V), -1, -1, 2).passed());
  for (const auto& F : boundary_monomials(m, 2)) {
    CHECK(induce(m, ambient_laplacian(m.amb), 0, -2, F) == weyl_apply(sublaplacian(m, 0, -2), F));
    CHECK(induce(m, central_element(m.amb), 0, -2, F) == F * GaussianRational(Rational(0), Rational(2)));
  }
  ExactMatrix W = random_traceless(4, rng);
  CHECK(induced_composition_check(m, V, W, -1, -1, 2).passed());
}
