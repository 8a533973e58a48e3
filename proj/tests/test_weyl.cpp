#include <doctest.h>

#include "crsym/weyl.hpp"

using namespace crsym;

namespace {

struct Fixture {
  RingPtr R = make_ring({{"x", false}, {"y", false}});
  LaurentPoly x = LaurentPoly::generator(R, 0);
  LaurentPoly y = LaurentPoly::generator(R, 1);
  WeylOperator dx = WeylOperator::partial(R, 0);
  WeylOperator dy = WeylOperator::partial(R, 1);
  WeylOperator mx = WeylOperator::multiplication(x);
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "canonical commutator [d_x, x] = 1") {
  CHECK(weyl_commutator(dx, mx) == WeylOperator::identity(R));
  CHECK(weyl_commutator(dx, dy).is_zero());
}

TEST_CASE_FIXTURE(Fixture, "composition agrees with sequential application") {
  WeylOperator a = weyl_compose(mx, dy) + dx;
  WeylOperator b = weyl_compose(dx, dx) + WeylOperator::multiplication(y * y);
  LaurentPoly p = x.pow(3) * y.pow(2) + x * GaussianRational(5);
  CHECK(weyl_apply(weyl_compose(a, b), p) == weyl_apply(a, weyl_apply(b, p)));
  CHECK(weyl_compose(a, b).order() == 3);
}

TEST_CASE_FIXTURE(Fixture, "normal ordering of d_x x") {
  WeylOperator op = weyl_compose(dx, mx);
  CHECK(op == weyl_compose(mx, dx) + WeylOperator::identity(R));
  CHECK(dx.left_mul(x) == weyl_compose(mx, dx));
}

TEST_CASE_FIXTURE(Fixture, "principal part keeps top order only") {
  WeylOperator op = weyl_compose(dx, dy) + dx + WeylOperator::identity(R);
  WeylOperator top = principal_part(op, 2);
  CHECK(top == weyl_compose(dx, dy));
  CHECK(principal_part(op, 1) == dx);
}

TEST_CASE_FIXTURE(Fixture, "apply_derivative on monomials") {
  CHECK(apply_derivative({2, 0}, x.pow(3)) == x * GaussianRational(6));
  CHECK(apply_derivative({0, 1}, x).is_zero());
}
