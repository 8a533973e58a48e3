#include <doctest.h>

#include "crsym/matrix.hpp"
#include "crsym/poly.hpp"
#include "crsym/report.hpp"
#include "crsym/tensor.hpp"

using namespace crsym;

namespace {

RingPtr xy_ring() { return make_ring({{"x", true}, {"y", false}}); }

}  // namespace

TEST_CASE("gaussian rationals: canonical strings and field operations") {
  GaussianRational a = GaussianRational::frac(6, 4);
  CHECK(a.to_string() == "3/2");
  GaussianRational z(make_rational(1, 2), make_rational(-1, 3));
  CHECK(GaussianRational::parse(z.to_string()) == z);
  CHECK((z * z.conj()).is_real());
  CHECK(z / z == GaussianRational(1));
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK(ipow(GaussianRational::i(), 4) == GaussianRational(1));
  CHECK(rational_from_string("-7/21") == make_rational(-1, 3));
}

TEST_CASE("laurent polynomials: arithmetic, derivatives, substitution") {
  auto R = xy_ring();
  LaurentPoly x = LaurentPoly::generator(R, 0), y = LaurentPoly::generator(R, 1);
  LaurentPoly xinv = LaurentPoly::monomial(R, {-1, 0}, GaussianRational(1));
  CHECK(x * xinv == LaurentPoly::constant(R, GaussianRational(1)));
  LaurentPoly p = (x + y).pow(2);
  CHECK(p.size() == 3);
  CHECK(p.coeff({1, 1}) == GaussianRational(2));
  CHECK(poly_diff(p, "y") == (x + y) * GaussianRational(2));
  CHECK(xinv.diff(0) == LaurentPoly::monomial(R, {-2, 0}, GaussianRational(-1)));
  CHECK((p - p).is_zero());
  CHECK(poly_arith(x, y, PolyOp::mul) == x * y);
  CHECK(poly_substitute(p, {y, x}) == p);
  CHECK(poly_substitute(x * y, {x, LaurentPoly::constant(R, GaussianRational(3))}) == x * GaussianRational(3));
  CHECK(p.degree_in({0, 1}) == 2);
  CHECK_THROWS(y.pow(-1));
}

TEST_CASE("grlex orders by degree first") {
  GrLex lt;
  CHECK(lt({0, 1}, {2, 0}));
  CHECK(lt({0, 2}, {1, 1}) != lt({1, 1}, {0, 2}));
  CHECK_FALSE(lt({1, 1}, {1, 1}));
}

TEST_CASE("exact rank solve: kernel, uniqueness, inconsistency") {
  ExactMatrix m = ExactMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  SolveResult r = exact_rank_solve(m);
  CHECK(r.rank == 2);
  REQUIRE(r.kernel.size() == 1);
  for (std::size_t i = 0; i < 3; ++i) {
    GaussianRational acc;
    for (std::size_t j = 0; j < 3; ++j) acc += m(i, j) * r.kernel[0][j];
    CHECK(acc.is_zero());
  }
  SolveResult bad = exact_rank_solve(m, Vec{1, 0, 0});
  CHECK_FALSE(bad.consistent);
  ExactMatrix sq = ExactMatrix::from_rows({{2, 1}, {1, 1}});
  SolveResult good = exact_rank_solve(sq, Vec{3, 2});
  CHECK(good.unique);
  CHECK((*good.solution)[0] == GaussianRational(1));
  CHECK((*good.solution)[1] == GaussianRational(1));
  CHECK(determinant(sq) == GaussianRational(1));
}

TEST_CASE("row space membership") {
  RowSpace rs(3);
  CHECK(rs.insert({1, 1, 0}));
  CHECK(rs.insert({0, 1, 1}));
  CHECK_FALSE(rs.insert({1, 2, 1}));
  CHECK(rs.contains({2, 1, -1}));
  CHECK_FALSE(rs.contains({0, 0, 1}));
  CHECK(rs.rank() == 2);
}

TEST_CASE("mixed tensors: contraction and column symmetry") {
  MixedTensor t(2, 2, 3);
  t.set({0, 1, 1, 2}, GaussianRational(1));
  CHECK_FALSE(t.is_column_symmetric());
  MixedTensor s = t.column_symmetrized();
  CHECK(s.is_column_symmetric());
  CHECK(s.get({1, 0, 2, 1}) == GaussianRational::frac(1, 2));
  MixedTensor d(1, 1, 2);
  d.set({0, 0}, GaussianRational(1));
  d.set({1, 1}, GaussianRational(1));
  CHECK(d.contract(0, 0).get({}) == GaussianRational(2));
  CHECK_FALSE(d.is_trace_free());
}

TEST_CASE("reports escalate status and keep bounded witnesses") {
  VerificationReport r("demo");
  r.begin("a");
  r.record_case(true);
  CHECK(r.passed());
  r.begin("b");
  r.record_finding("printed value differs");
  CHECK(r.status() == Status::finding);
  r.record_case(false, "broken");
  CHECK(r.status() == Status::fail);
  for (int i = 0; i < 100; ++i) r.record_case(false, "w" + std::to_string(i));
  CHECK(r.witnesses().size() == VerificationReport::kMaxWitnesses);
  auto j = r.to_json();
  CHECK(j["schema_version"] == VerificationReport::kSchemaVersion);
  CHECK_FALSE(j.contains("timing_seconds"));
  CHECK(r.to_json().dump() == j.dump());
}
