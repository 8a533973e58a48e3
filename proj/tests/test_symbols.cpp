#include <doctest.h>

#include "crsym/symbols.hpp"

using namespace crsym;

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Integer Bareiss elimination, kept separate from the library determinant.
long bareiss_det(std::vector<std::vector<long>> a) {
  std::size_t n = a.size();
  long sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

TEST_CASE("coefficients of the recursion") {
  for (int s = 1; s <= 8; ++s)
    for (int i = 1; i <= s; ++i) CHECK(a_coeff(s, 1, i) == 1);
  CHECK(a_coeff(1, 1, 1) == 1);
  for (int s = 1; s <= 6; ++s)
    for (int row = 1; row <= s; ++row)
      for (int i = 1; i <= s; ++i) {
        long direct = 0;
        int k = row - 1;
        for (int j = 0; j <= k; ++j) direct += binom(s - i, k - j) * binom(i, j) * binom(s - j, k);
        CHECK(a_coeff(s, row, i) == direct);
      }
  CHECK(pascal_identity_check(8).passed());
}

TEST_CASE("the coefficient matrix is unimodular") {
  for (int s = 1; s <= 8; ++s) {
    std::vector<std::vector<long>> a(static_cast<std::size_t>(s), std::vector<long>(static_cast<std::size_t>(s)));
    for (int r = 1; r <= s; ++r)
      for (int i = 1; i <= s; ++i) a[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(i - 1)] = a_coeff(s, r, i);
    long det = bareiss_det(a);
    CHECK(std::labs(det) == 1);
    CHECK(det == ((s * (s - 1) / 2) % 2 == 0 ? 1 : -1));
  }
  CHECK(det_recurrence_check(8).passed());
}

TEST_CASE("type counts") {
  CHECK(type_count(2, 1, 0) == 2);
  CHECK(type_count(2, 1, 1) == 2);
  CHECK(type_count(4, 2, 2) == binom(4, 2));
}

TEST_CASE("systems for the seeded constructions are uniquely solvable") {
  for (auto [d, s] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 3}}) {
    Prop1System sys = prop1_system(d, s);
    CHECK(sys.unique);
    CHECK(sys.x.size() == static_cast<std::size_t>(s + 1));
    CHECK(sys.x[0] == GaussianRational(1));
  }
}

TEST_CASE("symmetries with a prescribed top symbol") {
  BoundaryModel m = make_boundary(3);
  for (auto [d, s] : std::vector<std::pair<int, int>>{{1, 0}, {2, 1}, {3, 1}, {4, 2}}) {
    VerificationReport rep = verify_prop1(m, d, s);
    CHECK_MESSAGE(rep.passed(), rep.summary());
  }
  CHECK_THROWS(verify_prop1(make_boundary(1), 2, 1));
}

TEST_CASE("symmetrized derivatives of a scalar symbol") {
  BoundaryModel m = make_boundary(2);
  TangentialOps t = tangential_ops(m);
  SymbolTensor V;
  V.n = 2;
  V.ring = m.ring;
  LaurentPoly F = m.gen(m.z(0)) * m.gen(m.zb(1)) * m.gen(m.sigma());
  V.add({}, {}, F);
  SymbolTensor up = sym_derivative_up(m, V);
  SymbolTensor low = sym_derivative_low(m, V);
  CHECK(up.k == 1);
  CHECK(low.l == 1);
  for (int a = 0; a < 2; ++a) {
    CHECK(up.get({a}, {}) == weyl_apply(t.dup[static_cast<std::size_t>(a)], F));
    CHECK(low.get({}, {a}) == weyl_apply(t.d[static_cast<std::size_t>(a)], F));
  }
}

TEST_CASE("pure trace detection") {
  BoundaryModel m = make_boundary(2);
  SymbolTensor delta;
  delta.k = 1;
  delta.l = 1;
  delta.n = 2;
  delta.ring = m.ring;
  delta.add({0}, {0}, m.constant(GaussianRational(1)));
  delta.add({1}, {1}, m.constant(GaussianRational(1)));
  CHECK(is_pure_trace(delta));
  SymbolTensor off = delta;
  off.add({0}, {1}, m.constant(GaussianRational(1)));
  std::string why;
  CHECK_FALSE(is_pure_trace(off, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("symbols of random trace-free tensors satisfy the recursions") {
  Rng rng(21);
  for (int n = 2; n <= 3; ++n) {
    BoundaryModel m = make_boundary(n);
    for (int d = 1; d <= 2; ++d) {
      MixedTensor T = random_tracefree_symmetric(n + 2, d, rng);
      CHECK(T.is_trace_free());
      CHECK(T.is_column_symmetric());
      VerificationReport rep = check_symbol_recursions(m, extract_symbols(m, T));
      CHECK_MESSAGE(rep.passed(), rep.summary());
    }
  }
}

TEST_CASE("alternation over three columns kills every symbol") {
  for (int n = 2; n <= 3; ++n) {
    VerificationReport rep = el2_vanishing_check(make_boundary(n), 3, 3, 5);
    CHECK_MESSAGE(rep.passed(), rep.summary());
  }
}

TEST_CASE("dimensions of the symmetry spaces") {
  CHECK(symmetry_space_dim(1, 1) == std::vector<long>{8, 8});
  CHECK(symmetry_space_dim(1, 2) == std::vector<long>{15, 15});
  CHECK(symmetry_space_dim(2, 1) == std::vector<long>{27, 8, 35});
  CHECK(symmetry_space_dim(2, 2) == std::vector<long>{84, 20, 104});
}
