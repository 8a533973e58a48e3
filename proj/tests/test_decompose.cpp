#include <doctest.h>

#include <numeric>

#include "crsym/decompose.hpp"

using namespace crsym;

namespace {

// dim S^2 sl(N) minus the trace conditions, counted by hand:
// S^2 of an m-dim space has m(m+1)/2 elements; contracting one pair lands in gl(N), N^2 conditions.
long s2_tracefree_dim(long N) {
  long m = N * N - 1;
  return m * (m + 1) / 2 - N * N;
}

// Hook content formula for U(N)-irrep dimension of a partition.
long gl_dim(const Partition& lam, long N) {
  long num = 1, den = 1;
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) {
      long arm = lam[i] - j - 1;
      long leg = 0;
      for (std::size_t r = i + 1; r < lam.size() && lam[r] > j; ++r) ++leg;
      num *= N + j - static_cast<long>(i);
      den *= arm + leg + 1;
    }
  return num / den;
}

}  // namespace

TEST_CASE("Weyl dimension formula") {
  CHECK(weyl_dim({1, 0, 0}) == 3);
  CHECK(weyl_dim({1, 0, -1}) == 8);
  CHECK(weyl_dim({2, 0, 0, -2}) == 84);
  CHECK(weyl_dim({1, 1, -1, -1}) == 20);
  CHECK(lambda_plus_dual({2, 1}, 4) == std::vector<int>{2, 1, -1, -2});
  for (long N = 2; N <= 5; ++N)
    for (int k = 1; k <= 3; ++k)
      for (const auto& lam : partitions(k)) {
        if (static_cast<long>(lam.size()) > N) continue;
        std::vector<int> w(static_cast<std::size_t>(N), 0);
        for (std::size_t i = 0; i < lam.size(); ++i) w[i] = lam[i];
        CHECK(weyl_dim(w) == gl_dim(lam, N));
      }
}

TEST_CASE("trace-free symmetric tensors: dimension by two routes") {
  for (int N = 3; N <= 5; ++N) {
    SymmetricTraceFree S = trace_free_symmetric_basis(2, N);
    CHECK(static_cast<long>(S.dim()) == s2_tracefree_dim(N));
    long sum = 0;
    for (const auto& lam : partitions(2)) sum += weyl_dim(lambda_plus_dual(lam, N));
    if (N >= 4) CHECK(sum == s2_tracefree_dim(N));
  }
  // N = 3: the (1,1) piece is absent from the tensors, though its Weyl dimension is 8
  SymmetricTraceFree S3 = trace_free_symmetric_basis(2, 3);
  CHECK(S3.dim() == 27);
  CHECK(isotypic_rank(S3, {1, 1}) == 0);
  CHECK(trace_free_symmetric_basis(1, 3).dim() == 8);
}

TEST_CASE("isotypic ranks for (k,N) = (2,4)") {
  SymmetricTraceFree S = trace_free_symmetric_basis(2, 4);
  CHECK(isotypic_rank(S, {2}) == 84);
  CHECK(isotypic_rank(S, {1, 1}) == 20);
  CHECK(isotypic_rank(S, {1, 1}, true) == 20);
  CHECK(S.dim() == 104);
}

TEST_CASE("below the stable range components can vanish") {
  SymmetricTraceFree S = trace_free_symmetric_basis(2, 2);
  CHECK(isotypic_rank(S, {1, 1}) == 0);
  CHECK(isotypic_rank(S, {2}) == S.dim());
}

TEST_CASE("C_s examples and conjugation") {
  CHECK(c_s_examples_check(3, 1).passed());
  CHECK(conjugation_lemmas_check(2, 3, 2).passed());
  CHECK(conjugation_lemmas_check(3, 2, 3).passed());
  Perm s = parity_exchanging({1, 0}, {0, 1});
  CHECK(s == Perm{3, 0, 1, 2});
  CHECK(conjugate(identity_perm(4), s) == s);
  CHECK(embed_first({1, 0}) == Perm{2, 1, 0, 3});
  CHECK(embed_second({1, 0}) == Perm{0, 3, 2, 1});
}

TEST_CASE("commutant operators") {
  VerificationReport oracle = commutant_oracle_check(2, 3, 4);
  CHECK_MESSAGE(oracle.passed(), oracle.summary());
  VerificationReport mult = commutant_mult_crosscheck(2, 4);
  CHECK_MESSAGE(mult.passed(), mult.summary());
  Rng rng(6);
  MixedTensor T = random_symmetric(2, 3, rng);
  CHECK(commutant_apply({1, 1}, T) == T);
}

TEST_CASE("decomposition and highest weight vectors") {
  CHECK(decomposition_check(2, 4).passed());
  CHECK(decomposition_check(2, 3).passed());
  for (const auto& lam : partitions(3)) {
    HighestWeightVector hw = highest_weight_vector(lam, 6);
    CHECK(hw.nonzero);
    CHECK(hw.weight_ok);
    CHECK(hw.raised_to_zero);
    CHECK(hw.trace_free);
    CHECK(hw.weight == lambda_plus_dual(lam, 6));
    HighestWeightVector hy = highest_weight_vector(lam, 6, false);
    CHECK(hy.nonzero);
  }
  CHECK(hw_vectors_check(2, 4).passed());
}

TEST_CASE("skew vanishing") {
  CHECK(skew_vanishing_check({2}, 2, 3, 5, 1).passed());
  CHECK(skew_vanishing_check({2, 1}, 3, 3, 5, 1).passed());
  CHECK(skew_vanishing_check({3}, 3, 3, 5, 1).passed());
  CHECK_THROWS(skew_vanishing_check({1, 1}, 2, 3, 1, 1));
}

TEST_CASE("seven pieces of the square of gl") {
  VerificationReport rep = seven_pieces_check(3, 2);
  CHECK_MESSAGE(rep.passed(), rep.summary());
}

TEST_CASE("isotypic table") {
  auto j = isotypic_table_json(2, 4);
  CHECK(j["dim_S0"] == 104);
  CHECK(j["stable"] == true);
  CHECK(j["components"].size() == 2);
}
