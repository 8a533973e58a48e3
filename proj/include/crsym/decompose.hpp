#pragma once

#include <map>
#include <vector>

#include "crsym/classalg.hpp"
#include "crsym/matrix.hpp"
#include "crsym/rng.hpp"
#include "crsym/tensor.hpp"

namespace crsym {

// Tensors in this module have k upper slots (epsilon^I) then k lower slots (e_J).
// Slot m of the permuted tensor receives slot p^{-1}(m): a factor at position m moves to p(m).
MixedTensor permute_lower(const MixedTensor& T, const Perm& p);
MixedTensor permute_upper(const MixedTensor& T, const Perm& p);
MixedTensor act_lower(const MixedTensor& T, const GroupAlgebraElement& x);
MixedTensor act_upper(const MixedTensor& T, const GroupAlgebraElement& x);
// Elementary matrix E_ab of gl(N): e_b -> e_a on lower slots, eps^a -> -eps^b on upper slots.
MixedTensor gl_action(const MixedTensor& T, int a, int b);
// Alternating sum over permutations of the given lower slots.
MixedTensor skew_lower(const MixedTensor& T, const std::vector<int>& slots);

// C_s for s in S_{2k}, positions 0..2k-1 (even position 2m carries column m's upper factor).
MixedTensor c_s_apply(const Perm& s, const MixedTensor& T);
// The parity-exchanging s with s(2m) = 2 sigma1(m) + 1 and s(2m+1) = 2 sigma2(m).
Perm parity_exchanging(const Perm& sigma1, const Perm& sigma2);
Perm conjugate(const Perm& sigma, const Perm& s);  // sigma s sigma^{-1}
// Embeds a permutation of k into S_{2k}: on even positions (first factor) or odd positions (second factor).
Perm embed_first(const Perm& p);
Perm embed_second(const Perm& p);

// Averaged class sum of tau acting on lower slots.
MixedTensor commutant_apply(const Partition& tau, const MixedTensor& T);
// (1/k!^2) sum over S^1 x S^2 of C_{Ad_sigma s}, s with sigma-tilde of type tau.
MixedTensor commutant_apply_full(const Partition& tau, const MixedTensor& T);

MixedTensor random_symmetric(int k, int N, Rng& rng, int entries = 6);

// Column-symmetric tensors in one weight space, coordinates indexed by column multisets.
struct WeightSpace {
  std::vector<int> weight;
  std::vector<Index> multisets;  // sorted column ids c = upper*N + lower
  std::map<Index, std::size_t> position;
  std::vector<Vec> constraints;  // contraction rows
  std::vector<Vec> basis;        // trace-free symmetric tensors
};

struct SymmetricTraceFree {
  int k = 0;
  int N = 0;
  std::vector<WeightSpace> spaces;
  std::size_t dim() const;
  std::size_t coordinate_dim() const;
};

SymmetricTraceFree trace_free_symmetric_basis(int k, int N);
MixedTensor expand_coordinates(const WeightSpace& ws, int k, int N, const Vec& f);
Vec compress_tensor(const WeightSpace& ws, const MixedTensor& T);
// Matrix of a central element acting on lower (or upper) slots, on the coordinates of one weight space.
ExactMatrix central_action_matrix(const WeightSpace& ws, int k, int N, const ClassElement& x, bool upper = false);

ClassElement central_idempotent_class(const Partition& lambda);
std::size_t isotypic_rank(const SymmetricTraceFree& S, const Partition& lambda, bool upper = false);

long weyl_dim(const std::vector<int>& weight);
std::vector<int> lambda_plus_dual(const Partition& lambda, int N);

struct HighestWeightVector {
  MixedTensor v;
  bool nonzero = false;
  bool weight_ok = false;
  bool raised_to_zero = false;
  bool trace_free = false;
  std::vector<int> weight;
};
// central = true uses the central idempotent, otherwise the Young projector sum.
HighestWeightVector highest_weight_vector(const Partition& lambda, int N, bool central = true);

VerificationReport c_s_examples_check(int N, std::uint64_t seed);
VerificationReport conjugation_lemmas_check(int k, int N, std::uint64_t seed);
VerificationReport commutant_oracle_check(int k, int N, std::uint64_t seed);
VerificationReport commutant_mult_crosscheck(int k, int N);
VerificationReport decomposition_check(int k, int N);
VerificationReport hw_vectors_check(int k_max, int N);
VerificationReport skew_vanishing_check(const Partition& lambda, int k, int N, int trials, std::uint64_t seed);
VerificationReport seven_pieces_check(int N, std::uint64_t seed);

nlohmann::json isotypic_table_json(int k, int N);

}  // namespace crsym
