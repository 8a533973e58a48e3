#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "crsym/boundary.hpp"

namespace crsym {

// Symbol component V^{a_1..a_k sigma^m}_{b_1..b_l} with boundary-polynomial values.
// Components are stored at sorted index tuples (the tensor is symmetric in each group).
struct SymbolTensor {
  int k = 0;
  int l = 0;
  int m = 0;
  int n = 1;
  RingPtr ring;
  std::map<std::pair<Index, Index>, LaurentPoly> comps;

  LaurentPoly get(Index up, Index low) const;
  void add(Index up, Index low, const LaurentPoly& v);
  bool is_zero() const { return comps.empty(); }
  nlohmann::json to_json() const;
};

struct SymbolFamily {
  int d = 0;
  int n = 1;
  std::map<std::pair<int, int>, SymbolTensor> parts;  // keyed by (k, l), m = d-k-l
  const SymbolTensor& at(int k, int l) const;
};

// Sorted tuples of length len over {0..n-1}.
std::vector<Index> sorted_tuples(int len, int n);

SymbolFamily extract_symbols(const BoundaryModel& m, const MixedTensor& T);
SymbolTensor extract_symbol(const BoundaryModel& m, const MixedTensor& T, int k, int l);

// Symmetrized d^(a V^...) and d_(b V_...) (averages).
SymbolTensor sym_derivative_up(const BoundaryModel& m, const SymbolTensor& V);
SymbolTensor sym_derivative_low(const BoundaryModel& m, const SymbolTensor& V);
// True when V lies in the image of Sym(delta (x) lambda); for k==0 or l==0 this means V == 0.
bool is_pure_trace(const SymbolTensor& V, std::string* witness = nullptr);

VerificationReport check_symbol_recursions(const BoundaryModel& m, const SymbolFamily& fam);
VerificationReport check_bgg(const BoundaryModel& m, const SymbolTensor& top, int d, int s);

long a_coeff(int s, int row, int i);
VerificationReport pascal_identity_check(int s_max);

struct Prop1System {
  int d = 0;
  int s = 0;
  ExactMatrix matrix;  // rows k+1 = 1..s, columns x_1..x_s
  Vec rhs;
  ExactMatrix a_matrix;  // a^s_{k+1,i}, i = 1..s
  GaussianRational det_a;
  bool unique = false;
  std::vector<GaussianRational> x;  // x_0 = 1, x_1..x_s
};
long type_count(int d, int s, int i);
Prop1System prop1_system(int d, int s);
VerificationReport det_recurrence_check(int s_max);

// Seed V^{p..p}_{q..q} = 1 (boundary indices, p != q).
MixedTensor build_prop1_tensor(const BoundaryModel& m, int d, int s, const std::vector<GaussianRational>& x,
                               int p = 0, int q = 1);
VerificationReport verify_prop1(const BoundaryModel& m, int d, int s);

// Column-symmetric, totally trace-free tensor built from null column pairs.
MixedTensor random_tracefree_symmetric(int N, int d, Rng& rng, int terms = 3);
// Skew in the three upper indices only, or in both groups (column-symmetric).
MixedTensor random_three_skew(int N, int d, Rng& rng, bool both);
VerificationReport el2_vanishing_check(const BoundaryModel& m, int d, int trials, std::uint64_t seed);

std::vector<long> symmetry_space_dim(int d, int n);

}  // namespace crsym
