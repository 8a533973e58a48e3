#pragma once

#include <utility>
#include <vector>

#include "crsym/matrix.hpp"
#include "crsym/report.hpp"
#include "crsym/rng.hpp"
#include "crsym/tensor.hpp"
#include "crsym/weyl.hpp"

namespace crsym {

// Ambient C^{n+2}. Index A runs over 0, 1..n, n+1 (the last one is infinity).
// Generators: x^A at position A, lowered x_A at position N+A.
struct AmbientModel {
  int n = 1;
  std::vector<int> g;  // diagonal metric block, entries +1 or -1
  RingPtr ring;

  int N() const { return n + 2; }
  int inf() const { return n + 1; }
  std::size_t up(int A) const { return static_cast<std::size_t>(A); }
  std::size_t low(int A) const { return static_cast<std::size_t>(N() + A); }
  LaurentPoly x_up(int A) const { return LaurentPoly::generator(ring, up(A)); }
  LaurentPoly x_low(int A) const { return LaurentPoly::generator(ring, low(A)); }
  LaurentPoly one() const { return LaurentPoly::constant(ring, GaussianRational(1)); }
  LaurentPoly constant(const GaussianRational& c) const { return LaurentPoly::constant(ring, c); }
  Exponents d_up(int A) const;   // derivative multi-index of d/dx^A
  Exponents d_low(int A) const;  // derivative multi-index of d/dx_A
};

AmbientModel make_ambient(int n, std::vector<int> g = {});

// Matrices are indexed (upper, lower): V(B, A) = V^B_A.
void require_traceless(const ExactMatrix& V);
ExactMatrix random_traceless(int N, Rng& rng);
std::vector<ExactMatrix> sl_basis(int N);
ExactMatrix elementary(int N, int row, int col);

LaurentPoly r_poly(const AmbientModel& m);
WeylOperator ambient_laplacian(const AmbientModel& m);
std::pair<WeylOperator, WeylOperator> euler_ops(const AmbientModel& m);
// x^A d_B - x_B d^A
WeylOperator column_op(const AmbientModel& m, int B, int A);
WeylOperator dv(const AmbientModel& m, const ExactMatrix& V);
WeylOperator dv_unchecked(const AmbientModel& m, const ExactMatrix& V);
ExactMatrix dv_bracket(const ExactMatrix& V, const ExactMatrix& W);
// i(x^B d_B - x_B d^B)
WeylOperator central_element(const AmbientModel& m);
VerificationReport central_action_check(const AmbientModel& m, int w1, int w2, int bound = 2);
// [Lap, D_V] = 0 and [D_V, r] = 0 on the sl basis; bracket closure on seeded pairs.
VerificationReport commutation_check(const AmbientModel& m, int pairs, std::uint64_t seed);

// Laurent monomials of bidegree (w1,w2) with every exponent in [-bound, bound].
std::vector<LaurentPoly> bidegree_monomials(const AmbientModel& m, int w1, int w2, int bound);

// V^{B_1..B_d}_{A_1..A_d} prod_i (x^{A_i} d_{B_i} - x_{B_i} d^{A_i}), normal ordered.
WeylOperator higher_symmetry_op(const AmbientModel& m, const MixedTensor& V);

struct CompositionParts {
  int n = 0;
  int w1 = 0;
  int w2 = 0;
  MixedTensor T;  // keys (B, D, A, C)
  ExactMatrix U;
  ExactMatrix Utilde;
  MixedTensor vw2;
  ExactMatrix vw1;
  GaussianRational vw0;           // as printed
  GaussianRational vw0_rederived; // from the general-weight display with corrected scalar
};

// Coefficients of the trace part of V (x) W, in closed form.
std::pair<ExactMatrix, ExactMatrix> trace_part_closed_form(int n, const ExactMatrix& V, const ExactMatrix& W);
// Same quantities by exact linear projection (symmetric gauge tr U = tr Utilde).
std::pair<ExactMatrix, ExactMatrix> trace_part_by_projection(int n, const ExactMatrix& V, const ExactMatrix& W);
MixedTensor outer(const ExactMatrix& V, const ExactMatrix& W);
MixedTensor trace_part_tensor(int N, const ExactMatrix& U, const ExactMatrix& Ut);

CompositionParts compose_decompose(const AmbientModel& m, const ExactMatrix& V, const ExactMatrix& W, int w1, int w2);

enum class ScalarCoefficients { printed, rederived };

// Checks the long general-weight display on every monomial of bidegree (w1,w2).
VerificationReport verify_composition_identity(const AmbientModel& m, const ExactMatrix& V, const ExactMatrix& W,
                                               int w1, int w2, int bound,
                                               ScalarCoefficients coeffs = ScalarCoefficients::rederived);

// Second-order part T^{BD}_{AC} Q^{BD}_{AC} built from any 2+2 tensor.
WeylOperator quadratic_op(const AmbientModel& m, const MixedTensor& T);

}  // namespace crsym
