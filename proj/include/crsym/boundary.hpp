#pragma once

#include <vector>

#include "crsym/ambient.hpp"

namespace crsym {

// Flat model: generators z^1..z^n (0..n-1), conjugates zb^1..zb^n (n..2n-1), sigma (2n).
struct BoundaryModel {
  int n = 1;
  std::vector<int> g;
  RingPtr ring;
  AmbientModel amb;

  std::size_t z(int a) const { return static_cast<std::size_t>(a); }
  std::size_t zb(int a) const { return static_cast<std::size_t>(n + a); }
  std::size_t sigma() const { return static_cast<std::size_t>(2 * n); }
  LaurentPoly gen(std::size_t i) const { return LaurentPoly::generator(ring, i); }
  LaurentPoly constant(const GaussianRational& c) const { return LaurentPoly::constant(ring, c); }
  // sum_a g_a z^a zb^a
  LaurentPoly quadric() const;
};

BoundaryModel make_boundary(int n, std::vector<int> g = {});

// Frame fields on the section, ambient index order (0, 1..n, inf); boundary index a runs 0..n-1.
struct FrameFields {
  std::vector<LaurentPoly> X_up, X_low, Z_up, Z_low;
  std::vector<std::vector<LaurentPoly>> Y_up;   // Y_up[A][b] = Y^A_b
  std::vector<std::vector<LaurentPoly>> Y_low;  // Y_low[b][B] = Y^b_B
};
FrameFields frame_fields(const BoundaryModel& m);
VerificationReport frame_identities_check(const BoundaryModel& m);

LaurentPoly phi_pullback(const BoundaryModel& m, const LaurentPoly& f);
LaurentPoly extend(const BoundaryModel& m, const LaurentPoly& F, int w1, int w2);

struct TangentialOps {
  std::vector<WeylOperator> d;     // d_a
  std::vector<WeylOperator> dbar;  // d_abar (lowered)
  std::vector<WeylOperator> dup;   // d^a = g_a d_abar
  WeylOperator dsigma;
};
TangentialOps tangential_ops(const BoundaryModel& m);

enum class Direction { hol, antihol, sigma };
// Pullback of the tangent ambient field applied to the extension of F.
LaurentPoly operational_derivative(const BoundaryModel& m, Direction dir, int a, const LaurentPoly& F, int w1, int w2);
VerificationReport verify_tangential(const BoundaryModel& m, int deg, int w1, int w2);

WeylOperator sublaplacian(const BoundaryModel& m, int w1, int w2);

std::vector<LaurentPoly> boundary_monomials(const BoundaryModel& m, int deg);
// Integer weight pairs with n+w1+w2=0 and |w1-w2| <= max_gap.
std::vector<std::pair<int, int>> admissible_weights(int n, int max_gap);

VerificationReport verify_reduction(const BoundaryModel& m, const LaurentPoly& F, int w1, int w2);
VerificationReport reduction_sweep(const BoundaryModel& m, int deg, int max_gap);
VerificationReport verify_rh_lemma(const BoundaryModel& m, const LaurentPoly& h, int w1, int w2);

LaurentPoly induce(const BoundaryModel& m, const WeylOperator& D, int w1, int w2, const LaurentPoly& F);
// Delta o D_w = D_{w-1} o Delta on monomials up to deg (needs n+w1+w2=0).
VerificationReport verify_induced_symmetry(const BoundaryModel& m, const WeylOperator& D, int w1, int w2, int deg);
// induce(D_V D_W) against the induced parts of the decomposition plus the quadric times Delta.
VerificationReport induced_composition_check(const BoundaryModel& m, const ExactMatrix& V, const ExactMatrix& W,
                                             int w1, int w2, int deg,
                                             ScalarCoefficients coeffs = ScalarCoefficients::rederived);

}  // namespace crsym
