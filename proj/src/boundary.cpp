#include "crsym/boundary.hpp"

#include <functional>
#include <stdexcept>

namespace crsym {

namespace {

GaussianRational Q(long p, long q = 1) { return GaussianRational(make_rational(p, q)); }

LaurentPoly amb_unit_power(const AmbientModel& a, std::size_t gen, int e) {
  Exponents ex(a.ring->arity(), 0);
  ex[gen] = e;
  return LaurentPoly::monomial(a.ring, ex, GaussianRational(1));
}

}  // namespace

LaurentPoly BoundaryModel::quadric() const {
  LaurentPoly q(ring);
  for (int a = 0; a < n; ++a) q += gen(z(a)) * gen(zb(a)) * GaussianRational(g[static_cast<std::size_t>(a)]);
  return q;
}

BoundaryModel make_boundary(int n, std::vector<int> g) {
  BoundaryModel m;
  m.amb = make_ambient(n, std::move(g));
  m.n = n;
  m.g = m.amb.g;
  std::vector<Generator> gens;
  for (int a = 1; a <= n; ++a) gens.push_back({"z" + std::to_string(a), false});
  for (int a = 1; a <= n; ++a) gens.push_back({"zb" + std::to_string(a), false});
  gens.push_back({"sigma", false});
  m.ring = make_ring(std::move(gens));
  return m;
}

FrameFields frame_fields(const BoundaryModel& m) {
  int n = m.n;
  int N = n + 2;
  auto zero = m.constant(GaussianRational());
  auto one = m.constant(GaussianRational(1));
  LaurentPoly half_q = m.quadric() * Q(-1, 2);
  LaurentPoly isig = m.gen(m.sigma()) * GaussianRational::i();
  FrameFields f;
  f.X_up.assign(static_cast<std::size_t>(N), zero);
  f.X_low.assign(static_cast<std::size_t>(N), zero);
  f.Z_up.assign(static_cast<std::size_t>(N), zero);
  f.Z_low.assign(static_cast<std::size_t>(N), zero);
  f.Y_up.assign(static_cast<std::size_t>(N), std::vector<LaurentPoly>(static_cast<std::size_t>(n), zero));
  f.Y_low.assign(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(N), zero));
  f.X_up[0] = one;
  f.X_up[static_cast<std::size_t>(N - 1)] = half_q + isig;
  f.X_low[0] = half_q - isig;
  f.X_low[static_cast<std::size_t>(N - 1)] = one;
  f.Z_up[static_cast<std::size_t>(N - 1)] = one;
  f.Z_low[0] = one;
  for (int a = 0; a < n; ++a) {
    auto ga = GaussianRational(m.g[static_cast<std::size_t>(a)]);
    f.X_up[static_cast<std::size_t>(a + 1)] = m.gen(m.z(a));
    f.X_low[static_cast<std::size_t>(a + 1)] = m.gen(m.zb(a)) * ga;
    f.Y_up[static_cast<std::size_t>(a + 1)][static_cast<std::size_t>(a)] = one;
    f.Y_up[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(a)] = m.gen(m.zb(a)) * (-ga);
    f.Y_low[static_cast<std::size_t>(a)][0] = -m.gen(m.z(a));
    f.Y_low[static_cast<std::size_t>(a)][static_cast<std::size_t>(a + 1)] = one;
  }
  return f;
}

LaurentPoly phi_pullback(const BoundaryModel& m, const LaurentPoly& f) {
  require_same_ring(f.ring(), m.amb.ring);
  FrameFields fr = frame_fields(m);
  std::vector<LaurentPoly> images;
  for (const auto& p : fr.X_up) images.push_back(p);
  for (const auto& p : fr.X_low) images.push_back(p);
  return poly_substitute(f, images);
}

LaurentPoly extend(const BoundaryModel& m, const LaurentPoly& F, int w1, int w2) {
  require_same_ring(F.ring(), m.ring);
  const AmbientModel& a = m.amb;
  std::size_t x0 = a.up(0);
  std::size_t xinf_low = a.low(a.inf());
  LaurentPoly inv0 = amb_unit_power(a, x0, -1);
  LaurentPoly invinf = amb_unit_power(a, xinf_low, -1);
  std::vector<LaurentPoly> images(m.ring->arity(), LaurentPoly(a.ring));
  for (int b = 0; b < m.n; ++b) {
    images[m.z(b)] = a.x_up(b + 1) * inv0;
    images[m.zb(b)] = a.x_low(b + 1) * invinf * GaussianRational(m.g[static_cast<std::size_t>(b)]);
  }
  // (x^inf/x^0 - x_0/x_inf)/(2i)
  images[m.sigma()] = (a.x_up(a.inf()) * inv0 - a.x_low(0) * invinf) * GaussianRational(Rational(0), make_rational(-1, 2));
  LaurentPoly f = poly_substitute(F, images);
  Exponents e(a.ring->arity(), 0);
  e[x0] = w1;
  e[xinf_low] = w2;
  return f * LaurentPoly::monomial(a.ring, e, GaussianRational(1));
}

TangentialOps tangential_ops(const BoundaryModel& m) {
  TangentialOps t;
  auto half_i = GaussianRational(Rational(0), make_rational(1, 2));
  Exponents ds(m.ring->arity(), 0);
  ds[m.sigma()] = 1;
  t.dsigma = WeylOperator::partial(m.ring, m.sigma());
  for (int a = 0; a < m.n; ++a) {
    auto ga = GaussianRational(m.g[static_cast<std::size_t>(a)]);
    WeylOperator d = WeylOperator::partial(m.ring, m.z(a));
    d.add_term(ds, m.gen(m.zb(a)) * (half_i * ga));
    WeylOperator db = WeylOperator::partial(m.ring, m.zb(a));
    db.add_term(ds, m.gen(m.z(a)) * (-half_i * ga));
    t.d.push_back(d);
    t.dup.push_back(db * ga);
    t.dbar.push_back(std::move(db));
  }
  return t;
}

LaurentPoly operational_derivative(const BoundaryModel& m, Direction dir, int a, const LaurentPoly& F, int w1,
                                   int w2) {
  const AmbientModel& am = m.amb;
  int N = am.N();
  FrameFields fr = frame_fields(m);
  LaurentPoly f = extend(m, F, w1, w2);
  LaurentPoly out(m.ring);
  switch (dir) {
    case Direction::hol:
      for (int D = 0; D < N; ++D) {
        const auto& y = fr.Y_up[static_cast<std::size_t>(D)][static_cast<std::size_t>(a)];
        if (!y.is_zero()) out += y * phi_pullback(m, f.diff(am.up(D)));
      }
      break;
    case Direction::antihol: {
      // d_abar = g_a Y^a_C d^C
      GaussianRational ga(m.g[static_cast<std::size_t>(a)]);
      for (int C = 0; C < N; ++C) {
        const auto& y = fr.Y_low[static_cast<std::size_t>(a)][static_cast<std::size_t>(C)];
        if (!y.is_zero()) out += y * phi_pullback(m, f.diff(am.low(C))) * ga;
      }
      break;
    }
    case Direction::sigma: {
      // Z^D d_D - Z_C d^C = -i d_sigma
      LaurentPoly v = phi_pullback(m, f.diff(am.up(am.inf())) - f.diff(am.low(0)));
      out = v * GaussianRational::i();
      break;
    }
  }
  return out;
}

std::vector<LaurentPoly> boundary_monomials(const BoundaryModel& m, int deg) {
  std::vector<LaurentPoly> out;
  std::size_t ar = m.ring->arity();
  Exponents e(ar, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int rest) {
    if (pos == ar) {
      out.push_back(LaurentPoly::monomial(m.ring, e, GaussianRational(1)));
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      e[pos] = v;
      rec(pos + 1, rest - v);
    }
    e[pos] = 0;
  };
  rec(0, deg);
  return out;
}

std::vector<std::pair<int, int>> admissible_weights(int n, int max_gap) {
  std::vector<std::pair<int, int>> out;
  for (int gap = -max_gap; gap <= max_gap; ++gap) {
    if (((gap - n) % 2 + 2) % 2 != 0) continue;
    int w1 = (gap - n) / 2;
    out.emplace_back(w1, -n - w1);
  }
  return out;
}

VerificationReport verify_tangential(const BoundaryModel& m, int deg, int w1, int w2) {
  VerificationReport rep("tangential");
  rep.set_param("n", m.n);
  rep.set_param("deg", deg);
  TangentialOps t = tangential_ops(m);
  auto mons = boundary_monomials(m, deg);
  rep.begin("closed forms equal pulled-back ambient fields");
  for (const auto& F : mons) {
    for (int a = 0; a < m.n; ++a) {
      auto r1 = weyl_apply(t.d[static_cast<std::size_t>(a)], F) - operational_derivative(m, Direction::hol, a, F, w1, w2);
      rep.record_case(r1.is_zero(), "d_a a=" + std::to_string(a) + " F=" + F.to_string());
      auto r2 = weyl_apply(t.dbar[static_cast<std::size_t>(a)], F) -
                operational_derivative(m, Direction::antihol, a, F, w1, w2);
      rep.record_case(r2.is_zero(), "d_abar a=" + std::to_string(a) + " F=" + F.to_string());
    }
    auto r3 = weyl_apply(t.dsigma, F) - operational_derivative(m, Direction::sigma, 0, F, w1, w2);
    rep.record_case(r3.is_zero(), "d_sigma F=" + F.to_string());
  }
  rep.begin("commutators");
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b) {
      auto ua = static_cast<std::size_t>(a);
      auto ub = static_cast<std::size_t>(b);
      WeylOperator expect(m.ring);
      if (a == b) expect = t.dsigma * (GaussianRational::i() * GaussianRational(m.g[ua]));
      rep.record_case(weyl_commutator(t.dbar[ua], t.d[ub]) == expect, "[d_abar,d_b]");
      rep.record_case(weyl_commutator(t.d[ua], t.d[ub]).is_zero(), "[d_a,d_b]");
      rep.record_case(weyl_commutator(t.dbar[ua], t.dbar[ub]).is_zero(), "[d_abar,d_bbar]");
    }
  return rep;
}

VerificationReport frame_identities_check(const BoundaryModel& m) {
  VerificationReport rep("frames");
  rep.set_param("n", m.n);
  FrameFields f = frame_fields(m);
  TangentialOps t = tangential_ops(m);
  int N = m.n + 2;
  auto u = [](int x) { return static_cast<std::size_t>(x); };
  rep.begin("completeness");
  for (int A = 0; A < N; ++A)
    for (int B = 0; B < N; ++B) {
      LaurentPoly s = f.X_up[u(A)] * f.Z_low[u(B)] + f.Z_up[u(A)] * f.X_low[u(B)];
      for (int c = 0; c < m.n; ++c) s += f.Y_up[u(A)][u(c)] * f.Y_low[u(c)][u(B)];
      s -= m.constant(GaussianRational(A == B ? 1 : 0));
      rep.record_case(s.is_zero(), "A=" + std::to_string(A) + " B=" + std::to_string(B) + " " + s.to_string());
    }
  rep.begin("null and tangency");
  {
    LaurentPoly xx(m.ring);
    for (int A = 0; A < N; ++A) xx += f.X_up[u(A)] * f.X_low[u(A)];
    rep.record_case(xx.is_zero(), "X^A X_A");
  }
  for (int b = 0; b < m.n; ++b) {
    LaurentPoly s1(m.ring), s2(m.ring);
    for (int A = 0; A < N; ++A) {
      s1 += f.Y_up[u(A)][u(b)] * f.X_low[u(A)];
      s2 += f.Y_low[u(b)][u(A)] * f.X_up[u(A)];
    }
    rep.record_case(s1.is_zero(), "Y^A_b X_A");
    rep.record_case(s2.is_zero(), "Y^b_A X^A");
  }
  rep.begin("CR-holomorphic derivatives of X");
  for (int a = 0; a < m.n; ++a)
    for (int A = 0; A < N; ++A) {
      rep.record_case(weyl_apply(t.dup[u(a)], f.X_up[u(A)]).is_zero(), "d^a X^A");
      rep.record_case(weyl_apply(t.d[u(a)], f.X_low[u(A)]).is_zero(), "d_a X_A");
      rep.record_case(weyl_apply(t.dup[u(a)], f.X_low[u(A)]) == f.Y_low[u(a)][u(A)], "d^a X_A = Y^a_A");
      rep.record_case(weyl_apply(t.d[u(a)], f.X_up[u(A)]) == f.Y_up[u(A)][u(a)], "d_a X^A = Y^A_a");
    }
  return rep;
}

WeylOperator sublaplacian(const BoundaryModel& m, int w1, int w2) {
  TangentialOps t = tangential_ops(m);
  WeylOperator L(m.ring);
  for (int a = 0; a < m.n; ++a) {
    auto ua = static_cast<std::size_t>(a);
    GaussianRational c = Q(m.g[ua], 2);
    L += (weyl_compose(t.d[ua], t.dbar[ua]) + weyl_compose(t.dbar[ua], t.d[ua])) * c;
  }
  L += t.dsigma * GaussianRational(Rational(0), make_rational(w1 - w2, 2));
  return L;
}

VerificationReport verify_reduction(const BoundaryModel& m, const LaurentPoly& F, int w1, int w2) {
  VerificationReport rep("reduction");
  rep.set_param("n", m.n);
  rep.set_param("w1", w1);
  rep.set_param("w2", w2);
  rep.begin("pullback of ambient Laplacian equals sub-Laplacian");
  WeylOperator lap = ambient_laplacian(m.amb);
  LaurentPoly lhs = phi_pullback(m, weyl_apply(lap, extend(m, F, w1, w2)));
  LaurentPoly rhs = weyl_apply(sublaplacian(m, w1, w2), F);
  LaurentPoly res = lhs - rhs;
  rep.record_case(res.is_zero(), "F=" + F.to_string() + " residual=" + res.to_string());
  return rep;
}

VerificationReport reduction_sweep(const BoundaryModel& m, int deg, int max_gap) {
  VerificationReport rep("reduction");
  rep.set_param("n", m.n);
  rep.set_param("deg", deg);
  rep.set_param("max_gap", max_gap);
  WeylOperator lap = ambient_laplacian(m.amb);
  auto mons = boundary_monomials(m, deg);
  for (auto [w1, w2] : admissible_weights(m.n, max_gap)) {
    rep.begin("weights (" + std::to_string(w1) + "," + std::to_string(w2) + ")");
    WeylOperator sub = sublaplacian(m, w1, w2);
    for (const auto& F : mons) {
      LaurentPoly res = phi_pullback(m, weyl_apply(lap, extend(m, F, w1, w2))) - weyl_apply(sub, F);
      rep.record_case(res.is_zero(), "w=(" + std::to_string(w1) + "," + std::to_string(w2) + ") F=" + F.to_string() +
                                         " residual=" + res.to_string());
    }
  }
  rep.begin("extension is a section of the pullback");
  for (auto [w1, w2] : admissible_weights(m.n, max_gap))
    for (const auto& F : mons) {
      LaurentPoly f = extend(m, F, w1, w2);
      rep.record_case(phi_pullback(m, f) == F, "F=" + F.to_string());
    }
  rep.begin("Euler eigen-equations on extensions");
  auto [E, Eb] = euler_ops(m.amb);
  for (auto [w1, w2] : admissible_weights(m.n, max_gap))
    for (const auto& F : mons) {
      LaurentPoly f = extend(m, F, w1, w2);
      rep.record_case(weyl_apply(E, f) == f * GaussianRational(w1) && weyl_apply(Eb, f) == f * GaussianRational(w2),
                      "F=" + F.to_string());
    }
  return rep;
}

VerificationReport verify_rh_lemma(const BoundaryModel& m, const LaurentPoly& h, int w1, int w2) {
  VerificationReport rep("rh_lemma");
  rep.set_param("n", m.n);
  rep.set_param("w1", w1);
  rep.set_param("w2", w2);
  WeylOperator lap = ambient_laplacian(m.amb);
  LaurentPoly r = r_poly(m.amb);
  LaurentPoly H = extend(m, h, w1 - 1, w2 - 1);
  LaurentPoly lhs = weyl_apply(lap, r * H);
  LaurentPoly rhs = r * weyl_apply(lap, H) + H * GaussianRational(m.n + w1 + w2);
  rep.begin("Laplacian of r h");
  rep.record_case((lhs - rhs).is_zero(), "h=" + h.to_string() + " residual=" + (lhs - rhs).to_string());
  if (m.n + w1 + w2 == 0) {
    rep.begin("pullback vanishes on the critical line");
    LaurentPoly p = phi_pullback(m, lhs);
    rep.record_case(p.is_zero(), "h=" + h.to_string() + " pullback=" + p.to_string());
  }
  return rep;
}

LaurentPoly induce(const BoundaryModel& m, const WeylOperator& D, int w1, int w2, const LaurentPoly& F) {
  return phi_pullback(m, weyl_apply(D, extend(m, F, w1, w2)));
}

VerificationReport verify_induced_symmetry(const BoundaryModel& m, const WeylOperator& D, int w1, int w2, int deg) {
  if (m.n + w1 + w2 != 0) throw std::invalid_argument("weights must satisfy n+w1+w2=0");
  VerificationReport rep("induced_symmetry");
  rep.set_param("n", m.n);
  rep.set_param("w1", w1);
  rep.set_param("w2", w2);
  rep.set_param("deg", deg);
  WeylOperator sub = sublaplacian(m, w1, w2);
  rep.begin("Delta D_w = D_{w-1} Delta");
  for (const auto& F : boundary_monomials(m, deg)) {
    LaurentPoly lhs = weyl_apply(sub, induce(m, D, w1, w2, F));
    LaurentPoly rhs = induce(m, D, w1 - 1, w2 - 1, weyl_apply(sub, F));
    rep.record_case(lhs == rhs, "F=" + F.to_string() + " residual=" + (lhs - rhs).to_string());
  }
  return rep;
}

VerificationReport induced_composition_check(const BoundaryModel& m, const ExactMatrix& V, const ExactMatrix& W,
                                             int w1, int w2, int deg, ScalarCoefficients coeffs) {
  VerificationReport rep("induced_composition");
  rep.set_param("n", m.n);
  rep.set_param("w1", w1);
  rep.set_param("w2", w2);
  rep.set_param("deg", deg);
  rep.set_param("scalar_coefficients", coeffs == ScalarCoefficients::printed ? "printed" : "rederived");
  const AmbientModel& am = m.amb;
  CompositionParts parts = compose_decompose(am, V, W, w1, w2);
  WeylOperator lhs_op = weyl_compose(dv(am, V), dv(am, W));
  WeylOperator second = higher_symmetry_op(am, parts.vw2);
  WeylOperator first = dv(am, parts.vw1);
  GaussianRational scalar = coeffs == ScalarCoefficients::printed ? parts.vw0 : parts.vw0_rederived;
  LaurentPoly quad(am.ring);
  for (int D = 0; D < am.N(); ++D)
    for (int A = 0; A < am.N(); ++A)
      quad += am.x_up(A) * am.x_low(D) * (parts.U(D, A) + parts.Utilde(D, A));
  LaurentPoly quad_b = phi_pullback(m, quad);
  WeylOperator sub = sublaplacian(m, w1, w2);
  rep.begin("induced composition equals induced parts minus quadric times Delta");
  for (const auto& F : boundary_monomials(m, deg)) {
    LaurentPoly lhs = induce(m, lhs_op, w1, w2, F);
    LaurentPoly rhs = induce(m, second, w1, w2, F) + induce(m, first, w1, w2, F) + F * scalar -
                      quad_b * weyl_apply(sub, F);
    LaurentPoly res = lhs - rhs;
    std::string wit = "F=" + F.to_string() + " residual=" + res.to_string();
    if (res.is_zero()) {
      rep.record_case(true);
    } else if (coeffs == ScalarCoefficients::printed) {
      rep.record_finding(wit);
    } else {
      rep.record_case(false, wit);
    }
  }
  return rep;
}

}  // namespace crsym
