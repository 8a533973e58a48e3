#include "crsym/ambient.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace crsym {

namespace {

GaussianRational Q(long p, long q = 1) { return GaussianRational(make_rational(p, q)); }

std::string name_of(int A, int n) {
  if (A == 0) return "0";
  if (A == n + 1) return "inf";
  return std::to_string(A);
}

}  // namespace

Exponents AmbientModel::d_up(int A) const {
  Exponents e(ring->arity(), 0);
  e[up(A)] = 1;
  return e;
}

Exponents AmbientModel::d_low(int A) const {
  Exponents e(ring->arity(), 0);
  e[low(A)] = 1;
  return e;
}

AmbientModel make_ambient(int n, std::vector<int> g) {
  if (n < 1) throw std::invalid_argument("ambient model needs n >= 1");
  if (g.empty()) g.assign(static_cast<std::size_t>(n), 1);
  if (static_cast<int>(g.size()) != n) throw std::invalid_argument("metric block has wrong length");
  for (int s : g)
    if (s != 1 && s != -1) throw std::invalid_argument("metric entries must be +1 or -1");
  std::vector<Generator> gens;
  for (int A = 0; A < n + 2; ++A) gens.push_back({"x^" + name_of(A, n), A == 0});
  for (int A = 0; A < n + 2; ++A) gens.push_back({"x_" + name_of(A, n), A == n + 1});
  AmbientModel m;
  m.n = n;
  m.g = std::move(g);
  m.ring = make_ring(std::move(gens));
  return m;
}

void require_traceless(const ExactMatrix& V) {
  if (V.rows() != V.cols()) throw std::invalid_argument("matrix must be square");
  if (!V.trace().is_zero()) throw std::invalid_argument("matrix must be traceless");
}

ExactMatrix random_traceless(int N, Rng& rng) {
  ExactMatrix V(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) V(i, j) = GaussianRational(rng.uniform(-3, 3));
  V(N - 1, N - 1) -= V.trace();
  return V;
}

ExactMatrix elementary(int N, int row, int col) {
  ExactMatrix E(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
  E(row, col) = GaussianRational(1);
  return E;
}

std::vector<ExactMatrix> sl_basis(int N) {
  std::vector<ExactMatrix> out;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (i != j) out.push_back(elementary(N, i, j));
  for (int i = 0; i + 1 < N; ++i) out.push_back(elementary(N, i, i) - elementary(N, i + 1, i + 1));
  return out;
}

LaurentPoly r_poly(const AmbientModel& m) {
  LaurentPoly r(m.ring);
  for (int A = 0; A < m.N(); ++A) r += m.x_up(A) * m.x_low(A);
  return r;
}

WeylOperator ambient_laplacian(const AmbientModel& m) {
  WeylOperator op(m.ring);
  for (int A = 0; A < m.N(); ++A) {
    Exponents e = m.d_up(A);
    e[m.low(A)] = 1;
    op.add_term(e, m.one());
  }
  return op;
}

std::pair<WeylOperator, WeylOperator> euler_ops(const AmbientModel& m) {
  WeylOperator E(m.ring);
  WeylOperator Eb(m.ring);
  for (int A = 0; A < m.N(); ++A) {
    E.add_term(m.d_up(A), m.x_up(A));
    Eb.add_term(m.d_low(A), m.x_low(A));
  }
  return {E, Eb};
}

WeylOperator column_op(const AmbientModel& m, int B, int A) {
  WeylOperator op(m.ring);
  op.add_term(m.d_up(B), m.x_up(A));
  op.add_term(m.d_low(A), -m.x_low(B));
  return op;
}

WeylOperator dv_unchecked(const AmbientModel& m, const ExactMatrix& V) {
  if (static_cast<int>(V.rows()) != m.N() || static_cast<int>(V.cols()) != m.N()) {
    throw std::invalid_argument("matrix size does not match the model");
  }
  WeylOperator op(m.ring);
  for (int B = 0; B < m.N(); ++B)
    for (int A = 0; A < m.N(); ++A) {
      const auto& v = V(B, A);
      if (v.is_zero()) continue;
      op.add_term(m.d_up(B), m.x_up(A) * v);
      op.add_term(m.d_low(A), m.x_low(B) * (-v));
    }
  return op;
}

WeylOperator dv(const AmbientModel& m, const ExactMatrix& V) {
  require_traceless(V);
  return dv_unchecked(m, V);
}

ExactMatrix dv_bracket(const ExactMatrix& V, const ExactMatrix& W) {
  // M^B_A = V^C_A W^B_C - V^B_C W^C_A = (W V - V W)^B_A
  return W * V - V * W;
}

WeylOperator central_element(const AmbientModel& m) {
  auto [E, Eb] = euler_ops(m);
  return (E - Eb) * GaussianRational::i();
}

std::vector<LaurentPoly> bidegree_monomials(const AmbientModel& m, int w1, int w2, int bound) {
  int N = m.N();
  // exponent vectors for one block of N generators with the Laurent slot at position laurent
  auto block = [&](int total, int laurent) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(static_cast<std::size_t>(N), 0);
    std::function<void(int, int)> rec = [&](int pos, int rest) {
      if (pos == N) {
        int lv = total - rest;
        if (lv >= -bound && lv <= bound) {
          auto f = e;
          f[static_cast<std::size_t>(laurent)] = lv;
          out.push_back(f);
        }
        return;
      }
      if (pos == laurent) {
        rec(pos + 1, rest);
        return;
      }
      for (int v = 0; v <= bound; ++v) {
        e[static_cast<std::size_t>(pos)] = v;
        rec(pos + 1, rest + v);
      }
      e[static_cast<std::size_t>(pos)] = 0;
    };
    rec(0, 0);
    return out;
  };
  auto hol = block(w1, 0);
  auto ant = block(w2, N - 1);
  std::vector<LaurentPoly> mons;
  for (const auto& h : hol)
    for (const auto& a : ant) {
      Exponents e(h);
      e.insert(e.end(), a.begin(), a.end());
      mons.push_back(LaurentPoly::monomial(m.ring, e, GaussianRational(1)));
    }
  return mons;
}

VerificationReport central_action_check(const AmbientModel& m, int w1, int w2, int bound) {
  VerificationReport rep("central_action");
  rep.set_param("n", m.n);
  rep.set_param("w1", w1);
  rep.set_param("w2", w2);
  WeylOperator c = central_element(m);
  GaussianRational expect = GaussianRational::i() * GaussianRational(w1 - w2);
  rep.begin("eigenvalue i(w1-w2)");
  for (const auto& f : bidegree_monomials(m, w1, w2, bound)) {
    LaurentPoly res = weyl_apply(c, f) - f * expect;
    rep.record_case(res.is_zero(), "f=" + f.to_string() + " residual=" + res.to_string());
  }
  return rep;
}

WeylOperator higher_symmetry_op(const AmbientModel& m, const MixedTensor& V) {
  int d = V.upper();
  if (V.lower() != d || V.dim() != m.N()) throw std::invalid_argument("slot arity mismatch");
  if (d == 0) return WeylOperator::multiplication(m.constant(V.get({})));
  // contract columns from the right: level j maps prefixes of length j to operators
  std::map<Index, WeylOperator> level;
  for (const auto& [key, v] : V.entries()) {
    Index prefix;
    for (int i = 0; i < d - 1; ++i) prefix.push_back(key[static_cast<std::size_t>(i)]);
    for (int i = 0; i < d - 1; ++i) prefix.push_back(key[static_cast<std::size_t>(d + i)]);
    int B = key[static_cast<std::size_t>(d - 1)];
    int A = key[static_cast<std::size_t>(2 * d - 1)];
    auto it = level.try_emplace(prefix, WeylOperator(m.ring)).first;
    it->second += column_op(m, B, A) * v;
  }
  for (int j = d - 1; j >= 1; --j) {
    std::map<Index, WeylOperator> next;
    for (const auto& [prefix, op] : level) {
      // prefix holds B_1..B_j, A_1..A_j
      Index shorter;
      for (int i = 0; i < j - 1; ++i) shorter.push_back(prefix[static_cast<std::size_t>(i)]);
      for (int i = 0; i < j - 1; ++i) shorter.push_back(prefix[static_cast<std::size_t>(j + i)]);
      int B = prefix[static_cast<std::size_t>(j - 1)];
      int A = prefix[static_cast<std::size_t>(2 * j - 1)];
      auto it = next.try_emplace(shorter, WeylOperator(m.ring)).first;
      it->second += weyl_compose(column_op(m, B, A), op);
    }
    level = std::move(next);
  }
  auto it = level.find(Index{});
  return it == level.end() ? WeylOperator(m.ring) : it->second;
}

std::pair<ExactMatrix, ExactMatrix> trace_part_closed_form(int n, const ExactMatrix& V, const ExactMatrix& W) {
  ExactMatrix VW = V * W;  // V^D_X W^X_A
  ExactMatrix WV = W * V;  // V^X_A W^D_X
  GaussianRational kappa = VW.trace();
  GaussianRational den(Q(2L * n * (n + 2) * (n + 4)));
  GaussianRational big(Q(2L * n * n + 8L * n + 4));
  GaussianRational gam = Q(-(static_cast<long>(n) * n + 4L * n + 6), 2L * n * (n + 1) * (n + 3) * (n + 4));
  std::size_t N = V.rows();
  ExactMatrix I = ExactMatrix::identity(N);
  ExactMatrix U = (WV.scaled(big) + VW.scaled(GaussianRational(4))).scaled(GaussianRational(1) / den) +
                  I.scaled(gam * kappa);
  ExactMatrix Ut = (WV.scaled(GaussianRational(4)) + VW.scaled(big)).scaled(GaussianRational(1) / den) +
                   I.scaled(gam * kappa);
  return {U, Ut};
}

MixedTensor outer(const ExactMatrix& V, const ExactMatrix& W) {
  int N = static_cast<int>(V.rows());
  MixedTensor t(2, 2, N);
  for (int B = 0; B < N; ++B)
    for (int A = 0; A < N; ++A) {
      if (V(B, A).is_zero()) continue;
      for (int D = 0; D < N; ++D)
        for (int C = 0; C < N; ++C) t.add({B, D, A, C}, V(B, A) * W(D, C));
    }
  return t;
}

MixedTensor trace_part_tensor(int N, const ExactMatrix& U, const ExactMatrix& Ut) {
  // d^B_C U^D_A + d^D_A Ut^B_C - (d^B_A M^D_C + d^D_C M^B_A)/N + d^B_A d^D_C t/N^2, M = U+Ut
  MixedTensor R(2, 2, N);
  ExactMatrix M = U + Ut;
  GaussianRational t = M.trace();
  GaussianRational invN = Q(1, N);
  for (int B = 0; B < N; ++B)
    for (int D = 0; D < N; ++D)
      for (int A = 0; A < N; ++A)
        for (int C = 0; C < N; ++C) {
          GaussianRational v;
          if (B == C) v += U(D, A);
          if (D == A) v += Ut(B, C);
          if (B == A) v -= M(D, C) * invN;
          if (D == C) v -= M(B, A) * invN;
          if (B == A && D == C) v += t * invN * invN;
          R.add({B, D, A, C}, v);
        }
  return R;
}

std::pair<ExactMatrix, ExactMatrix> trace_part_by_projection(int n, const ExactMatrix& V, const ExactMatrix& W) {
  int N = n + 2;
  std::size_t nn = static_cast<std::size_t>(N) * static_cast<std::size_t>(N);
  MixedTensor VW = outer(V, W);
  // unknowns: U entries then Ut entries; R is linear in them
  std::vector<MixedTensor> cols;
  for (std::size_t u = 0; u < 2 * nn; ++u) {
    ExactMatrix U(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
    ExactMatrix Ut(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
    std::size_t idx = u % nn;
    (u < nn ? U : Ut)(idx / static_cast<std::size_t>(N), idx % static_cast<std::size_t>(N)) = GaussianRational(1);
    cols.push_back(trace_part_tensor(N, U, Ut));
  }
  // equations: every contraction of VW - R vanishes, and tr U = tr Ut
  ExactMatrix A(0, 2 * nn);
  Vec b;
  for (int up = 0; up < 2; ++up)
    for (int lo = 0; lo < 2; ++lo) {
      MixedTensor rhs = VW.contract(up, lo);
      std::vector<MixedTensor> cc;
      for (const auto& c : cols) cc.push_back(c.contract(up, lo));
      for (int X = 0; X < N; ++X)
        for (int Y = 0; Y < N; ++Y) {
          Vec row(2 * nn);
          for (std::size_t u = 0; u < 2 * nn; ++u) row[u] = cc[u].get({X, Y});
          A.append_row(row);
          b.push_back(rhs.get({X, Y}));
        }
    }
  Vec gauge(2 * nn);
  for (int i = 0; i < N; ++i) {
    gauge[static_cast<std::size_t>(i * N + i)] = GaussianRational(1);
    gauge[nn + static_cast<std::size_t>(i * N + i)] = GaussianRational(-1);
  }
  A.append_row(gauge);
  b.push_back(GaussianRational());
  auto res = exact_rank_solve(A, b);
  if (!res.consistent || !res.unique) throw std::runtime_error("trace projection system is not uniquely solvable");
  ExactMatrix U(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
  ExactMatrix Ut(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
  for (std::size_t u = 0; u < nn; ++u) {
    U(u / static_cast<std::size_t>(N), u % static_cast<std::size_t>(N)) = (*res.solution)[u];
    Ut(u / static_cast<std::size_t>(N), u % static_cast<std::size_t>(N)) = (*res.solution)[nn + u];
  }
  return {U, Ut};
}

CompositionParts compose_decompose(const AmbientModel& m, const ExactMatrix& V, const ExactMatrix& W, int w1,
                                   int w2) {
  require_traceless(V);
  require_traceless(W);
  if (m.n + w1 + w2 != 0) throw std::invalid_argument("weights must satisfy n+w1+w2=0");
  int n = m.n;
  int N = m.N();
  CompositionParts p;
  p.n = n;
  p.w1 = w1;
  p.w2 = w2;
  std::tie(p.U, p.Utilde) = trace_part_closed_form(n, V, W);
  p.T = outer(V, W) - trace_part_tensor(N, p.U, p.Utilde);
  p.vw2 = p.T.column_symmetrized();
  ExactMatrix VW = V * W;
  ExactMatrix WV = W * V;
  GaussianRational kappa = VW.trace();
  long dw = w1 - w2;
  ExactMatrix I = ExactMatrix::identity(static_cast<std::size_t>(N));
  ExactMatrix sym = VW + WV - I.scaled(Q(2, N) * kappa);
  p.vw1 = sym.scaled(Q((n - 2) * dw, 2L * n * (n + 4))) - (VW - WV).scaled(Q(1, 2));
  long n2 = static_cast<long>(n) * n;
  long den = static_cast<long>(n) * (n + 1) * (n + 2) * (n + 3) * (n + 4);
  p.vw0 = kappa * Q((n2 + n + 6) * dw * dw - n2 * (n + 4) * (n2 + 4 * n + 5), den);
  p.vw0_rederived = kappa * Q(static_cast<long>(n) * (dw * dw - static_cast<long>(N) * N), 2L * (n + 1) * (n + 2) * (n + 3));
  return p;
}

WeylOperator quadratic_op(const AmbientModel& m, const MixedTensor& T) {
  WeylOperator op(m.ring);
  for (const auto& [key, v] : T.entries()) {
    int B = key[0], D = key[1], A = key[2], C = key[3];
    auto d2 = [&](const Exponents& a, const Exponents& b) {
      Exponents e = a;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += b[i];
      return e;
    };
    op.add_term(d2(m.d_up(B), m.d_up(D)), m.x_up(A) * m.x_up(C) * v);
    op.add_term(d2(m.d_up(B), m.d_low(C)), m.x_up(A) * m.x_low(D) * (-v));
    op.add_term(d2(m.d_low(A), m.d_up(D)), m.x_low(B) * m.x_up(C) * (-v));
    op.add_term(d2(m.d_low(A), m.d_low(C)), m.x_low(B) * m.x_low(D) * v);
  }
  return op;
}

VerificationReport verify_composition_identity(const AmbientModel& m, const ExactMatrix& V, const ExactMatrix& W,
                                               int w1, int w2, int bound, ScalarCoefficients coeffs) {
  VerificationReport rep("composition_identity");
  rep.set_param("n", m.n);
  rep.set_param("w1", w1);
  rep.set_param("w2", w2);
  rep.set_param("bound", bound);
  rep.set_param("scalar_coefficients", coeffs == ScalarCoefficients::printed ? "printed" : "rederived");
  int n = m.n;
  int N = m.N();
  auto [U, Ut] = trace_part_closed_form(n, V, W);
  MixedTensor T = outer(V, W) - trace_part_tensor(N, U, Ut);

  WeylOperator lhs = weyl_compose(dv(m, V), dv(m, W));

  WeylOperator rhs = quadratic_op(m, T);
  LaurentPoly r = r_poly(m);
  LaurentPoly quad(m.ring);
  for (int D = 0; D < N; ++D)
    for (int A = 0; A < N; ++A) {
      // -r (U^D_A d^A d_D + Ut^D_A d_D d^A)
      Exponents e = m.d_low(A);
      e[m.up(D)] += 1;
      rhs.add_term(e, r * (-(U(D, A) + Ut(D, A))));
      // U^D_A x^A x_D + Ut^B_C x_B x^C, with (B,C) renamed (D,A)
      quad += m.x_up(A) * m.x_low(D) * (U(D, A) + Ut(D, A));
    }
  rhs -= weyl_compose(WeylOperator::multiplication(quad), ambient_laplacian(m));

  ExactMatrix VW = V * W;
  ExactMatrix WV = W * V;
  ExactMatrix S = VW + WV;
  GaussianRational kappa = VW.trace();
  GaussianRational cfac = Q(n + 2, static_cast<long>(n) * (n + 4));
  GaussianRational c1 = Q(static_cast<long>(n) * w1 + 2L * w2 - n, n + 2);
  GaussianRational c2 = Q(2L * w1 + static_cast<long>(n) * w2 - n, n + 2);
  for (int D = 0; D < N; ++D)
    for (int A = 0; A < N; ++A) {
      rhs.add_term(m.d_up(D), m.x_up(A) * (cfac * S(D, A) * c1 + WV(D, A)));
      rhs.add_term(m.d_low(A), m.x_low(D) * (cfac * S(D, A) * c2 + VW(D, A)));
    }
  long dw = w1 - w2;
  GaussianRational s1 = Q(dw * dw - (w1 + w2), static_cast<long>(n + 1) * (n + 2) * (n + 3)) * kappa;
  long K = coeffs == ScalarCoefficients::printed ? 2 : 1;
  long n2 = static_cast<long>(n) * n;
  GaussianRational s2 = Q(-K * (n2 + 4 * n + 6), static_cast<long>(n) * (n + 1) * (n + 2) * (n + 3) * (n + 4)) *
                        kappa *
                        GaussianRational(static_cast<long>(n) * (static_cast<long>(w1) * w1 + static_cast<long>(w2) * w2 - w1 - w2) +
                                         4L * w1 * w2);
  rhs += WeylOperator::multiplication(m.constant(s1 + s2));

  rep.begin("D_V D_W f equals the resolved form");
  for (const auto& f : bidegree_monomials(m, w1, w2, bound)) {
    LaurentPoly res = weyl_apply(lhs, f) - weyl_apply(rhs, f);
    if (res.is_zero()) {
      rep.record_case(true);
    } else if (coeffs == ScalarCoefficients::printed) {
      rep.record_finding("f=" + f.to_string() + " residual=" + res.to_string());
    } else {
      rep.record_case(false, "f=" + f.to_string() + " residual=" + res.to_string());
    }
  }
  rep.begin("T totally trace-free");
  rep.record_case(T.is_trace_free(), "T has a nonzero contraction");
  return rep;
}

}  // namespace crsym

namespace crsym {

VerificationReport commutation_check(const AmbientModel& m, int pairs, std::uint64_t seed) {
  VerificationReport rep("commutation");
  rep.set_param("n", m.n);
  rep.set_param("pairs", pairs);
  rep.set_param("seed", std::to_string(seed));
  int N = m.N();
  WeylOperator lap = ambient_laplacian(m);
  WeylOperator r = WeylOperator::multiplication(r_poly(m));
  auto basis = sl_basis(N);
  rep.begin("[Lap, D_V] = 0 on the sl basis");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    WeylOperator c = weyl_commutator(lap, dv(m, basis[i]));
    rep.record_case(c.is_zero(), "basis " + std::to_string(i) + ": " + c.to_string());
  }
  rep.begin("[D_V, r] = 0 on the sl basis");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    WeylOperator c = weyl_commutator(dv(m, basis[i]), r);
    rep.record_case(c.is_zero(), "basis " + std::to_string(i) + ": " + c.to_string());
  }
  Rng rng(seed);
  rep.begin("[D_V, D_W] = D_[V,W]");
  for (int t = 0; t < pairs; ++t) {
    ExactMatrix V = random_traceless(N, rng);
    ExactMatrix W = random_traceless(N, rng);
    ExactMatrix M = dv_bracket(V, W);
    WeylOperator res = weyl_commutator(dv(m, V), dv(m, W)) - dv(m, M);
    rep.record_case(res.is_zero(), "pair " + std::to_string(t) + ": " + res.to_string());
    ExactMatrix anti = dv_bracket(W, V) + M;
    rep.record_case(anti.is_zero(), "bracket not antisymmetric at pair " + std::to_string(t));
    rep.record_case(M.trace().is_zero(), "bracket not traceless at pair " + std::to_string(t));
  }
  return rep;
}

}  // namespace crsym
