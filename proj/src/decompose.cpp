#include "crsym/decompose.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "crsym/ambient.hpp"

namespace crsym {

namespace {

std::size_t us(int v) { return static_cast<std::size_t>(v); }

int tensor_k(const MixedTensor& T) {
  if (T.upper() != T.lower()) throw std::invalid_argument("expected k upper and k lower slots");
  return T.upper();
}

Perm class_representative(const Partition& mu) {
  Perm rep;
  int start = 0;
  for (int part : mu) {
    for (int j = 0; j < part; ++j) rep.push_back(start + (j + 1) % part);
    start += part;
  }
  return rep;
}

// Parses "(12)(3456)" with 1-based single-digit entries into a 0-based permutation of n points.
Perm parse_cycles(const std::string& s, int n) {
  Perm p = identity_perm(n);
  std::vector<int> cyc;
  for (char ch : s) {
    if (ch == '(') {
      cyc.clear();
    } else if (ch == ')') {
      for (std::size_t i = 0; i < cyc.size(); ++i) p[us(cyc[i])] = cyc[(i + 1) % cyc.size()];
    } else {
      cyc.push_back(ch - '1');
    }
  }
  return p;
}

std::vector<int> multiset_weight(const Index& cols, int N) {
  std::vector<int> w(us(N), 0);
  for (int c : cols) {
    w[us(c % N)] += 1;
    w[us(c / N)] -= 1;
  }
  return w;
}

Index sorted_copy(Index v) {
  std::sort(v.begin(), v.end());
  return v;
}

void enumerate_multisets(int len, int n, const std::function<void(const Index&)>& visit) {
  Index t;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(t.size()) == len) {
      visit(t);
      return;
    }
    for (int a = lo; a < n; ++a) {
      t.push_back(a);
      rec(a);
      t.pop_back();
    }
  };
  rec(0);
}

std::string weight_str(const std::vector<int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

Vec mat_vec(const ExactMatrix& A, const Vec& x) {
  Vec y(A.rows());
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c)
      if (!A(r, c).is_zero() && !x[c].is_zero()) y[r] += A(r, c) * x[c];
  return y;
}

bool vec_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const GaussianRational& x) { return x.is_zero(); });
}

GaussianRational dot(const Vec& a, const Vec& b) {
  GaussianRational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

}  // namespace

MixedTensor permute_lower(const MixedTensor& T, const Perm& p) {
  int u = T.upper();
  int l = T.lower();
  if (static_cast<int>(p.size()) != l) throw std::invalid_argument("permutation size");
  MixedTensor out(u, l, T.dim());
  for (const auto& [key, v] : T.entries()) {
    Index r = key;
    for (int m = 0; m < l; ++m) r[us(u + p[us(m)])] = key[us(u + m)];
    out.add(r, v);
  }
  return out;
}

MixedTensor permute_upper(const MixedTensor& T, const Perm& p) {
  int u = T.upper();
  if (static_cast<int>(p.size()) != u) throw std::invalid_argument("permutation size");
  MixedTensor out(u, T.lower(), T.dim());
  for (const auto& [key, v] : T.entries()) {
    Index r = key;
    for (int m = 0; m < u; ++m) r[us(p[us(m)])] = key[us(m)];
    out.add(r, v);
  }
  return out;
}

MixedTensor act_lower(const MixedTensor& T, const GroupAlgebraElement& x) {
  MixedTensor out(T.upper(), T.lower(), T.dim());
  for (const auto& [p, c] : x) out += permute_lower(T, p) * c;
  return out;
}

MixedTensor act_upper(const MixedTensor& T, const GroupAlgebraElement& x) {
  MixedTensor out(T.upper(), T.lower(), T.dim());
  for (const auto& [p, c] : x) out += permute_upper(T, p) * c;
  return out;
}

MixedTensor gl_action(const MixedTensor& T, int a, int b) {
  int u = T.upper();
  int l = T.lower();
  MixedTensor out(u, l, T.dim());
  for (const auto& [key, v] : T.entries()) {
    for (int m = 0; m < l; ++m)
      if (key[us(u + m)] == b) {
        Index r = key;
        r[us(u + m)] = a;
        out.add(r, v);
      }
    for (int m = 0; m < u; ++m)
      if (key[us(m)] == a) {
        Index r = key;
        r[us(m)] = b;
        out.add(r, -v);
      }
  }
  return out;
}

MixedTensor skew_lower(const MixedTensor& T, const std::vector<int>& slots) {
  int l = T.lower();
  MixedTensor out(T.upper(), l, T.dim());
  for (const auto& q : all_perms(static_cast<int>(slots.size()))) {
    Perm p = identity_perm(l);
    for (std::size_t i = 0; i < slots.size(); ++i) p[us(slots[i])] = slots[us(q[i])];
    out += permute_lower(T, p) * GaussianRational(perm_sign(q));
  }
  return out;
}

MixedTensor c_s_apply(const Perm& s, const MixedTensor& T) {
  int k = tensor_k(T);
  int N = T.dim();
  if (static_cast<int>(s.size()) != 2 * k) throw std::invalid_argument("s must permute 2k points");
  Perm sinv = inverse(s);
  MixedTensor out(k, k, N);
  for (const auto& [key, v] : T.entries()) {
    std::vector<int> L(us(2 * k), -1);
    bool ok = true;
    auto assign = [&](int pos, int val) {
      if (L[us(pos)] >= 0 && L[us(pos)] != val) ok = false;
      L[us(pos)] = val;
    };
    for (int m = 0; m < k && ok; ++m) assign(2 * m + 1, key[us(k + m)]);
    for (int m = 0; m < k && ok; ++m) assign(sinv[us(2 * m + 1)], key[us(m)]);
    if (!ok) continue;
    std::vector<int> free;
    for (int p = 0; p < 2 * k; ++p)
      if (L[us(p)] < 0) free.push_back(p);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == free.size()) {
        Index r(us(2 * k));
        for (int m = 0; m < k; ++m) {
          r[us(m)] = L[us(2 * m)];
          r[us(k + m)] = L[us(sinv[us(2 * m)])];
        }
        out.add(r, v);
        return;
      }
      for (int x = 0; x < N; ++x) {
        L[us(free[i])] = x;
        rec(i + 1);
      }
      L[us(free[i])] = -1;
    };
    rec(0);
  }
  return out;
}

Perm parity_exchanging(const Perm& sigma1, const Perm& sigma2) {
  std::size_t k = sigma1.size();
  Perm s(2 * k);
  for (std::size_t m = 0; m < k; ++m) {
    s[2 * m] = 2 * sigma1[m] + 1;
    s[2 * m + 1] = 2 * sigma2[m];
  }
  return s;
}

Perm conjugate(const Perm& sigma, const Perm& s) { return compose(compose(sigma, s), inverse(sigma)); }

Perm embed_first(const Perm& p) {
  Perm e(2 * p.size());
  for (std::size_t m = 0; m < p.size(); ++m) {
    e[2 * m] = 2 * p[m];
    e[2 * m + 1] = static_cast<int>(2 * m + 1);
  }
  return e;
}

Perm embed_second(const Perm& p) {
  Perm e(2 * p.size());
  for (std::size_t m = 0; m < p.size(); ++m) {
    e[2 * m] = static_cast<int>(2 * m);
    e[2 * m + 1] = 2 * p[m] + 1;
  }
  return e;
}

MixedTensor commutant_apply(const Partition& tau, const MixedTensor& T) {
  return act_lower(T, averaged_class_sum(tau));
}

MixedTensor commutant_apply_full(const Partition& tau, const MixedTensor& T) {
  int k = tensor_k(T);
  Perm s = parity_exchanging(identity_perm(k), class_representative(tau));
  auto perms = all_perms(k);
  MixedTensor out(k, k, T.dim());
  for (const auto& p1 : perms)
    for (const auto& p2 : perms) out += c_s_apply(conjugate(compose(embed_first(p1), embed_second(p2)), s), T);
  long kf = factorial_l(k);
  return out * GaussianRational::frac(1, kf * kf);
}

MixedTensor random_symmetric(int k, int N, Rng& rng, int entries) {
  MixedTensor T(k, k, N);
  for (int e = 0; e < entries; ++e) {
    Index key;
    for (int i = 0; i < 2 * k; ++i) key.push_back(rng.uniform(0, N - 1));
    T.add(key, GaussianRational(rng.uniform(-3, 3)));
  }
  return T.column_symmetrized();
}

std::size_t SymmetricTraceFree::dim() const {
  std::size_t d = 0;
  for (const auto& ws : spaces) d += ws.basis.size();
  return d;
}

std::size_t SymmetricTraceFree::coordinate_dim() const {
  std::size_t d = 0;
  for (const auto& ws : spaces) d += ws.multisets.size();
  return d;
}

SymmetricTraceFree trace_free_symmetric_basis(int k, int N) {
  if (k < 1 || N < 2) throw std::invalid_argument("need k >= 1 and N >= 2");
  SymmetricTraceFree S;
  S.k = k;
  S.N = N;
  std::map<std::vector<int>, std::size_t> by_weight;
  enumerate_multisets(k, N * N, [&](const Index& M) {
    auto w = multiset_weight(M, N);
    auto it = by_weight.find(w);
    if (it == by_weight.end()) {
      it = by_weight.emplace(w, S.spaces.size()).first;
      S.spaces.emplace_back();
      S.spaces.back().weight = w;
    }
    WeightSpace& ws = S.spaces[it->second];
    ws.position.emplace(M, ws.multisets.size());
    ws.multisets.push_back(M);
  });
  auto add_row = [&](const std::vector<Index>& terms) {
    auto w = multiset_weight(terms.front(), N);
    WeightSpace& ws = S.spaces[by_weight.at(w)];
    Vec row(ws.multisets.size());
    for (const auto& M : terms) row[ws.position.at(M)] += GaussianRational(1);
    ws.constraints.push_back(std::move(row));
  };
  // contraction within one column
  enumerate_multisets(k - 1, N * N, [&](const Index& K) {
    std::vector<Index> terms;
    for (int x = 0; x < N; ++x) {
      Index M = K;
      M.push_back(x * N + x);
      terms.push_back(sorted_copy(M));
    }
    add_row(terms);
  });
  // contraction of the upper index of one column with the lower index of another
  if (k >= 2) {
    enumerate_multisets(k - 2, N * N, [&](const Index& R) {
      for (int a0 = 0; a0 < N; ++a0)
        for (int b1 = 0; b1 < N; ++b1) {
          std::vector<Index> terms;
          for (int x = 0; x < N; ++x) {
            Index M = R;
            M.push_back(x * N + a0);
            M.push_back(b1 * N + x);
            terms.push_back(sorted_copy(M));
          }
          add_row(terms);
        }
    });
  }
  for (auto& ws : S.spaces) {
    std::size_t D = ws.multisets.size();
    if (ws.constraints.empty()) {
      for (std::size_t i = 0; i < D; ++i) {
        Vec e(D);
        e[i] = GaussianRational(1);
        ws.basis.push_back(e);
      }
      continue;
    }
    ExactMatrix A(0, D);
    for (const auto& r : ws.constraints) A.append_row(r);
    ws.basis = exact_rank_solve(A).kernel;
  }
  return S;
}

MixedTensor expand_coordinates(const WeightSpace& ws, int k, int N, const Vec& f) {
  MixedTensor T(k, k, N);
  for (std::size_t i = 0; i < ws.multisets.size(); ++i) {
    if (f[i].is_zero()) continue;
    Index cols = ws.multisets[i];
    do {
      Index key(us(2 * k));
      for (int m = 0; m < k; ++m) {
        key[us(m)] = cols[us(m)] / N;
        key[us(k + m)] = cols[us(m)] % N;
      }
      T.set(key, f[i]);
    } while (std::next_permutation(cols.begin(), cols.end()));
  }
  return T;
}

Vec compress_tensor(const WeightSpace& ws, const MixedTensor& T) {
  int k = T.upper();
  int N = T.dim();
  Vec f(ws.multisets.size());
  for (std::size_t i = 0; i < ws.multisets.size(); ++i) {
    Index key(us(2 * k));
    for (int m = 0; m < k; ++m) {
      key[us(m)] = ws.multisets[i][us(m)] / N;
      key[us(k + m)] = ws.multisets[i][us(m)] % N;
    }
    f[i] = T.get(key);
  }
  return f;
}

ExactMatrix central_action_matrix(const WeightSpace& ws, int k, int N, const ClassElement& x, bool upper) {
  std::size_t D = ws.multisets.size();
  ExactMatrix A(D, D);
  std::vector<std::pair<Perm, GaussianRational>> terms;
  for (const auto& p : all_perms(k)) {
    auto it = x.find(cycle_type(p));
    if (it == x.end()) continue;
    terms.emplace_back(p, GaussianRational(it->second / class_size(it->first)));
  }
  for (std::size_t r = 0; r < D; ++r) {
    const Index& M = ws.multisets[r];
    for (const auto& [p, c] : terms) {
      Index cols(us(k));
      for (int m = 0; m < k; ++m) {
        int up = M[us(m)] / N;
        int low = M[us(m)] % N;
        int pu = M[us(p[us(m)])] / N;
        int pl = M[us(p[us(m)])] % N;
        cols[us(m)] = upper ? pu * N + low : up * N + pl;
      }
      A(r, ws.position.at(sorted_copy(cols))) += c;
    }
  }
  return A;
}

ClassElement central_idempotent_class(const Partition& lambda) {
  int k = std::accumulate(lambda.begin(), lambda.end(), 0);
  ClassElement e;
  Rational scale = make_rational(hook_dimension(lambda), factorial_l(k));
  for (const auto& mu : partitions(k)) {
    long chi = mn_character(lambda, mu);
    if (chi != 0) e[mu] = scale * chi * class_size(mu);
  }
  return e;
}

std::size_t isotypic_rank(const SymmetricTraceFree& S, const Partition& lambda, bool upper) {
  ClassElement e = central_idempotent_class(lambda);
  std::size_t total = 0;
  for (const auto& ws : S.spaces) {
    if (ws.basis.empty()) continue;
    ExactMatrix E = central_action_matrix(ws, S.k, S.N, e, upper);
    RowSpace img(ws.multisets.size());
    for (const auto& b : ws.basis) img.insert(mat_vec(E, b));
    total += img.rank();
  }
  return total;
}

long weyl_dim(const std::vector<int>& weight) {
  for (std::size_t i = 1; i < weight.size(); ++i)
    if (weight[i] > weight[i - 1]) throw std::invalid_argument("weight must be weakly decreasing");
  Rational d(1);
  for (std::size_t i = 0; i < weight.size(); ++i)
    for (std::size_t j = i + 1; j < weight.size(); ++j) {
      d *= make_rational(weight[i] - weight[j] + static_cast<long>(j - i), static_cast<long>(j - i));
    }
  if (d.get_den() != 1) throw std::logic_error("non-integral Weyl dimension");
  return d.get_num().get_si();
}

std::vector<int> lambda_plus_dual(const Partition& lambda, int N) {
  if (static_cast<int>(lambda.size()) > N) throw std::invalid_argument("depth exceeds N");
  std::vector<int> padded(us(N), 0);
  for (std::size_t i = 0; i < lambda.size(); ++i) padded[i] = lambda[i];
  std::vector<int> w(us(N));
  for (int i = 0; i < N; ++i) w[us(i)] = padded[us(i)] - padded[us(N - 1 - i)];
  return w;
}

HighestWeightVector highest_weight_vector(const Partition& lambda, int N, bool central) {
  int m = static_cast<int>(lambda.size());
  if (2 * m > N) throw std::invalid_argument("need 2 depth(lambda) <= N");
  int k = std::accumulate(lambda.begin(), lambda.end(), 0);
  Index key(us(2 * k));
  int pos = 0;
  for (int i = 0; i < m; ++i)
    for (int r = 0; r < lambda[us(i)]; ++r) {
      key[us(pos)] = N - 1 - i;
      key[us(k + pos)] = i;
      ++pos;
    }
  MixedTensor seed(k, k, N);
  seed.set(key, GaussianRational(1));
  GroupAlgebraElement p = central ? central_idempotent(lambda) : young_projector_sum(lambda);
  HighestWeightVector h;
  h.v = act_lower(seed, p).column_symmetrized();
  h.nonzero = !h.v.is_zero();
  h.weight = lambda_plus_dual(lambda, N);
  h.weight_ok = true;
  for (const auto& [kk, v] : h.v.entries()) {
    std::vector<int> w(us(N), 0);
    for (int s = 0; s < k; ++s) {
      w[us(kk[us(k + s)])] += 1;
      w[us(kk[us(s)])] -= 1;
    }
    if (w != h.weight) h.weight_ok = false;
  }
  h.raised_to_zero = true;
  for (int a = 0; a + 1 < N; ++a)
    if (!gl_action(h.v, a, a + 1).is_zero()) h.raised_to_zero = false;
  h.trace_free = h.v.is_trace_free();
  return h;
}

VerificationReport c_s_examples_check(int N, std::uint64_t seed) {
  if (N < 3) throw std::invalid_argument("need N >= 3");
  VerificationReport rep("c_s_examples");
  rep.set_param("N", N);
  rep.set_param("seed", std::to_string(seed));
  Rng rng(seed);
  auto basis_elem = [&](int k) {
    MixedTensor T(k, k, N);
    Index key;
    for (int i = 0; i < 2 * k; ++i) key.push_back(rng.uniform(0, N - 1));
    T.set(key, GaussianRational(1));
    return std::make_pair(T, key);
  };
  // sum of listed C_s times c, against listed (upper, lower) arrangements times d
  auto check_display = [&](int k, const std::vector<std::string>& cycles, const GaussianRational& c,
                           const std::vector<std::pair<std::vector<int>, std::vector<int>>>& terms, const GaussianRational& d,
                           const std::string& tag) {
    for (int trial = 0; trial < 6; ++trial) {
      auto [T, key] = basis_elem(k);
      MixedTensor lhs(k, k, N);
      for (const auto& cy : cycles) lhs += c_s_apply(parse_cycles(cy, 2 * k), T);
      lhs *= c;
      MixedTensor rhs(k, k, N);
      for (const auto& [ui, lj] : terms) {
        Index r(us(2 * k));
        for (int m = 0; m < k; ++m) {
          r[us(m)] = key[us(ui[us(m)] - 1)];
          r[us(k + m)] = key[us(k + lj[us(m)] - 1)];
        }
        rhs.add(r, d);
      }
      rep.record_case(lhs == rhs, tag + " trial " + std::to_string(trial));
    }
  };
  rep.begin("k=1: the parity-exchanging transposition acts as the identity");
  for (int t = 0; t < 4; ++t) {
    auto [T, key] = basis_elem(1);
    rep.record_case(c_s_apply(parse_cycles("(12)", 2), T) == T, "k=1");
  }
  rep.begin("k=2: identity class");
  check_display(2, {"(12)(34)", "(14)(32)"}, GaussianRational::frac(1, 2), {{{1, 2}, {1, 2}}, {{2, 1}, {2, 1}}},
                GaussianRational::frac(1, 2), "k=2 id");
  for (int t = 0; t < 4; ++t) {
    MixedTensor T = random_symmetric(2, N, rng);
    MixedTensor R = (c_s_apply(parse_cycles("(12)(34)", 4), T) + c_s_apply(parse_cycles("(14)(32)", 4), T)) *
                    GaussianRational::frac(1, 2);
    rep.record_case(R == T, "k=2 identity on symmetric tensors");
  }
  rep.begin("k=2: transposition class display");
  check_display(2, {"(1234)", "(1432)"}, GaussianRational::frac(1, 2), {{{1, 2}, {2, 1}}, {{2, 1}, {1, 2}}},
                GaussianRational::frac(1, 2), "k=2 transposition");
  rep.begin("k=3: transposition class display");
  check_display(3,
                {"(12)(3456)", "(12)(3654)", "(14)(3256)", "(14)(3652)", "(16)(3254)", "(16)(3452)", "(32)(1456)",
                 "(32)(1654)", "(34)(1256)", "(34)(1652)", "(36)(1254)", "(36)(1452)", "(52)(1436)", "(52)(1634)",
                 "(54)(1236)", "(54)(1632)", "(56)(1234)", "(56)(1432)"},
                GaussianRational::frac(1, 18),
                {{{1, 2, 3}, {1, 3, 2}}, {{1, 3, 2}, {1, 2, 3}}, {{2, 1, 3}, {2, 3, 1}}, {{2, 3, 1}, {2, 1, 3}},
                 {{3, 1, 2}, {3, 2, 1}}, {{3, 2, 1}, {3, 1, 2}}, {{2, 1, 3}, {3, 1, 2}}, {{3, 1, 2}, {2, 1, 3}},
                 {{1, 2, 3}, {3, 2, 1}}, {{3, 2, 1}, {1, 2, 3}}, {{1, 3, 2}, {2, 3, 1}}, {{2, 3, 1}, {1, 3, 2}},
                 {{2, 3, 1}, {3, 2, 1}}, {{3, 2, 1}, {2, 3, 1}}, {{1, 3, 2}, {3, 1, 2}}, {{3, 1, 2}, {1, 3, 2}},
                 {{1, 2, 3}, {2, 1, 3}}, {{2, 1, 3}, {1, 2, 3}}},
                GaussianRational::frac(1, 18), "k=3 transposition");
  rep.note("the tenth term of the k=3 transposition display is read with lower index j_3 (the printed j_6 is out of range)");
  rep.begin("k=3: three-cycle class display");
  check_display(3,
                {"(123456)", "(123654)", "(143256)", "(143652)", "(163254)", "(163452)", "(125436)", "(125634)",
                 "(145236)", "(145632)", "(165234)", "(165432)"},
                GaussianRational::frac(1, 12),
                {{{1, 2, 3}, {3, 1, 2}}, {{1, 3, 2}, {2, 1, 3}}, {{2, 1, 3}, {3, 2, 1}}, {{2, 3, 1}, {1, 2, 3}},
                 {{3, 1, 2}, {2, 3, 1}}, {{3, 2, 1}, {1, 3, 2}}, {{1, 3, 2}, {3, 2, 1}}, {{1, 2, 3}, {2, 3, 1}},
                 {{2, 3, 1}, {3, 1, 2}}, {{2, 1, 3}, {1, 3, 2}}, {{3, 2, 1}, {2, 1, 3}}, {{3, 1, 2}, {1, 2, 3}}},
                GaussianRational::frac(1, 12), "k=3 three-cycle");

  rep.begin("C_s kills trace-free tensors when s maps an even position to an even position");
  for (int k = 2; k <= 3; ++k) {
    SymmetricTraceFree S = trace_free_symmetric_basis(k, N);
    std::vector<MixedTensor> samples;
    for (const auto& ws : S.spaces)
      if (!ws.basis.empty() && samples.size() < 4) samples.push_back(expand_coordinates(ws, k, N, ws.basis.front()));
    int tested = 0;
    for (const auto& s : all_perms(2 * k)) {
      bool even_even = false;
      for (int m = 0; m < k; ++m) even_even = even_even || s[us(2 * m + 1)] % 2 == 1;
      if (!even_even || rng.uniform(0, 9) != 0) continue;
      ++tested;
      for (const auto& T : samples) rep.record_case(c_s_apply(s, T).is_zero(), "k=" + std::to_string(k));
    }
    if (tested == 0)
      for (const auto& T : samples) rep.record_case(c_s_apply(parse_cycles("(24)", 2 * k), T).is_zero(), "k fallback");
  }
  return rep;
}

VerificationReport conjugation_lemmas_check(int k, int N, std::uint64_t seed) {
  if (k < 1 || k > 3 || N > 4) throw std::invalid_argument("need k <= 3 and N <= 4");
  VerificationReport rep("conjugation_lemmas");
  rep.set_param("k", k);
  rep.set_param("N", N);
  rep.set_param("seed", std::to_string(seed));
  Rng rng(seed);
  auto perms = all_perms(k);
  auto random_s = [&]() {
    auto all = all_perms(2 * k);
    return all[us(rng.uniform(0, static_cast<int>(all.size()) - 1))];
  };
  auto random_basis = [&]() {
    MixedTensor T(k, k, N);
    Index key;
    for (int i = 0; i < 2 * k; ++i) key.push_back(rng.uniform(0, N - 1));
    T.set(key, GaussianRational(1));
    return T;
  };
  rep.begin("second-factor conjugation: C_{Ad s}(hat sigma . basis) = C_s(basis)");
  for (int t = 0; t < 6; ++t) {
    Perm s = random_s();
    for (const auto& p : perms) {
      MixedTensor T = random_basis();
      MixedTensor moved = permute_lower(permute_upper(T, p), p);
      rep.record_case(c_s_apply(conjugate(embed_second(p), s), moved) == c_s_apply(s, T), "trial " + std::to_string(t));
    }
  }
  rep.begin("second-factor conjugation gives the same operator on symmetric tensors");
  for (int t = 0; t < 4; ++t) {
    Perm s = random_s();
    MixedTensor T = random_symmetric(k, N, rng);
    for (const auto& p : perms)
      rep.record_case(c_s_apply(conjugate(embed_second(p), s), T) == c_s_apply(s, T), "trial " + std::to_string(t));
  }
  rep.begin("first-factor conjugation relabels the output by hat sigma");
  for (int t = 0; t < 6; ++t) {
    Perm s = random_s();
    for (const auto& p : perms) {
      MixedTensor T = random_basis();
      MixedTensor expect = permute_lower(permute_upper(c_s_apply(s, T), p), p);
      rep.record_case(c_s_apply(conjugate(embed_first(p), s), T) == expect, "trial " + std::to_string(t));
    }
  }
  return rep;
}

VerificationReport commutant_oracle_check(int k, int N, std::uint64_t seed) {
  if (k < 1 || k > 3 || N > 4) throw std::invalid_argument("need k <= 3 and N <= 4");
  VerificationReport rep("commutant_oracle");
  rep.set_param("k", k);
  rep.set_param("N", N);
  rep.set_param("seed", std::to_string(seed));
  Rng rng(seed);
  std::vector<MixedTensor> samples;
  for (int t = 0; t < 3; ++t) samples.push_back(random_symmetric(k, N, rng));
  rep.begin("simplified action equals the averaged C_s definition on symmetric tensors");
  for (const auto& tau : partitions(k))
    for (const auto& T : samples) rep.record_case(commutant_apply(tau, T) == commutant_apply_full(tau, T), partition_to_string(tau));
  rep.begin("basis operators commute with the gl(N) action");
  for (const auto& tau : partitions(k))
    for (const auto& T : samples)
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
          rep.record_case(gl_action(commutant_apply(tau, T), a, b) == commutant_apply(tau, gl_action(T, a, b)),
                          partition_to_string(tau) + " E" + std::to_string(a) + std::to_string(b));
  rep.begin("basis operators preserve symmetric trace-free tensors");
  SymmetricTraceFree S = trace_free_symmetric_basis(k, N);
  int used = 0;
  for (const auto& ws : S.spaces) {
    if (ws.basis.empty() || used >= 4) continue;
    ++used;
    MixedTensor T = expand_coordinates(ws, k, N, ws.basis.back());
    for (const auto& tau : partitions(k)) {
      MixedTensor R = commutant_apply(tau, T);
      rep.record_case(R.is_trace_free() && R.is_column_symmetric(), partition_to_string(tau));
    }
  }
  return rep;
}

VerificationReport commutant_mult_crosscheck(int k, int N) {
  VerificationReport rep("commutant_mult");
  rep.set_param("k", k);
  rep.set_param("N", N);
  auto ps = partitions(k);
  SymmetricTraceFree S = trace_free_symmetric_basis(k, N);
  rep.set_param("dim", static_cast<long>(S.dim()));
  std::map<std::pair<Partition, Partition>, ClassElement> table;
  for (const auto& a : ps)
    for (const auto& b : ps) table[{a, b}] = class_multiply(class_basis(a), class_basis(b), k);
  Partition one(us(k), 1);
  rep.begin("operator products match class-algebra structure constants on S^k_0");
  std::size_t zero_index = S.spaces.size();
  for (std::size_t si = 0; si < S.spaces.size(); ++si) {
    const auto& ws = S.spaces[si];
    if (std::all_of(ws.weight.begin(), ws.weight.end(), [](int x) { return x == 0; })) zero_index = si;
    if (ws.basis.empty()) continue;
    std::map<Partition, ExactMatrix> op;
    for (const auto& p : ps) op[p] = central_action_matrix(ws, k, N, class_basis(p));
    for (const auto& b : ws.basis) {
      std::map<Partition, Vec> img;
      for (const auto& p : ps) img[p] = mat_vec(op[p], b);
      for (const auto& a : ps)
        for (const auto& c : ps) {
          Vec lhs = mat_vec(op[a], img[c]);
          Vec rhs(b.size());
          for (const auto& [t, coeff] : table[{a, c}])
            for (std::size_t i = 0; i < b.size(); ++i) rhs[i] += GaussianRational(coeff) * img[t][i];
          rep.record_case(lhs == rhs, partition_to_string(a) + "." + partition_to_string(c) + " weight " + weight_str(ws.weight));
        }
      rep.record_case(img[one] == b, "identity class at weight " + weight_str(ws.weight));
    }
  }
  rep.begin("images stay trace-free");
  for (const auto& ws : S.spaces) {
    if (ws.basis.empty()) continue;
    for (const auto& p : ps) {
      ExactMatrix E = central_action_matrix(ws, k, N, class_basis(p));
      for (const auto& b : ws.basis) {
        Vec y = mat_vec(E, b);
        bool ok = true;
        for (const auto& row : ws.constraints) ok = ok && dot(row, y).is_zero();
        rep.record_case(ok, partition_to_string(p) + " weight " + weight_str(ws.weight));
      }
    }
  }
  if (N >= 2 * k && zero_index < S.spaces.size()) {
    rep.begin("the p(k) basis operators are linearly independent on S^k_0");
    const auto& ws = S.spaces[zero_index];
    std::size_t len = ws.basis.size() * ws.multisets.size();
    RowSpace span(len);
    for (const auto& p : ps) {
      ExactMatrix E = central_action_matrix(ws, k, N, class_basis(p));
      Vec flat;
      flat.reserve(len);
      for (const auto& b : ws.basis) {
        Vec y = mat_vec(E, b);
        flat.insert(flat.end(), y.begin(), y.end());
      }
      span.insert(flat);
    }
    rep.record_case(span.rank() == ps.size(), "rank " + std::to_string(span.rank()));
  }
  return rep;
}

VerificationReport decomposition_check(int k, int N) {
  VerificationReport rep("decompose");
  rep.set_param("k", k);
  rep.set_param("N", N);
  auto ps = partitions(k);
  SymmetricTraceFree S = trace_free_symmetric_basis(k, N);
  long dim = static_cast<long>(S.dim());
  rep.set_param("dim_S0", dim);
  bool stable = N >= 2 * k;
  long rank_sum = 0;
  long weyl_sum = 0;
  int nonzero = 0;
  rep.begin(stable ? "isotypic ranks equal Weyl dimensions of lambda + lambda*" : "isotypic ranks (below the stable range)");
  for (const auto& lam : ps) {
    auto r = static_cast<long>(isotypic_rank(S, lam));
    rep.set_param("rank" + partition_to_string(lam), r);
    rank_sum += r;
    if (r > 0) ++nonzero;
    if (static_cast<int>(lam.size()) <= N) {
      long w = weyl_dim(lambda_plus_dual(lam, N));
      if (stable) {
        weyl_sum += w;
        rep.record_case(r == w, partition_to_string(lam) + " rank " + std::to_string(r) + " weyl " + std::to_string(w));
      }
    }
  }
  if (!stable) rep.note("only computed ranks are reported below N >= 2k");
  rep.begin("ranks sum to dim S^k_0");
  rep.record_case(rank_sum == dim, "sum " + std::to_string(rank_sum) + " dim " + std::to_string(dim));
  if (stable) {
    rep.begin("kernel dimension equals the Weyl-formula total");
    rep.record_case(weyl_sum == dim, "weyl " + std::to_string(weyl_sum) + " kernel " + std::to_string(dim));
    rep.begin("number of nonzero components equals p(k)");
    rep.record_case(nonzero == static_cast<int>(ps.size()), std::to_string(nonzero) + " components");
  }
  rep.begin("ranks unchanged when the idempotent acts on upper indices");
  for (const auto& lam : ps)
    rep.record_case(isotypic_rank(S, lam, true) == isotypic_rank(S, lam), partition_to_string(lam));
  if (k <= 3 && S.coordinate_dim() <= 1500) {
    rep.begin("central idempotent and Young projector sum have the same image in S^k_0");
    for (const auto& lam : ps) {
      ClassElement e = central_idempotent_class(lam);
      GroupAlgebraElement y = young_projector_sum(lam);
      bool ok = true;
      for (const auto& ws : S.spaces) {
        if (ws.basis.empty()) continue;
        ExactMatrix E = central_action_matrix(ws, k, N, e);
        RowSpace a(ws.multisets.size()), both(ws.multisets.size()), b(ws.multisets.size());
        for (const auto& v : ws.basis) {
          Vec ev = mat_vec(E, v);
          Vec yv = compress_tensor(ws, act_lower(expand_coordinates(ws, k, N, v), y).column_symmetrized());
          a.insert(ev);
          b.insert(yv);
          both.insert(ev);
          both.insert(yv);
        }
        ok = ok && a.rank() == both.rank() && b.rank() == both.rank();
      }
      rep.record_case(ok, partition_to_string(lam));
    }
  }
  return rep;
}

VerificationReport hw_vectors_check(int k_max, int N) {
  VerificationReport rep("hwvectors");
  rep.set_param("k_max", k_max);
  rep.set_param("N", N);
  for (int k = 1; k <= k_max; ++k)
    for (const auto& lam : partitions(k)) {
      if (2 * static_cast<int>(lam.size()) > N) continue;
      for (bool central : {true, false}) {
        rep.begin(std::string("highest weight vector ") + partition_to_string(lam) +
                  (central ? " (central idempotent)" : " (Young projector sum)"));
        HighestWeightVector h = highest_weight_vector(lam, N, central);
        rep.record_case(h.nonzero, "zero vector");
        rep.record_case(h.weight_ok, "weight differs from " + weight_str(h.weight));
        rep.record_case(h.raised_to_zero, "not annihilated by raising operators");
        rep.record_case(h.trace_free, "not trace-free");
      }
    }
  return rep;
}

VerificationReport skew_vanishing_check(const Partition& lambda, int k, int N, int trials, std::uint64_t seed) {
  int depth = static_cast<int>(lambda.size());
  if (depth + 1 > k) throw std::invalid_argument("need depth(lambda)+1 <= k");
  if (std::accumulate(lambda.begin(), lambda.end(), 0) != k) throw std::invalid_argument("lambda must partition k");
  VerificationReport rep("skew_vanishing");
  rep.set_param("lambda", partition_to_string(lambda));
  rep.set_param("N", N);
  rep.set_param("seed", std::to_string(seed));
  Rng rng(seed);
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << k); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != depth + 1) continue;
    std::vector<int> s;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) s.push_back(i);
    subsets.push_back(s);
  }
  for (bool central : {true, false}) {
    GroupAlgebraElement p = central ? central_idempotent(lambda) : young_projector_sum(lambda);
    rep.begin(std::string("skew over depth+1 slots vanishes") + (central ? " (central idempotent)" : " (Young projector sum)"));
    int nonzero_images = 0;
    for (int t = 0; t < trials; ++t) {
      MixedTensor T(0, k, N);
      for (int e = 0; e < 8; ++e) {
        Index key;
        for (int i = 0; i < k; ++i) key.push_back(rng.uniform(0, N - 1));
        T.add(key, GaussianRational(rng.uniform(-3, 3)));
      }
      MixedTensor P = act_lower(T, p);
      if (!P.is_zero()) ++nonzero_images;
      for (const auto& s : subsets) rep.record_case(skew_lower(P, s).is_zero(), "trial " + std::to_string(t));
    }
    rep.note(std::to_string(nonzero_images) + " of " + std::to_string(trials) + " projected tensors nonzero");
  }
  return rep;
}

VerificationReport seven_pieces_check(int N, std::uint64_t seed) {
  if (N < 3) throw std::invalid_argument("need N >= 3");
  VerificationReport rep("seven_pieces");
  rep.set_param("N", N);
  rep.set_param("seed", std::to_string(seed));
  std::size_t D = us(N * N * N * N);
  auto idx = [&](int B, int Dd, int A, int C) { return us(((B * N + Dd) * N + A) * N + C); };
  using Rows = std::vector<Vec>;
  auto contraction = [&](int which) {
    // which: 0 (B,A) 1 (B,C) 2 (D,A) 3 (D,C)
    Rows rows;
    for (int p = 0; p < N; ++p)
      for (int q = 0; q < N; ++q) {
        Vec r(D);
        for (int x = 0; x < N; ++x) {
          int B = 0, Dd = 0, A = 0, C = 0;
          switch (which) {
            case 0: B = A = x; Dd = p; C = q; break;
            case 1: B = C = x; Dd = p; A = q; break;
            case 2: Dd = A = x; B = p; C = q; break;
            default: Dd = C = x; B = p; A = q; break;
          }
          r[idx(B, Dd, A, C)] += GaussianRational(1);
        }
        rows.push_back(r);
      }
    return rows;
  };
  auto relation = [&](int kind, int sign) {
    // kind 0: upper swap, 1: lower swap, 2: column swap
    Rows rows;
    for (int B = 0; B < N; ++B)
      for (int Dd = 0; Dd < N; ++Dd)
        for (int A = 0; A < N; ++A)
          for (int C = 0; C < N; ++C) {
            Vec r(D);
            r[idx(B, Dd, A, C)] += GaussianRational(1);
            std::size_t j = kind == 0 ? idx(Dd, B, A, C) : kind == 1 ? idx(B, Dd, C, A) : idx(Dd, B, C, A);
            r[j] -= GaussianRational(sign);
            if (!vec_zero(r)) rows.push_back(r);
          }
    return rows;
  };
  auto kernel_dim = [&](const std::vector<Rows>& blocks) {
    RowSpace rs(D);
    for (const auto& b : blocks)
      for (const auto& r : b) rs.insert(r);
    return static_cast<long>(D - rs.rank());
  };
  Rows tf;
  for (int w = 0; w < 4; ++w)
    for (auto& r : contraction(w)) tf.push_back(r);
  Rows slsl = contraction(0);
  for (auto& r : contraction(3)) slsl.push_back(r);
  Rows gl_rows;
  // invariance under the Chevalley generators E_{a,a+1}, E_{a+1,a}
  std::vector<std::pair<int, int>> gens;
  for (int a = 0; a + 1 < N; ++a) {
    gens.emplace_back(a, a + 1);
    gens.emplace_back(a + 1, a);
  }
  for (auto [a, b] : gens) {
      std::vector<Vec> images(D, Vec());
      for (std::size_t out = 0; out < D; ++out) images[out] = Vec(D);
      for (int B = 0; B < N; ++B)
        for (int Dd = 0; Dd < N; ++Dd)
          for (int A = 0; A < N; ++A)
            for (int C = 0; C < N; ++C) {
              std::size_t in = idx(B, Dd, A, C);
              if (B == b) images[idx(a, Dd, A, C)][in] += GaussianRational(1);
              if (Dd == b) images[idx(B, a, A, C)][in] += GaussianRational(1);
              if (A == a) images[idx(B, Dd, b, C)][in] -= GaussianRational(1);
              if (C == a) images[idx(B, Dd, A, b)][in] -= GaussianRational(1);
            }
      for (auto& r : images)
        if (!vec_zero(r)) gl_rows.push_back(std::move(r));
    }
  long p_ss = kernel_dim({tf, relation(0, 1), relation(1, 1)});
  long p_aa = kernel_dim({tf, relation(0, -1), relation(1, -1)});
  long p_sa = kernel_dim({tf, relation(0, 1), relation(1, -1)});
  long p_as = kernel_dim({tf, relation(0, -1), relation(1, 1)});
  long dim_slsl = kernel_dim({slsl});
  long dim_s2 = kernel_dim({slsl, relation(2, 1)});
  long dim_l2 = kernel_dim({slsl, relation(2, -1)});
  long killing = kernel_dim({slsl, gl_rows});
  long sym_adj = dim_s2 - p_ss - p_aa - killing;
  long bracket = dim_l2 - p_sa - p_as;
  long m = static_cast<long>(N) * N - 1;
  for (auto [name, v] : std::vector<std::pair<std::string, long>>{{"sym_sym", p_ss}, {"skew_skew", p_aa}, {"adjoint_sym", sym_adj},
                                                                  {"killing", killing}, {"sym_skew", p_sa}, {"skew_sym", p_as},
                                                                  {"bracket", bracket}})
    rep.set_param("piece_" + name, v);
  rep.begin("piece dimensions");
  rep.record_case(dim_slsl == m * m, "dim sl (x) sl = " + std::to_string(dim_slsl));
  rep.record_case(bracket == m, "bracket piece " + std::to_string(bracket));
  rep.record_case(sym_adj == m, "symmetric adjoint piece " + std::to_string(sym_adj));
  rep.record_case(killing == 1, "invariant piece " + std::to_string(killing));
  rep.record_case(p_sa == p_as, "mixed pieces are dual");
  long total = p_ss + p_aa + sym_adj + killing + p_sa + p_as + bracket;
  rep.record_case(total == m * m, "seven pieces sum to " + std::to_string(total));
  rep.record_case(total + 2 * m + 1 == static_cast<long>(D), "with the gl trace parts the total is N^4");

  rep.begin("composition parts sit in the listed pieces");
  Rng rng(seed);
  int n = N - 2;
  Rational a = make_rational(2L * n * n + 8 * n + 4, 2L * n * (n + 2) * (n + 4));
  Rational b = make_rational(4, 2L * n * (n + 2) * (n + 4));
  for (int t = 0; t < 5; ++t) {
    ExactMatrix V = random_traceless(N, rng);
    ExactMatrix W = random_traceless(N, rng);
    auto [U, Ut] = trace_part_closed_form(n, V, W);
    MixedTensor T = outer(V, W) - trace_part_tensor(N, U, Ut);
    MixedTensor T2 = T.column_symmetrized();
    auto as_vec = [&](const MixedTensor& X) {
      Vec v(D);
      for (const auto& [key, val] : X.entries()) v[idx(key[0], key[1], key[2], key[3])] = val;
      return v;
    };
    auto satisfies = [&](const Vec& v, const std::vector<Rows>& blocks) {
      for (const auto& blk : blocks)
        for (const auto& r : blk)
          if (!dot(r, v).is_zero()) return false;
      return true;
    };
    rep.record_case(satisfies(as_vec(T), {tf}), "T not trace-free");
    rep.record_case(satisfies(as_vec(T2), {tf, relation(2, 1)}), "symmetrized T outside the first two pieces");
    ExactMatrix bracket_part = (W * V - V * W).scaled(GaussianRational(a - b));
    rep.record_case(U - Ut == bracket_part, "U - Utilde is not a multiple of the bracket");
  }
  return rep;
}

nlohmann::json isotypic_table_json(int k, int N) {
  SymmetricTraceFree S = trace_free_symmetric_basis(k, N);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& lam : partitions(k)) {
    nlohmann::json row{{"k", k}, {"N", N}, {"lambda", partition_to_string(lam)}, {"rank", isotypic_rank(S, lam)}};
    if (static_cast<int>(lam.size()) <= N) {
      auto w = lambda_plus_dual(lam, N);
      row["highest_weight"] = w;
      row["weyl_dim"] = weyl_dim(w);
    }
    rows.push_back(row);
  }
  return {{"k", k}, {"N", N}, {"dim_S0", S.dim()}, {"stable", N >= 2 * k}, {"components", rows}};
}

}  // namespace crsym
