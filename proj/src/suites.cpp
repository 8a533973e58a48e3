#include "crsym/suites.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "crsym/ambient.hpp"
#include "crsym/boundary.hpp"
#include "crsym/classalg.hpp"
#include "crsym/decompose.hpp"
#include "crsym/symbols.hpp"

namespace crsym {

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

void need_range(std::vector<std::string>& errs, const char* name, const std::optional<int>& v, int lo, int hi) {
  if (v && (*v < lo || *v > hi))
    errs.push_back(std::string(name) + " must lie in [" + std::to_string(lo) + "," + std::to_string(hi) + "], got " +
                   std::to_string(*v));
}

void weights_pair(std::vector<std::string>& errs, const SuiteParams& p, int n) {
  if (p.w1.has_value() != p.w2.has_value()) errs.push_back("w1 and w2 must be given together");
  if (p.w1 && p.w2 && n + *p.w1 + *p.w2 != 0)
    errs.push_back("weights must satisfy n+w1+w2=0 (n=" + std::to_string(n) + ")");
}

std::vector<int> n_values(const SuiteParams& p, std::vector<int> defaults) {
  return p.n ? std::vector<int>{*p.n} : defaults;
}

std::vector<std::pair<int, int>> weight_values(const SuiteParams& p, int n, int max_gap) {
  if (p.w1 && p.w2) return {{*p.w1, *p.w2}};
  return admissible_weights(n, max_gap);
}

VerificationReport reduction_suite(const SuiteParams& p) {
  VerificationReport rep("reduction");
  int deg = p.deg.value_or(3);
  rep.set_param("deg", deg);
  for (int n : n_values(p, {1, 2})) {
    BoundaryModel m = make_boundary(n);
    std::string pre = "n=" + std::to_string(n) + " ";
    if (p.w1 && p.w2) {
      VerificationReport sweep("reduction");
      for (const auto& F : boundary_monomials(m, deg)) sweep.merge(verify_reduction(m, F, *p.w1, *p.w2));
      rep.merge(sweep, pre);
    } else {
      rep.merge(reduction_sweep(m, deg, 4), pre);
    }
    rep.merge(frame_identities_check(m), pre + "frames: ");
    for (auto [w1, w2] : weight_values(p, n, 2)) {
      std::string wp = pre + "w=(" + std::to_string(w1) + "," + std::to_string(w2) + ") ";
      rep.merge(verify_tangential(m, std::min(deg, 2), w1, w2), wp + "tangential: ");
      for (const auto& h : boundary_monomials(m, std::min(deg, 2)))
        rep.merge(verify_rh_lemma(m, h, w1 + 1, w2 + 1), wp + "rh lemma: ");
    }
  }
  return rep;
}

VerificationReport commutation_suite(const SuiteParams& p) {
  VerificationReport rep("commutation");
  for (int n : n_values(p, {1, 2, 3})) {
    AmbientModel m = make_ambient(n);
    std::string pre = "n=" + std::to_string(n) + " ";
    rep.merge(commutation_check(m, 5, p.seed), pre);
    for (auto [w1, w2] : weight_values(p, n, 4))
      rep.merge(central_action_check(m, w1, w2, 2),
                pre + "w=(" + std::to_string(w1) + "," + std::to_string(w2) + ") ");
  }
  int n = p.n.value_or(2);
  AmbientModel m = make_ambient(n);
  WeylOperator lap = ambient_laplacian(m);
  WeylOperator r = WeylOperator::multiplication(r_poly(m));
  Rng rng(p.seed);
  rep.begin("second-order compositions commute with Lap and r");
  for (int t = 0; t < 3; ++t) {
    MixedTensor V = random_tracefree_symmetric(m.N(), 2, rng);
    WeylOperator op = higher_symmetry_op(m, V);
    rep.record_case(weyl_commutator(lap, op).is_zero(), "Lap, trial " + std::to_string(t));
    rep.record_case(weyl_commutator(op, r).is_zero(), "r, trial " + std::to_string(t));
  }
  BoundaryModel b = make_boundary(n);
  auto [w1, w2] = weight_values(p, n, 2).front();
  Rng rng2(p.seed + 1);
  rep.merge(verify_induced_symmetry(b, dv(m, random_traceless(m.N(), rng2)), w1, w2, std::min(p.deg.value_or(2), 2)),
            "induced first-order: ");
  return rep;
}

VerificationReport composition_suite(const SuiteParams& p) {
  VerificationReport rep("composition");
  int n = p.n.value_or(2);
  int bound = p.deg.value_or(3);
  rep.set_param("n", n);
  rep.set_param("bound", bound);
  AmbientModel m = make_ambient(n);
  BoundaryModel b = make_boundary(n);
  int N = m.N();
  Rng rng(p.seed);
  for (int t = 0; t < 5; ++t) {
    ExactMatrix V = random_traceless(N, rng);
    ExactMatrix W = random_traceless(N, rng);
    std::string pre = "pair " + std::to_string(t) + " ";
    auto closed = trace_part_closed_form(n, V, W);
    auto proj = trace_part_by_projection(n, V, W);
    rep.begin(pre + "U, Utilde match the projection oracle");
    rep.record_case(closed.first == proj.first && closed.second == proj.second, "trace parts differ");
    for (auto [w1, w2] : weight_values(p, n, 2)) {
      std::string wp = pre + "w=(" + std::to_string(w1) + "," + std::to_string(w2) + ") ";
      CompositionParts parts = compose_decompose(m, V, W, w1, w2);
      rep.begin(wp + "parts well formed");
      rep.record_case(parts.T.is_trace_free(), "T not trace-free");
      rep.record_case(parts.vw2.is_column_symmetric(), "(VW)_2 not column-symmetric");
      rep.merge(verify_composition_identity(m, V, W, w1, w2, bound, ScalarCoefficients::rederived), wp);
      rep.merge(verify_composition_identity(m, V, W, w1, w2, bound, ScalarCoefficients::printed), wp + "printed: ");
      if (t == 0)
        rep.merge(induced_composition_check(b, V, W, w1, w2, 2, ScalarCoefficients::rederived), wp);
    }
  }
  return rep;
}

VerificationReport prop1_suite(const SuiteParams& p) {
  VerificationReport rep("prop1");
  std::vector<std::pair<int, int>> ds{{2, 1}, {3, 1}, {4, 2}};
  if (p.d && p.s) ds = {{*p.d, *p.s}};
  int n = p.n.value_or(3);
  BoundaryModel m = make_boundary(n);
  for (auto [d, s] : ds)
    rep.merge(verify_prop1(m, d, s), "(d,s)=(" + std::to_string(d) + "," + std::to_string(s) + ") ");
  int smax = p.s ? std::max(*p.s, 8) : 8;
  rep.merge(pascal_identity_check(smax));
  rep.merge(det_recurrence_check(smax));
  return rep;
}

VerificationReport symbols_suite(const SuiteParams& p) {
  VerificationReport rep("symbols");
  int d = p.d.value_or(3);
  for (int n : n_values(p, {2, 3})) {
    BoundaryModel m = make_boundary(n);
    std::string pre = "n=" + std::to_string(n) + " ";
    rep.merge(el2_vanishing_check(m, d, 3, p.seed), pre);
    Rng rng(p.seed);
    for (int t = 0; t < 2; ++t) {
      MixedTensor T = random_tracefree_symmetric(m.amb.N(), std::min(d, 2), rng);
      rep.merge(check_symbol_recursions(m, extract_symbols(m, T)), pre + "random " + std::to_string(t) + ": ");
    }
  }
  rep.begin("symmetry space dimensions add up");
  for (int dd = 1; dd <= 3; ++dd)
    for (int n = 1; n <= 3; ++n) {
      auto v = symmetry_space_dim(dd, n);
      long sum = 0;
      for (std::size_t i = 0; i + 1 < v.size(); ++i) sum += v[i];
      rep.record_case(sum == v.back(), "d=" + std::to_string(dd) + " n=" + std::to_string(n));
    }
  return rep;
}

VerificationReport classalg_suite(const SuiteParams& p) {
  VerificationReport rep("classalg");
  if (p.k) {
    rep.merge(verify_classalg(*p.k));
    return rep;
  }
  for (int k = 1; k <= 5; ++k) rep.merge(verify_classalg(k), "k=" + std::to_string(k) + " ");
  rep.merge(oracle_equivalence(5));
  return rep;
}

std::vector<std::pair<int, int>> kn_values(const SuiteParams& p) {
  if (p.k) return {{*p.k, p.dim.value_or(2 * *p.k)}};
  return {{2, 4}, {3, 6}};
}

VerificationReport commutant_suite(const SuiteParams& p) {
  VerificationReport rep("commutant");
  rep.merge(c_s_examples_check(p.dim.value_or(3), p.seed));
  for (auto [k, N] : kn_values(p)) {
    std::string pre = "(k,N)=(" + std::to_string(k) + "," + std::to_string(N) + ") ";
    rep.merge(commutant_mult_crosscheck(k, N), pre);
    int Ns = std::min(N, 3);
    rep.merge(conjugation_lemmas_check(k, Ns, p.seed), pre);
    rep.merge(commutant_oracle_check(k, Ns, p.seed), pre);
  }
  return rep;
}

VerificationReport decompose_suite(const SuiteParams& p) {
  VerificationReport rep("decompose");
  std::vector<std::pair<int, int>> kn{{1, 2}, {2, 4}, {2, 3}, {3, 6}};
  if (p.k) kn = kn_values(p);
  for (auto [k, N] : kn) rep.merge(decomposition_check(k, N), "(k,N)=(" + std::to_string(k) + "," + std::to_string(N) + ") ");
  for (int N : p.dim ? std::vector<int>{*p.dim} : std::vector<int>{3, 4})
    rep.merge(seven_pieces_check(N, p.seed), "N=" + std::to_string(N) + " ");
  return rep;
}

VerificationReport hwvectors_suite(const SuiteParams& p) {
  VerificationReport rep("hwvectors");
  int kmax = p.k.value_or(3);
  std::vector<int> Ns{2, 3, 4, 5, 6};
  if (p.dim) Ns = {*p.dim};
  for (int N : Ns) rep.merge(hw_vectors_check(kmax, N), "N=" + std::to_string(N) + " ");
  int N = p.dim.value_or(4);
  for (int k = 1; k <= kmax; ++k)
    for (const auto& lam : partitions(k))
      if (static_cast<int>(lam.size()) + 1 <= k)
        rep.merge(skew_vanishing_check(lam, k, N, 5, p.seed), "N=" + std::to_string(N) + " ");
  return rep;
}

using SuiteFn = VerificationReport (*)(const SuiteParams&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> t{
      {"reduction", reduction_suite}, {"commutation", commutation_suite}, {"composition", composition_suite},
      {"prop1", prop1_suite},         {"symbols", symbols_suite},         {"classalg", classalg_suite},
      {"commutant", commutant_suite}, {"decompose", decompose_suite},     {"hwvectors", hwvectors_suite},
  };
  return t;
}

}  // namespace

ParamError::ParamError(const std::vector<std::string>& reasons)
    : std::invalid_argument("invalid parameters: " + join(reasons, "; ")), reasons_(reasons) {}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suite_table()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

void validate_suite(const std::string& suite, const SuiteParams& p) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UnknownSuite(suite);
  std::vector<std::string> errs;
  need_range(errs, "deg", p.deg, 0, 4);
  if (suite == "reduction" || suite == "all") {
    need_range(errs, "n", p.n, 1, 3);
    if (p.n) weights_pair(errs, p, *p.n);
    else if (p.w1 || p.w2) errs.push_back("w1/w2 need an explicit n");
  }
  if (suite == "commutation" || suite == "composition") {
    need_range(errs, "n", p.n, 1, 3);
    weights_pair(errs, p, p.n.value_or(2));
  }
  if (suite == "prop1") {
    need_range(errs, "n", p.n, 2, 4);
    if (p.d.has_value() != p.s.has_value()) errs.push_back("d and s must be given together");
    need_range(errs, "s", p.s, 0, 3);
    if (p.d && p.s && (2 * *p.s > *p.d)) errs.push_back("need 2s <= d");
    need_range(errs, "d", p.d, 1, 4);
  }
  if (suite == "symbols") {
    need_range(errs, "n", p.n, 1, 3);
    need_range(errs, "d", p.d, 1, 3);
  }
  if (suite == "classalg") need_range(errs, "k", p.k, 1, 7);
  if (suite == "commutant" || suite == "decompose" || suite == "hwvectors") {
    need_range(errs, "k", p.k, 1, 3);
    need_range(errs, "dim", p.dim, 2, 6);
  }
  if (suite == "commutant" && p.dim && !p.k && *p.dim < 2) errs.push_back("dim must be at least 2");
  if (!errs.empty()) throw ParamError(errs);
}

VerificationReport run_suite(const std::string& suite, const SuiteParams& p) {
  validate_suite(suite, p);
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep(suite);
  auto put = [&](const char* key, const std::optional<int>& v) {
    if (v) rep.set_param(key, *v);
  };
  put("n", p.n);
  put("d", p.d);
  put("s", p.s);
  put("k", p.k);
  put("dim", p.dim);
  put("w1", p.w1);
  put("w2", p.w2);
  put("deg", p.deg);
  rep.set_param("seed", std::to_string(p.seed));
  for (const auto& [name, fn] : suite_table())
    if (suite == "all" || suite == name) rep.merge(fn(p), suite == "all" ? name + ": " : "");
  rep.set_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return rep;
}

std::string report_csv(const VerificationReport& r) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  };
  std::ostringstream os;
  os << "suite,check,status,cases,note\n";
  for (const auto& c : r.checks())
    os << quote(r.suite()) << ',' << quote(c.name) << ',' << status_name(c.status) << ',' << c.cases << ','
       << quote(c.note) << '\n';
  os << quote(r.suite()) << ",\"overall\"," << status_name(r.status()) << ",,\n";
  return os.str();
}

}  // namespace crsym
