#include "crsym/weyl.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crsym {

namespace {

int total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

Rational binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

}  // namespace

WeylOperator WeylOperator::identity(const RingPtr& ring) {
  return multiplication(LaurentPoly::constant(ring, GaussianRational(1)));
}

WeylOperator WeylOperator::multiplication(const LaurentPoly& p) {
  WeylOperator op(p.ring());
  op.add_term(Exponents(p.ring()->arity(), 0), p);
  return op;
}

WeylOperator WeylOperator::partial(const RingPtr& ring, std::size_t gen) {
  Exponents a(ring->arity(), 0);
  a.at(gen) = 1;
  return term(LaurentPoly::constant(ring, GaussianRational(1)), a);
}

WeylOperator WeylOperator::term(const LaurentPoly& c, const Exponents& alpha) {
  WeylOperator op(c.ring());
  op.add_term(alpha, c);
  return op;
}

int WeylOperator::order() const {
  int o = 0;
  for (const auto& [a, c] : terms_) o = std::max(o, total(a));
  return o;
}

std::size_t WeylOperator::size() const {
  std::size_t s = 0;
  for (const auto& [a, c] : terms_) s += c.size();
  return s;
}

void WeylOperator::add_term(const Exponents& alpha, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (!ring_) ring_ = c.ring();
  require_same_ring(ring_, c.ring());
  if (alpha.size() != ring_->arity()) throw std::invalid_argument("derivative index length mismatch");
  for (int x : alpha)
    if (x < 0) throw std::invalid_argument("negative derivative order");
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

WeylOperator& WeylOperator::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, p] : terms_) p *= c;
  return *this;
}

bool operator==(const WeylOperator& a, const WeylOperator& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [al, c] : a.terms_) {
    if (it->first != al || it->second != c) return false;
    ++it;
  }
  return true;
}

WeylOperator WeylOperator::left_mul(const LaurentPoly& p) const {
  WeylOperator out(ring_ ? ring_ : p.ring());
  for (const auto& [a, c] : terms_) out.add_term(a, p * c);
  return out;
}

std::string WeylOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      os << "*d[" << ring_->gen(i).name << "]";
      if (a[i] != 1) os << "^" << a[i];
    }
  }
  return os.str();
}

nlohmann::json WeylOperator::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [a, c] : terms_) arr.push_back({{"d", a}, {"coeff", c.to_json()}});
  return arr;
}

LaurentPoly apply_derivative(const Exponents& alpha, const LaurentPoly& p) {
  LaurentPoly out(p.ring());
  Exponents f;
  for (const auto& [e, c] : p.terms()) {
    Rational factor(1);
    bool zero = false;
    f = e;
    for (std::size_t i = 0; i < alpha.size() && !zero; ++i) {
      for (int t = 0; t < alpha[i]; ++t) {
        if (f[i] == 0) {
          zero = true;
          break;
        }
        factor *= f[i];
        f[i] -= 1;
      }
    }
    if (zero) continue;
    out.add_term(f, c * GaussianRational(factor));
  }
  return out;
}

LaurentPoly weyl_apply(const WeylOperator& op, const LaurentPoly& p) {
  if (op.ring() && p.ring()) require_same_ring(op.ring(), p.ring());
  LaurentPoly out(p.ring() ? p.ring() : op.ring());
  for (const auto& [a, c] : op.terms()) {
    LaurentPoly d = apply_derivative(a, p);
    if (!d.is_zero()) out += c * d;
  }
  return out;
}

WeylOperator weyl_compose(const WeylOperator& a, const WeylOperator& b) {
  if (a.ring() && b.ring()) require_same_ring(a.ring(), b.ring());
  WeylOperator out(a.ring() ? a.ring() : b.ring());
  for (const auto& [alpha, c] : a.terms()) {
    // enumerate gamma <= alpha
    std::size_t n = alpha.size();
    Exponents gamma(n, 0);
    while (true) {
      Rational coef(1);
      for (std::size_t i = 0; i < n; ++i) {
        if (gamma[i] != 0) coef *= binomial(alpha[i], gamma[i]);
      }
      for (const auto& [beta, d] : b.terms()) {
        LaurentPoly dd = apply_derivative(gamma, d);
        if (dd.is_zero()) continue;
        Exponents tot(n);
        for (std::size_t i = 0; i < n; ++i) tot[i] = alpha[i] - gamma[i] + beta[i];
        out.add_term(tot, (c * dd) * GaussianRational(coef));
      }
      std::size_t i = 0;
      while (i < n) {
        if (gamma[i] < alpha[i]) {
          ++gamma[i];
          break;
        }
        gamma[i] = 0;
        ++i;
      }
      if (i == n) break;
    }
  }
  return out;
}

WeylOperator weyl_commutator(const WeylOperator& a, const WeylOperator& b) {
  return weyl_compose(a, b) - weyl_compose(b, a);
}

WeylOperator principal_part(const WeylOperator& op, int order) {
  WeylOperator out(op.ring());
  for (const auto& [a, c] : op.terms()) {
    if (total(a) == order) out.add_term(a, c);
  }
  return out;
}

}  // namespace crsym
