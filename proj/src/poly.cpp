#include "crsym/poly.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crsym {

bool GrLex::operator()(const Exponents& a, const Exponents& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a > b;  // x0 > x1 > ... within a degree
}

Ring::Ring(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (!seen.insert(g.name).second) throw std::invalid_argument("duplicate generator " + g.name);
  }
}

std::size_t Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == name) return i;
  }
  throw std::invalid_argument("unknown generator " + name);
}

bool Ring::same_as(const Ring& o) const {
  if (this == &o) return true;
  if (gens_.size() != o.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name != o.gens_[i].name || gens_[i].laurent_allowed != o.gens_[i].laurent_allowed) return false;
  }
  return true;
}

RingPtr make_ring(std::vector<Generator> gens) { return std::make_shared<const Ring>(std::move(gens)); }

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->same_as(*b)) throw std::invalid_argument("ring mismatch");
}

LaurentPoly LaurentPoly::constant(const RingPtr& ring, const GaussianRational& c) {
  return monomial(ring, Exponents(ring->arity(), 0), c);
}

LaurentPoly LaurentPoly::generator(const RingPtr& ring, std::size_t idx) {
  Exponents e(ring->arity(), 0);
  e.at(idx) = 1;
  return monomial(ring, std::move(e), GaussianRational(1));
}

LaurentPoly LaurentPoly::monomial(const RingPtr& ring, Exponents e, const GaussianRational& c) {
  if (e.size() != ring->arity()) throw std::invalid_argument("exponent length mismatch");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 && !ring->gen(i).laurent_allowed) {
      throw std::invalid_argument("negative exponent on " + ring->gen(i).name);
    }
  }
  LaurentPoly p(ring);
  if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
  return p;
}

GaussianRational LaurentPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LaurentPoly::add_scaled(const LaurentPoly& p, const GaussianRational& c) {
  if (c.is_zero() || p.is_zero()) return;
  if (!ring_) ring_ = p.ring_;
  require_same_ring(ring_, p.ring_);
  if (c.is_one()) {
    for (const auto& [e, v] : p.terms_) add_term(e, v);
  } else {
    for (const auto& [e, v] : p.terms_) add_term(e, v * c);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, GaussianRational(1));
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, GaussianRational(-1));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.ring_ && b.ring_) require_same_ring(a.ring_, b.ring_);
  LaurentPoly out(a.ring_ ? a.ring_ : b.ring_);
  Exponents e;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.ring_ && b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
  return a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::diff(std::size_t gen) const {
  if (!ring_ || gen >= ring_->arity()) throw std::invalid_argument("unknown generator index");
  LaurentPoly out(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[gen] == 0) continue;
    Exponents f = e;
    f[gen] -= 1;
    out.terms_.emplace_hint(out.terms_.end(), std::move(f), c * GaussianRational(e[gen]));
  }
  return out;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (terms_.size() != 1) throw std::domain_error("cannot invert a non-monomial");
    const auto& [ex, c] = *terms_.begin();
    Exponents inv(ex.size());
    for (std::size_t i = 0; i < ex.size(); ++i) {
      if (ex[i] != 0 && !ring_->gen(i).laurent_allowed) {
        throw std::domain_error("cannot invert generator " + ring_->gen(i).name);
      }
      inv[i] = -ex[i];
    }
    return monomial(ring_, inv, GaussianRational(1) / c).pow(-e);
  }
  LaurentPoly out = constant(ring_, GaussianRational(1));
  LaurentPoly b = *this;
  unsigned u = static_cast<unsigned>(e);
  while (u) {
    if (u & 1u) out *= b;
    u >>= 1u;
    if (u) b = b * b;
  }
  return out;
}

int LaurentPoly::degree_in(const std::vector<std::size_t>& gens) const {
  bool first = true;
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto g : gens) d += e[g];
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      throw std::domain_error("not homogeneous");
    }
  }
  return deg;
}

LaurentPoly LaurentPoly::conj() const {
  LaurentPoly out = *this;
  for (auto& [e, v] : out.terms_) v = v.conj();
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool unit = true;
    for (int x : e) unit = unit && x == 0;
    std::string cs = c.to_string();
    if (!c.is_real() && !unit) cs = "(" + cs + ")";
    if (unit) {
      os << cs;
      continue;
    }
    if (!c.is_one()) os << cs << "*";
    bool firstv = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << ring_->gen(i).name;
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : terms_) arr.push_back({{"exp", e}, {"coeff", c.to_string()}});
  return arr;
}

LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp kind) {
  require_same_ring(a.ring(), b.ring());
  switch (kind) {
    case PolyOp::add:
      return a + b;
    case PolyOp::mul:
      return a * b;
    case PolyOp::scale: {
      if (b.size() > 1 || (b.size() == 1 && b.terms().begin()->first != Exponents(b.ring()->arity(), 0))) {
        throw std::invalid_argument("scale expects a constant");
      }
      return b.is_zero() ? LaurentPoly(a.ring()) : a * b.terms().begin()->second;
    }
  }
  return {};
}

LaurentPoly poly_diff(const LaurentPoly& p, const std::string& generator) {
  return p.diff(p.ring()->index_of(generator));
}

LaurentPoly poly_substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images) {
  const RingPtr& src = p.ring();
  if (images.size() != src->arity()) throw std::invalid_argument("substitution map size mismatch");
  RingPtr target = images.empty() ? src : images.front().ring();
  for (const auto& im : images) {
    if (im.ring()) require_same_ring(target, im.ring());
  }
  // power cache per generator
  std::vector<std::map<int, LaurentPoly>> cache(images.size());
  auto power = [&](std::size_t g, int e) -> const LaurentPoly& {
    auto it = cache[g].find(e);
    if (it != cache[g].end()) return it->second;
    LaurentPoly base = images[g];
    if (!base.ring()) base = LaurentPoly(target);
    return cache[g].emplace(e, base.pow(e)).first->second;
  };
  LaurentPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(target, c);
    for (std::size_t g = 0; g < e.size() && !term.is_zero(); ++g) {
      if (e[g] != 0) term = term * power(g, e[g]);
    }
    out += term;
  }
  return out;
}

LaurentPoly poly_conjugate(const LaurentPoly& p, const std::vector<std::size_t>& relabel,
                           const std::vector<GaussianRational>& scale) {
  const RingPtr& r = p.ring();
  if (relabel.size() != r->arity()) throw std::invalid_argument("relabel size mismatch");
  LaurentPoly out(r);
  for (const auto& [e, c] : p.terms()) {
    Exponents f(e.size(), 0);
    GaussianRational v = c.conj();
    for (std::size_t i = 0; i < e.size(); ++i) {
      f.at(relabel[i]) += e[i];
      if (scale.empty() || e[i] == 0) continue;
      GaussianRational f_i = ipow(scale[i], static_cast<unsigned>(std::abs(e[i])));
      v = e[i] > 0 ? v * f_i : v / f_i;
    }
    out.add_term(f, v);
  }
  return out;
}

}  // namespace crsym
