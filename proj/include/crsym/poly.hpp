#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "crsym/scalar.hpp"

namespace crsym {

using Exponents = std::vector<int>;

// Graded lexicographic: total degree first, then lexicographic.
struct GrLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

struct Generator {
  std::string name;
  bool laurent_allowed = false;
};

class Ring {
 public:
  explicit Ring(std::vector<Generator> gens);
  std::size_t arity() const { return gens_.size(); }
  const Generator& gen(std::size_t i) const { return gens_.at(i); }
  const std::vector<Generator>& gens() const { return gens_; }
  std::size_t index_of(const std::string& name) const;
  bool same_as(const Ring& o) const;

 private:
  std::vector<Generator> gens_;
};

using RingPtr = std::shared_ptr<const Ring>;
RingPtr make_ring(std::vector<Generator> gens);

class LaurentPoly {
 public:
  using Terms = std::map<Exponents, GaussianRational, GrLex>;

  LaurentPoly() = default;
  explicit LaurentPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static LaurentPoly constant(const RingPtr& ring, const GaussianRational& c);
  static LaurentPoly generator(const RingPtr& ring, std::size_t idx);
  static LaurentPoly monomial(const RingPtr& ring, Exponents e, const GaussianRational& c);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  GaussianRational coeff(const Exponents& e) const;

  // Adds c*x^e in place, dropping the term if it cancels.
  void add_term(const Exponents& e, const GaussianRational& c);
  void add_scaled(const LaurentPoly& p, const GaussianRational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const GaussianRational& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const GaussianRational& c) { return a *= c; }
  friend LaurentPoly operator*(const GaussianRational& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly diff(std::size_t gen) const;
  LaurentPoly pow(int e) const;
  // Total degree when homogeneous in the given generator subset, else throws.
  int degree_in(const std::vector<std::size_t>& gens) const;
  LaurentPoly conj() const;

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  RingPtr ring_;
  Terms terms_;
};

enum class PolyOp { add, mul, scale };
LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp kind);
LaurentPoly poly_diff(const LaurentPoly& p, const std::string& generator);
// images[i] is the image of generator i of p's ring; all images share one target ring.
LaurentPoly poly_substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images);
// Complex conjugation: generator relabelling plus coefficient conjugation.
LaurentPoly poly_conjugate(const LaurentPoly& p, const std::vector<std::size_t>& relabel,
                           const std::vector<GaussianRational>& scale = {});

void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace crsym
