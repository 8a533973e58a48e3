#pragma once

#include <map>

#include "crsym/poly.hpp"

namespace crsym {

// Differential operator sum_alpha c_alpha(x) d^alpha with coefficients on the left.
class WeylOperator {
 public:
  using Terms = std::map<Exponents, LaurentPoly, GrLex>;

  WeylOperator() = default;
  explicit WeylOperator(RingPtr ring) : ring_(std::move(ring)) {}

  static WeylOperator identity(const RingPtr& ring);
  static WeylOperator multiplication(const LaurentPoly& p);
  static WeylOperator partial(const RingPtr& ring, std::size_t gen);
  // c * d^alpha
  static WeylOperator term(const LaurentPoly& c, const Exponents& alpha);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;
  std::size_t size() const;

  void add_term(const Exponents& alpha, const LaurentPoly& c);

  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  WeylOperator& operator*=(const GaussianRational& c);
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(WeylOperator a, const GaussianRational& c) { return a *= c; }
  friend WeylOperator operator*(const GaussianRational& c, WeylOperator a) { return a *= c; }
  friend bool operator==(const WeylOperator& a, const WeylOperator& b);

  // Left multiplication by a function.
  WeylOperator left_mul(const LaurentPoly& p) const;

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  RingPtr ring_;
  Terms terms_;
};

// d^alpha p
LaurentPoly apply_derivative(const Exponents& alpha, const LaurentPoly& p);

LaurentPoly weyl_apply(const WeylOperator& op, const LaurentPoly& p);
WeylOperator weyl_compose(const WeylOperator& a, const WeylOperator& b);
WeylOperator weyl_commutator(const WeylOperator& a, const WeylOperator& b);
WeylOperator principal_part(const WeylOperator& op, int order);

}  // namespace crsym
