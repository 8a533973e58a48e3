#include "crsym/scalar.hpp"

#include <stdexcept>

namespace crsym {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  Rational n = o.re_ * o.re_ + o.im_ * o.im_;
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return rational_to_string(re_);
  std::string imag = rational_to_string(im_) + "*i";
  if (sgn(re_) == 0) return imag;
  return rational_to_string(re_) + (sgn(im_) > 0 ? "+" : "") + imag;
}

GaussianRational GaussianRational::parse(const std::string& s) {
  if (s.size() >= 2 && s.substr(s.size() - 2) == "*i") {
    std::string body = s.substr(0, s.size() - 2);
    // split at the last sign that is not the leading one
    std::size_t cut = std::string::npos;
    for (std::size_t p = body.size(); p-- > 1;) {
      if (body[p] == '+' || body[p] == '-') {
        cut = p;
        break;
      }
    }
    if (cut == std::string::npos) return {Rational(0), rational_from_string(body)};
    std::string imag = body.substr(cut);
    if (imag[0] == '+') imag.erase(0, 1);
    return {rational_from_string(body.substr(0, cut)), rational_from_string(imag)};
  }
  return GaussianRational(rational_from_string(s));
}

GaussianRational ipow(const GaussianRational& z, unsigned e) {
  GaussianRational out(1);
  GaussianRational b = z;
  while (e) {
    if (e & 1u) out *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return out;
}

}  // namespace crsym
