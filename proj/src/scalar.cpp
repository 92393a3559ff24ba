#include "nsalg/scalar.hpp"

#include "nsalg/error.hpp"

namespace nsalg {

Scalar Scalar::normalize(const ParamPoly& raw_num, const ParamPoly& raw_den) {
  if (raw_den.is_zero()) throw Error("division by zero polynomial");
  Scalar s;
  if (raw_num.is_zero()) return s;
  if (raw_den.is_constant()) {
    s.num_ = raw_num * (Rational(1) / raw_den.constant_value());
    return s;
  }
  ParamPoly g = gcd(raw_num, raw_den);
  ParamPoly num = *raw_num.divide_exact(g);
  ParamPoly den = *raw_den.divide_exact(g);
  Rational scale = Rational(1) / den.leading_coefficient();
  s.num_ = num * scale;
  s.den_ = den * scale;
  return s;
}

Scalar Scalar::parse(std::string_view text) {
  if (text == "l" || text == "lambda") return lambda();
  if (text == "b") return b();
  return Scalar(Rational::parse(text));
}

Rational Scalar::numeric_value() const {
  if (!is_numeric()) throw Error("scalar " + str() + " is not numeric");
  return num_.constant_value() / den_.constant_value();
}

Scalar Scalar::substitute(const std::optional<Rational>& lambda_val,
                          const std::optional<Rational>& b_val) const {
  ParamPoly den = den_.substitute(lambda_val, b_val);
  if (den.is_zero()) {
    throw Error("denominator vanishes at substitution point: " + den_.str());
  }
  return normalize(num_.substitute(lambda_val, b_val), den);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (den_ == o.den_) {
    ParamPoly n = num_ + o.num_;
    if (den_.is_constant()) {
      num_ = std::move(n);
      return *this;
    }
    return *this = normalize(n, den_);
  }
  return *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  return *this = normalize(num_ * o.num_, den_ * o.den_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error("division by zero scalar");
  return *this = normalize(num_ * o.den_, den_ * o.num_);
}

std::string Scalar::str() const {
  if (den_.is_constant()) return num_.str();
  auto wrap = [](const ParamPoly& p) { 
    const std::string s = p.str();
    return p.size() > 1 || s.find('/') != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

std::string Scalar::str_factor() const {
  if (den_.is_constant() && num_.size() <= 1) return str();
  return "(" + str() + ")";
}

}  // namespace nsalg
