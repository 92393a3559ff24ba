#pragma once

#include "nsalg/param_poly.hpp"
#include "nsalg/rational.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace nsalg {

/// Element of the rational function field Q(lambda, b) in canonical form:
/// numerator and denominator coprime, denominator monic in graded lex order.
/// Equal functions have identical representations, so equality is a
/// structural comparison.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(long c) : num_(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  Scalar(const ParamPoly& p) : num_(p) {} // NOLINT(google-explicit-constructor)

  /// Canonical representative of raw_num / raw_den.
  static Scalar normalize(const ParamPoly& raw_num, const ParamPoly& raw_den);

  static Scalar lambda() { return Scalar(ParamPoly::lambda()); }
  static Scalar b() { return Scalar(ParamPoly::b()); }

  /// Accepts "p", "p/q", "l" (lambda) or "b".
  static Scalar parse(std::string_view text);

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the value involves no formal parameter.
  bool is_numeric() const { return num_.is_constant() && den_.is_constant(); }
  /// Numeric value; throws when formal parameters remain.
  Rational numeric_value() const;

  Scalar substitute(const std::optional<Rational>& lambda_val,
                    const std::optional<Rational>& b_val) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& o) { return a += o; }
  friend Scalar operator-(Scalar a, const Scalar& o) { return a -= o; }
  friend Scalar operator*(Scalar a, const Scalar& o) { return a *= o; }
  friend Scalar operator/(Scalar a, const Scalar& o) { return a /= o; }

  friend bool operator==(const Scalar& a, const Scalar& o) = default;

  /// E.g. "(2*l + 4*b - 1)/(l + 1)"; plain numerator when the denominator is 1.
  std::string str() const;
  /// Like str(), parenthesized when it renders as more than one term.
  std::string str_factor() const;

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  ParamPoly num_;
  ParamPoly den_{1};
};

}  // namespace nsalg
