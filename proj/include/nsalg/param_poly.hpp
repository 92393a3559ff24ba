#pragma once

#include "nsalg/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace nsalg {

/// Exponent pair (degree in lambda, degree in b) of a monomial l^i b^j.
struct Exponent {
  int l = 0;
  int b = 0;

  int total() const { return l + b; }
  bool divides(const Exponent& o) const { return l <= o.l && b <= o.b; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Graded lexicographic order with lambda before b.
struct GradedLex {
  bool operator()(const Exponent& x, const Exponent& y) const {
    if (x.total() != y.total()) return x.total() < y.total();
    return x.l < y.l;
  }
};

/// Polynomial over Q in the two formal parameters lambda (rendered "l") and b.
/// Zero coefficients are never stored.
class ParamPoly {
 public:
  using Terms = std::map<Exponent, Rational, GradedLex>;

  ParamPoly() = default;
  ParamPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static ParamPoly lambda();
  static ParamPoly b();
  static ParamPoly monomial(Exponent e, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; only meaningful when is_constant().
  Rational constant_value() const;

  /// Largest term in graded lex order. Precondition: nonzero.
  Exponent leading_exponent() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  int degree_lambda() const;
  /// Coefficient of l^d as a polynomial in b alone.
  ParamPoly coefficient_lambda(int d) const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const Rational& c);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& o) { return a += o; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& o) { return a -= o; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& o);
  friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }

  friend bool operator==(const ParamPoly& a, const ParamPoly& o) { return a.terms_ == o.terms_; }

  /// Quotient when `divisor` divides *this exactly; nullopt otherwise.
  std::optional<ParamPoly> divide_exact(const ParamPoly& divisor) const;

  /// Substitutes the given values; absent values stay formal.
  ParamPoly substitute(const std::optional<Rational>& lambda_val,
                       const std::optional<Rational>& b_val) const;

  /// Scales so the leading coefficient is 1. Zero stays zero.
  ParamPoly monic() const;

  /// Deterministic rendering, e.g. "2*l + 4*b - 1".
  std::string str() const;

  /// Number of stored terms.
  std::size_t size() const { return terms_.size(); }

 private:
  void add_term(const Exponent& e, const Rational& c);
  Terms terms_;
};

/// Monic greatest common divisor in Q[l, b]; gcd(0, 0) = 0.
ParamPoly gcd(const ParamPoly& p, const ParamPoly& q);

}  // namespace nsalg
