#pragma once

#include "nsalg/generator.hpp"
#include "nsalg/scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nsalg {

/// Bracket of two basis elements as (generator, coefficient) pairs. The central
/// term is kept only in KHat mode.
std::vector<std::pair<Generator, Rational>> bracket_basis(const Generator& x, const Generator& y,
                                                         AlgebraMode mode);

/// Finite linear combination of basis elements of khat, k or k+.
class LieElement {
 public:
  using Terms = std::map<Generator, Scalar>;

  explicit LieElement(AlgebraMode mode = AlgebraMode::KHat) : mode_(mode) {}
  LieElement(const Generator& g, AlgebraMode mode, const Scalar& coeff = Scalar(1));

  AlgebraMode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * g; throws when g violates the mode's index bounds.
  void add(const Generator& g, const Scalar& c);

  /// Parity when homogeneous, -1 for a mixed element, 0 for zero.
  int parity() const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Scalar& c);
  friend LieElement operator+(LieElement a, const LieElement& o) { return a += o; }
  friend LieElement operator-(LieElement a, const LieElement& o) { return a -= o; }
  friend LieElement operator*(const Scalar& c, LieElement a) { return a *= c; }

  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.mode_ == b.mode_ && a.terms_ == b.terms_;
  }

  /// E.g. "-4*L(0) + 1/2*C" (L and G by index, C last).
  std::string str() const;

 private:
  void check_mode(const LieElement& o) const;
  AlgebraMode mode_;
  Terms terms_;
};

/// Super bracket extended bilinearly; both arguments must share a mode.
LieElement bracket(const LieElement& x, const LieElement& y);

/// Renders "c*X" terms joined by " + "/" - " in the given order.
std::string render_linear_combination(const std::vector<std::pair<std::string, Scalar>>& terms);

}  // namespace nsalg
