#pragma once

#include "nsalg/coeff_algebra.hpp"
#include "nsalg/lie.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace nsalg {

/// Ordered product of generators, ascending in the PBW order, no repeated odd
/// factor. The empty word is 1.
using PBWMonomial = std::vector<Generator>;

std::string to_string(const PBWMonomial& w);

/// PureU: U(khat) (no A-part). AK: A.U(k). APlusKPlus: A+.U(k+).
enum class SmashMode { PureU, AK, APlusKPlus };

std::string to_string(SmashMode mode);
AlgebraMode generator_mode(SmashMode mode);

/// Longest word accepted by products (guards against runaway expansions).
int pbw_degree_limit();
void set_pbw_degree_limit(int limit);

/// Normal form of an arbitrary word of generators: sorted words with rational
/// coefficients. The central term survives only when `central` is set.
const std::map<PBWMonomial, Rational>& normal_order(const PBWMonomial& word, bool central);

struct SmashKey {
  AMonomial a;
  PBWMonomial word;

  int parity() const;
  friend auto operator<=>(const SmashKey&, const SmashKey&) = default;
};

/// Element of the smash algebra in normal form: A-part on the left, PBW word
/// on the right.
class SmashElement {
 public:
  using Terms = std::map<SmashKey, Scalar>;

  explicit SmashElement(SmashMode mode = SmashMode::AK) : mode_(mode) {}

  static SmashElement one(SmashMode mode);
  static SmashElement generator(const Generator& g, SmashMode mode);
  static SmashElement monomial(const AMonomial& a, SmashMode mode);
  static SmashElement from_lie(const LieElement& x, SmashMode mode);

  SmashMode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * key; key must already be in normal form and respect the mode.
  void add(const SmashKey& key, const Scalar& c);

  /// Parity when homogeneous, -1 when mixed, 0 for zero.
  int parity() const;
  /// Largest word length among the terms.
  std::size_t degree() const;

  SmashElement& operator+=(const SmashElement& o);
  SmashElement& operator-=(const SmashElement& o);
  SmashElement& operator*=(const Scalar& c);
  friend SmashElement operator+(SmashElement a, const SmashElement& o) { return a += o; }
  friend SmashElement operator-(SmashElement a, const SmashElement& o) { return a -= o; }
  friend SmashElement operator*(const Scalar& c, SmashElement a) { return a *= c; }

  friend bool operator==(const SmashElement& a, const SmashElement& b) {
    return a.mode_ == b.mode_ && a.terms_ == b.terms_;
  }

  /// E.g. "t^2*xi (x) G(-1/2)L(3)"; words alone in PureU mode.
  std::string str() const;

 private:
  void check_mode(const SmashElement& o) const;
  SmashMode mode_;
  Terms terms_;
};

SmashElement smash_product(const SmashElement& x, const SmashElement& y);
inline SmashElement operator*(const SmashElement& x, const SmashElement& y) {
  return smash_product(x, y);
}

/// Super commutator xy - (-1)^{|x||y|} yx; inputs must be homogeneous.
SmashElement smash_bracket(const SmashElement& x, const SmashElement& y);

/// v(ax) - (-1)^{|v||a|} a(vx) - (v o a)x for homogeneous v, a, x, with A
/// acting on k as t^i L_j = L_{i+j} etc. Zero exactly when the two actions are
/// compatible.
SmashElement compatibility_residual(const LieElement& v, const AElement& a, const LieElement& x);

}  // namespace nsalg
