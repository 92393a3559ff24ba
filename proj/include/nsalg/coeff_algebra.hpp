#pragma once

#include "nsalg/lie.hpp"
#include "nsalg/scalar.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nsalg {

/// t^k xi^eps in A = C[t, t^-1] (x) Lambda(xi).
struct AMonomial {
  int k = 0;
  int eps = 0;

  int parity() const { return eps; }
  /// "1", "t", "t^-2", "xi", "t^3*xi".
  std::string str() const;

  friend auto operator<=>(const AMonomial&, const AMonomial&) = default;
};

/// Supercommutative product; nullopt when it vanishes (xi^2 = 0).
std::optional<AMonomial> multiply(const AMonomial& a, const AMonomial& b);

/// A (all Laurent exponents) or A+ (k >= 0).
enum class AMode { A, APlus };

class AElement {
 public:
  using Terms = std::map<AMonomial, Scalar>;

  explicit AElement(AMode mode = AMode::A) : mode_(mode) {}
  AElement(const AMonomial& m, AMode mode = AMode::A, const Scalar& c = Scalar(1));

  AMode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const AMonomial& m, const Scalar& c);

  /// Parity when homogeneous, -1 when mixed, 0 for zero.
  int parity() const;

  std::string str() const;

  friend bool operator==(const AElement&, const AElement&) = default;

 private:
  AMode mode_;
  Terms terms_;
};

/// g o (t^k xi^eps) for a single generator (C is rejected). Rational
/// coefficients; at most one term.
std::vector<std::pair<AMonomial, Rational>> act_on_monomial(const Generator& g, const AMonomial& m);

/// Action of k (or k+) on A by superderivations.
AElement k_action_on_A(const LieElement& x, const AElement& a);

/// (t^k xi^eps) . g under t^i L_j = L_{i+j}, t^i G_m = G_{m+i}, xi L_j = 1/2 G_{j+1/2},
/// xi G_m = 0. At most one term.
std::vector<std::pair<Generator, Rational>> monomial_times_generator(const AMonomial& m,
                                                                    const Generator& g);

/// Bilinear action of A on k; the result is re-checked against x's mode.
LieElement A_action_on_k(const AElement& a, const LieElement& x);

}  // namespace nsalg
