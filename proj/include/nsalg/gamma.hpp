#pragma once

#include "nsalg/coeff_algebra.hpp"
#include "nsalg/lie.hpp"
#include "nsalg/scalar.hpp"
#include "nsalg/smash.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace nsalg {

/// Basis vector t^k xi^eps of Gamma(lambda, b). lambda never appears as an
/// exponent: it only enters the action coefficients.
struct BasisKey {
  int k = 0;
  int eps = 0;

  std::string str() const;  // "(k,eps)"
  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

enum class Family { Gamma, GammaPlus, GammaMinus, GammaPrime };

/// Sign of G acting on even vectors. PaperPrinted breaks [G_r, G_s]; Corrected flips it.
enum class SignConvention { Corrected, PaperPrinted };

std::string to_string(SignConvention c);
SignConvention parse_sign_convention(std::string_view text);

struct Exclusion {
  enum class Role { Sub, Quotient };
  BasisKey key;
  Role role = Role::Sub;
};

struct ModuleParams {
  Scalar lambda;
  Scalar b;
  Family family = Family::Gamma;
  std::optional<Exclusion> excluded;
  SignConvention convention = SignConvention::Corrected;
  AlgebraMode algebra = AlgebraMode::KHat;
};

/// Finite combination of basis vectors.
class ModuleVector {
 public:
  using Terms = std::map<BasisKey, Scalar>;

  ModuleVector() = default;
  explicit ModuleVector(const BasisKey& key, const Scalar& c = Scalar(1)) { add(key, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const BasisKey& key, const Scalar& c);

  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  ModuleVector& operator*=(const Scalar& c);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& o) { return a += o; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& o) { return a -= o; }
  friend ModuleVector operator*(const Scalar& c, ModuleVector a) { return a *= c; }
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

  /// "c * t^k" / "c * t^k xi" terms joined by " + ".
  std::string str() const;

 private:
  Terms terms_;
};

/// One member of the Gamma family with fixed parameters. Immutable.
class GammaModule {
 public:
  const ModuleParams& params() const { return params_; }
  bool parity_flipped() const { return parity_flipped_; }
  AlgebraMode algebra() const { return params_.algebra; }

  bool admissible(const BasisKey& key) const;
  /// eps XOR the module-level parity flip.
  int parity(const BasisKey& key) const;
  /// L_0-eigenvalue lambda + k + b + eps/2.
  Scalar weight(const BasisKey& key) const;

  /// Single generator on a basis vector; nullopt when the result vanishes.
  std::optional<std::pair<BasisKey, Scalar>> act_basis(const Generator& g, const BasisKey& key) const;

  ModuleVector act(const Generator& g, const ModuleVector& v) const;
  ModuleVector act(const LieElement& x, const ModuleVector& v) const;
  /// Multiplication by A (A+ for the Gamma+/- variants); Gamma' is not an A-module.
  ModuleVector act(const AMonomial& a, const ModuleVector& v) const;
  ModuleVector act(const AElement& a, const ModuleVector& v) const;
  /// Each term acts factor by factor, right to left, the A-part last.
  ModuleVector act(const SmashElement& x, const ModuleVector& v) const;

  /// "gamma(1/3,1/4)", "gamma+(0,b)", "pi(gamma'(0,1/2))", ...
  std::string descriptor() const;

  friend GammaModule make_module(const ModuleParams& params);
  friend GammaModule parity_change(const GammaModule& m);

 private:
  explicit GammaModule(ModuleParams params) : params_(std::move(params)) {}
  void check_generator(const Generator& g) const;
  ModuleParams params_;
  bool parity_flipped_ = false;
};

/// Validates the parameter combination and returns a module handle. For
/// GammaPrime without an explicit exclusion the reducibility locus decides it.
GammaModule make_module(const ModuleParams& params);

/// Pi(M): same vectors and action, parity of every basis vector flipped.
GammaModule parity_change(const GammaModule& m);

inline Scalar weight(const BasisKey& key, const GammaModule& m) { return m.weight(key); }

/// x(y e) - (-1)^{|x||y|} y(x e) - [x,y] e for the basis vector e = key.
/// Vanishes for every pair exactly when the action is a representation.
ModuleVector module_axiom_residual(const Generator& x, const Generator& y, const BasisKey& key,
                                   const GammaModule& m);

/// Parses gamma(l,b), gamma+(0,b), gamma-(0,b), gamma'(l,b), pi(...). Parameters
/// are rationals "p/q" or the formal symbols l and b.
GammaModule parse_module(std::string_view descriptor, AlgebraMode algebra,
                         SignConvention convention = SignConvention::Corrected);

}  // namespace nsalg
