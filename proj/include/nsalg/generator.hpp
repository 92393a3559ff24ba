#pragma once

#include "nsalg/rational.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace nsalg {

/// Element of (1/2)Z stored as twice its value.
struct HalfInt {
  int doubled = 0;

  static HalfInt from_int(int n) { return {2 * n}; }
  /// Accepts "n" or "p/2".
  static HalfInt parse(std::string_view text);

  bool is_integer() const { return doubled % 2 == 0; }
  Rational value() const { return Rational(doubled, 2); }
  std::string str() const;

  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

/// Which algebra elements live in: the Neveu-Schwarz algebra with its centre,
/// the centerless quotient, or the contact subalgebra (L_n, n >= -1; G_r, r >= -1/2).
enum class AlgebraMode { KHat, K, KPlus };

std::string to_string(AlgebraMode mode);
AlgebraMode parse_algebra_mode(std::string_view text);

enum class GenKind : unsigned char { C, L, G };

/// Basis element L_n, G_r or C. The ordering (C first, then by index) is the
/// PBW order; L and G indices never coincide, so it is total.
class Generator {
 public:
  static Generator L(int n) { return Generator(GenKind::L, 2 * n); }
  static Generator G(HalfInt r);
  /// G_{doubled/2}; doubled must be odd.
  static Generator G_doubled(int doubled) { return G(HalfInt{doubled}); }
  static Generator C() { return Generator(GenKind::C, 0); }

  GenKind kind() const { return kind_; }
  HalfInt index() const { return {doubled_}; }
  int doubled() const { return doubled_; }
  /// L index as an integer. Precondition: kind() == L.
  int l_index() const { return doubled_ / 2; }

  /// 1 for G, 0 otherwise.
  int parity() const { return kind_ == GenKind::G ? 1 : 0; }
  /// Eigenvalue of ad L_0 (doubled).
  int degree_doubled() const { return doubled_; }

  bool allowed_in(AlgebraMode mode) const;

  std::string str() const;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
    bool ac = a.kind_ == GenKind::C;
    bool bc = b.kind_ == GenKind::C;
    if (ac || bc) return bc <=> ac;
    return a.doubled_ <=> b.doubled_;
  }

 private:
  Generator(GenKind kind, int doubled) : kind_(kind), doubled_(doubled) {}
  GenKind kind_;
  int doubled_;
};

/// Koszul sign (-1)^{p q}.
inline int koszul(int p, int q) { return (p & q & 1) ? -1 : 1; }

}  // namespace nsalg
