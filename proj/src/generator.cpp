#include "nsalg/generator.hpp"

#include "nsalg/error.hpp"

namespace nsalg {

HalfInt HalfInt::parse(std::string_view text) {
  Rational r = Rational::parse(text);
  Rational twice = r * Rational(2);
  if (!twice.is_integer()) throw ParseError("not a half-integer: '" + std::string(text) + "'");
  return {static_cast<int>(twice.to_long())};
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

std::string to_string(AlgebraMode mode) {
  switch (mode) {
    case AlgebraMode::KHat: return "khat";
    case AlgebraMode::K: return "k";
    case AlgebraMode::KPlus: return "kplus";
  }
  return "?";
}

AlgebraMode parse_algebra_mode(std::string_view text) {
  if (text == "khat") return AlgebraMode::KHat;
  if (text == "k") return AlgebraMode::K;
  if (text == "kplus") return AlgebraMode::KPlus;
  throw ParseError("unknown algebra '" + std::string(text) + "' (expected khat|k|kplus)");
}

Generator Generator::G(HalfInt r) {
  if (r.is_integer()) throw Error("G index must be a strict half-integer, got " + r.str());
  return Generator(GenKind::G, r.doubled);
}

bool Generator::allowed_in(AlgebraMode mode) const {
  switch (mode) {
    case AlgebraMode::KHat: return true;
    case AlgebraMode::K: return kind_ != GenKind::C;
    case AlgebraMode::KPlus:
      if (kind_ == GenKind::C) return false;
      return kind_ == GenKind::L ? doubled_ >= -2 : doubled_ >= -1;
  }
  return false;
}

std::string Generator::str() const {
  switch (kind_) {
    case GenKind::C: return "C";
    case GenKind::L: return "L(" + std::to_string(doubled_ / 2) + ")";
    case GenKind::G: return "G(" + HalfInt{doubled_}.str() + ")";
  }
  return "?";
}

}  // namespace nsalg
