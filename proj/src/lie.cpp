#include "nsalg/lie.hpp"

#include "nsalg/error.hpp"

namespace nsalg {

std::vector<std::pair<Generator, Rational>> bracket_basis(const Generator& x, const Generator& y,
                                                         AlgebraMode mode) {
  std::vector<std::pair<Generator, Rational>> out;
  if (x.kind() == GenKind::C || y.kind() == GenKind::C) return out;
  const bool central = mode == AlgebraMode::KHat;
  const int sum = x.doubled() + y.doubled();

  if (x.kind() == GenKind::L && y.kind() == GenKind::L) {
    const long m = x.l_index();
    const long n = y.l_index();
    if (n != m) out.emplace_back(Generator::L(static_cast<int>(m + n)), Rational(n - m));
    if (central && sum == 0 && m * m * m != m) out.emplace_back(Generator::C(), Rational(m * m * m - m, 12));
    return out;
  }
  if (x.kind() == GenKind::G && y.kind() == GenKind::G) {
    out.emplace_back(Generator::L(sum / 2), Rational(-2));
    if (central && sum == 0) {
      // (1/3)(r^2 - 1/4) with r = d/2.
      const long d = x.doubled();
      Rational c = Rational(d * d - 1, 12);
      if (!c.is_zero()) out.emplace_back(Generator::C(), c);
    }
    return out;
  }
  // [L_m, G_r] = (r - m/2) G_{m+r}, and [G_r, L_m] = -[L_m, G_r].
  const Generator& l = x.kind() == GenKind::L ? x : y;
  const Generator& g = x.kind() == GenKind::L ? y : x;
  Rational c = Rational(g.doubled() - l.l_index(), 2);
  if (x.kind() == GenKind::G) c = -c;
  if (!c.is_zero()) out.emplace_back(Generator::G_doubled(sum), c);
  return out;
}

LieElement::LieElement(const Generator& g, AlgebraMode mode, const Scalar& coeff) : mode_(mode) {
  add(g, coeff);
}

void LieElement::add(const Generator& g, const Scalar& c) {
  if (!g.allowed_in(mode_)) {
    throw Error("generator " + g.str() + " is not in " + to_string(mode_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int LieElement::parity() const {
  if (terms_.empty()) return 0;
  int p = terms_.begin()->first.parity();
  for (const auto& [g, c] : terms_) {
    if (g.parity() != p) return -1;
  }
  return p;
}

void LieElement::check_mode(const LieElement& o) const {
  if (o.mode_ != mode_) {
    throw Error("mode mismatch: " + to_string(mode_) + " vs " + to_string(o.mode_));
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  check_mode(o);
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  check_mode(o);
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, v] : terms_) v *= c;
  return *this;
}

std::string render_linear_combination(const std::vector<std::pair<std::string, Scalar>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [name, c] : terms) {
    std::string coeff;
    bool negative = false;
    if (c.is_numeric()) {
      Rational v = c.numeric_value();
      negative = v.sign() < 0;
      Rational mag = negative ? -v : v;
      if (mag != Rational(1)) coeff = mag.str() + "*";
    } else {
      coeff = c.str_factor() + "*";
    }
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += coeff + name;
  }
  return out;
}

std::string LieElement::str() const {
  std::vector<std::pair<std::string, Scalar>> parts;
  const Scalar* central = nullptr;
  for (const auto& [g, c] : terms_) {
    if (g.kind() == GenKind::C) {
      central = &c;
      continue;
    }
    parts.emplace_back(g.str(), c);
  }
  if (central) parts.emplace_back("C", *central);
  return render_linear_combination(parts);
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  if (x.mode() != y.mode()) {
    throw Error("mode mismatch: " + to_string(x.mode()) + " vs " + to_string(y.mode()));
  }
  LieElement out(x.mode());
  for (const auto& [gx, cx] : x.terms()) {
    for (const auto& [gy, cy] : y.terms()) {
      Scalar c = cx * cy;
      for (const auto& [g, k] : bracket_basis(gx, gy, x.mode())) out.add(g, c * Scalar(k));
    }
  }
  return out;
}

}  // namespace nsalg
