#include "nsalg/coeff_algebra.hpp"

#include "nsalg/error.hpp"

namespace nsalg {

std::string AMonomial::str() const {
  std::string t;
  if (k == 1) {
    t = "t";
  } else if (k != 0) {
    t = "t^" + std::to_string(k);
  }
  if (eps == 0) return t.empty() ? "1" : t;
  return t.empty() ? "xi" : t + "*xi";
}

std::optional<AMonomial> multiply(const AMonomial& a, const AMonomial& b) {
  if (a.eps + b.eps > 1) return std::nullopt;
  return AMonomial{a.k + b.k, a.eps + b.eps};
}

AElement::AElement(const AMonomial& m, AMode mode, const Scalar& c) : mode_(mode) { add(m, c); }

void AElement::add(const AMonomial& m, const Scalar& c) {
  if (mode_ == AMode::APlus && m.k < 0) {
    throw Error("monomial " + m.str() + " is not in A+");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int AElement::parity() const {
  if (terms_.empty()) return 0;
  int p = terms_.begin()->first.parity();
  for (const auto& [m, c] : terms_) {
    if (m.parity() != p) return -1;
  }
  return p;
}

std::string AElement::str() const {
  std::vector<std::pair<std::string, Scalar>> parts;
  for (const auto& [m, c] : terms_) parts.emplace_back(m.str(), c);
  return render_linear_combination(parts);
}

std::vector<std::pair<AMonomial, Rational>> act_on_monomial(const Generator& g, const AMonomial& m) {
  std::vector<std::pair<AMonomial, Rational>> out;
  switch (g.kind()) {
    case GenKind::C:
      throw Error("the central element does not act on A");
    case GenKind::L: {
      // L_i o (t^k xi^eps) = (k + eps (i+1)/2) t^{i+k} xi^eps
      const int i = g.l_index();
      Rational c = Rational(m.k) + Rational(m.eps * (i + 1), 2);
      if (!c.is_zero()) out.emplace_back(AMonomial{i + m.k, m.eps}, c);
      return out;
    }
    case GenKind::G: {
      // G_r o t^k = k t^{r+k-1/2} xi,  G_r o t^k xi = -t^{r+k+1/2}
      const int shift_down = (g.doubled() - 1) / 2;  // r - 1/2
      if (m.eps == 0) {
        if (m.k != 0) out.emplace_back(AMonomial{shift_down + m.k, 1}, Rational(m.k));
      } else {
        out.emplace_back(AMonomial{shift_down + 1 + m.k, 0}, Rational(-1));
      }
      return out;
    }
  }
  return out;
}

AElement k_action_on_A(const LieElement& x, const AElement& a) {
  AElement out(a.mode());
  for (const auto& [g, cg] : x.terms()) {
    if (g.kind() == GenKind::C) throw Error("the central element does not act on A");
    for (const auto& [m, cm] : a.terms()) {
      for (const auto& [res, k] : act_on_monomial(g, m)) out.add(res, cg * cm * Scalar(k));
    }
  }
  return out;
}

std::vector<std::pair<Generator, Rational>> monomial_times_generator(const AMonomial& m,
                                                                    const Generator& g) {
  std::vector<std::pair<Generator, Rational>> out;
  if (g.kind() == GenKind::C) throw Error("A does not act on the central element");
  if (m.eps == 0) {
    if (g.kind() == GenKind::L) {
      out.emplace_back(Generator::L(g.l_index() + m.k), Rational(1));
    } else {
      out.emplace_back(Generator::G_doubled(g.doubled() + 2 * m.k), Rational(1));
    }
    return out;
  }
  if (g.kind() == GenKind::L) {
    out.emplace_back(Generator::G_doubled(2 * (g.l_index() + m.k) + 1), Rational(1, 2));
  }
  return out;
}

LieElement A_action_on_k(const AElement& a, const LieElement& x) {
  LieElement out(x.mode());
  for (const auto& [m, cm] : a.terms()) {
    for (const auto& [g, cg] : x.terms()) {
      for (const auto& [res, k] : monomial_times_generator(m, g)) {
        if (!res.allowed_in(x.mode())) {
          throw Error("A-action leaves " + to_string(x.mode()) + ": " + m.str() + " . " + g.str() +
                      " = " + res.str());
        }
        out.add(res, cm * cg * Scalar(k));
      }
    }
  }
  return out;
}

}  // namespace nsalg
