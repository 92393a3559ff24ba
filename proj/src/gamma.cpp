#include "nsalg/gamma.hpp"

#include "nsalg/error.hpp"

#include <cctype>

namespace nsalg {

std::string BasisKey::str() const { return "(" + std::to_string(k) + "," + std::to_string(eps) + ")"; }

std::string to_string(SignConvention c) {
  return c == SignConvention::Corrected ? "corrected" : "paper-printed";
}

SignConvention parse_sign_convention(std::string_view text) {
  if (text == "corrected") return SignConvention::Corrected;
  if (text == "paper-printed") return SignConvention::PaperPrinted;
  throw ParseError("unknown sign convention '" + std::string(text) +
                   "' (expected corrected|paper-printed)");
}

// ---------------------------------------------------------------------------
// ModuleVector

void ModuleVector::add(const BasisKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string ModuleVector::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str_factor() + " * t^" + std::to_string(key.k) + (key.eps ? " xi" : "");
  }
  return out;
}

// ---------------------------------------------------------------------------
// GammaModule

namespace {

bool is_integer_scalar(const Scalar& s) { return s.is_numeric() && s.numeric_value().is_integer(); }

// Exclusion forced by the reducibility locus of Gamma(lambda, b), if any.
std::optional<Exclusion> locus_exclusion(const Scalar& lambda, const Scalar& b) {
  if (!is_integer_scalar(lambda) || !b.is_numeric()) return std::nullopt;
  const int l = static_cast<int>(lambda.numeric_value().to_long());
  if (b.numeric_value().is_zero()) return Exclusion{{-l, 0}, Exclusion::Role::Quotient};
  if (b.numeric_value() == Rational(1, 2)) return Exclusion{{-l - 1, 1}, Exclusion::Role::Sub};
  return std::nullopt;
}

std::string role_name(Exclusion::Role r) { return r == Exclusion::Role::Sub ? "sub" : "quotient"; }

}  // namespace

GammaModule make_module(const ModuleParams& params) {
  ModuleParams p = params;
  switch (p.family) {
    case Family::Gamma:
      if (p.excluded) throw Error("gamma(l,b) takes no excluded key; use gamma'");
      break;
    case Family::GammaPlus:
    case Family::GammaMinus:
      if (!p.lambda.is_zero()) throw Error("gamma+/gamma- require lambda = 0");
      if (p.algebra != AlgebraMode::KPlus) throw Error("gamma+/gamma- are k+ modules (use --algebra kplus)");
      if (p.excluded) throw Error("gamma+/gamma- take no excluded key");
      break;
    case Family::GammaPrime: {
      auto forced = locus_exclusion(p.lambda, p.b);
      if (!p.excluded) {
        p.excluded = forced;
        break;
      }
      const Exclusion& e = *p.excluded;
      if (!forced || forced->key != e.key || forced->role != e.role) {
        std::string expected =
            forced ? forced->key.str() + " as " + role_name(forced->role) : std::string("no exclusion");
        throw Error("excluded key " + e.key.str() + " as " + role_name(e.role) +
                    " does not match the reducibility locus of gamma(" + p.lambda.str() + "," +
                    p.b.str() + "): expected " + expected);
      }
      break;
    }
  }
  return GammaModule(std::move(p));
}

GammaModule parity_change(const GammaModule& m) {
  GammaModule out = m;
  out.parity_flipped_ = !m.parity_flipped_;
  return out;
}

bool GammaModule::admissible(const BasisKey& key) const {
  if (key.eps != 0 && key.eps != 1) return false;
  switch (params_.family) {
    case Family::Gamma: return true;
    case Family::GammaPlus: return key.k >= 0;
    case Family::GammaMinus: return key.k <= -1;
    case Family::GammaPrime: return !params_.excluded || params_.excluded->key != key;
  }
  return false;
}

int GammaModule::parity(const BasisKey& key) const { return key.eps ^ (parity_flipped_ ? 1 : 0); }

Scalar GammaModule::weight(const BasisKey& key) const {
  return params_.lambda + params_.b + Scalar(Rational(2 * key.k + key.eps, 2));
}

void GammaModule::check_generator(const Generator& g) const {
  if (!g.allowed_in(params_.algebra)) {
    throw Error("generator " + g.str() + " does not act on a " + to_string(params_.algebra) + " module");
  }
}

std::optional<std::pair<BasisKey, Scalar>> GammaModule::act_basis(const Generator& g,
                                                                  const BasisKey& key) const {
  check_generator(g);
  if (!admissible(key)) throw Error("basis key " + key.str() + " is not in " + descriptor());
  if (g.kind() == GenKind::C) return std::nullopt;

  const Scalar& lambda = params_.lambda;
  const Scalar& b = params_.b;
  const int k = key.k;
  BasisKey target;
  Scalar coeff;
  if (g.kind() == GenKind::L) {
    const int n = g.l_index();
    target = {n + k, key.eps};
    if (key.eps == 0) {
      coeff = lambda + Scalar(k) + b * Scalar(n + 1);
    } else {
      coeff = lambda + Scalar(k) + Scalar(n + 1) * (b + Scalar(Rational(1, 2)));
    }
  } else {
    const int n = (g.doubled() - 1) / 2;  // G_{n+1/2}
    if (key.eps == 0) {
      target = {n + k, 1};
      coeff = Scalar(k) + lambda + Scalar(2 * (n + 1)) * b;
      if (params_.convention == SignConvention::PaperPrinted) coeff = -coeff;
    } else {
      target = {n + k + 1, 0};
      coeff = Scalar(-1);
    }
  }
  if (coeff.is_zero()) return std::nullopt;
  if (!admissible(target)) {
    if (params_.family == Family::GammaPlus) {
      throw Error("action left the support of " + descriptor() + " at " + target.str());
    }
    return std::nullopt;  // projected away (quotient) or outside the submodule
  }
  return std::make_pair(target, coeff);
}

ModuleVector GammaModule::act(const Generator& g, const ModuleVector& v) const {
  ModuleVector out;
  for (const auto& [key, c] : v.terms()) {
    if (auto r = act_basis(g, key)) out.add(r->first, c * r->second);
  }
  return out;
}

ModuleVector GammaModule::act(const LieElement& x, const ModuleVector& v) const {
  ModuleVector out;
  for (const auto& [g, c] : x.terms()) out += c * act(g, v);
  return out;
}

ModuleVector GammaModule::act(const AMonomial& a, const ModuleVector& v) const {
  if (params_.family == Family::GammaPrime) throw Error("A does not act on " + descriptor());
  if ((params_.family == Family::GammaPlus || params_.family == Family::GammaMinus) && a.k < 0) {
    throw Error("only A+ acts on " + descriptor());
  }
  ModuleVector out;
  for (const auto& [key, c] : v.terms()) {
    if (!admissible(key)) throw Error("basis key " + key.str() + " is not in " + descriptor());
    auto prod = multiply(a, AMonomial{key.k, key.eps});
    if (!prod) continue;
    BasisKey target{prod->k, prod->eps};
    if (admissible(target)) out.add(target, c);
  }
  return out;
}

ModuleVector GammaModule::act(const AElement& a, const ModuleVector& v) const {
  ModuleVector out;
  for (const auto& [m, c] : a.terms()) out += c * act(m, v);
  return out;
}

ModuleVector GammaModule::act(const SmashElement& x, const ModuleVector& v) const {
  ModuleVector out;
  for (const auto& [key, c] : x.terms()) {
    ModuleVector w = v;
    for (auto it = key.word.rbegin(); it != key.word.rend() && !w.is_zero(); ++it) w = act(*it, w);
    if (w.is_zero()) continue;
    if (key.a != AMonomial{}) w = act(key.a, w);
    out += c * w;
  }
  return out;
}

std::string GammaModule::descriptor() const {
  std::string name;
  switch (params_.family) {
    case Family::Gamma: name = "gamma"; break;
    case Family::GammaPlus: name = "gamma+"; break;
    case Family::GammaMinus: name = "gamma-"; break;
    case Family::GammaPrime: name = "gamma'"; break;
  }
  name += "(" + params_.lambda.str() + "," + params_.b.str() + ")";
  return parity_flipped_ ? "pi(" + name + ")" : name;
}

ModuleVector module_axiom_residual(const Generator& x, const Generator& y, const BasisKey& key,
                                   const GammaModule& m) {
  const ModuleVector e(key);
  ModuleVector out = m.act(x, m.act(y, e));
  ModuleVector yx = m.act(y, m.act(x, e));
  if (koszul(x.parity(), y.parity()) > 0) {
    out -= yx;
  } else {
    out += yx;
  }
  for (const auto& [g, c] : bracket_basis(x, y, m.algebra())) out -= Scalar(c) * m.act(g, e);
  return out;
}

// ---------------------------------------------------------------------------
// Descriptor parsing

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

GammaModule parse_stripped(std::string_view d, AlgebraMode algebra, SignConvention convention) {
  if (d.starts_with("pi(") && d.ends_with(")")) {
    return parity_change(parse_stripped(d.substr(3, d.size() - 4), algebra, convention));
  }
  ModuleParams p;
  p.algebra = algebra;
  p.convention = convention;
  std::string_view rest;
  if (d.starts_with("gamma+(")) {
    p.family = Family::GammaPlus;
    rest = d.substr(6);
  } else if (d.starts_with("gamma-(")) {
    p.family = Family::GammaMinus;
    rest = d.substr(6);
  } else if (d.starts_with("gamma'(")) {
    p.family = Family::GammaPrime;
    rest = d.substr(6);
  } else if (d.starts_with("gamma(")) {
    p.family = Family::Gamma;
    rest = d.substr(5);
  } else {
    throw ParseError("unknown module descriptor '" + std::string(d) + "'");
  }
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') {
    throw ParseError("malformed module descriptor '" + std::string(d) + "'");
  }
  rest = rest.substr(1, rest.size() - 2);
  auto comma = rest.find(',');
  if (comma == std::string_view::npos || rest.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("module descriptor needs two parameters: '" + std::string(d) + "'");
  }
  p.lambda = Scalar::parse(rest.substr(0, comma));
  p.b = Scalar::parse(rest.substr(comma + 1));
  return make_module(p);
}

}  // namespace

GammaModule parse_module(std::string_view descriptor, AlgebraMode algebra, SignConvention convention) {
  return parse_stripped(strip(descriptor), algebra, convention);
}

}  // namespace nsalg
