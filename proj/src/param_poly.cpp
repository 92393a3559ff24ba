#include "nsalg/param_poly.hpp"

#include "nsalg/error.hpp"

#include <algorithm>
#include <utility>

namespace nsalg {

ParamPoly::ParamPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

ParamPoly ParamPoly::lambda() { return monomial({1, 0}, Rational(1)); }
ParamPoly ParamPoly::b() { return monomial({0, 1}, Rational(1)); }

ParamPoly ParamPoly::monomial(Exponent e, const Rational& c) {
  ParamPoly p;
  p.add_term(e, c);
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

Rational ParamPoly::constant_value() const {
  auto it = terms_.find(Exponent{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::degree_lambda() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.l);
  return d;
}

ParamPoly ParamPoly::coefficient_lambda(int d) const {
  ParamPoly out;
  for (const auto& [e, c] : terms_) {
    if (e.l == d) out.add_term({0, e.b}, c);
  }
  return out;
}

void ParamPoly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& o) {
  ParamPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eo, co] : o.terms_) out.add_term({ea.l + eo.l, ea.b + eo.b}, ca * co);
  }
  return out;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& divisor) const {
  if (divisor.is_zero()) throw Error("division by zero polynomial");
  ParamPoly rem = *this;
  ParamPoly quot;
  const Exponent lead = divisor.leading_exponent();
  const Rational& lead_c = divisor.leading_coefficient();
  while (!rem.is_zero()) {
    Exponent e = rem.leading_exponent();
    if (!lead.divides(e)) return std::nullopt;
    ParamPoly step = monomial({e.l - lead.l, e.b - lead.b}, rem.leading_coefficient() / lead_c);
    quot += step;
    rem -= step * divisor;
  }
  return quot;
}

ParamPoly ParamPoly::substitute(const std::optional<Rational>& lambda_val,
                                const std::optional<Rational>& b_val) const {
  auto power = [](const Rational& x, int n) {
    Rational r(1);
    for (int i = 0; i < n; ++i) r *= x;
    return r;
  };
  ParamPoly out;
  for (const auto& [e, c] : terms_) {
    Exponent rest = e;
    Rational coeff = c;
    if (lambda_val) {
      coeff *= power(*lambda_val, e.l);
      rest.l = 0;
    }
    if (b_val) {
      coeff *= power(*b_val, e.b);
      rest.b = 0;
    }
    out.add_term(rest, coeff);
  }
  return out;
}

ParamPoly ParamPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading_coefficient());
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    auto append = [&mono](const char* var, int deg) {
      if (deg == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (deg > 1) mono += "^" + std::to_string(deg);
    };
    append("l", e.l);
    append("b", e.b);
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

namespace {

// Polynomials in b alone (lambda-degree 0) form a Euclidean domain.
ParamPoly gcd_in_b(ParamPoly p, ParamPoly q) {
  while (!q.is_zero()) {
    if (q.is_constant() || (!p.is_zero() && p.is_constant())) return ParamPoly(1);
    ParamPoly r = p;
    const int dq = q.leading_exponent().b;
    while (!r.is_zero() && r.leading_exponent().b >= dq) {
      Exponent e = r.leading_exponent();
      r -= ParamPoly::monomial({0, e.b - dq}, r.leading_coefficient() / q.leading_coefficient()) * q;
    }
    p = std::move(q);
    q = r.monic();
  }
  return p.monic();
}

// Content with respect to lambda: gcd of the l-coefficients, a polynomial in b.
ParamPoly content_lambda(const ParamPoly& p) {
  ParamPoly g;
  for (int d = 0; d <= p.degree_lambda(); ++d) {
    ParamPoly c = p.coefficient_lambda(d);
    if (!c.is_zero()) g = gcd_in_b(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

ParamPoly primitive_part(const ParamPoly& p) {
  if (p.is_zero()) return p;
  return p.divide_exact(content_lambda(p))->monic();
}

ParamPoly lambda_power(int d) { return ParamPoly::monomial({d, 0}, Rational(1)); }

// Pseudo-remainder of a by b viewed in (Q[b])[l]: the remainder of
// lc(b)^(deg a - deg b + 1) * a.
ParamPoly pseudo_remainder(ParamPoly a, const ParamPoly& b) {
  const int db = b.degree_lambda();
  const ParamPoly lc_b = b.coefficient_lambda(db);
  for (int d = a.degree_lambda(); d >= db; --d) {
    ParamPoly lc_a = a.is_zero() || a.degree_lambda() < d ? ParamPoly() : a.coefficient_lambda(d);
    a = lc_b * a - lc_a * lambda_power(d - db) * b;
  }
  return a;
}

}  // namespace

ParamPoly gcd(const ParamPoly& p, const ParamPoly& q) {
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  if (p.is_constant() || q.is_constant()) return ParamPoly(1);
  ParamPoly content = gcd_in_b(content_lambda(p), content_lambda(q));
  ParamPoly a = primitive_part(p);
  ParamPoly b = primitive_part(q);
  if (a.degree_lambda() < b.degree_lambda()) std::swap(a, b);
  // Subresultant remainder sequence: the divisors below are exact and keep
  // the b-degree of the coefficients from compounding.
  ParamPoly g(1), h(1);
  while (!b.is_zero() && b.degree_lambda() > 0) {
    const int delta = a.degree_lambda() - b.degree_lambda();
    ParamPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) {
      b = ParamPoly();
      break;
    }
    ParamPoly divisor = g;
    for (int i = 0; i < delta; ++i) divisor = divisor * h;
    b = *r.divide_exact(divisor);
    g = a.coefficient_lambda(a.degree_lambda());
    ParamPoly gd(1);
    for (int i = 0; i < delta; ++i) gd = gd * g;
    ParamPoly hd(1);
    for (int i = 1; i < delta; ++i) hd = hd * h;
    h = delta == 0 ? h : *gd.divide_exact(hd);
  }
  if (!b.is_zero()) return content.monic();
  return (primitive_part(a) * content).monic();
}

}  // namespace nsalg
