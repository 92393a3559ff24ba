#include "nsalg/analysis.hpp"

#include "nsalg/coeff_algebra.hpp"
#include "nsalg/error.hpp"
#include "nsalg/lie.hpp"
#include "nsalg/named_elements.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

namespace nsalg {

namespace {

Scalar sgn(int i) { return Scalar(i % 2 == 0 ? 1 : -1); }

Scalar binom(int n, int k) { return Scalar(binomial(n, k)); }

std::string half(int doubled) { return HalfInt{doubled}.str(); }

std::vector<int> half_sweep(int sweep) {
  std::vector<int> out;
  for (int d = -2 * sweep + 1; d <= 2 * sweep - 1; d += 2) out.push_back(d);
  return out;
}

LieElement lie(const Generator& g, AlgebraMode mode = AlgebraMode::KHat) { return LieElement(g, mode); }

// ---------------------------------------------------------------------------
// Jacobi

char kind_letter(const Generator& g) {
  switch (g.kind()) {
    case GenKind::C: return 'C';
    case GenKind::L: return 'L';
    case GenKind::G: return 'G';
  }
  return '?';
}

std::string family_of(const Generator& x, const Generator& y, const Generator& z) {
  std::string f{kind_letter(x), kind_letter(y), kind_letter(z)};
  if (f.find('C') != std::string::npos) return "C";
  int gs = 0;
  for (char c : f) gs += c == 'G';
  return std::string(3 - gs, 'L') + std::string(gs, 'G');
}

// ---------------------------------------------------------------------------
// Module evaluation

struct Term {
  Scalar coeff;
  std::optional<AMonomial> a;    // applied last
  std::vector<Generator> word;   // applied right to left
};

ModuleVector apply_terms(const GammaModule& m, const std::vector<Term>& terms, const ModuleVector& v) {
  ModuleVector out;
  for (const Term& t : terms) {
    ModuleVector w = v;
    for (auto it = t.word.rbegin(); it != t.word.rend() && !w.is_zero(); ++it) w = m.act(*it, w);
    if (t.a && !w.is_zero()) w = m.act(*t.a, w);
    out += t.coeff * w;
  }
  return out;
}

/// First interior vector not killed by the operator, rendered.
std::optional<std::string> first_survivor(const GammaModule& m, const Window& w, const std::vector<Term>& terms) {
  for (const BasisKey& key : interior_keys(m, w)) {
    ModuleVector r = apply_terms(m, terms, ModuleVector(key));
    if (!r.is_zero()) return "on " + key.str() + ": " + r.str();
  }
  return std::nullopt;
}

std::string render_residual(const SmashElement& e) { return e.is_zero() ? "0" : e.str(); }

// ---------------------------------------------------------------------------
// Compatibility displays

struct Display {
  std::string name;
  std::string anchor;
  bool v_odd;
  AMonomial a;         // t^i or xi (k filled in per instance for t^i)
  bool a_is_t;
  bool x_odd;
  // printed right-hand side given (v index doubled, i, x index doubled)
  std::function<LieElement(int vd, int i, int xd)> rhs;
};

LieElement a_act(const AMonomial& a, const Generator& x, const Scalar& c) {
  LieElement out = A_action_on_k(AElement(a), lie(x, AlgebraMode::K));
  out *= c;
  return out;
}

Generator gen_from(bool odd, int doubled) { return odd ? Generator::G_doubled(doubled) : Generator::L(doubled / 2); }

std::vector<Display> displays() {
  std::vector<Display> d;
  d.push_back({"compat.1", "[L_m,t^iL_n]-t^i[L_m,L_n]=it^{m+i}L_n", false, {}, true, false,
               [](int vd, int i, int xd) { return a_act({vd / 2 + i, 0}, Generator::L(xd / 2), Scalar(i)); }});
  d.push_back({"compat.2", "[L_m,xiL_n]-xi[L_m,L_n]=(m+1)/2 t^m xi L_n", false, {0, 1}, false, false,
               [](int vd, int, int xd) {
                 return a_act({vd / 2, 1}, Generator::L(xd / 2), Scalar(Rational(vd / 2 + 1, 2)));
               }});
  d.push_back({"compat.3", "[L_m,t^iG_r]-t^i[L_m,G_r]=it^{m+i}G_r", false, {}, true, true,
               [](int vd, int i, int xd) { return a_act({vd / 2 + i, 0}, Generator::G_doubled(xd), Scalar(i)); }});
  d.push_back({"compat.4", "[L_m,xiG_r]-xi[L_m,G_r]=0", false, {0, 1}, false, true,
               [](int, int, int) { return LieElement(AlgebraMode::K); }});
  d.push_back({"compat.5", "[G_r,t^iL_n]-t^i[G_r,L_n]=it^{r+i-1/2}xiL_n", true, {}, true, false,
               [](int vd, int i, int xd) {
                 return a_act({(vd - 1) / 2 + i, 1}, Generator::L(xd / 2), Scalar(i));
               }});
  d.push_back({"compat.6", "[G_r,t^iG_s]-t^i[G_r,G_s]=0", true, {}, true, true,
               [](int, int, int) { return LieElement(AlgebraMode::K); }});
  d.push_back({"compat.7", "[G_r,xiL_n]+xi[G_r,L_n]=-t^{r+1/2}L_n", true, {0, 1}, false, false,
               [](int vd, int, int xd) { return a_act({(vd + 1) / 2, 0}, Generator::L(xd / 2), Scalar(-1)); }});
  d.push_back({"compat.8", "[G_r,xiG_s]+xi[G_r,G_s]=-t^{r+1/2}G_s", true, {0, 1}, false, true,
               [](int vd, int, int xd) {
                 return a_act({(vd + 1) / 2, 0}, Generator::G_doubled(xd), Scalar(-1));
               }});
  return d;
}

std::vector<int> indices_for(bool odd, int sweep) {
  if (odd) return half_sweep(sweep);
  std::vector<int> out;
  for (int n = -sweep; n <= sweep; ++n) out.push_back(2 * n);
  return out;
}

void compat_reports(int sweep, std::vector<CheckReport>& out) {
  for (const Display& d : displays()) {
    std::optional<std::string> witness;
    std::vector<int> is;
    if (d.a_is_t) {
      for (int i = -sweep; i <= sweep; ++i) is.push_back(i);
    } else {
      is.push_back(0);
    }
    for (int vd : indices_for(d.v_odd, sweep)) {
      for (int i : is) {
        for (int xd : indices_for(d.x_odd, sweep)) {
          if (witness) break;
          const LieElement v = lie(gen_from(d.v_odd, vd), AlgebraMode::K);
          const LieElement x = lie(gen_from(d.x_odd, xd), AlgebraMode::K);
          const AMonomial a = d.a_is_t ? AMonomial{i, 0} : d.a;
          const AElement ae(a);
          LieElement lhs = bracket(v, A_action_on_k(ae, x));
          LieElement second = A_action_on_k(ae, bracket(v, x));
          if (koszul(v.parity(), ae.parity()) > 0) {
            lhs -= second;
          } else {
            lhs += second;
          }
          const LieElement printed = d.rhs(vd, i, xd);
          SmashElement res = compatibility_residual(v, ae, x);
          std::string inst = "v=" + v.str() + " a=" + a.str() + " x=" + x.str();
          if (!res.is_zero()) {
            witness = inst + ": v(ax) residual " + res.str();
          } else if (!(lhs == printed)) {
            witness = inst + ": lhs " + lhs.str() + " vs printed " + printed.str();
          }
        }
      }
    }
    std::string params = "indices in [" + std::to_string(-sweep) + "," + std::to_string(sweep) + "]";
    out.push_back(witness ? CheckReport::fail(d.name, d.anchor, params, *witness)
                          : CheckReport::pass(d.name, d.anchor, params));
  }
}

// ---------------------------------------------------------------------------
// Reconstruction, centralizer, psi

void reconstruction_reports(int maxN, const std::optional<SmashElement>& lpm1, std::vector<CheckReport>& out) {
  for (int n = 0; n <= maxN; ++n) {
    ReconstructionResiduals r = verify_reconstruction(n, lpm1);
    const std::string params = "n=" + std::to_string(n) + (lpm1 ? " L'_{-1}=" + lpm1->str() : "");
    const std::string ln = "reconstruction.L[n=" + std::to_string(n) + "]";
    const std::string gn = "reconstruction.G[n=" + std::to_string(n) + "]";
    const std::string la = "L_n = sum_k (-1)^k C(n+1,k+1) t^{n-k}(L'_k - (k+1)/2 xi G'_{k-1/2}) + t^{n+1}L_{-1}";
    const std::string ga = "G_{n-1/2} = sum_k (-1)^k C(n,k) t^{n-k}(G'_{k-1/2} - 2 xi L'_{k-1})";
    out.push_back(r.l_residual.is_zero() ? CheckReport::pass(ln, la, params)
                                         : CheckReport::fail(ln, la, params, r.l_residual.str()));
    out.push_back(r.g_residual.is_zero() ? CheckReport::pass(gn, ga, params)
                                         : CheckReport::fail(gn, ga, params, r.g_residual.str()));
  }
}

void centralizer_reports(int maxN, int kmax, std::vector<CheckReport>& out) {
  const SmashMode mode = SmashMode::AK;
  const SmashElement g_low = SmashElement::generator(Generator::G_doubled(-1), mode);
  for (int n = 0; n <= maxN; ++n) {
    for (int which = 0; which < 2; ++which) {
      if (which == 1 && n == 0) continue;  // G'_{n-1/2} starts at n = 1
      const SmashElement x = which == 0 ? l_prime(n, mode) : g_prime(n, mode);
      const std::string label = which == 0 ? "L'_" + std::to_string(n) : "G'_" + half(2 * n - 1);
      std::optional<std::string> witness;
      SmashElement r = smash_bracket(x, g_low);
      if (!r.is_zero()) witness = "[" + label + ",G_{-1/2}] = " + r.str();
      for (int k = -kmax; k <= kmax && !witness; ++k) {
        for (int eps = 0; eps < 2 && !witness; ++eps) {
          const AMonomial a{k, eps};
          SmashElement ra = smash_bracket(x, SmashElement::monomial(a, mode));
          if (!ra.is_zero()) witness = "[" + label + "," + a.str() + "] = " + ra.str();
        }
      }
      const std::string name =
          std::string("centralizer.") + (which == 0 ? "L'" : "G'") + "[n=" + std::to_string(n) + "]";
      const std::string anchor = "[x,A]=[x,G_{-1/2}]=0";
      const std::string params = label + ", |k| <= " + std::to_string(kmax);
      out.push_back(witness ? CheckReport::fail(name, anchor, params, *witness)
                            : CheckReport::pass(name, anchor, params));
    }
  }
}

void psi_reports(int bound, std::vector<CheckReport>& out) {
  const std::string params = "indices <= " + std::to_string(bound);
  std::optional<std::string> w_ll, w_lg, w_gg;
  for (int a = 0; a <= bound; ++a) {
    for (int b = 0; b <= bound; ++b) {
      if (!w_ll) {
        SmashElement r = smash_bracket(l_prime(a), l_prime(b)) - Scalar(b - a) * l_prime(a + b);
        if (!r.is_zero()) w_ll = "m=" + std::to_string(a) + " n=" + std::to_string(b) + ": " + r.str();
      }
      // G'_{b+1/2} is g_prime(b + 1)
      if (!w_lg) {
        SmashElement r = smash_bracket(l_prime(a), g_prime(b + 1)) -
                         Scalar(Rational(2 * b + 1 - a, 2)) * g_prime(a + b + 1);
        if (!r.is_zero()) w_lg = "m=" + std::to_string(a) + " n=" + std::to_string(b) + ": " + r.str();
      }
    }
  }
  for (int a = 1; a <= bound; ++a) {
    for (int b = 1; b <= bound && !w_gg; ++b) {
      SmashElement r = smash_bracket(g_prime(a), g_prime(b)) - Scalar(2) * l_prime(a + b - 1);
      if (!r.is_zero()) w_gg = "r=" + half(2 * a - 1) + " s=" + half(2 * b - 1) + ": " + r.str();
    }
  }
  auto push = [&](std::string name, std::string anchor, const std::optional<std::string>& w) {
    out.push_back(w ? CheckReport::fail(std::move(name), std::move(anchor), params, *w)
                    : CheckReport::pass(std::move(name), std::move(anchor), params));
  };
  push("psi.[L',L']", "[L'_m,L'_n]=(n-m)L'_{m+n}", w_ll);
  push("psi.[L',G']", "[L'_m,G'_{n+1/2}]=(n+1/2-m/2)G'_{m+n+1/2}", w_lg);
  push("psi.[G',G']", "[G'_r,G'_s]=2L'_{r+s}", w_gg);
}

// ---------------------------------------------------------------------------
// Operator chains

std::vector<Term> chain_l(int r, int k, int s, int m) {
  std::vector<Term> terms;
  for (int i = 0; i <= m + 2; ++i) {
    terms.push_back({sgn(i) * binom(m + 2, i), AMonomial{r + k + 1 - i, 0}, {Generator::L(s - 1 + i)}});
  }
  return terms;
}

std::vector<Term> chain_g(int k, int s, int pd, int m) {
  std::vector<Term> terms;
  for (int i = 0; i <= m + 3; ++i) {
    terms.push_back({Scalar(Rational(3, 2)) * sgn(i) * binom(m + 3, i), AMonomial{k - i, 0},
                     {Generator::G_doubled(pd + 2 * s + 2 * i)}});
  }
  return terms;
}

// G_{k-i+j+1} L_{p+i-1}, j half-integer (doubled jd)
std::vector<Term> chain_gl(int k, int p, int jd, int m, const Scalar& c) {
  std::vector<Term> terms;
  for (int i = 0; i <= m + 2; ++i) {
    terms.push_back({c * sgn(i) * binom(m + 2, i), std::nullopt,
                     {Generator::G_doubled(2 * (k - i + 1) + jd), Generator::L(p + i - 1)}});
  }
  return terms;
}

SmashElement terms_to_smash(const std::vector<Term>& terms, SmashMode mode) {
  SmashElement out(mode);
  for (const Term& t : terms) {
    SmashElement e = t.a ? SmashElement::monomial(*t.a, mode) : SmashElement::one(mode);
    for (const Generator& g : t.word) e = e * SmashElement::generator(g, mode);
    out += t.coeff * e;
  }
  return out;
}

void module_chain_reports(const CatalogueOptions& opts, std::vector<CheckReport>& out) {
  const GammaModule gm = parse_module("gamma(l,b)", AlgebraMode::KHat);
  const Window& w = opts.window;
  const int sw = opts.sweep;
  const AnnihilatorResult ann = minimal_annihilator(gm, w, opts.max_m, sw);
  const int m = ann.m;
  const std::string base = "module=" + gm.descriptor() + " window=" + w.str() + " m=" + std::to_string(m) +
                           " sweep=[" + std::to_string(-sw) + "," + std::to_string(sw) + "]";

  std::optional<std::string> wl;
  for (int r = -sw; r <= sw && !wl; ++r)
    for (int k = -sw; k <= sw && !wl; ++k)
      for (int s = -sw; s <= sw && !wl; ++s)
        if (auto f = first_survivor(gm, w, chain_l(r, k, s, m)))
          wl = "r=" + std::to_string(r) + " k=" + std::to_string(k) + " s=" + std::to_string(s) + " " + *f;
  const std::string al = "sum_{i=0}^{m+2} (-1)^i C(m+2,i) t^{r+k+1-i} L_{s-1+i} = 0 on M";
  out.push_back(wl ? CheckReport::fail("chain.tL.module", al, base, *wl) : CheckReport::pass("chain.tL.module", al, base));

  std::optional<std::string> wg;
  for (int k = -sw; k <= sw && !wg; ++k)
    for (int s = -sw; s <= sw && !wg; ++s)
      for (int pd : half_sweep(sw))
        if (!wg)
          if (auto f = first_survivor(gm, w, chain_g(k, s, pd, m)))
            wg = "k=" + std::to_string(k) + " s=" + std::to_string(s) + " p=" + half(pd) + " " + *f;
  const std::string ag = "3/2 sum_{i=0}^{m+3} (-1)^i C(m+3,i) t^{k-i} G_{p+s+i} = 0 on M";
  out.push_back(wg ? CheckReport::fail("chain.tG.module", ag, base, *wg) : CheckReport::pass("chain.tG.module", ag, base));

  std::optional<std::string> wgl;
  for (int k = -sw; k <= sw && !wgl; ++k)
    for (int p = -sw; p <= sw && !wgl; ++p)
      for (int jd : half_sweep(sw))
        if (!wgl)
          if (auto f = first_survivor(gm, w, chain_gl(k, p, jd, m, Scalar(Rational(3, 2)))))
            wgl = "k=" + std::to_string(k) + " p=" + std::to_string(p) + " j=" + half(jd) + " " + *f;
  const std::string agl = "3/2 sum_{i=0}^{m+2} (-1)^i C(m+2,i) G_{k-i+j+1}L_{p+i-1} = 0 on M";
  out.push_back(wgl ? CheckReport::fail("chain.GL.module", agl, base, *wgl)
                    : CheckReport::pass("chain.GL.module", agl, base));

  CheckReport glr = ann.gl_report;
  glr.name = "omega.GL.module";
  out.push_back(glr);
  out.push_back(CheckReport::info("omega.order", "Omega^{(m)}_{k,s} = sum_i (-1)^i C(m,i) L_{k-i}L_{s+i} kills M",
                                  base, "minimal m = " + std::to_string(m) +
                                            (ann.minimality_witness ? "; at m-1 " + *ann.minimality_witness : "")));

  // [Omega, G] combination as an identity in U(khat).
  const SmashMode pm = SmashMode::PureU;
  auto gen = [&](int doubled) { return SmashElement::generator(Generator::G_doubled(doubled), pm); };
  const int asw = std::min(sw, 1);
  std::optional<std::string> wa;
  for (int k = -asw; k <= asw && !wa; ++k) {
    for (int p = -asw; p <= asw && !wa; ++p) {
      for (int jd : half_sweep(asw)) {
        if (wa) break;
        SmashElement lhs = smash_bracket(omega(k, p - 1, m, pm), gen(jd + 2));
        lhs -= Scalar(2) * smash_bracket(omega(k, p, m, pm), gen(jd));
        lhs += smash_bracket(omega(k, p + 1, m, pm), gen(jd - 2));
        lhs -= smash_bracket(omega(k + 1, p - 1, m, pm), gen(jd));
        lhs += Scalar(2) * smash_bracket(omega(k + 1, p, m, pm), gen(jd - 2));
        lhs -= smash_bracket(omega(k + 1, p + 1, m, pm), gen(jd - 4));
        SmashElement rhs = terms_to_smash(chain_gl(k, p, jd, m, Scalar(opts.chain_coefficient)), pm);
        SmashElement res = lhs - rhs;
        if (!res.is_zero()) {
          wa = "k=" + std::to_string(k) + " p=" + std::to_string(p) + " j=" + half(jd) + ": " + res.str();
        }
      }
    }
  }
  const std::string aa = "sum of six [Omega^{(m)}, G] terms = " + opts.chain_coefficient.str() +
                         " sum_{i=0}^{m+2} (-1)^i C(m+2,i) G_{k-i+j+1}L_{p+i-1}";
  const std::string ap = "m=" + std::to_string(m) + " k,p in [" + std::to_string(-asw) + "," +
                         std::to_string(asw) + "], j in +-1/2";
  out.push_back(wa ? CheckReport::fail("chain.OmegaG.algebra", aa, ap, *wa)
                   : CheckReport::pass("chain.OmegaG.algebra", aa, ap));

  if (!opts.algebra_level_attempts) return;
  const SmashMode am = SmashMode::AK;
  {
    const int r = 0, k = 0, s = 0;
    SmashElement lhs(am);
    for (int i = 0; i <= 1; ++i) {
      for (int j = 0; j <= 2; ++j) {
        SmashElement t = SmashElement::monomial({r + i - j, 0}, am);
        lhs += (sgn(i + j) * binom(2, j)) * smash_bracket(t, omega(k + 1 - i, s - 1 + j, m, am));
      }
    }
    SmashElement res = lhs - terms_to_smash(chain_l(r, k, s, m), am);
    out.push_back(CheckReport::info("chain.tL.algebra-attempt",
                                    "sum (-1)^{i+j} C(2,j) [t^{r+i-j}, Omega_{k+1-i,s-1+j}] = "
                                    "sum (-1)^i C(m+2,i) t^{r+k+1-i} L_{s-1+i} in A.U(k)",
                                    "m=" + std::to_string(m) + " r=k=s=0",
                                    "difference: " + render_residual(res)));
  }
  {
    const int k = 0, s = 0, pd = 1;
    auto tl_sum = [&](int shift) {
      SmashElement e(am);
      for (int i = 0; i <= m + 3; ++i) {
        e += (sgn(i) * binom(m + 3, i)) *
             (SmashElement::monomial({k - i, 0}, am) * SmashElement::generator(Generator::L(s + shift + i), am));
      }
      return e;
    };
    SmashElement lhs = smash_bracket(tl_sum(-1), SmashElement::generator(Generator::G_doubled(pd + 2), am)) -
                       smash_bracket(tl_sum(0), SmashElement::generator(Generator::G_doubled(pd), am));
    SmashElement res = lhs - terms_to_smash(chain_g(k, s, pd, m), am);
    out.push_back(CheckReport::info("chain.tG.algebra-attempt",
                                    "[sum t^{k-i}L_{s-1+i}, G_{p+1}] - [sum t^{k-i}L_{s+i}, G_p] = "
                                    "3/2 sum (-1)^i C(m+3,i) t^{k-i} G_{p+s+i} in A.U(k)",
                                    "m=" + std::to_string(m) + " k=s=0 p=1/2", "difference: " + render_residual(res)));
  }
}

}  // namespace

std::vector<CheckReport> verify_jacobi(int range) {
  if (range < 2) throw Error("jacobi range must be >= 2");
  std::vector<Generator> gens{Generator::C()};
  for (const Generator& g : sweep_generators(AlgebraMode::KHat, range)) gens.push_back(g);
  std::map<std::string, std::optional<std::string>> witness;
  std::map<std::string, long> count;
  for (const Generator& x : gens) {
    for (const Generator& y : gens) {
      for (const Generator& z : gens) {
        const std::string fam = family_of(x, y, z);
        ++count[fam];
        if (witness[fam]) continue;
        const LieElement X = lie(x), Y = lie(y), Z = lie(z);
        LieElement r = bracket(X, bracket(Y, Z)) - bracket(bracket(X, Y), Z);
        LieElement swap = bracket(Y, bracket(X, Z));
        if (koszul(x.parity(), y.parity()) > 0) {
          r -= swap;
        } else {
          r += swap;
        }
        if (!r.is_zero()) witness[fam] = "(" + x.str() + ", " + y.str() + ", " + z.str() + "): " + r.str();
      }
    }
  }
  std::vector<CheckReport> out;
  for (const auto& [fam, w] : witness) {
    const std::string name = "jacobi." + fam;
    const std::string anchor = "[x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]";
    const std::string params = "|index| <= " + std::to_string(range) + ", " + std::to_string(count[fam]) + " triples";
    out.push_back(w ? CheckReport::fail(name, anchor, params, *w) : CheckReport::pass(name, anchor, params));
  }
  return out;
}

std::vector<CheckReport> verify_identity_catalogue(int maxN, const CatalogueOptions& opts) {
  if (maxN < 2) throw Error("catalogue maxN must be >= 2");
  opts.window.validate();
  std::vector<CheckReport> out;
  compat_reports(opts.sweep, out);
  reconstruction_reports(maxN, opts.l_prime_minus_one, out);
  centralizer_reports(maxN, opts.centralizer_k, out);
  psi_reports(std::min(opts.psi_bound, maxN), out);
  module_chain_reports(opts, out);
  sort_reports(out);
  return out;
}

std::vector<CheckReport> verify_module_axiom(const GammaModule& m, const Window& w, int gen_range) {
  w.validate();
  const std::vector<Generator> gens = sweep_generators(m.algebra(), gen_range);
  std::vector<BasisKey> keys = interior_keys(m, w);
  std::stable_sort(keys.begin(), keys.end(), [](const BasisKey& a, const BasisKey& b) {
    return std::abs(a.k) < std::abs(b.k) || (std::abs(a.k) == std::abs(b.k) && a < b);
  });
  const std::string params = "module=" + m.descriptor() + " convention=" + to_string(m.params().convention) +
                             " window=" + w.str();
  std::vector<CheckReport> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      const Generator& x = gens[j];
      const Generator& y = gens[i];
      std::optional<std::string> witness;
      for (const BasisKey& key : keys) {
        ModuleVector r = module_axiom_residual(x, y, key, m);
        if (!r.is_zero()) {
          witness = "at " + key.str() + ": " + r.str();
          break;
        }
      }
      const std::string name = "module-axiom[" + x.str() + "," + y.str() + "]";
      const std::string anchor = "x(y v) - (-1)^{|x||y|} y(x v) = [x,y] v";
      out.push_back(witness ? CheckReport::fail(name, anchor, params, *witness)
                            : CheckReport::pass(name, anchor, params));
    }
  }
  sort_reports(out);
  return out;
}

}  // namespace nsalg
