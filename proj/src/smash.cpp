#include "nsalg/smash.hpp"

#include "nsalg/error.hpp"

#include <atomic>
#include <tuple>
#include <utility>

namespace nsalg {

namespace {

std::atomic<int> g_degree_limit{6};

using WordKey = std::pair<bool, PBWMonomial>;

// Position of the first adjacent pair that violates the PBW order, or -1.
int first_violation(const PBWMonomial& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i + 1] < w[i]) return static_cast<int>(i);
    if (w[i] == w[i + 1] && w[i].parity() == 1) return static_cast<int>(i);
  }
  return -1;
}

PBWMonomial splice(const PBWMonomial& w, std::size_t i, const std::vector<Generator>& middle) {
  PBWMonomial out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
  out.insert(out.end(), middle.begin(), middle.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
  return out;
}

void accumulate(std::map<PBWMonomial, Rational>& into, const std::map<PBWMonomial, Rational>& from,
                const Rational& scale) {
  for (const auto& [word, c] : from) {
    auto [it, inserted] = into.emplace(word, c * scale);
    if (!inserted) {
      it->second += c * scale;
      if (it->second.is_zero()) into.erase(it);
    }
  }
}

struct Passed {
  Rational coeff;
  AMonomial a;
  PBWMonomial word;
};

// Rewrites word . a as a sum of (A-monomial) . (subword) terms using
// g a = (-1)^{|g||a|} a g + (g o a).
std::vector<Passed> pass_left(const PBWMonomial& word, const AMonomial& a) {
  if (word.empty()) return {Passed{Rational(1), a, {}}};
  const Generator& g = word.back();
  PBWMonomial head(word.begin(), word.end() - 1);
  std::vector<Passed> out;
  const int sign = koszul(g.parity(), a.parity());
  for (auto& p : pass_left(head, a)) {
    p.coeff *= Rational(sign);
    p.word.push_back(g);
    out.push_back(std::move(p));
  }
  if (g.kind() != GenKind::C) {
    for (const auto& [m, c] : act_on_monomial(g, a)) {
      for (auto& p : pass_left(head, m)) {
        p.coeff *= c;
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

bool a_allowed(const AMonomial& a, SmashMode mode) {
  switch (mode) {
    case SmashMode::PureU: return a.k == 0 && a.eps == 0;
    case SmashMode::AK: return true;
    case SmashMode::APlusKPlus: return a.k >= 0;
  }
  return false;
}

}  // namespace

std::string to_string(const PBWMonomial& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& g : w) out += g.str();
  return out;
}

std::string to_string(SmashMode mode) {
  switch (mode) {
    case SmashMode::PureU: return "U(khat)";
    case SmashMode::AK: return "A.U(k)";
    case SmashMode::APlusKPlus: return "A+.U(k+)";
  }
  return "?";
}

AlgebraMode generator_mode(SmashMode mode) {
  switch (mode) {
    case SmashMode::PureU: return AlgebraMode::KHat;
    case SmashMode::AK: return AlgebraMode::K;
    case SmashMode::APlusKPlus: return AlgebraMode::KPlus;
  }
  return AlgebraMode::KHat;
}

int pbw_degree_limit() { return g_degree_limit.load(); }
void set_pbw_degree_limit(int limit) { g_degree_limit.store(limit); }

const std::map<PBWMonomial, Rational>& normal_order(const PBWMonomial& word, bool central) {
  thread_local std::map<WordKey, std::map<PBWMonomial, Rational>> cache;
  WordKey key{central, word};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  if (static_cast<int>(word.size()) > pbw_degree_limit()) {
    throw Error("PBW degree " + std::to_string(word.size()) + " exceeds limit " +
                std::to_string(pbw_degree_limit()));
  }
  const AlgebraMode mode = central ? AlgebraMode::KHat : AlgebraMode::K;
  std::map<PBWMonomial, Rational> result;
  const int i = first_violation(word);
  if (i < 0) {
    result.emplace(word, Rational(1));
  } else {
    const auto idx = static_cast<std::size_t>(i);
    const Generator& x = word[idx];
    const Generator& y = word[idx + 1];
    if (x == y) {
      // odd square: g^2 = 1/2 [g, g]
      for (const auto& [h, c] : bracket_basis(x, x, mode)) {
        accumulate(result, normal_order(splice(word, idx, {h}), central), c * Rational(1, 2));
      }
    } else {
      // xy = (-1)^{|x||y|} yx + [x, y]
      accumulate(result, normal_order(splice(word, idx, {y, x}), central),
                 Rational(koszul(x.parity(), y.parity())));
      for (const auto& [h, c] : bracket_basis(x, y, mode)) {
        accumulate(result, normal_order(splice(word, idx, {h}), central), c);
      }
    }
  }
  return cache.emplace(std::move(key), std::move(result)).first->second;
}

int SmashKey::parity() const {
  int p = a.parity();
  for (const auto& g : word) p ^= g.parity();
  return p;
}

SmashElement SmashElement::one(SmashMode mode) {
  SmashElement e(mode);
  e.add(SmashKey{}, Scalar(1));
  return e;
}

SmashElement SmashElement::generator(const Generator& g, SmashMode mode) {
  SmashElement e(mode);
  e.add(SmashKey{AMonomial{}, {g}}, Scalar(1));
  return e;
}

SmashElement SmashElement::monomial(const AMonomial& a, SmashMode mode) {
  SmashElement e(mode);
  e.add(SmashKey{a, {}}, Scalar(1));
  return e;
}

SmashElement SmashElement::from_lie(const LieElement& x, SmashMode mode) {
  SmashElement e(mode);
  for (const auto& [g, c] : x.terms()) e.add(SmashKey{AMonomial{}, {g}}, c);
  return e;
}

void SmashElement::add(const SmashKey& key, const Scalar& c) {
  if (!a_allowed(key.a, mode_)) {
    throw Error("coefficient " + key.a.str() + " not allowed in " + to_string(mode_));
  }
  const AlgebraMode gm = generator_mode(mode_);
  for (const auto& g : key.word) {
    if (!g.allowed_in(gm)) throw Error("generator " + g.str() + " not allowed in " + to_string(mode_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int SmashElement::parity() const {
  if (terms_.empty()) return 0;
  int p = terms_.begin()->first.parity();
  for (const auto& [k, c] : terms_) {
    if (k.parity() != p) return -1;
  }
  return p;
}

std::size_t SmashElement::degree() const {
  std::size_t d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.word.size());
  return d;
}

void SmashElement::check_mode(const SmashElement& o) const {
  if (o.mode_ != mode_) {
    throw Error("mode mismatch: " + to_string(mode_) + " vs " + to_string(o.mode_));
  }
}

SmashElement& SmashElement::operator+=(const SmashElement& o) {
  check_mode(o);
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

SmashElement& SmashElement::operator-=(const SmashElement& o) {
  check_mode(o);
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

SmashElement& SmashElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string SmashElement::str() const {
  std::vector<std::pair<std::string, Scalar>> parts;
  for (const auto& [k, c] : terms_) {
    std::string name;
    if (mode_ == SmashMode::PureU || (k.a == AMonomial{} && !k.word.empty())) {
      name = to_string(k.word);
    } else if (k.word.empty()) {
      name = k.a.str();
    } else {
      name = k.a.str() + " (x) " + to_string(k.word);
    }
    parts.emplace_back(std::move(name), c);
  }
  return render_linear_combination(parts);
}

SmashElement smash_product(const SmashElement& x, const SmashElement& y) {
  if (x.mode() != y.mode()) {
    throw Error("mode mismatch: " + to_string(x.mode()) + " vs " + to_string(y.mode()));
  }
  const bool central = x.mode() == SmashMode::PureU;
  SmashElement out(x.mode());
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      if (static_cast<int>(kx.word.size() + ky.word.size()) > pbw_degree_limit()) {
        throw Error("PBW degree exceeds limit " + std::to_string(pbw_degree_limit()));
      }
      const Scalar c = cx * cy;
      for (const auto& p : pass_left(kx.word, ky.a)) {
        auto a = multiply(kx.a, p.a);
        if (!a) continue;
        PBWMonomial word = p.word;
        word.insert(word.end(), ky.word.begin(), ky.word.end());
        for (const auto& [w, k] : normal_order(word, central)) {
          out.add(SmashKey{*a, w}, c * Scalar(p.coeff * k));
        }
      }
    }
  }
  return out;
}

SmashElement smash_bracket(const SmashElement& x, const SmashElement& y) {
  const int px = x.parity();
  const int py = y.parity();
  if (px < 0 || py < 0) throw Error("smash_bracket requires homogeneous arguments");
  SmashElement out = smash_product(x, y);
  SmashElement yx = smash_product(y, x);
  if (koszul(px, py) > 0) {
    out -= yx;
  } else {
    out += yx;
  }
  return out;
}

SmashElement compatibility_residual(const LieElement& v, const AElement& a, const LieElement& x) {
  if (v.mode() == AlgebraMode::KHat || x.mode() == AlgebraMode::KHat) {
    throw Error("compatibility is defined on k or k+, not khat");
  }
  const int pv = v.parity();
  const int pa = a.parity();
  if (pv < 0 || pa < 0 || x.parity() < 0) throw Error("compatibility_residual requires homogeneous input");
  LieElement lhs = bracket(v, A_action_on_k(a, x));
  LieElement second = A_action_on_k(a, bracket(v, x));
  if (koszul(pv, pa) > 0) {
    lhs -= second;
  } else {
    lhs += second;
  }
  lhs -= A_action_on_k(k_action_on_A(v, a), x);
  const SmashMode mode = x.mode() == AlgebraMode::KPlus ? SmashMode::APlusKPlus : SmashMode::AK;
  return SmashElement::from_lie(lhs, mode);
}

}  // namespace nsalg
