#include "nsalg/analysis.hpp"

#include "nsalg/error.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace nsalg {

namespace {

bool numeric(const GammaModule& m) { return m.params().lambda.is_numeric() && m.params().b.is_numeric(); }

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

BasisKey shifted(const BasisKey& v, int doubled_shift) {
  const int pos = 2 * v.k + v.eps - doubled_shift;
  return {floor_div2(pos), pos - 2 * floor_div2(pos)};
}

struct Equation {
  BasisKey from;
  BasisKey to;
  Scalar ratio;  // c[to] = ratio * c[from]
};

}  // namespace

std::string Intertwiner::str() const {
  std::string out = "shift " + HalfInt{doubled_shift}.str() + ", " + (parity ? "odd" : "even") + " map";
  for (const auto& [src, dst, c] : table) out += "; " + src.str() + " -> " + c.str_factor() + " * " + dst.str();
  return out;
}

std::optional<Intertwiner> find_intertwiner(const GammaModule& m1, const GammaModule& m2, const Window& w,
                                            int gen_range, std::string* reason) {
  w.validate();
  if (!numeric(m1) || !numeric(m2)) throw Error("numeric parameters required");
  if (m1.algebra() != m2.algebra()) throw Error("modules are over different algebras");
  auto fail = [&](std::string why) -> std::optional<Intertwiner> {
    if (reason) *reason = std::move(why);
    return std::nullopt;
  };

  const Rational d = (m2.params().lambda + m2.params().b - m1.params().lambda - m1.params().b).numeric_value();
  const Rational d2 = d * Rational(2);
  if (!d2.is_integer()) return fail("weights differ by " + d.str() + ", not in Z/2");
  const int shift = static_cast<int>(d2.to_long());

  // Supports must correspond under the shift.
  std::optional<int> parity;
  for (int k = w.lo(); k <= w.hi(); ++k) {
    for (int eps = 0; eps < 2; ++eps) {
      const BasisKey v{k, eps};
      const BasisKey s = shifted(v, shift);
      if (m1.admissible(v) != m2.admissible(s)) {
        return fail("support mismatch at " + v.str() + " -> " + s.str());
      }
      if (!m1.admissible(v)) continue;
      const int p = m1.parity(v) ^ m2.parity(s);
      if (parity && *parity != p) return fail("map cannot be homogeneous");
      parity = p;
    }
  }
  if (!parity) return fail("empty interior");

  const std::vector<BasisKey> keys = interior_keys(m1, w);
  const std::set<BasisKey> interior(keys.begin(), keys.end());

  // Collects c[target] = ratio * c[source] for generators in gens; returns a
  // reason string on a zero-pattern mismatch.
  auto equations = [&](const std::vector<Generator>& gens,
                       std::vector<Equation>& eqs) -> std::optional<std::string> {
    for (const BasisKey& v : keys) {
      for (const Generator& g : gens) {
        auto r1 = m1.act_basis(g, v);
        auto r2 = m2.act_basis(g, shifted(v, shift));
        if (!r1 && !r2) continue;
        if (!r1 || !r2) {
          return g.str() + " on " + v.str() + " vanishes in only one module";
        }
        if (shifted(r1->first, shift) != r2->first) return "weight mismatch for " + g.str() + " on " + v.str();
        if (!interior.count(r1->first)) continue;
        const Scalar sign(koszul(g.parity(), *parity));
        eqs.push_back({v, r1->first, sign * r2->second / r1->second});
      }
    }
    return std::nullopt;
  };

  std::vector<Equation> eqs;
  if (auto why = equations(sweep_generators(m1.algebra(), gen_range), eqs)) return fail(*why);

  std::map<BasisKey, std::vector<std::pair<BasisKey, Scalar>>> adj;
  for (const Equation& e : eqs) {
    adj[e.from].push_back({e.to, e.ratio});
    adj[e.to].push_back({e.from, Scalar(1) / e.ratio});
  }
  std::map<BasisKey, Scalar> c;
  for (const BasisKey& root : keys) {
    if (c.count(root)) continue;
    c[root] = Scalar(1);
    std::deque<BasisKey> queue{root};
    while (!queue.empty()) {
      BasisKey v = queue.front();
      queue.pop_front();
      for (const auto& [t, ratio] : adj[v]) {
        Scalar want = ratio * c[v];
        auto it = c.find(t);
        if (it == c.end()) {
          c[t] = want;
          queue.push_back(t);
        } else if (!(it->second == want)) {
          return fail("inconsistent scaling at " + t.str() + ": " + it->second.str() + " vs " + want.str());
        }
      }
    }
  }

  // Fresh batch: generators with gen_range < |index| <= gen_range + 2.
  std::vector<Generator> fresh;
  const auto inner = sweep_generators(m1.algebra(), gen_range);
  for (const Generator& g : sweep_generators(m1.algebra(), gen_range + 2)) {
    if (std::find(inner.begin(), inner.end(), g) == inner.end()) fresh.push_back(g);
  }
  std::vector<Equation> check;
  if (auto why = equations(fresh, check)) return fail("re-verification: " + *why);
  for (const Equation& e : check) {
    if (!(c[e.to] == e.ratio * c[e.from])) return fail("re-verification failed at " + e.from.str());
  }

  Intertwiner out;
  out.doubled_shift = shift;
  out.parity = *parity;
  for (const BasisKey& v : keys) out.table.emplace_back(v, shifted(v, shift), c[v]);
  return out;
}

}  // namespace nsalg
