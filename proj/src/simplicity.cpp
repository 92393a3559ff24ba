#include "nsalg/analysis.hpp"

#include "nsalg/error.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <iterator>
#include <map>

namespace nsalg {

std::string to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Simple: return "simple";
    case Verdict::Kind::Reducible: return "reducible";
    case Verdict::Kind::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

std::string render_keys(const std::vector<BasisKey>& keys) {
  std::string out = "{";
  for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? " " : "") + keys[i].str();
  return out + "}";
}

bool is_formal(const GammaModule& m) { return !m.params().lambda.is_numeric() || !m.params().b.is_numeric(); }

// Affine polynomial c_l * l + c_b * b + c_0 as a row, or nullopt.
std::optional<std::array<Rational, 3>> affine_row(const Scalar& s) {
  if (!s.den().is_constant()) return std::nullopt;
  const Rational d = s.den().constant_value();
  std::array<Rational, 3> row{Rational(0), Rational(0), Rational(0)};
  for (const auto& [e, c] : s.num().terms()) {
    if (e.total() > 1) return std::nullopt;
    if (e.l == 1) {
      row[0] = c / d;
    } else if (e.b == 1) {
      row[1] = c / d;
    } else {
      row[2] = c / d;
    }
  }
  return row;
}

// Reduced echelon form of the system "row = 0" in the unknowns l, b; nullopt if
// inconsistent. Each surviving row is rendered as "<poly> = 0".
std::optional<std::vector<std::string>> solve_affine(std::vector<std::array<Rational, 3>> rows) {
  std::size_t rank = 0;
  for (int col = 0; col < 2; ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const Rational inv = Rational(1) / rows[rank][col];
    for (auto& c : rows[rank]) c *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col];
      for (int c = 0; c < 3; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!rows[r][2].is_zero()) return std::nullopt;
  }
  std::vector<std::string> eqs;
  for (std::size_t r = 0; r < rank; ++r) {
    ParamPoly p = ParamPoly::lambda() * rows[r][0] + ParamPoly::b() * rows[r][1] + ParamPoly(rows[r][2]);
    eqs.push_back(p.str() + " = 0");
  }
  return eqs;
}

std::optional<std::string> isolating_equations(const std::vector<Scalar>& coeffs) {
  if (coeffs.empty()) return std::nullopt;
  std::vector<std::array<Rational, 3>> rows;
  for (const Scalar& c : coeffs) {
    auto row = affine_row(c);
    if (!row) return std::nullopt;
    rows.push_back(*row);
  }
  auto eqs = solve_affine(rows);
  if (!eqs || eqs->empty()) return std::nullopt;
  std::string out;
  for (std::size_t i = 0; i < eqs->size(); ++i) out += (i ? ", " : "") + (*eqs)[i];
  return out;
}

// Tarjan's strongly connected components; components come out in reverse
// topological order of the condensation (sinks first).
std::vector<std::vector<std::size_t>> tarjan(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  int counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : adj[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  return comps;
}

}  // namespace

std::vector<EdgeRecord> interior_edges(const GammaModule& m, const Window& w, int gen_range) {
  w.validate();
  std::vector<EdgeRecord> edges;
  const std::vector<Generator> gens = sweep_generators(m.algebra(), gen_range);
  for (const BasisKey& key : interior_keys(m, w)) {
    for (const Generator& g : gens) {
      auto r = m.act_basis(g, key);
      if (!r || r->first.k < w.lo() || r->first.k > w.hi()) continue;
      edges.push_back({key, r->first, g, r->second});
    }
  }
  return edges;
}

std::set<BasisKey> reachability_closure(const GammaModule& m, const BasisKey& seed, const Window& w,
                                        int gen_range) {
  w.validate();
  if (seed.k < w.lo() || seed.k > w.hi() || !m.admissible(seed)) {
    throw Error("seed " + seed.str() + " is outside the window interior " + w.str());
  }
  std::map<BasisKey, std::vector<BasisKey>> adj;
  for (const EdgeRecord& e : interior_edges(m, w, gen_range)) adj[e.source].push_back(e.target);
  std::set<BasisKey> seen{seed};
  std::deque<BasisKey> queue{seed};
  while (!queue.empty()) {
    BasisKey v = queue.front();
    queue.pop_front();
    for (const BasisKey& t : adj[v]) {
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  return seen;
}

bool certificate_out_closed(const GammaModule& m, const std::vector<BasisKey>& certificate, const Window& w,
                            int gen_range, std::string* witness) {
  const std::set<BasisKey> cert(certificate.begin(), certificate.end());
  for (const BasisKey& key : certificate) {
    for (const Generator& g : sweep_generators(m.algebra(), gen_range)) {
      auto r = m.act_basis(g, key);
      if (!r || r->first.k < w.lo() || r->first.k > w.hi() || cert.count(r->first)) continue;
      if (witness) {
        *witness = g.str() + " maps " + key.str() + " to " + r->second.str_factor() + " * " + r->first.str();
      }
      return false;
    }
  }
  return true;
}

std::string Verdict::str() const {
  std::string out = to_string(kind);
  if (kind == Kind::Reducible) out += "; certificate " + render_keys(certificate);
  if (!note.empty()) out += "; " + note;
  for (const std::string& l : locus) out += "; " + l;
  return out;
}

Verdict simplicity_verdict(const GammaModule& m, const Window& w, int gen_range) {
  w.validate();
  Verdict v;
  v.window = w;
  if (w.kmax - w.kmin < 4 * gen_range) {
    v.note = "window narrower than 4*gen_range";
    return v;
  }
  const std::vector<BasisKey> keys = interior_keys(m, w);
  if (keys.size() < 2) {
    v.note = "interior has fewer than two keys";
    return v;
  }
  std::map<BasisKey, std::size_t> pos;
  for (std::size_t i = 0; i < keys.size(); ++i) pos[keys[i]] = i;
  std::vector<std::vector<std::size_t>> adj(keys.size());
  std::map<BasisKey, std::vector<Scalar>> out_coeffs, in_coeffs;
  const std::vector<Generator> gens = sweep_generators(m.algebra(), gen_range);
  for (const BasisKey& key : keys) {
    for (const Generator& g : gens) {
      auto r = m.act_basis(g, key);
      if (!r || !pos.count(r->first)) continue;
      adj[pos[key]].push_back(pos[r->first]);
      if (r->first != key) {
        out_coeffs[key].push_back(r->second);
        in_coeffs[r->first].push_back(r->second);
      }
    }
  }
  const auto comps = tarjan(adj);
  if (comps.size() == 1) {
    v.kind = Verdict::Kind::Simple;
  } else {
    // sink components: no edge leaves them
    std::vector<std::size_t> comp_of(keys.size());
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (std::size_t x : comps[c]) comp_of[x] = c;
    const std::vector<std::size_t>* best = nullptr;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      bool sink = true;
      for (std::size_t x : comps[c])
        for (std::size_t y : adj[x])
          if (comp_of[y] != c) sink = false;
      if (!sink) continue;
      if (!best || comps[c].size() < best->size() ||
          (comps[c].size() == best->size() && comps[c].front() < best->front())) {
        best = &comps[c];
      }
    }
    v.kind = Verdict::Kind::Reducible;
    for (std::size_t x : *best) v.certificate.push_back(keys[x]);
    if (2 * v.certificate.size() > keys.size()) {
      std::vector<BasisKey> rest;
      std::set_difference(keys.begin(), keys.end(), v.certificate.begin(), v.certificate.end(),
                          std::back_inserter(rest));
      v.note = "complement of " + render_keys(rest);
    }
    std::string why;
    if (!certificate_out_closed(m, v.certificate, w, gen_range, &why)) {
      throw Error("internal: certificate is not out-closed: " + why);
    }
  }
  if (is_formal(m)) {
    for (const BasisKey& key : keys) {
      if (auto eq = isolating_equations(out_coeffs[key])) v.locus.push_back("sink " + key.str() + " when " + *eq);
      if (auto eq = isolating_equations(in_coeffs[key])) {
        v.locus.push_back("unreachable " + key.str() + " when " + *eq);
      }
    }
  }
  return v;
}

}  // namespace nsalg
