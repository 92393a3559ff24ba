#include "nsalg/analysis.hpp"

#include "nsalg/error.hpp"

#include <tuple>

namespace nsalg {

namespace {

Scalar sgn(int i) { return Scalar(i % 2 == 0 ? 1 : -1); }

// sum_i c_i x_i (y_i v) over interior vectors; first survivor rendered.
using Quadratic = std::vector<std::tuple<Scalar, Generator, Generator>>;

std::optional<std::string> survivor(const GammaModule& m, const Window& w, const Quadratic& op) {
  for (const BasisKey& key : interior_keys(m, w)) {
    const ModuleVector v(key);
    ModuleVector out;
    for (const auto& [c, x, y] : op) out += c * m.act(x, m.act(y, v));
    if (!out.is_zero()) return "on " + key.str() + ": " + out.str();
  }
  return std::nullopt;
}

Quadratic omega_op(int k, int s, int m) {
  Quadratic op;
  for (int i = 0; i <= m; ++i) op.emplace_back(sgn(i) * Scalar(binomial(m, i)), Generator::L(k - i), Generator::L(s + i));
  return op;
}

// sum_i (-1)^i C(m,i) G_{k-i} L_{p+i}, k half-integer given doubled
Quadratic gl_op(int kd, int p, int m) {
  Quadratic op;
  for (int i = 0; i <= m; ++i) {
    op.emplace_back(sgn(i) * Scalar(binomial(m, i)), Generator::G_doubled(kd - 2 * i), Generator::L(p + i));
  }
  return op;
}

}  // namespace

AnnihilatorResult minimal_annihilator(const GammaModule& mod, const Window& w, int max_m, int sweep) {
  w.validate();
  if (max_m < 1) throw Error("max-m must be >= 1");
  const bool plus = mod.algebra() == AlgebraMode::KPlus;
  // kplus sweeps k, s over Z_+ and shifts the indices.
  const int lo = plus ? 0 : -sweep;
  const int hi = plus ? 2 * sweep : sweep;

  auto omega_fails = [&](int m) -> std::optional<std::string> {
    for (int k = lo; k <= hi; ++k) {
      for (int s = lo; s <= hi; ++s) {
        Quadratic op = plus ? omega_op(k + m - 1, s - 1, m) : omega_op(k, s, m);
        if (auto f = survivor(mod, w, op)) {
          return "Omega^(" + std::to_string(m) + ") k=" + std::to_string(k) + " s=" + std::to_string(s) + " " + *f;
        }
      }
    }
    return std::nullopt;
  };

  AnnihilatorResult result;
  std::optional<std::string> previous;
  for (int m = 1; m <= max_m; ++m) {
    auto f = omega_fails(m);
    if (!f) {
      result.m = m;
      result.minimality_witness = previous;
      break;
    }
    previous = f;
  }
  if (result.m == 0) throw Error("annihilator order exceeds bound");

  const int m = result.m;
  std::optional<std::string> witness;
  for (int k = lo; k <= hi && !witness; ++k) {
    for (int p = lo; p <= hi && !witness; ++p) {
      // k in 1/2 + Z (1/2 + Z_+ in kplus), doubled; khat keeps |k| <= sweep
      if (!plus && k == hi) continue;
      const int kd = 2 * k + 1;
      Quadratic op = plus ? gl_op(kd + 2 * (m - 1), p - 1, m) : gl_op(kd, p, m);
      if (auto f = survivor(mod, w, op)) {
        witness = "k=" + HalfInt{kd}.str() + " p=" + std::to_string(p) + " " + *f;
      }
    }
  }
  const std::string name = "annihilator.GL[" + mod.descriptor() + "]";
  const std::string anchor = plus ? "sum_{i=0}^m (-1)^i C(m,i) G_{m+k-i-1}L_{p+i-1} = 0 on M"
                                  : "sum_{i=0}^m (-1)^i C(m,i) G_{k-i}L_{p+i} = 0 on M";
  const std::string params = "m=" + std::to_string(m) + " window=" + w.str() + " k,p sweep [" +
                             std::to_string(lo) + "," + std::to_string(hi) + "]";
  result.gl_report = witness ? CheckReport::fail(name, anchor, params, *witness)
                             : CheckReport::pass(name, anchor, params);
  return result;
}

}  // namespace nsalg
