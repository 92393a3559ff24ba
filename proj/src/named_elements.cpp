#include "nsalg/named_elements.hpp"

#include "nsalg/error.hpp"

namespace nsalg {

namespace {

Scalar sign_of(int i) { return Scalar(i % 2 == 0 ? 1 : -1); }

SmashElement a_times(const AMonomial& a, const SmashElement& x) {
  return smash_product(SmashElement::monomial(a, x.mode()), x);
}

}  // namespace

SmashElement omega(int k, int s, int m, SmashMode mode) {
  if (m < 0) throw Error("omega order must be non-negative");
  SmashElement out(mode);
  for (int i = 0; i <= m; ++i) {
    SmashElement term = smash_product(SmashElement::generator(Generator::L(k - i), mode),
                                      SmashElement::generator(Generator::L(s + i), mode));
    out += (sign_of(i) * Scalar(binomial(m, i))) * term;
  }
  return out;
}

SmashElement l_prime(int n, SmashMode mode) {
  if (n < -1) throw Error("L' is defined for n >= -1, got " + std::to_string(n));
  SmashElement out(mode);
  for (int i = 0; i <= n + 1; ++i) {
    out.add(SmashKey{AMonomial{n - i + 1, 0}, {Generator::L(i - 1)}},
            -sign_of(i) * Scalar(binomial(n + 1, i)));
  }
  const Scalar half_n1 = Scalar(Rational(n + 1, 2));
  for (int i = 0; i <= n; ++i) {
    out.add(SmashKey{AMonomial{n - i, 1}, {Generator::G_doubled(2 * i - 1)}},
            half_n1 * sign_of(i) * Scalar(binomial(n, i)));
  }
  return out;
}

SmashElement g_prime(int n, SmashMode mode) {
  if (n < 0) throw Error("G' is defined for n >= 0, got " + std::to_string(n));
  SmashElement out(mode);
  for (int i = 0; i <= n; ++i) {
    const Scalar c = sign_of(i) * Scalar(binomial(n, i));
    out.add(SmashKey{AMonomial{n - i, 0}, {Generator::G_doubled(2 * i - 1)}}, c);
    out.add(SmashKey{AMonomial{n - i, 1}, {Generator::L(i - 1)}}, Scalar(-2) * c);
  }
  return out;
}

ReconstructionResiduals verify_reconstruction(int n,
                                              const std::optional<SmashElement>& l_prime_minus_one,
                                              SmashMode mode) {
  if (n < 0) throw Error("reconstruction is defined for n >= 0");
  const AMonomial xi{0, 1};

  SmashElement l_sum(mode);
  for (int k = 0; k <= n; ++k) {
    SmashElement inner = l_prime(k, mode) - Scalar(Rational(k + 1, 2)) * a_times(xi, g_prime(k, mode));
    l_sum += (sign_of(k) * Scalar(binomial(n + 1, k + 1))) * a_times(AMonomial{n - k, 0}, inner);
  }
  l_sum += a_times(AMonomial{n + 1, 0}, SmashElement::generator(Generator::L(-1), mode));
  l_sum -= SmashElement::generator(Generator::L(n), mode);

  SmashElement g_sum(mode);
  for (int k = 0; k <= n; ++k) {
    SmashElement lp = (k == 0 && l_prime_minus_one) ? *l_prime_minus_one : l_prime(k - 1, mode);
    SmashElement inner = g_prime(k, mode) - Scalar(2) * a_times(xi, lp);
    g_sum += (sign_of(k) * Scalar(binomial(n, k))) * a_times(AMonomial{n - k, 0}, inner);
  }
  g_sum -= SmashElement::generator(Generator::G_doubled(2 * n - 1), mode);

  return {std::move(l_sum), std::move(g_sum)};
}

}  // namespace nsalg
