#include "nsalg/coeff_algebra.hpp"
#include "nsalg/error.hpp"
#include "nsalg/generator.hpp"
#include "nsalg/lie.hpp"
#include "nsalg/smash.hpp"

#include <gtest/gtest.h>

using namespace nsalg;

namespace {

LieElement L(int n, AlgebraMode m = AlgebraMode::KHat) { return LieElement(Generator::L(n), m); }
LieElement G(int doubled, AlgebraMode m = AlgebraMode::KHat) {
  return LieElement(Generator::G_doubled(doubled), m);
}
LieElement C() { return LieElement(Generator::C(), AlgebraMode::KHat); }
Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

}  // namespace

TEST(Generator, ParsingAndBounds) {
  EXPECT_EQ(HalfInt::parse("3/2").doubled, 3);
  EXPECT_EQ(HalfInt::parse("-2").doubled, -4);
  EXPECT_THROW(HalfInt::parse("1/3"), ParseError);
  EXPECT_THROW(Generator::G(HalfInt{2}), Error);
  EXPECT_TRUE(Generator::L(-1).allowed_in(AlgebraMode::KPlus));
  EXPECT_FALSE(Generator::L(-2).allowed_in(AlgebraMode::KPlus));
  EXPECT_TRUE(Generator::G_doubled(-1).allowed_in(AlgebraMode::KPlus));
  EXPECT_FALSE(Generator::G_doubled(-3).allowed_in(AlgebraMode::KPlus));
  EXPECT_FALSE(Generator::C().allowed_in(AlgebraMode::K));
  EXPECT_EQ(parse_algebra_mode("kplus"), AlgebraMode::KPlus);
  EXPECT_THROW(parse_algebra_mode("w"), ParseError);
}

TEST(Bracket, Examples) {
  EXPECT_EQ(bracket(L(2), L(3)), L(5));
  EXPECT_EQ(bracket(L(2), L(-2)), q(-4) * L(0) + q(1, 2) * C());
  EXPECT_EQ(bracket(L(2), L(-2)).str(), "-4*L(0) + 1/2*C");
  EXPECT_EQ(bracket(G(1), G(-1)), q(-2) * L(0));
  EXPECT_TRUE(bracket(L(0), L(0)).is_zero());
  EXPECT_EQ(bracket(L(2), G(1)), q(-1, 2) * G(5));
  EXPECT_EQ(bracket(G(3), G(-3)), q(-2) * L(0) + q(2, 3) * C());
}

TEST(Bracket, ModeMismatch) {
  EXPECT_THROW(bracket(L(1), L(1, AlgebraMode::K)), Error);
  EXPECT_THROW(L(-2, AlgebraMode::KPlus), Error);
}

TEST(Bracket, CentralTermOnlyInKHat) {
  EXPECT_EQ(bracket(L(2, AlgebraMode::K), L(-2, AlgebraMode::K)), q(-4) * L(0, AlgebraMode::K));
}

TEST(Bracket, JacobiWithCocycle) {
  const LieElement x = L(2), y = L(-3), z = L(1);
  EXPECT_TRUE((bracket(x, bracket(y, z)) - bracket(bracket(x, y), z) - bracket(y, bracket(x, z))).is_zero());
}

TEST(Bracket, GradedJacobiExhaustive) {
  std::vector<LieElement> gens{C()};
  for (int d = -6; d <= 6; ++d) gens.push_back(d % 2 == 0 ? L(d / 2) : G(d));
  for (const auto& x : gens)
    for (const auto& y : gens)
      for (const auto& z : gens) {
        LieElement r = bracket(x, bracket(y, z)) - bracket(bracket(x, y), z);
        LieElement s = bracket(y, bracket(x, z));
        if (koszul(x.parity(), y.parity()) > 0) r -= s; else r += s;
        EXPECT_TRUE(r.is_zero()) << x.str() << " " << y.str() << " " << z.str();
      }
}

TEST(Bracket, SuperAntisymmetry) {
  for (int a = -5; a <= 5; ++a)
    for (int c = -5; c <= 5; ++c) {
      LieElement x = a % 2 == 0 ? L(a / 2) : G(a);
      LieElement y = c % 2 == 0 ? L(c / 2) : G(c);
      LieElement lhs = bracket(x, y);
      LieElement rhs = bracket(y, x);
      rhs *= q(-koszul(x.parity(), y.parity()));
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(CoefficientAlgebra, KActionOnA) {
  const AElement t2(AMonomial{2, 0});
  EXPECT_EQ(k_action_on_A(L(1, AlgebraMode::K), t2), AElement(AMonomial{3, 0}, AMode::A, q(2)));
  EXPECT_EQ(k_action_on_A(G(1, AlgebraMode::K), AElement(AMonomial{0, 1})),
            AElement(AMonomial{1, 0}, AMode::A, q(-1)));
  EXPECT_TRUE(k_action_on_A(L(0, AlgebraMode::K), AElement(AMonomial{0, 0})).is_zero());
  EXPECT_THROW(k_action_on_A(C(), t2), Error);
}

TEST(CoefficientAlgebra, AActionOnK) {
  EXPECT_EQ(A_action_on_k(AElement(AMonomial{2, 0}), L(3, AlgebraMode::K)), L(5, AlgebraMode::K));
  EXPECT_EQ(A_action_on_k(AElement(AMonomial{0, 1}), L(3, AlgebraMode::K)), q(1, 2) * G(7, AlgebraMode::K));
  EXPECT_TRUE(A_action_on_k(AElement(AMonomial{0, 1}), G(1, AlgebraMode::K)).is_zero());
  EXPECT_THROW(A_action_on_k(AElement(AMonomial{-3, 0}), L(0, AlgebraMode::KPlus)), Error);
}

TEST(CoefficientAlgebra, MonomialRendering) {
  EXPECT_EQ((AMonomial{0, 0}).str(), "1");
  EXPECT_EQ((AMonomial{1, 0}).str(), "t");
  EXPECT_EQ((AMonomial{-2, 0}).str(), "t^-2");
  EXPECT_EQ((AMonomial{0, 1}).str(), "xi");
  EXPECT_EQ((AMonomial{3, 1}).str(), "t^3*xi");
  EXPECT_FALSE(multiply(AMonomial{0, 1}, AMonomial{2, 1}).has_value());
}

TEST(Compatibility, ResidualsVanish) {
  const auto K = AlgebraMode::K;
  for (int vd = -4; vd <= 4; ++vd)
    for (int xd = -4; xd <= 4; ++xd)
      for (int k = -2; k <= 2; ++k)
        for (int eps = 0; eps < 2; ++eps) {
          LieElement v = vd % 2 == 0 ? L(vd / 2, K) : G(vd, K);
          LieElement x = xd % 2 == 0 ? L(xd / 2, K) : G(xd, K);
          EXPECT_TRUE(compatibility_residual(v, AElement(AMonomial{k, eps}), x).is_zero());
        }
  EXPECT_THROW(compatibility_residual(L(1), AElement(AMonomial{1, 0}), L(0)), Error);
}

TEST(Compatibility, PrintedDisplays) {
  const auto K = AlgebraMode::K;
  // [L_m, t^i L_n] - t^i [L_m, L_n] = i t^{m+i} L_n
  const int m = 2, i = -1, n = 1;
  LieElement lhs = bracket(L(m, K), A_action_on_k(AElement(AMonomial{i, 0}), L(n, K))) -
                   A_action_on_k(AElement(AMonomial{i, 0}), bracket(L(m, K), L(n, K)));
  EXPECT_EQ(lhs, q(i) * L(m + n + i, K));
  // [G_r, xi G_s] + xi [G_r, G_s] = -t^{r+1/2} G_s, r = 1/2, s = -3/2
  LieElement lhs2 = bracket(G(1, K), A_action_on_k(AElement(AMonomial{0, 1}), G(-3, K))) +
                    A_action_on_k(AElement(AMonomial{0, 1}), bracket(G(1, K), G(-3, K)));
  EXPECT_EQ(lhs2, q(-1) * G(-1, K));
}
