#include "nsalg/error.hpp"
#include "nsalg/gamma.hpp"

#include <gtest/gtest.h>

using namespace nsalg;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }
const Scalar l = Scalar::lambda();
const Scalar b = Scalar::b();

std::vector<Generator> gens(int r, AlgebraMode mode) {
  std::vector<Generator> out;
  for (int d = -2 * r; d <= 2 * r; ++d) {
    Generator g = d % 2 == 0 ? Generator::L(d / 2) : Generator::G_doubled(d);
    if (g.allowed_in(mode)) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(Gamma, ActionExamples) {
  GammaModule g00 = parse_module("gamma(0,0)", AlgebraMode::KHat);
  auto r = g00.act_basis(Generator::L(1), {2, 0});
  ASSERT_TRUE(r);
  EXPECT_EQ(r->first, (BasisKey{3, 0}));
  EXPECT_EQ(r->second, q(2));

  for (auto conv : {SignConvention::Corrected, SignConvention::PaperPrinted}) {
    GammaModule m = parse_module("gamma(l,b)", AlgebraMode::KHat, conv);
    auto g = m.act_basis(Generator::G_doubled(1), {0, 1});
    ASSERT_TRUE(g);
    EXPECT_EQ(g->first, (BasisKey{1, 0}));
    EXPECT_EQ(g->second, q(-1));
  }
  GammaModule m = parse_module("gamma(l,b)", AlgebraMode::KHat);
  auto l0 = m.act_basis(Generator::L(0), {4, 1});
  ASSERT_TRUE(l0);
  EXPECT_EQ(l0->second, l + q(4) + b + q(1, 2));
  EXPECT_EQ(m.act(AMonomial{2, 0}, ModuleVector({3, 1})), ModuleVector({5, 1}));
  EXPECT_TRUE(m.act(Generator::C(), ModuleVector({0, 0})).is_zero());
}

TEST(Gamma, WeightsAndParity) {
  GammaModule m = parse_module("gamma(l,b)", AlgebraMode::KHat);
  EXPECT_EQ(weight({0, 0}, m), l + b);
  EXPECT_EQ(weight({0, 1}, m), l + b + q(1, 2));
  EXPECT_EQ(m.parity({3, 1}), 1);
  GammaModule p = parity_change(m);
  EXPECT_EQ(p.parity({3, 1}), 0);
  EXPECT_EQ(p.descriptor(), "pi(gamma(l,b))");
}

TEST(Gamma, AxiomsCorrectedConvention) {
  for (const char* d : {"gamma(l,b)", "gamma'(0,0)", "gamma'(2,1/2)", "pi(gamma(1/3,b))"}) {
    GammaModule m = parse_module(d, AlgebraMode::KHat);
    for (const Generator& x : gens(3, AlgebraMode::KHat))
      for (const Generator& y : gens(3, AlgebraMode::KHat))
        for (int k = -6; k <= 6; ++k)
          for (int eps = 0; eps < 2; ++eps) {
            if (!m.admissible({k, eps})) continue;
            EXPECT_TRUE(module_axiom_residual(x, y, {k, eps}, m).is_zero()) << d << " " << x.str() << y.str();
          }
  }
}

TEST(Gamma, AxiomsPlusVariants) {
  for (const char* d : {"gamma+(0,b)", "gamma-(0,b)", "gamma+(0,1/2)", "gamma-(0,0)"}) {
    GammaModule m = parse_module(d, AlgebraMode::KPlus);
    for (const Generator& x : gens(3, AlgebraMode::KPlus))
      for (const Generator& y : gens(3, AlgebraMode::KPlus))
        for (int k = -6; k <= 6; ++k)
          for (int eps = 0; eps < 2; ++eps) {
            if (!m.admissible({k, eps})) continue;
            EXPECT_TRUE(module_axiom_residual(x, y, {k, eps}, m).is_zero()) << d;
          }
  }
}

TEST(Gamma, PaperPrintedResidual) {
  GammaModule m = parse_module("gamma(l,b)", AlgebraMode::KHat, SignConvention::PaperPrinted);
  for (int k = -4; k <= 4; ++k) {
    ModuleVector r = module_axiom_residual(Generator::G_doubled(1), Generator::G_doubled(-1), {k, 0}, m);
    EXPECT_EQ(r, ModuleVector({k, 0}, q(4) * (l + q(k) + b)));
  }
  // even pairs are unaffected
  EXPECT_TRUE(module_axiom_residual(Generator::L(1), Generator::L(-1), {2, 0}, m).is_zero());
  EXPECT_TRUE(module_axiom_residual(Generator::L(1), Generator::G_doubled(1), {2, 1}, m).is_zero());
}

TEST(Gamma, Validation) {
  ModuleParams p;
  p.lambda = q(0);
  p.b = q(0);
  p.family = Family::GammaPrime;
  p.excluded = Exclusion{{0, 0}, Exclusion::Role::Sub};
  EXPECT_THROW(make_module(p), Error);
  p.excluded = Exclusion{{0, 0}, Exclusion::Role::Quotient};
  EXPECT_NO_THROW(make_module(p));
  p.b = q(1, 2);
  p.excluded.reset();
  EXPECT_EQ(make_module(p).params().excluded->key, (BasisKey{-1, 1}));

  EXPECT_THROW(parse_module("gamma+(1,b)", AlgebraMode::KPlus), Error);
  EXPECT_THROW(parse_module("gamma+(0,b)", AlgebraMode::KHat), Error);
  EXPECT_NO_THROW(parse_module("gamma+(0,b)", AlgebraMode::KPlus));
  EXPECT_THROW(parse_module("delta(0,0)", AlgebraMode::KHat), ParseError);
  EXPECT_THROW(parse_module("gamma(1/0,0)", AlgebraMode::KHat), ParseError);
  EXPECT_THROW(parse_module("gamma(1)", AlgebraMode::KHat), ParseError);
}

TEST(Gamma, SupportsOfVariants) {
  GammaModule plus = parse_module("gamma+(0,b)", AlgebraMode::KPlus);
  EXPECT_TRUE(plus.admissible({0, 0}));
  EXPECT_FALSE(plus.admissible({-1, 1}));
  GammaModule minus = parse_module("gamma-(0,b)", AlgebraMode::KPlus);
  EXPECT_TRUE(minus.admissible({-1, 0}));
  EXPECT_FALSE(minus.admissible({0, 0}));
  // quotient projection: L_1 t^{-1} lands on t^0, which is zero in gamma-
  EXPECT_FALSE(minus.act_basis(Generator::L(1), {-1, 0}).has_value());
  EXPECT_THROW(minus.act(AMonomial{-1, 0}, ModuleVector({-1, 0})), Error);
  GammaModule prime = parse_module("gamma'(0,0)", AlgebraMode::KHat);
  EXPECT_FALSE(prime.admissible({0, 0}));
  EXPECT_THROW(prime.act(AMonomial{1, 0}, ModuleVector({1, 0})), Error);
}
