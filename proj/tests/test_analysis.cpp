#include "nsalg/analysis.hpp"
#include "nsalg/error.hpp"

#include <gtest/gtest.h>

using namespace nsalg;

namespace {

const Window W{-10, 10, 3};

GammaModule khat(const char* d) { return parse_module(d, AlgebraMode::KHat); }
GammaModule kplus(const char* d) { return parse_module(d, AlgebraMode::KPlus); }

const CheckReport* find(const std::vector<CheckReport>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace

TEST(Window, ParseAndValidate) {
  Window w = Window::parse("-10..10", 3);
  EXPECT_EQ(w.lo(), -7);
  EXPECT_EQ(w.hi(), 7);
  EXPECT_THROW(Window::parse("5..1", 0), Error);
  EXPECT_THROW(Window::parse("1-5", 0), ParseError);
  EXPECT_THROW(Window::parse("-2..2", 3), Error);
}

TEST(Jacobi, RangeFour) {
  auto rs = verify_jacobi(4);
  EXPECT_EQ(rs.size(), 5u);
  for (const auto& r : rs) EXPECT_EQ(r.status, Status::Pass) << r.name;
  EXPECT_THROW(verify_jacobi(1), Error);
}

TEST(Reachability, Examples) {
  GammaModule g00 = khat("gamma(0,0)");
  EXPECT_EQ(reachability_closure(g00, {0, 0}, W, 3), (std::set<BasisKey>{{0, 0}}));
  std::set<BasisKey> all;
  for (const BasisKey& k : interior_keys(g00, W)) all.insert(k);
  EXPECT_EQ(reachability_closure(g00, {1, 0}, W, 3), all);

  GammaModule g0h = khat("gamma(0,1/2)");
  std::set<BasisKey> rest;
  for (const BasisKey& k : interior_keys(g0h, W))
    if (k != BasisKey{-1, 1}) rest.insert(k);
  EXPECT_EQ(reachability_closure(g0h, {3, 0}, W, 3), rest);
  EXPECT_EQ(reachability_closure(g0h, {-4, 1}, W, 3), rest);
  EXPECT_THROW(reachability_closure(g0h, {9, 0}, W, 3), Error);
}

TEST(Simplicity, Examples) {
  EXPECT_EQ(simplicity_verdict(khat("gamma(1/3,1/4)"), W, 3).kind, Verdict::Kind::Simple);
  EXPECT_EQ(simplicity_verdict(khat("gamma(0,1)"), W, 3).kind, Verdict::Kind::Simple);
  Verdict v = simplicity_verdict(khat("gamma(0,1/2)"), W, 3);
  ASSERT_EQ(v.kind, Verdict::Kind::Reducible);
  EXPECT_EQ(v.certificate.size(), interior_keys(khat("gamma(0,1/2)"), W).size() - 1);
  EXPECT_EQ(std::count(v.certificate.begin(), v.certificate.end(), BasisKey{-1, 1}), 0);
  EXPECT_TRUE(certificate_out_closed(khat("gamma(0,1/2)"), v.certificate, W, 3));
  EXPECT_EQ(simplicity_verdict(kplus("gamma(1/3,b)"), W, 3).kind, Verdict::Kind::Simple);
  EXPECT_EQ(simplicity_verdict(khat("gamma(1/3,1/4)"), Window{-2, 2, 0}, 3).kind, Verdict::Kind::Inconclusive);
}

TEST(Simplicity, FormalLocus) {
  Verdict v = simplicity_verdict(khat("gamma(l,b)"), W, 3);
  EXPECT_EQ(v.kind, Verdict::Kind::Simple);
  auto has = [&](const std::string& s) { return std::find(v.locus.begin(), v.locus.end(), s) != v.locus.end(); };
  EXPECT_TRUE(has("sink (0,0) when l = 0, b = 0"));
  EXPECT_TRUE(has("unreachable (-1,1) when l = 0, b - 1/2 = 0"));
}

TEST(Simplicity, WindowStability) {
  for (const char* d : {"gamma(0,1/2)", "gamma(1,0)", "gamma(1/3,1/4)", "gamma(-1,1)"}) {
    auto a = simplicity_verdict(khat(d), Window{-10, 10, 3}, 3).kind;
    auto b = simplicity_verdict(khat(d), Window{-14, 14, 3}, 3).kind;
    EXPECT_EQ(a, b) << d;
  }
}

TEST(Intertwiner, Examples) {
  auto a = find_intertwiner(khat("gamma(1/3,1/4)"), khat("gamma(4/3,1/4)"), W, 3);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->doubled_shift, 2);
  EXPECT_EQ(a->parity, 0);
  auto b = find_intertwiner(khat("gamma(1/3,1/2)"), khat("gamma(4/3,0)"), W, 3);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->parity, 1);
  auto c = find_intertwiner(khat("gamma'(0,0)"), khat("pi(gamma'(0,1/2))"), W, 3);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->parity, 0);
  EXPECT_FALSE(find_intertwiner(khat("gamma(1/3,0)"), khat("gamma(1/3,1/4)"), W, 3));
  EXPECT_FALSE(find_intertwiner(khat("gamma(1/3,1/4)"), khat("gamma(1/2,1/4)"), W, 3));
  EXPECT_FALSE(find_intertwiner(khat("gamma(1/3,1/4)"), khat("gamma(4/3,1/2)"), W, 3));
  try {
    find_intertwiner(khat("gamma(l,0)"), khat("gamma(1/3,0)"), W, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "numeric parameters required");
  }
}

TEST(Intertwiner, Symmetry) {
  const char* ms[] = {"gamma(1/3,1/4)", "gamma(4/3,1/4)", "gamma(1/3,1/2)", "gamma(4/3,0)", "gamma(1/3,0)",
                      "gamma(1/2,1/4)", "gamma(7/5,1)", "gamma(2/5,1)"};
  for (const char* x : ms)
    for (const char* y : ms) {
      bool xy = find_intertwiner(khat(x), khat(y), W, 3).has_value();
      bool yx = find_intertwiner(khat(y), khat(x), W, 3).has_value();
      EXPECT_EQ(xy, yx) << x << " " << y;
    }
}

TEST(Annihilator, GammaThirdQuarter) {
  AnnihilatorResult a = minimal_annihilator(khat("gamma(1/3,1/4)"), W, 6);
  EXPECT_EQ(a.m, 3);
  EXPECT_TRUE(a.minimality_witness.has_value());
  EXPECT_EQ(a.gl_report.status, Status::Pass);
  EXPECT_THROW(minimal_annihilator(khat("gamma(1/3,1/4)"), W, 2), Error);
}

TEST(Annihilator, KPlusShifted) {
  AnnihilatorResult a = minimal_annihilator(kplus("gamma(1/3,1/4)"), W, 6);
  EXPECT_EQ(a.m, 3);
  EXPECT_EQ(a.gl_report.status, Status::Pass);
  AnnihilatorResult p = minimal_annihilator(kplus("gamma+(0,1/4)"), W, 6);
  EXPECT_LE(p.m, 3);
  EXPECT_EQ(p.gl_report.status, Status::Pass);
}

TEST(Catalogue, AllPass) {
  auto rs = verify_identity_catalogue(8);
  for (const auto& r : rs) EXPECT_NE(r.status, Status::Fail) << r.name << ": " << r.witness.value_or("");
  EXPECT_TRUE(std::is_sorted(rs.begin(), rs.end(), [](auto& a, auto& b) { return a.name < b.name; }));
  ASSERT_TRUE(find(rs, "chain.OmegaG.algebra"));
  ASSERT_TRUE(find(rs, "reconstruction.G[n=8]"));
}

TEST(Catalogue, MutatedCoefficientFails) {
  CatalogueOptions opts;
  opts.chain_coefficient = Rational(1);
  auto rs = verify_identity_catalogue(2, opts);
  const CheckReport* r = find(rs, "chain.OmegaG.algebra");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, Status::Fail);
  ASSERT_TRUE(r->witness);
  EXPECT_NE(r->witness->find("G("), std::string::npos);
}

TEST(Catalogue, MutatedExtensionFails) {
  CatalogueOptions opts;
  opts.l_prime_minus_one = SmashElement::generator(Generator::L(-1), SmashMode::AK);
  auto rs = verify_identity_catalogue(2, opts);
  EXPECT_EQ(find(rs, "reconstruction.G[n=0]")->status, Status::Fail);
}

TEST(ModuleAxiomSuite, ConventionSplit) {
  auto corrected = verify_module_axiom(khat("gamma(l,b)"), Window{-8, 8, 0}, 3);
  for (const auto& r : corrected) EXPECT_EQ(r.status, Status::Pass) << r.name;
  auto printed = verify_module_axiom(parse_module("gamma(l,b)", AlgebraMode::KHat, SignConvention::PaperPrinted),
                                     Window{-8, 8, 0}, 3);
  for (const auto& r : printed) {
    const bool odd_odd = r.name.find("[G(") != std::string::npos && r.name.find(",G(") != std::string::npos;
    EXPECT_EQ(r.status == Status::Fail, odd_odd) << r.name;
  }
  const CheckReport* g = find(printed, "module-axiom[G(1/2),G(-1/2)]");
  ASSERT_TRUE(g);
  EXPECT_EQ(*g->witness, "at (0,0): (4*l + 4*b) * t^0");
}

TEST(Classification, Table) {
  auto rows = classification_table();
  bool hw = false, red = false, plus = false;
  for (const auto& r : rows) {
    if (r.family == "highest weight modules") {
      hw = true;
      EXPECT_TRUE(r.check.empty());
      EXPECT_EQ(r.verdict, "out of scope");
    }
    if (r.family == "gamma(l,b)" && r.condition == "l in Z, b in {0,1/2}") {
      red = true;
      EXPECT_NE(r.verdict.find("gamma'"), std::string::npos);
    }
    if (r.family == "gamma+(0,b)" && r.condition == "b != 0") {
      plus = true;
      EXPECT_EQ(r.verdict, "simple");
    }
  }
  EXPECT_TRUE(hw && red && plus);
  auto checks = classification_checks(W, 3);
  for (const auto& r : rows) {
    if (!r.check.empty()) EXPECT_TRUE(find(checks, r.check)) << r.check;
  }
  for (const auto& c : checks) EXPECT_EQ(c.status, Status::Pass) << c.name << ": " << c.witness.value_or("");
}
