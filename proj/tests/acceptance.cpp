#include "nsalg/analysis.hpp"
#include "nsalg/cli.hpp"
#include "nsalg/error.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace nsalg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

void require_all(Outcome& o, const std::vector<CheckReport>& rs, const std::string& prefix = "") {
  for (const auto& r : rs) {
    if (!prefix.empty() && r.name.rfind(prefix, 0) != 0) continue;
    require(o, r.status != Status::Fail, r.name + ": " + r.witness.value_or(""));
  }
}

bool has(const std::vector<CheckReport>& rs, const std::string& prefix) {
  for (const auto& r : rs)
    if (r.name.rfind(prefix, 0) == 0) return true;
  return false;
}

Outcome c1() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto rs = verify_jacobi(4);
  require_all(o, rs);
  require(o, std::chrono::steady_clock::now() - t0 < std::chrono::seconds(30), "runtime over 30 s");
  return o;
}

Outcome c2() {
  Outcome o;
  auto rs = verify_identity_catalogue(8);
  require(o, has(rs, "reconstruction.L[n=8]") && has(rs, "reconstruction.G[n=8]"), "missing n=8");
  require_all(o, rs, "reconstruction.");
  CatalogueOptions bad;
  bad.l_prime_minus_one = SmashElement::generator(Generator::L(-1), SmashMode::AK);
  bool mutated_fails = false;
  for (const auto& r : verify_identity_catalogue(2, bad))
    if (r.name.rfind("reconstruction.", 0) == 0 && r.name.find("[n=0]") != std::string::npos)
      mutated_fails |= r.status == Status::Fail;
  require(o, mutated_fails, "mutated extension did not fail at n=0");
  return o;
}

Outcome c3() {
  Outcome o;
  auto rs = verify_identity_catalogue(8);
  require(o, has(rs, "centralizer.L'[n=8]") && has(rs, "centralizer.G'[n=8]"), "missing n=8");
  require_all(o, rs, "centralizer.");
  return o;
}

Outcome c4() {
  Outcome o;
  auto rs = verify_identity_catalogue(2);
  require(o, has(rs, "psi.[L',L']") && has(rs, "psi.[L',G']") && has(rs, "psi.[G',G']"), "missing psi table");
  require_all(o, rs, "psi.");
  return o;
}

Outcome c5() {
  Outcome o;
  const Window w{-8, 8, 0};
  require_all(o, verify_module_axiom(parse_module("gamma(l,b)", AlgebraMode::KHat), w, 3));
  auto printed =
      verify_module_axiom(parse_module("gamma(l,b)", AlgebraMode::KHat, SignConvention::PaperPrinted), w, 3);
  for (const auto& r : printed) {
    const bool odd_odd = r.name.find("[G(") != std::string::npos && r.name.find(",G(") != std::string::npos;
    require(o, (r.status == Status::Fail) == odd_odd, "paper-printed split wrong at " + r.name);
  }
  GammaModule p = parse_module("gamma(l,b)", AlgebraMode::KHat, SignConvention::PaperPrinted);
  const Scalar l = Scalar::lambda(), b = Scalar::b();
  for (int k = -8; k <= 8; ++k) {
    ModuleVector res = module_axiom_residual(Generator::G_doubled(1), Generator::G_doubled(-1), {k, 0}, p);
    ModuleVector want = (Scalar(4) * (l + Scalar(k) + b)) * ModuleVector({k, 0});
    require(o, res == want, "residual at k=" + std::to_string(k) + ": " + res.str());
  }
  return o;
}

Outcome c6() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& r : reducibility_grid(Window{-10, 10, 3}, 3)) {
    if (r.status != Status::Fail) continue;
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + r.name + ": " + r.witness.value_or("");
  }
  require(o, std::chrono::steady_clock::now() - t0 < std::chrono::minutes(2), "runtime over 2 min");
  return o;
}

Outcome c7() {
  Outcome o;
  require_all(o, isomorphism_suite(Window{-10, 10, 3}, 3));
  return o;
}

Outcome c8() {
  Outcome o;
  AnnihilatorResult a = minimal_annihilator(parse_module("gamma(1/3,1/4)", AlgebraMode::KHat), Window{-10, 10, 3}, 6);
  require(o, a.m >= 1 && a.m <= 6, "order out of range");
  require(o, a.m == 1 || a.minimality_witness.has_value(), "no minimality witness");
  require(o, a.gl_report.status == Status::Pass, "G-L sums: " + a.gl_report.witness.value_or(""));
  auto rs = verify_identity_catalogue(2);
  for (const char* n : {"omega.GL.module", "chain.tL.module", "chain.tG.module", "chain.GL.module",
                        "chain.OmegaG.algebra"})
    require(o, has(rs, n), std::string("missing ") + n);
  require_all(o, rs, "omega.");
  require_all(o, rs, "chain.");
  if (o.ok) o.detail = "m = " + std::to_string(a.m);
  return o;
}

Outcome c9() {
  Outcome o;
  auto run = [](const std::vector<std::string>& args, std::string* out = nullptr) {
    std::ostringstream os, es;
    int code = cli::run(args, os, es);
    if (out) *out = os.str();
    return code;
  };
  const std::vector<std::string> args{"verify", "--suite", "jacobi", "--range", "2", "--format", "json"};
  std::string a, b;
  require(o, run(args, &a) == 0, "jacobi exit code");
  run(args, &b);
  require(o, a == b, "JSON not byte-identical");
  std::ifstream f(std::filesystem::path(NSALG_GOLDEN_DIR) / "jacobi_range2.json", std::ios::binary);
  std::ostringstream golden;
  golden << f.rdbuf();
  require(o, a == golden.str(), "JSON differs from golden file");
  auto inj = args;
  inj.push_back("--inject-failure");
  require(o, run(inj) == 1, "injected failure exit code");
  require(o, run({"module-axiom", "--convention", "paper-printed", "--gen-range", "1"}) == 1, "axiom exit code");
  require(o, run({"module-simplicity", "--module", "gamma(1/0,1)"}) == 2, "parse error exit code");
  require(o, run({"no-such-command"}) == 2, "usage error exit code");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"graded Jacobi and cocycle", c1},  {"reconstruction identities", c2}, {"centralizer suite", c3},
      {"psi bracket table", c4},          {"module axiom", c5},              {"reducibility grid", c6},
      {"isomorphism suite", c7},          {"annihilators", c8},              {"CLI golden and exit codes", c9}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
