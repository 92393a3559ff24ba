#include "nsalg/analysis.hpp"

#include "nsalg/error.hpp"

#include <algorithm>

namespace nsalg {

namespace {

const std::vector<std::string> kGridLambda{"-1", "0", "1/3", "1", "7/5"};
const std::vector<std::string> kGridB{"-1", "0", "1/4", "1/2", "1"};

bool integral(const std::string& q) { return Rational::parse(q).is_integer(); }

bool b_special(const std::string& b) { return b == "0" || b == "1/2"; }

std::string gamma_desc(const std::string& family, const std::string& l, const std::string& b) {
  return family + "(" + l + "," + b + ")";
}

struct Expectation {
  std::string descriptor;
  AlgebraMode algebra;
  Verdict::Kind expected;
};

// Runs the verdicts; returns the first disagreement.
std::optional<std::string> first_mismatch(const std::vector<Expectation>& cases, const Window& w, int gen_range) {
  for (const Expectation& c : cases) {
    GammaModule m = parse_module(c.descriptor, c.algebra);
    Verdict v = simplicity_verdict(m, w, gen_range);
    if (v.kind != c.expected) {
      return m.descriptor() + " over " + to_string(c.algebra) + ": expected " + to_string(c.expected) + ", got " +
             v.str();
    }
  }
  return std::nullopt;
}

CheckReport verdict_report(const std::string& name, const std::string& anchor, const Expectation& c,
                           const Window& w, int gen_range) {
  GammaModule m = parse_module(c.descriptor, c.algebra);
  Verdict v = simplicity_verdict(m, w, gen_range);
  const std::string params = "module=" + m.descriptor() + " algebra=" + to_string(c.algebra) + " window=" +
                             w.str() + " gen-range=" + std::to_string(gen_range) + " expected=" +
                             to_string(c.expected);
  if (v.kind == c.expected) return CheckReport::pass(name, anchor, params);
  return CheckReport::fail(name, anchor, params, v.str());
}

struct IsoCase {
  std::string m1;
  std::string m2;
  bool expected;
};

const std::vector<IsoCase>& iso_cases() {
  static const std::vector<IsoCase> cases{
      {"gamma(1/3,1/4)", "gamma(4/3,1/4)", true},  {"gamma(1/3,1/2)", "gamma(4/3,0)", true},
      {"gamma(1/3,0)", "gamma(4/3,1/2)", true},    {"gamma'(0,0)", "pi(gamma'(0,1/2))", true},
      {"gamma(1/3,0)", "gamma(1/3,1/4)", false},   {"gamma(1/3,1/4)", "gamma(1/2,1/4)", false},
  };
  return cases;
}

CheckReport iso_report(const std::string& a, const std::string& b, bool expected, const Window& w,
                       int gen_range) {
  GammaModule m1 = parse_module(a, AlgebraMode::KHat);
  GammaModule m2 = parse_module(b, AlgebraMode::KHat);
  std::string reason;
  auto found = find_intertwiner(m1, m2, w, gen_range, &reason);
  const std::string name = "iso[" + m1.descriptor() + " ~ " + m2.descriptor() + "]";
  const std::string anchor = expected ? "isomorphic" : "not isomorphic";
  const std::string params = "window=" + w.str() + " gen-range=" + std::to_string(gen_range) +
                             " expected=" + (expected ? "found" : "none");
  if (found.has_value() == expected) return CheckReport::pass(name, anchor, params);
  return CheckReport::fail(name, anchor, params, found ? "intertwiner found: " + found->str() : "none: " + reason);
}

}  // namespace

std::vector<CheckReport> reducibility_grid(const Window& w, int gen_range) {
  std::vector<CheckReport> out;
  for (const std::string& l : kGridLambda) {
    for (const std::string& b : kGridB) {
      const bool red = integral(l) && b_special(b);
      out.push_back(verdict_report("grid.khat[" + gamma_desc("gamma", l, b) + "]",
                                   "simple iff lambda not in Z or b not in {0,1/2}",
                                   {gamma_desc("gamma", l, b), AlgebraMode::KHat,
                                    red ? Verdict::Kind::Reducible : Verdict::Kind::Simple},
                                   w, gen_range));
      out.push_back(verdict_report("grid.kplus[" + gamma_desc("gamma", l, b) + "]",
                                   "simple over k+ iff lambda not in Z",
                                   {gamma_desc("gamma", l, b), AlgebraMode::KPlus,
                                    integral(l) ? Verdict::Kind::Reducible : Verdict::Kind::Simple},
                                   w, gen_range));
    }
  }
  for (const std::string& b : kGridB) {
    for (const std::string fam : {"gamma+", "gamma-"}) {
      out.push_back(verdict_report("grid.kplus[" + gamma_desc(fam, "0", b) + "]",
                                   fam + std::string("(0,b) simple over k+ for every b"),
                                   {gamma_desc(fam, "0", b), AlgebraMode::KPlus, Verdict::Kind::Simple}, w,
                                   gen_range));
    }
  }
  sort_reports(out);
  return out;
}

std::vector<CheckReport> isomorphism_suite(const Window& w, int gen_range) {
  std::vector<CheckReport> out;
  for (const IsoCase& c : iso_cases()) {
    out.push_back(iso_report(c.m1, c.m2, c.expected, w, gen_range));
    out.push_back(iso_report(c.m2, c.m1, c.expected, w, gen_range));
  }
  sort_reports(out);
  return out;
}

std::vector<ClassificationRow> classification_table() {
  return {
      {"khat", "highest weight modules", "", "out of scope", ""},
      {"khat", "lowest weight modules", "", "out of scope", ""},
      {"khat", "gamma(l,b)", "l not in Z, or b not in {0,1/2}", "simple", "classify.khat.gamma"},
      {"khat", "gamma(l,b)", "l in Z, b in {0,1/2}", "reducible; simple sub-quotient gamma'(l,b)",
       "classify.khat.gamma"},
      {"khat", "gamma'(l,b)", "l in Z, b in {0,1/2}", "simple; gamma'(0,0) ~ pi(gamma'(0,1/2))",
       "classify.khat.gamma-prime"},
      {"khat", "gamma(l1,b1) ~ gamma(l2,b2)", "l1-l2 in Z and b1=b2, or l1 not in Z and {b1,b2}={0,1/2}",
       "isomorphic up to parity change", "classify.khat.iso"},
      {"kplus", "gamma(l,b)", "l not in Z", "simple", "classify.kplus.gamma"},
      {"kplus", "gamma(l,b)", "l in Z", "reducible; use gamma+(0,b), gamma-(0,b)", "classify.kplus.gamma"},
      {"kplus", "gamma+(0,b)", "b != 0", "simple", "classify.kplus.gamma+"},
      {"kplus", "gamma+(0,0)", "b = 0", "reducible; t^0 spans a trivial submodule", "classify.kplus.gamma+"},
      {"kplus", "gamma-(0,b)", "b != 1/2", "simple", "classify.kplus.gamma-"},
      {"kplus", "gamma-(0,1/2)", "b = 1/2", "reducible; keys other than (-1,1) span a submodule",
       "classify.kplus.gamma-"},
  };
}

std::vector<CheckReport> classification_checks(const Window& w, int gen_range) {
  const std::string params = "window=" + w.str() + " gen-range=" + std::to_string(gen_range);
  std::vector<CheckReport> out;
  auto push = [&](const std::string& name, const std::string& anchor, std::optional<std::string> witness) {
    out.push_back(witness ? CheckReport::fail(name, anchor, params, *witness)
                          : CheckReport::pass(name, anchor, params));
  };

  std::vector<Expectation> khat, kplus, plus, minus, prime;
  for (const std::string& l : kGridLambda) {
    for (const std::string& b : kGridB) {
      khat.push_back({gamma_desc("gamma", l, b), AlgebraMode::KHat,
                      integral(l) && b_special(b) ? Verdict::Kind::Reducible : Verdict::Kind::Simple});
      kplus.push_back({gamma_desc("gamma", l, b), AlgebraMode::KPlus,
                       integral(l) ? Verdict::Kind::Reducible : Verdict::Kind::Simple});
      if (integral(l) && b_special(b)) prime.push_back({gamma_desc("gamma'", l, b), AlgebraMode::KHat,
                                                        Verdict::Kind::Simple});
    }
  }
  for (const std::string& b : kGridB) {
    plus.push_back({gamma_desc("gamma+", "0", b), AlgebraMode::KPlus,
                    b == "0" ? Verdict::Kind::Reducible : Verdict::Kind::Simple});
    minus.push_back({gamma_desc("gamma-", "0", b), AlgebraMode::KPlus,
                     b == "1/2" ? Verdict::Kind::Reducible : Verdict::Kind::Simple});
  }
  push("classify.khat.gamma", "gamma(l,b) simple iff l not in Z or b not in {0,1/2}", first_mismatch(khat, w, gen_range));
  push("classify.khat.gamma-prime", "gamma'(l,b) simple", first_mismatch(prime, w, gen_range));
  push("classify.kplus.gamma", "gamma(l,b) simple over k+ iff l not in Z", first_mismatch(kplus, w, gen_range));
  push("classify.kplus.gamma+", "gamma+(0,b) simple over k+ for b != 0", first_mismatch(plus, w, gen_range));
  push("classify.kplus.gamma-", "gamma-(0,b) simple over k+ for b != 1/2", first_mismatch(minus, w, gen_range));

  std::optional<std::string> iso;
  for (const CheckReport& r : isomorphism_suite(w, gen_range)) {
    if (r.status == Status::Fail && !iso) iso = r.name + ": " + *r.witness;
  }
  push("classify.khat.iso", "isomorphism conditions", iso);
  sort_reports(out);
  return out;
}

std::string render_classification(const std::vector<ClassificationRow>& rows) {
  std::vector<std::string> header{"algebra", "family", "condition", "verdict", "certified by"};
  std::vector<std::size_t> width(header.size());
  auto cells = [](const ClassificationRow& r) {
    return std::vector<std::string>{r.algebra, r.family, r.condition, r.verdict, r.check.empty() ? "-" : r.check};
  };
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows) {
    auto c = cells(r);
    for (std::size_t i = 0; i < c.size(); ++i) width[i] = std::max(width[i], c[i].size());
  }
  auto line = [&](const std::vector<std::string>& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
      out += c[i];
      if (i + 1 < c.size()) out += std::string(width[i] - c[i].size() + 2, ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  std::string out = line(header);
  for (const auto& r : rows) out += line(cells(r));
  return out;
}

}  // namespace nsalg
