#include "nsalg/cli.hpp"

#include "nsalg/analysis.hpp"
#include "nsalg/error.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace nsalg::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
  std::string suite = "all";
  int range = -1;
  std::string window = "-10..10";
  int margin = 3;
  int gen_range = 3;
  int max_m = 6;
  std::string lambda = "l";
  std::string b = "b";
  std::string algebra = "khat";
  std::string convention = "corrected";
  std::string format = "text";
  std::string out;
  std::vector<std::string> modules;
  std::string expect = "found";
  bool inject_failure = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app->add_option("--out", o.out, "write the report to this path");
  app->add_option("--convention", o.convention, "corrected or paper-printed")
      ->check(CLI::IsMember({"corrected", "paper-printed"}));
  app->add_flag("--inject-failure", o.inject_failure)->group("");
}

void add_window(CLI::App* app, Options& o) {
  app->add_option("--window", o.window, "key window A..B");
  app->add_option("--margin", o.margin, "interior margin")->check(CLI::NonNegativeNumber);
  app->add_option("--gen-range", o.gen_range, "generator index bound")->check(CLI::PositiveNumber);
}

void add_module(CLI::App* app, Options& o, bool twice = false) {
  auto* opt = app->add_option("--module", o.modules, "module descriptor, e.g. gamma(1/3,1/4)");
  opt->expected(twice ? 2 : 1);
  if (twice) opt->required();
  app->add_option("--lambda", o.lambda, "lambda as p/q or l");
  app->add_option("--b", o.b, "b as p/q or b");
  app->add_option("--algebra", o.algebra, "khat, k or kplus")->check(CLI::IsMember({"khat", "k", "kplus"}));
}

GammaModule module_from(const Options& o, std::size_t i) {
  const AlgebraMode alg = parse_algebra_mode(o.algebra);
  const SignConvention conv = parse_sign_convention(o.convention);
  if (i < o.modules.size()) return parse_module(o.modules[i], alg, conv);
  return parse_module("gamma(" + o.lambda + "," + o.b + ")", alg, conv);
}

void write_atomic(const std::string& path, const std::string& body) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + tmp.string() + " for writing");
    f << body;
    if (!f.flush()) throw Error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

std::string to_json(const std::string& command, const std::vector<std::string>& args,
                    const std::vector<CheckReport>& reports, const std::string& table) {
  nlohmann::ordered_json doc;
  doc["meta"]["tool"] = "nsalg";
  doc["meta"]["version"] = kVersion;
  doc["meta"]["command"] = command;
  doc["meta"]["args"] = args;
  if (!table.empty()) doc["meta"]["table"] = table;
  std::size_t failed = 0;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckReport& r : reports) {
    nlohmann::ordered_json c;
    c["name"] = r.name;
    c["paper_anchor"] = r.anchor;
    c["status"] = to_string(r.status);
    c["params"] = r.params;
    if (r.status != Status::Pass && r.witness) c["witness"] = *r.witness;
    failed += r.status == Status::Fail;
    doc["checks"].push_back(std::move(c));
  }
  doc["meta"]["failed"] = failed;
  return doc.dump(2) + "\n";
}

std::string to_text(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  std::size_t pass = 0, fail = 0, info = 0;
  for (const CheckReport& r : reports) {
    const std::string tag = r.status == Status::Pass ? "PASS" : r.status == Status::Fail ? "FAIL" : "INFO";
    os << tag << "  " << r.name << "\n";
    if (!r.params.empty()) os << "      params: " << r.params << "\n";
    if (r.status != Status::Pass && r.witness) os << "      " << (r.status == Status::Fail ? "witness: " : "") << *r.witness << "\n";
    pass += r.status == Status::Pass;
    fail += r.status == Status::Fail;
    info += r.status == Status::Info;
  }
  os << reports.size() << " checks: " << pass << " passed, " << fail << " failed, " << info << " info\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact checks for the Neveu-Schwarz algebra and its Gamma modules", "nsalg"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "jacobi, identities, module-axiom, grid, iso, classify or all")
      ->check(CLI::IsMember({"jacobi", "identities", "module-axiom", "grid", "iso", "classify", "all"}));
  verify->add_option("--range", o.range, "index bound (jacobi) or maximal n (identities)");
  verify->add_option("--max-m", o.max_m, "annihilator order bound")->check(CLI::PositiveNumber);
  add_window(verify, o);
  add_common(verify, o);

  auto* identities = app.add_subcommand("identities", "run the identity catalogue");
  identities->add_option("--range", o.range, "maximal n for the reconstruction and centralizer checks");
  identities->add_option("--max-m", o.max_m, "annihilator order bound")->check(CLI::PositiveNumber);
  add_window(identities, o);
  add_common(identities, o);

  auto* simplicity = app.add_subcommand("module-simplicity", "reachability verdict for one module");
  add_module(simplicity, o);
  add_window(simplicity, o);
  add_common(simplicity, o);

  auto* iso = app.add_subcommand("module-iso", "search for an intertwiner between two modules");
  add_module(iso, o, true);
  iso->add_option("--expect", o.expect, "found or none")->check(CLI::IsMember({"found", "none"}));
  add_window(iso, o);
  add_common(iso, o);

  auto* annihilator = app.add_subcommand("annihilator", "minimal Omega order for one module");
  add_module(annihilator, o);
  annihilator->add_option("--window", o.window, "key window A..B");
  annihilator->add_option("--margin", o.margin, "interior margin")->check(CLI::NonNegativeNumber);
  annihilator->add_option("--max-m", o.max_m, "order bound")->check(CLI::PositiveNumber);
  annihilator->add_option("--range", o.range, "sweep bound for k, s (default 2)");
  add_common(annihilator, o);

  auto* axiom = app.add_subcommand("module-axiom", "module axiom residuals for one module");
  add_module(axiom, o);
  add_window(axiom, o);
  add_common(axiom, o);

  auto* classify = app.add_subcommand("classify", "classification table with certifying checks");
  add_window(classify, o);
  add_common(classify, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string command = cmd->get_name();
  std::vector<CheckReport> reports;
  std::string table;
  try {
    const Window w = Window::parse(o.window, o.margin);
    // Usage-level validation happens before any check runs.
    std::vector<GammaModule> modules;
    if (command == "module-simplicity" || command == "annihilator" || command == "module-axiom") {
      modules.push_back(module_from(o, 0));
    } else if (command == "module-iso") {
      modules.push_back(module_from(o, 0));
      modules.push_back(module_from(o, 1));
      for (const GammaModule& m : modules) {
        if (!m.params().lambda.is_numeric() || !m.params().b.is_numeric()) throw Error("numeric parameters required");
      }
    }

    auto append = [&](std::vector<CheckReport> rs) {
      for (auto& r : rs) reports.push_back(std::move(r));
    };
    try {
      if (command == "verify") {
        const bool all = o.suite == "all";
        if (all || o.suite == "jacobi") append(verify_jacobi(o.range > 0 ? o.range : 4));
        if (all || o.suite == "identities") {
          CatalogueOptions co;
          co.window = w;
          co.max_m = o.max_m;
          append(verify_identity_catalogue(o.range > 0 ? o.range : 8, co));
        }
        if (all || o.suite == "module-axiom") {
          const Window aw = cmd->count("--window") ? w : Window{-8, 8, 0};
          append(verify_module_axiom(
              parse_module("gamma(l,b)", AlgebraMode::KHat, parse_sign_convention(o.convention)), aw, o.gen_range));
        }
        if (all || o.suite == "grid") append(reducibility_grid(w, o.gen_range));
        if (all || o.suite == "iso") append(isomorphism_suite(w, o.gen_range));
        if (all || o.suite == "classify") append(classification_checks(w, o.gen_range));
      } else if (command == "identities") {
        CatalogueOptions co;
        co.window = w;
        co.max_m = o.max_m;
        append(verify_identity_catalogue(o.range > 0 ? o.range : 8, co));
      } else if (command == "module-simplicity") {
        const GammaModule& m = modules[0];
        Verdict v = simplicity_verdict(m, w, o.gen_range);
        const std::string params = "module=" + m.descriptor() + " algebra=" + to_string(m.algebra()) +
                                   " window=" + w.str() + " gen-range=" + std::to_string(o.gen_range);
        reports.push_back(CheckReport::info("simplicity.verdict", "simple iff the reachability digraph is strongly connected",
                                            params, v.str()));
        if (v.kind == Verdict::Kind::Reducible) {
          std::string why;
          const bool closed = certificate_out_closed(m, v.certificate, w, o.gen_range, &why);
          reports.push_back(closed ? CheckReport::pass("simplicity.certificate", "certificate is out-closed", params)
                                   : CheckReport::fail("simplicity.certificate", "certificate is out-closed", params, why));
        }
      } else if (command == "module-iso") {
        std::string reason;
        auto found = find_intertwiner(modules[0], modules[1], w, o.gen_range, &reason);
        const bool want = o.expect == "found";
        const std::string name = "iso[" + modules[0].descriptor() + " ~ " + modules[1].descriptor() + "]";
        const std::string params = "window=" + w.str() + " gen-range=" + std::to_string(o.gen_range) +
                                   " expected=" + o.expect;
        const std::string detail = found ? "intertwiner: " + found->str() : "none: " + reason;
        if (found.has_value() == want) {
          reports.push_back(CheckReport::pass(name, want ? "isomorphic" : "not isomorphic", params));
          reports.push_back(CheckReport::info("iso.detail", "intertwiner search result", params, detail));
        } else {
          reports.push_back(CheckReport::fail(name, want ? "isomorphic" : "not isomorphic", params, detail));
        }
      } else if (command == "annihilator") {
        const GammaModule& m = modules[0];
        const int sweep = o.range > 0 ? o.range : 2;
        const std::string params = "module=" + m.descriptor() + " window=" + w.str() + " max-m=" +
                                   std::to_string(o.max_m) + " sweep=" + std::to_string(sweep);
        const std::string anchor = "Omega^{(m)} annihilates the module";
        try {
          AnnihilatorResult a = minimal_annihilator(m, w, o.max_m, sweep);
          reports.push_back(CheckReport::info("annihilator.order", anchor, params,
                                              "m = " + std::to_string(a.m) +
                                                  (a.minimality_witness ? "; at m-1 " + *a.minimality_witness : "")));
          reports.push_back(a.gl_report);
        } catch (const Error& e) {
          reports.push_back(CheckReport::fail("annihilator.order", anchor, params, e.what()));
        }
      } else if (command == "module-axiom") {
        const Window aw = cmd->count("--window") ? w : Window{-8, 8, 0};
        append(verify_module_axiom(modules[0], aw, o.gen_range));
      } else if (command == "classify") {
        table = render_classification(classification_table());
        append(classification_checks(w, o.gen_range));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      reports.push_back(CheckReport::fail("error", "check execution", command, e.what()));
    }
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (o.inject_failure) {
    reports.push_back(CheckReport::fail("injected-failure", "exit-code contract", "", "injected"));
  }
  sort_reports(reports);

  std::string body;
  if (o.format == "json") {
    body = to_json(command, args, reports, table);
  } else {
    body = table.empty() ? to_text(reports) : table + "\n" + to_text(reports);
  }
  try {
    if (o.out.empty()) {
      out << body;
    } else {
      write_atomic(o.out, body);
      out << "wrote " << o.out << "\n";
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return all_passed(reports) ? 0 : 1;
}

}  // namespace nsalg::cli
