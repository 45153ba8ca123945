#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>

#include "criteria.hpp"
#include "slemmakit/report.hpp"
#include "slemmakit/slemma.hpp"

using namespace slemmakit;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t seed = 0;
  std::string json_out;
  std::string verify_only;
};

void add_common(CLI::App* sub, Common& c, bool verify = true) {
  sub->add_option("--seed", c.seed, "seed for every sampling step")->default_val(0);
  sub->add_option("--json", c.json_out, "also write the report to this file");
  if (verify) sub->add_option("--verify-only", c.verify_only, "re-verify a saved report instead of solving");
}

std::size_t infer_nvars(const std::vector<std::string>& texts, std::size_t at_least) {
  static const std::regex var(R"(x(\d+))");
  std::size_t n = at_least;
  for (const auto& t : texts)
    for (auto it = std::sregex_iterator(t.begin(), t.end(), var); it != std::sregex_iterator(); ++it)
      n = std::max<std::size_t>(n, std::stoul((*it)[1]));
  return std::max<std::size_t>(n, 1);
}

std::string canonical(const std::string& label, const std::string& text, std::size_t n) {
  try {
    return format(parse_polynomial(text, n));
  } catch (const ParseError& e) {
    throw UsageError("--" + label + ": " + e.what() + "\n  " + text + "\n  " + std::string(e.position(), ' ') + "^");
  }
}

Json rationals(const std::string& text) {
  try {
    return vector_json(parse_rational_list(text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad point '") + text + "': " + e.what());
  }
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_json(const Json& j, const std::string& path) {
  std::cout << j.dump(2) << "\n";
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << "\n";
}

int run(const std::string& command, const Json& inputs, const Common& c) {
  if (!c.verify_only.empty()) {
    Json saved = read_json(c.verify_only);
    if (saved.value("command", "").rfind(command.substr(0, command.find(' ')), 0) != 0)
      throw UsageError("report was produced by '" + saved.value("command", "") + "', not '" + command + "'");
    Verdict v = verify_report(saved);
    write_json(Json{{"command", "verify-only"}, {"report", c.verify_only}, {"verdict", verdict_json(v)}}, c.json_out);
    return exit_code(v);
  }
  Report r = run_command(command, inputs, CommandOptions{c.seed});
  write_json(to_json(r), c.json_out);
  return exit_code(r.verdict);
}

void need(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing ") + flag);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slemmakit: exact multiplier certificates and refutations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;
  std::string f, g, q, p, slater, name, filter;
  std::vector<std::string> gens;
  std::vector<long> z;
  std::size_t budget = 0;
  unsigned levels = 5;
  long degree = 0;
  bool affine = false;

  auto* slemma = app.add_subcommand("slemma", "scalar multiplier t with f - t g PSD");
  slemma->add_option("--f", f);
  slemma->add_option("--g", g);
  slemma->add_option("--slater", slater, "point with g > 0, e.g. 1,0");
  slemma->add_flag("--affine", affine, "treat f, g as affine quadratics");
  slemma->add_option("--budget", budget, "sample count");
  add_common(slemma, common);
  slemma->require_subcommand(0, 1);
  auto* ncm = slemma->add_subcommand("no-constant-multiplier", "prove that no constant t >= 0 works");
  ncm->add_option("--f", f);
  ncm->add_option("--g", g);
  add_common(ncm, common);

  auto* s4 = app.add_subcommand("s4", "quadratic-form multiplier for a quartic over a quadratic");
  s4->add_option("--f", f);
  s4->add_option("--g", g);
  s4->add_option("--slater", slater);
  add_common(s4, common);

  auto* stab = app.add_subcommand("stability", "total stability of quadratic modules");
  stab->require_subcommand(1);
  auto* classify = stab->add_subcommand("classify", "T0 classification of a quadratic form");
  classify->add_option("--q", q);
  add_common(classify, common);
  auto* dense = stab->add_subcommand("dense", "density witness for leading forms");
  dense->add_option("--gens", gens)->delimiter(';');
  dense->add_option("--z", z)->delimiter(',');
  dense->add_option("--budget", budget);
  add_common(dense, common);
  auto* nomult = stab->add_subcommand("no-multiplier", "sign-flip bundle: no t with p - t q >= 0");
  nomult->add_option("--q", q);
  nomult->add_option("--p", p);
  nomult->add_option("--z", z)->delimiter(',');
  nomult->add_option("--budget", budget);
  add_common(nomult, common);

  auto* counter = app.add_subcommand("counter", "bundled counterexamples");
  counter->require_subcommand(1);
  auto* list = counter->add_subcommand("list", "catalog");
  add_common(list, common, false);
  auto* verify = counter->add_subcommand("verify", "re-derive the claim for a catalog entry");
  verify->add_option("name", name, "catalog name, see counter list");
  add_common(verify, common);
  auto* tower_cmd = counter->add_subcommand("tower", "blow-up tower");
  tower_cmd->add_option("--levels", levels)->check(CLI::Range(1u, 30u));
  add_common(tower_cmd, common);
  auto* blonk = counter->add_subcommand("blonk", "pair with deg f = d");
  blonk->add_option("--degree", degree);
  add_common(blonk, common);

  auto* incl = app.add_subcommand("check-inclusion", "search for x with g(x) >= 0 > f(x)");
  incl->add_option("--f", f);
  incl->add_option("--g", g);
  incl->add_option("--budget", budget);
  add_common(incl, common);

  auto* acc = app.add_subcommand("acceptance", "run the bundled acceptance criteria");
  acc->add_option("--filter", filter, "criterion number, name or tag");
  add_common(acc, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    bool verifying = !common.verify_only.empty();
    auto pair_inputs = [&](std::size_t at_least) {
      if (!verifying) {
        need(f, "--f");
        need(g, "--g");
      }
      std::size_t n = infer_nvars({f, g}, at_least);
      Json in{{"nvars", n}};
      if (!verifying) {
        in["f"] = canonical("f", f, n);
        in["g"] = canonical("g", g, n);
      }
      return in;
    };

    if (*ncm) return run("slemma no-constant-multiplier", pair_inputs(1), common);
    if (*slemma) {
      std::size_t pts = slater.empty() ? 1 : parse_rational_list(slater).size();
      Json in = pair_inputs(pts);
      if (!slater.empty()) in["slater"] = rationals(slater);
      if (affine) in["affine"] = true;
      if (budget) in["budget"] = budget;
      return run("slemma", in, common);
    }
    if (*s4) {
      if (!verifying) need(slater, "--slater");
      std::size_t pts = slater.empty() ? 2 : parse_rational_list(slater).size();
      Json in = pair_inputs(pts);
      if (!slater.empty()) in["slater"] = rationals(slater);
      return run("s4", in, common);
    }
    if (*classify) {
      if (!verifying) need(q, "--q");
      std::size_t n = infer_nvars({q}, 1);
      return run("stability classify", Json{{"nvars", n}, {"q", verifying ? "" : canonical("q", q, n)}}, common);
    }
    if (*dense) {
      if (!verifying && (gens.empty() || z.empty())) throw UsageError("missing --gens or --z");
      std::size_t n = infer_nvars(gens, z.size());
      Json gj = Json::array();
      for (const auto& s : gens) gj.push_back(canonical("gens", s, n));
      Json in{{"nvars", n}, {"gens", gj}, {"z", z}};
      if (budget) in["budget"] = budget;
      return run("stability dense", in, common);
    }
    if (*nomult) {
      if (!verifying) {
        need(q, "--q");
        need(p, "--p");
      }
      std::size_t n = infer_nvars({q, p}, z.size());
      Json in{{"nvars", n}};
      if (!verifying) {
        in["q"] = canonical("q", q, n);
        in["p"] = canonical("p", p, n);
      }
      if (!z.empty()) in["z"] = z;
      if (budget) in["budget"] = budget;
      return run("stability no-multiplier", in, common);
    }
    if (*list) return run("counter list", Json::object(), common);
    if (*verify) {
      if (!verifying) need(name, "instance name");
      return run("counter verify", Json{{"name", name}}, common);
    }
    if (*tower_cmd) return run("counter tower", Json{{"levels", levels}}, common);
    if (*blonk && !verifying && degree == 0) throw UsageError("missing --degree");
    if (*blonk) return run("counter blonk", Json{{"degree", degree}}, common);
    if (*incl) {
      Json in = pair_inputs(1);
      if (budget) in["budget"] = budget;
      return run("check-inclusion", in, common);
    }
    if (*acc) {
      auto results = acceptance::run(filter);
      int failed = 0;
      Json rows = Json::array();
      for (const auto& r : results) {
        std::cout << acceptance::format_line(r) << "\n";
        failed += !r.pass;
        rows.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"ms", r.ms}});
      }
      std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
      if (!common.json_out.empty()) {
        std::ofstream out(common.json_out);
        out << Json{{"command", "acceptance"}, {"filter", filter}, {"criteria", rows}}.dump(2) << "\n";
      }
      return failed ? 2 : 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
