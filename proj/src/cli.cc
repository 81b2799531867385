#include "invop/cli.hh"

#include <algorithm>
#include <chrono>
#include <fstream>

#include "CLI11.hpp"
#include "invop/parse.hh"
#include "invop/pvspace.hh"

namespace invop {

namespace {

struct Options {
  std::string format = "text";
  std::string out_file;
  bool timing = false;
};

std::string quote_command(const std::vector<std::string>& args) {
  std::string cmd;
  for (const auto& a : args) {
    if (!cmd.empty()) cmd += " ";
    bool plain = !a.empty() && a.find_first_of(" \t\"'") == std::string::npos;
    cmd += plain ? a : "\"" + a + "\"";
  }
  return cmd;
}

int emit(const Report& report, const Options& opt, std::ostream& out) {
  std::string text =
      opt.format == "json" ? report.to_json().dump(2) + "\n" : report.to_text();
  if (!opt.out_file.empty()) {
    std::ofstream f(opt.out_file);
    if (!f) throw usage_error("cannot open output file '" + opt.out_file + "'");
    f << text;
  } else {
    out << text;
  }
  return report.exit_code();
}

int default_max_power(const PVSpace& space) { return space.d0() + 3; }

Report report_bfunction(const PVSpace& space, int max_power) {
  Report r;
  r.space = space.name();
  try {
    BTable table = bfunction(space, max_power);
    auto blist = nlohmann::ordered_json::array();
    for (const auto& b : table.values) blist.push_back(b.str());
    r.values["b"] = blist;
    r.add("bfunction.proportionality", true,
          "Y*delta^(k+1) = b(k)*delta^k exactly for k <= " + std::to_string(max_power));
    r.add("bfunction.b0", table.values.at(0) == Rational(1), "b(0) = 1");
  } catch (const check_error& err) {
    r.add("bfunction.proportionality", false, err.what());
  }
  return r;
}

Report report_ufunction(const PVSpace& space, int max_power) {
  Report r;
  r.space = space.name();
  try {
    UniPolyQ u = u_polynomial(space, max_power);
    r.values["u"] = u.str();
    r.add("ufunction.stability", true,
          "b-points beyond the interpolation set lie on u");
    r.add("ufunction.u_at_0", u.coeff(0).is_zero(), "u(0) = 0");
    if (u.degree() == space.d0())
      r.add("ufunction.degree", true, "deg u = d0 = " + std::to_string(space.d0()));
    else
      r.add_flag("ufunction.degree", "deg u = " + std::to_string(u.degree()) +
                                         ", d0 = " + std::to_string(space.d0()));
  } catch (const check_error& err) {
    r.add("ufunction.stability", false, err.what());
  }
  return r;
}

Report report_radial(const PVSpace& space, const std::string& expr_text) {
  Report r;
  r.space = space.name();
  WordSum expr = parse_word_sum(expr_text, {"X", "Y", "E"});
  try {
    auto radial = radial_component(space, expr);
    r.values["radial"] = radial.str();
    r.add("radial.defined", true, "operator maps powers of delta to powers of delta");
    try {
      UniPolyQ u = u_polynomial(space, default_max_power(space));
      UPresentation<Rational> pres(u, space.d0());
      r.add("radial.abstract_agreement", radial == eval_word_laurent(expr, pres),
            "matches the U(Q,u," + std::to_string(space.d0()) + ") evaluation");
    } catch (const check_error&) {
      r.add_flag("radial.abstract_agreement", "skipped: no stable u for this space");
    }
  } catch (const check_error& err) {
    r.add("radial.defined", false, err.what());
  }
  return r;
}

Report report_normalform(const std::string& u_text, int n, const std::string& expr_text) {
  Report r;
  UniPolyQ u = parse_unipoly(u_text);
  UPresentation<Rational> pres(u, n);
  WordSum expr = parse_word_sum(expr_text, {"x", "y", "e"});
  UNormalForm<Rational> nf = u_normalize(expr, pres);
  r.values["normal_form"] = nf.str();
  r.add("normalform.computed", true,
        "normal form in U(Q, " + u.str() + ", " + std::to_string(n) + ")");
  return r;
}

Report report_igusa(const PVSpace& space, int depth) {
  Report r;
  r.space = space.name();
  auto dims = igusa_closure(space, depth);
  auto jdims = nlohmann::ordered_json::array();
  for (auto d : dims) jdims.push_back(d);
  r.values["dims"] = jdims;
  bool stabilized = dims.size() >= 2 && dims[dims.size() - 1] == dims[dims.size() - 2];
  r.add_flag("igusa.growth", stabilized
                                 ? "span dimension stabilized at " +
                                       std::to_string(dims.back())
                                 : "span dimension still growing at depth " +
                                       std::to_string(depth));
  return r;
}

Report report_spaces() {
  Report r;
  auto list = nlohmann::ordered_json::array();
  for (const auto& def : PVSpace::catalog()) {
    PVSpace space = PVSpace::load(def.name);
    list.push_back({{"name", def.name},
                    {"d0", space.d0()},
                    {"nvars", def.vars.size()},
                    {"delta", def.delta_text},
                    {"description", def.description}});
  }
  r.values["spaces"] = list;
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact calculator for invariant differential operators on "
               "multiplicity-free spaces with one-dimensional quotient"};
  app.name("invop");
  Options opt;
  app.add_option("--format", opt.format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", opt.out_file, "write the report to a file instead of stdout");
  app.add_flag("--timing", opt.timing, "include elapsed_ms in the report");
  app.require_subcommand(1);

  std::string space_arg, expr_text, u_text;
  int max_power = -1, n_arg = 1, depth = 4;

  auto* cmd_spaces = app.add_subcommand("spaces", "list the builtin catalog");
  auto* cmd_verify = app.add_subcommand("verify", "run the full verification suite");
  cmd_verify->add_option("space", space_arg, "catalog name or definition file")->required();
  cmd_verify->add_option("--max-power", max_power, "largest delta power to test");
  auto* cmd_b = app.add_subcommand("bfunction", "b(k) with Y*delta^(k+1) = b(k)*delta^k");
  cmd_b->add_option("space", space_arg, "catalog name or definition file")->required();
  cmd_b->add_option("--max-power", max_power, "largest k");
  auto* cmd_u = app.add_subcommand("ufunction", "the polynomial u with XY = u(E) radially");
  cmd_u->add_option("space", space_arg, "catalog name or definition file")->required();
  cmd_u->add_option("--max-power", max_power, "largest k used for stability");
  auto* cmd_radial = app.add_subcommand("radial", "radial component of a word in X, Y, E");
  cmd_radial->add_option("space", space_arg, "catalog name or definition file")->required();
  cmd_radial->add_option("--expr", expr_text, "expression, e.g. \"Y*X - X*Y\"")->required();
  auto* cmd_nf = app.add_subcommand("normalform", "normal form in U(Q, u, n)");
  cmd_nf->add_option("--u", u_text, "polynomial u in t, e.g. \"t^2 + t\"")->required();
  cmd_nf->add_option("--n", n_arg, "grading step n >= 1")->required();
  cmd_nf->add_option("--expr", expr_text, "word in x, y, e")->required();
  auto* cmd_igusa = app.add_subcommand("igusa", "Lie-closure dimension growth of {X, Y}");
  cmd_igusa->add_option("space", space_arg, "catalog name or definition file")->required();
  cmd_igusa->add_option("--depth", depth, "nested-commutator depth")->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    auto started = std::chrono::steady_clock::now();
    Report report;
    if (cmd_spaces->parsed()) {
      report = report_spaces();
    } else if (cmd_verify->parsed()) {
      PVSpace space = PVSpace::load(space_arg);
      report = verify_space(space, max_power >= 0 ? max_power : default_max_power(space));
    } else if (cmd_b->parsed()) {
      PVSpace space = PVSpace::load(space_arg);
      report = report_bfunction(space, max_power >= 0 ? max_power : default_max_power(space));
    } else if (cmd_u->parsed()) {
      PVSpace space = PVSpace::load(space_arg);
      report = report_ufunction(space, max_power >= 0 ? max_power : default_max_power(space));
    } else if (cmd_radial->parsed()) {
      PVSpace space = PVSpace::load(space_arg);
      report = report_radial(space, expr_text);
    } else if (cmd_nf->parsed()) {
      report = report_normalform(u_text, n_arg, expr_text);
    } else if (cmd_igusa->parsed()) {
      if (depth < 1) throw usage_error("depth must be >= 1");
      PVSpace space = PVSpace::load(space_arg);
      report = report_igusa(space, depth);
    }
    report.command = quote_command(args);
    if (opt.timing) {
      auto elapsed = std::chrono::steady_clock::now() - started;
      report.elapsed_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    return emit(report, opt, out);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace invop
