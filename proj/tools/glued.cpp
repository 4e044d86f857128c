// glued: command line front end for the glued-product library.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "glued/cube.hpp"
#include "glued/dynamics.hpp"
#include "glued/error.hpp"
#include "glued/finite_pv.hpp"
#include "glued/lef.hpp"
#include "glued/pv.hpp"
#include "glued/suite.hpp"

using namespace glued;

namespace
{

enum class Format
{
  text,
  jsonl
};

struct Globals
{
  std::string left = "Z";
  std::string right = "Z";
  Format format = Format::text;
  bool verify_products = false;
};

PvContext context(Globals const &g)
{
  PvOptions opts;
  opts.verify_products = g.verify_products;
  return PvContext(parse_group(g.left), parse_group(g.right), opts);
}

void emit(Globals const &g, nlohmann::json const &record, std::string const &text)
{
  if (g.format == Format::jsonl)
    std::cout << record.dump() << '\n';
  else
    std::cout << text << '\n';
}

int run_eval(Globals const &g, std::string const &word)
{
  auto ctx = context(g);
  auto sigma = ctx.eval(word);
  auto text = ctx.format(sigma);
  emit(g, {{"word", word}, {"normal_form", text}}, text);
  return 0;
}

int run_classify(Globals const &g, bool verify)
{
  auto G = parse_group(g.left);
  auto H = parse_group(g.right);
  if (!G->is_finite() || !H->is_finite())
    throw RegimeError("classify needs two finite groups");
  auto degree = *G->order() + *H->order() - 1;
  auto cls = classify(*G, *H);
  auto name = describe(cls, degree);
  nlohmann::json rec{{"left", G->name()}, {"right", H->name()},
                     {"degree", degree}, {"class", name}};
  if (!verify) {
    emit(g, rec, name);
    return 0;
  }
  auto v = verify_classification(G, H);
  rec["order"] = v.order.str();
  rec["expected"] = v.expected.str();
  rec["verified"] = v.ok;
  emit(g, rec,
       name + " order " + v.order.str() + (v.ok ? "" : " (expected " +
                                                         v.expected.str() + ")"));
  return v.ok ? 0 : 1;
}

int run_cube_ball(Globals const &g, std::size_t radius, std::int64_t payload,
                  bool dot)
{
  auto ctx = context(g);
  auto ball = cube_ball(ctx, radius, payload);
  if (dot && g.format != Format::jsonl)
    std::cout << to_dot(ball, ctx.point_format());
  else
    std::cout << to_jsonl(ball, ctx.point_format());
  return 0;
}

int run_cube_transport(Globals const &g, std::string const &from,
                       std::string const &to)
{
  auto ctx = context(g);
  auto v = parse_vertex(from, ctx.point_format());
  auto w = parse_vertex(to, ctx.point_format());
  auto sigma = transporter(ctx, v, w);
  auto text = ctx.format(sigma);
  emit(g, {{"from", from}, {"to", to}, {"sigma", text},
           {"s", s_invariant(v)}},
       text);
  return 0;
}

int run_lef_check(Globals const &g, std::int64_t n, std::string const &mode_text,
                  std::optional<std::uint64_t> modulus, std::uint64_t seed,
                  std::uint64_t budget)
{
  auto ctx = context(g);
  auto mode = CheckMode::parse(mode_text);
  std::vector<LefReport> reports;
  if (ctx.regime() == Regime::mixed) {
    reports = lef_mixed(ctx, n, mode, seed, modulus, budget);
  } else {
    auto approx = LefApprox::standard(ctx, n, modulus);
    reports.push_back(check_multiplicativity(approx, mode, seed, budget));
    reports.push_back(check_injectivity(approx, mode, seed + 1, budget));
    reports.push_back(check_window_closure(approx, mode, seed + 2, budget));
    reports.push_back(check_equivariance(approx));
    reports.push_back(check_pushforward(approx, budget));
    reports.push_back(check_point_bijection(approx));
  }
  bool ok = true;
  nlohmann::json all = nlohmann::json::array();
  for (auto const &r : reports) {
    ok = ok && r.ok();
    if (g.format == Format::jsonl)
      std::cout << r.to_json().dump() << '\n';
    all.push_back(r.to_json());
  }
  if (g.format != Format::jsonl)
    std::cout << nlohmann::json{{"n", n}, {"mode", mode.str()}, {"ok", ok},
                                {"reports", all}}
                   .dump(2)
              << '\n';
  return ok ? 0 : 1;
}

int run_pong(Globals const &g, std::string const &gl, std::string const &hl,
             std::size_t length)
{
  auto ctx = context(g);
  auto r = free_semigroup_check(ctx, ctx.g().parse(gl), ctx.h().parse(hl), length);
  nlohmann::json rec{{"words", r.words_checked}, {"distinct", r.distinct}};
  std::string text = std::to_string(r.words_checked) + " words, ";
  if (r.collision) {
    rec["collision"] = {r.collision->first, r.collision->second};
    text += "collision: " + r.collision->first + " = " + r.collision->second;
  } else {
    text += "pairwise distinct";
  }
  emit(g, rec, text);
  return r.distinct ? 0 : 1;
}

int run_folner(Globals const &g, std::int64_t n, std::string const &word)
{
  auto ctx = context(g);
  auto set = folner_set(ctx.g_handle(), n);
  auto ratio = format_rational(folner_ratio(ctx, set, ctx.eval(word)));
  emit(g, {{"n", n}, {"test", word}, {"size", set.points.size()}, {"ratio", ratio}},
       ratio);
  return 0;
}

int run_suite_cmd(Globals const &g, std::string const &name, SuiteConfig cfg)
{
  cfg.left = g.left;
  cfg.right = g.right;
  auto report = run_suite(name, cfg);
  std::cout << (g.format == Format::jsonl ? report.jsonl() : report.text());
  return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Exact computations in the glued product of two groups"};
  app.set_config("--config", "", "TOML or INI file of option defaults; flags win");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--left", g.left, "Group spec of G (Z, Z^d, Z/n, Fk, Sn, JSON)")
    ->capture_default_str();
  app.add_option("--right", g.right, "Group spec of H")->capture_default_str();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
    ->check(CLI::IsMember({"text", "jsonl"}))
    ->capture_default_str();
  app.add_flag("--verify-products", g.verify_products,
               "Cross-check every product against the action");

  std::function<int()> action;

  auto *eval = app.add_subcommand("eval", "Normal form of a word");
  std::string word;
  eval->add_option("word", word, "Letters G:<lit> H:<lit> PERM:<cycles>");
  eval->callback([&] { action = [&] { return run_eval(g, word); }; });

  auto *cls = app.add_subcommand("classify", "Alt or Sym for two finite groups");
  bool verify = false;
  cls->add_flag("--verify", verify, "Confirm the order by Schreier-Sims");
  cls->callback([&] { action = [&] { return run_classify(g, verify); }; });

  auto *cube = app.add_subcommand("cube", "Cube complex vertices");
  cube->require_subcommand(1);
  cube->fallthrough();
  auto *ball = cube->add_subcommand("ball", "Vertices and edges near G");
  std::size_t radius = 2;
  std::int64_t payload = 2;
  bool dot = true;
  ball->add_option("--radius", radius)->capture_default_str();
  ball->add_option("--payload", payload, "Largest point length toggled")
    ->capture_default_str();
  ball->add_flag("--dot,!--records", dot, "DOT graph (default) or jsonl records");
  ball->callback(
    [&] { action = [&] { return run_cube_ball(g, radius, payload, dot); }; });
  auto *transport = cube->add_subcommand("transport", "Element moving one vertex to another");
  std::string from, to;
  transport->add_option("--from", from, "Vertex such as \"{e g:1}\"")->required();
  transport->add_option("--to", to)->required();
  transport->callback(
    [&] { action = [&] { return run_cube_transport(g, from, to); }; });

  auto *lef = app.add_subcommand("lef", "Finite approximations");
  lef->require_subcommand(1);
  lef->fallthrough();
  auto *check = lef->add_subcommand("check", "Run the Phi_n checks");
  std::int64_t n = 1;
  std::string mode = "exhaustive";
  std::optional<std::uint64_t> modulus;
  std::uint64_t seed = 1;
  std::uint64_t budget = default_budget();
  check->add_option("-n", n)->capture_default_str();
  check->add_option("--mode", mode, "exhaustive or sample:K")->capture_default_str();
  check->add_option("--modulus", modulus, "Quotient modulus for Z and Z^d");
  check->add_option("--seed", seed)->capture_default_str();
  check->add_option("--budget", budget, "Pair-check cap (PV_BUDGET)")
    ->capture_default_str();
  check->callback([&] {
    action = [&] { return run_lef_check(g, n, mode, modulus, seed, budget); };
  });

  auto *pong = app.add_subcommand("pong", "Free semigroup check");
  // --h names the H letter here, so help is long-form only
  pong->set_help_flag("--help", "Print this help message and exit");
  std::string gl = "1", hl = "1";
  std::size_t length = 8;
  pong->add_option("--g", gl)->capture_default_str();
  pong->add_option("--h", hl)->capture_default_str();
  pong->add_option("-L", length)->capture_default_str();
  pong->callback([&] { action = [&] { return run_pong(g, gl, hl, length); }; });

  auto *fol = app.add_subcommand("folner", "Boundary ratio of a Folner set");
  std::int64_t fn = 1;
  std::string test = "G:1";
  fol->add_option("--n", fn)->capture_default_str();
  fol->add_option("--test", test, "Element word")->capture_default_str();
  fol->callback([&] { action = [&] { return run_folner(g, fn, test); }; });

  auto *suite = app.add_subcommand("suite", "Property suites");
  std::string suite_name = "all";
  SuiteConfig cfg;
  cfg.budget = default_budget();
  std::string only;
  suite->add_option("name", suite_name, "core, finite, cube, lef, dynamics or all")
    ->capture_default_str();
  suite->add_option("--seed", cfg.seed)->capture_default_str();
  suite->add_option("--samples", cfg.samples)->capture_default_str();
  suite->add_option("--budget", cfg.budget)->capture_default_str();
  suite->add_option("--lef-n", cfg.lef_n)->capture_default_str();
  suite->add_option("--lef-mode", cfg.lef_mode)->capture_default_str();
  suite->add_option("--modulus", cfg.modulus);
  suite->add_option("--only", only, "Run one check");
  suite->callback([&] {
    action = [&] {
      if (!only.empty())
        cfg.only = only;
      return run_suite_cmd(g, suite_name, cfg);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  g.format = format == "jsonl" ? Format::jsonl : Format::text;
  try {
    return action();
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
