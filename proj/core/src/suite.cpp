#include "glued/suite.hpp"

#include <cctype>
#include <functional>
#include <random>
#include <sstream>

#include <boost/rational.hpp>
#include <nlohmann/json.hpp>

#include "glued/cube.hpp"
#include "glued/dynamics.hpp"
#include "glued/error.hpp"
#include "glued/finite_pv.hpp"
#include "glued/lef.hpp"
#include "glued/pv.hpp"

namespace glued
{

namespace
{

using Status = SuiteCheck::Status;

struct Outcome
{
  Status status = Status::pass;
  std::string detail;
};

Outcome verdict(bool ok, std::string detail)
{ return {ok ? Status::pass : Status::fail, std::move(detail)}; }

Outcome skipped(std::string why) { return {Status::skip, std::move(why)}; }

// Per-check stream: the same (seed, name) gives the same draws whether or
// not other checks run first.
std::mt19937_64 check_rng(std::uint64_t seed, std::string_view name)
{
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : name)
    h = (h ^ c) * 1099511628211ull;
  return std::mt19937_64(seed ^ h);
}

std::string shell_quote(std::string const &s)
{
  bool plain = !s.empty();
  for (char c : s)
    plain = plain && (std::isalnum(static_cast<unsigned char>(c)) ||
                      c == '/' || c == '^' || c == '_' || c == '.' || c == '-');
  if (plain)
    return s;
  std::string out = "'";
  for (char c : s)
    out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

std::string repro_line(std::string const &suite, std::string const &check,
                       SuiteConfig const &cfg)
{
  std::string s = "glued suite " + suite + " --left " + shell_quote(cfg.left) +
                  " --right " + shell_quote(cfg.right) +
                  " --seed " + std::to_string(cfg.seed) +
                  " --samples " + std::to_string(cfg.samples);
  if (suite == "lef") {
    s += " --lef-n " + std::to_string(cfg.lef_n) + " --lef-mode " + cfg.lef_mode +
         " --budget " + std::to_string(cfg.budget);
    if (cfg.modulus)
      s += " --modulus " + std::to_string(*cfg.modulus);
  }
  return s + " --only " + check;
}

struct Env
{
  SuiteConfig const &cfg;
  GroupHandle g;
  GroupHandle h;
  std::optional<PvContext> ctx; // absent when both factors are finite

  bool integers() const
  {
    return g->kind() == GroupKind::integers && h->kind() == GroupKind::integers;
  }
  bool both_infinite() const
  { return ctx && ctx->regime() == Regime::both_infinite; }
};

using CheckFn = std::function<Outcome(Env const &, std::mt19937_64 &)>;

struct CheckDef
{
  char const *name;
  CheckFn run;
};

std::string count(std::uint64_t k, char const *what)
{ return std::to_string(k) + " " + what; }

Element nontrivial(Group const &group, std::mt19937_64 &rng)
{
  for (;;) {
    auto x = group.random(rng, 4);
    if (!group.is_identity(x))
      return x;
  }
}

// core

Outcome product_law(Env const &env, std::mt19937_64 &rng)
{
  auto const &ctx = *env.ctx;
  std::uint64_t bad = 0;
  std::string first;
  for (std::uint64_t t = 0; t < env.cfg.samples; ++t) {
    auto s1 = ctx.random_element(rng, 4, 3);
    auto s2 = ctx.random_element(rng, 4, 3);
    auto prod = ctx.multiply(s1, s2);
    std::vector<Point> extra;
    for (int k = 0; k < 10; ++k)
      extra.push_back(ctx.random_point(rng, 8));
    if (auto p = ctx.check_product(s1, s2, prod, extra)) {
      if (!bad++)
        first = "; first: [" + ctx.format(s1) + "] * [" + ctx.format(s2) +
                "] at " + ctx.point_format().format(*p);
    }
  }
  return verdict(bad == 0, count(env.cfg.samples, "pairs, ") +
                             count(bad, "disagreements") + first);
}

Outcome associativity(Env const &env, std::mt19937_64 &rng)
{
  auto const &ctx = *env.ctx;
  std::uint64_t bad = 0;
  for (std::uint64_t t = 0; t < env.cfg.samples; ++t) {
    auto a = ctx.random_element(rng, 3);
    auto b = ctx.random_element(rng, 3);
    auto c = ctx.random_element(rng, 3);
    bad += ctx.multiply(ctx.multiply(a, b), c) != ctx.multiply(a, ctx.multiply(b, c));
  }
  return verdict(bad == 0, count(env.cfg.samples, "triples, ") +
                             count(bad, "failures"));
}

Outcome inverses(Env const &env, std::mt19937_64 &rng)
{
  auto const &ctx = *env.ctx;
  std::uint64_t bad = 0;
  for (std::uint64_t t = 0; t < env.cfg.samples; ++t) {
    auto a = ctx.random_element(rng, 4);
    auto inv = ctx.invert(a);
    bad += ctx.multiply(a, inv) != ctx.identity() ||
           ctx.multiply(inv, a) != ctx.identity();
  }
  return verdict(bad == 0, count(env.cfg.samples, "elements, ") +
                             count(bad, "failures"));
}

Outcome commutator(Env const &env, std::mt19937_64 &rng)
{
  if (!env.both_infinite())
    return skipped("needs two infinite factors");
  auto const &ctx = *env.ctx;
  std::uint64_t bad = 0;
  for (std::uint64_t t = 0; t < env.cfg.samples; ++t) {
    auto g = nontrivial(ctx.g(), rng);
    auto h = nontrivial(ctx.h(), rng);
    auto c = ctx.commutator(g, h);
    PvElement expected{ctx.g().identity(), ctx.h().identity(),
                       three_cycle(Point::base(), Point::unchecked(Side::g, g),
                                   Point::unchecked(Side::h, h))};
    bad += c != expected || ctx.power(c, 3) != ctx.identity();
  }
  return verdict(bad == 0, count(env.cfg.samples, "commutators, ") +
                             count(bad, "not the 3-cycle (e g h)"));
}

Outcome epimorphism(Env const &env, std::mt19937_64 &rng)
{
  if (!env.both_infinite())
    return skipped("needs two infinite factors");
  auto const &ctx = *env.ctx;
  std::uint64_t bad = 0;
  for (std::uint64_t t = 0; t < env.cfg.samples; ++t) {
    auto a = ctx.random_element(rng, 4);
    auto b = ctx.random_element(rng, 4);
    auto [ga, ha] = ctx.project(a);
    auto [gb, hb] = ctx.project(b);
    auto [gp, hp] = ctx.project(ctx.multiply(a, b));
    bad += gp != ctx.g().multiply(ga, gb) || hp != ctx.h().multiply(ha, hb);
  }
  return verdict(bad == 0, count(env.cfg.samples, "pairs, ") +
                             count(bad, "failures"));
}

Outcome monolith(Env const &env, std::mt19937_64 &rng)
{
  if (!env.both_infinite())
    return skipped("needs two infinite factors");
  auto const &ctx = *env.ctx;
  std::uint64_t bad = 0, kernel = 0, odd = 0;
  for (std::uint64_t t = 0; t < env.cfg.samples; ++t) {
    auto a = ctx.random_element(rng, 4);
    if (t % 2 == 0)
      a = ctx.multiply(ctx.invert(ctx.from_h(a.h)),
                       ctx.multiply(ctx.invert(ctx.from_g(a.g)), a));
    auto p = ctx.multiply(a, ctx.random_element(rng, 4));
    for (auto const *s : {&a, &p}) {
      auto [g, h] = ctx.project(*s);
      bool trivial = ctx.g().is_identity(g) && ctx.h().is_identity(h);
      kernel += trivial;
      bad += ctx.in_monolith(*s) != trivial;
    }
    odd += p.residual.parity() == Parity::odd;
  }
  return verdict(bad == 0 && odd == 0,
                 count(2 * env.cfg.samples, "elements (") +
                   count(kernel, "in the kernel), ") + count(bad, "mismatches, ") +
                   count(odd, "odd residuals"));
}

Outcome pong(Env const &env, std::mt19937_64 &)
{
  if (!env.integers())
    return skipped("needs Z*Z");
  auto r = free_semigroup_check(*env.ctx, Element{1}, Element{1}, 8);
  return verdict(r.distinct && r.words_checked == 510,
                 count(r.words_checked, "words") +
                   (r.collision ? ", collision " + r.collision->first + " = " +
                                    r.collision->second
                                : std::string(", pairwise distinct")));
}

// finite

std::vector<char const *> const catalog{"Z/2", "Z/3",     "Z/4",
                                        "Z/2xZ/2", "Z/5", "S3"};

Outcome classification(Env const &, std::mt19937_64 &)
{
  int pairs = 0;
  std::string bad;
  for (auto gs : catalog)
    for (auto hs : catalog) {
      auto G = parse_group(gs), H = parse_group(hs);
      if (*G->order() + *H->order() - 1 > 10)
        continue;
      ++pairs;
      auto v = verify_classification(G, H);
      if (!v.ok)
        bad += std::string(" ") + gs + "," + hs;
    }
  return verdict(bad.empty(), std::to_string(pairs) + " pairs" +
                                (bad.empty() ? ", all match Schreier-Sims"
                                             : ", mismatches:" + bad));
}

Outcome classify_symmetric(Env const &, std::mt19937_64 &)
{
  std::string bad;
  for (auto gs : catalog)
    for (auto hs : catalog) {
      auto G = parse_group(gs), H = parse_group(hs);
      if (classify(*G, *H) != classify(*H, *G))
        bad += std::string(" ") + gs + "," + hs;
    }
  return verdict(bad.empty(), bad.empty() ? "symmetric on the catalog"
                                          : "asymmetric:" + bad);
}

Outcome translation_signs(Env const &, std::mt19937_64 &)
{
  std::uint64_t checked = 0, bad = 0;
  for (auto gs : catalog) {
    auto G = parse_group(gs);
    for (auto const &x : G->elements()) {
      ++checked;
      int sign = regular_translation(*G, x).parity() == Parity::even ? 1 : -1;
      bad += translation_sign(*G, x) != sign;
    }
  }
  return verdict(bad == 0, count(checked, "elements, ") + count(bad, "mismatches"));
}

// cube

CubeVertex random_vertex(PvContext const &ctx, std::mt19937_64 &rng)
{
  std::uniform_int_distribution<int> size(0, 6);
  std::vector<Point> pts;
  for (int i = size(rng); i > 0; --i)
    pts.push_back(ctx.random_point(rng, 4));
  return CubeVertex::toggle(pts);
}

Outcome cube_action(Env const &env, std::mt19937_64 &rng)
{
  if (!env.both_infinite())
    return skipped("needs two infinite factors");
  auto const &ctx = *env.ctx;
  std::uint64_t bad_s = 0, bad_iso = 0;
  for (std::uint64_t t = 0; t < env.cfg.samples; ++t) {
    auto s = ctx.random_element(rng, 4);
    auto v = random_vertex(ctx, rng);
    auto w = random_vertex(ctx, rng);
    auto sv = act_vertex(ctx, s, v);
    bad_s += s_invariant(sv) != s_invariant(v);
    bad_iso += distance(sv, act_vertex(ctx, s, w)) != distance(v, w);
  }
  return verdict(bad_s == 0 && bad_iso == 0,
                 count(env.cfg.samples, "(sigma, v, w), ") +
                   count(bad_s, "s-invariance and ") +
                   count(bad_iso, "isometry failures"));
}

Outcome transport(Env const &env, std::mt19937_64 &rng)
{
  if (!env.both_infinite())
    return skipped("needs two infinite factors");
  auto const &ctx = *env.ctx;
  std::uint64_t want = std::max<std::uint64_t>(env.cfg.samples / 10, 10);
  std::uint64_t same = 0, cross = 0, bad = 0, accepted = 0;
  std::string first;
  while (same < want || cross < want) {
    auto v = random_vertex(ctx, rng);
    auto w = random_vertex(ctx, rng);
    if (s_invariant(v) == s_invariant(w)) {
      if (same == want)
        continue;
      ++same;
      auto sigma = transporter(ctx, v, w);
      if (act_vertex(ctx, sigma, v) != w || !ctx.in_monolith(sigma)) {
        if (!bad++)
          first = "; first: " + format_vertex(v, ctx.point_format()) + " -> " +
                  format_vertex(w, ctx.point_format());
      }
    } else {
      if (cross == want)
        continue;
      ++cross;
      try {
        transporter(ctx, v, w);
        ++accepted;
      } catch (FiberMismatch const &) {
      }
    }
  }
  return verdict(bad == 0 && accepted == 0,
                 count(same, "same-fiber pairs, ") + count(bad, "bad transports, ") +
                   count(cross, "cross-fiber pairs, ") +
                   count(accepted, "wrongly accepted") + first);
}

Outcome fixed_pair(Env const &env, std::mt19937_64 &)
{
  if (!env.both_infinite())
    return skipped("needs two infinite factors");
  std::size_t r = env.integers() ? 3 : 2;
  auto pairs = adjacent_fixed_pairs(cube_ball(*env.ctx, r, static_cast<std::int64_t>(r)));
  bool unique = pairs.size() == 1 && pairs[0].first == CubeVertex() &&
                pairs[0].second == CubeVertex::from_sets({Point::base()}, {});
  return verdict(unique, count(pairs.size(), "adjacent fixed pair(s) in the radius-") +
                           std::to_string(r) + " ball");
}

Outcome unbounded_orbit(Env const &env, std::mt19937_64 &)
{
  if (!env.integers())
    return skipped("needs Z*Z");
  auto const &ctx = *env.ctx;
  std::size_t prev = 0, d = 0;
  bool ok = true;
  for (std::size_t len = 1; len <= 40; ++len) {
    auto w = ctx.normalize(growth_witness(Element{1}, Element{1}, len));
    d = distance(act_vertex(ctx, w, CubeVertex()), CubeVertex());
    ok &= 2 * d >= len;
    if (len % 2 == 0) {
      ok &= d > prev;
      prev = d;
    }
  }
  return verdict(ok, "witness distance " + std::to_string(d) + " at L=40");
}

// lef

std::string summarize(std::vector<LefReport> const &reports)
{
  std::string s;
  for (auto const &r : reports) {
    if (!s.empty())
      s += ", ";
    s += r.check + " " + std::to_string(r.pairs_checked) + "/" +
         std::to_string(r.failure_count);
    if (!r.failures.empty())
      s += " [" + r.failures.front() + "]";
  }
  return s;
}

Outcome lef_reports(std::vector<LefReport> const &reports)
{
  bool ok = true;
  for (auto const &r : reports)
    ok = ok && r.ok();
  return verdict(ok, summarize(reports) + " (checked/failed)");
}

std::optional<LefApprox> approx_for(Env const &env, std::string &why)
{
  try {
    return LefApprox::standard(*env.ctx, env.cfg.lef_n, env.cfg.modulus);
  } catch (PreconditionError const &e) {
    why = e.what();
    return std::nullopt;
  }
}

Outcome lef_algebra(Env const &env, std::mt19937_64 &rng)
{
  if (!env.ctx)
    return skipped("both factors finite");
  auto mode = CheckMode::parse(env.cfg.lef_mode);
  auto seed = rng();
  if (env.ctx->regime() == Regime::mixed)
    return lef_reports(lef_mixed(*env.ctx, env.cfg.lef_n, mode, seed,
                                 env.cfg.modulus, env.cfg.budget));
  std::string why;
  auto approx = approx_for(env, why);
  if (!approx)
    return skipped(why);
  auto sampled = CheckMode::sample(100 * env.cfg.samples);
  return lef_reports({check_multiplicativity(*approx, mode, seed, env.cfg.budget),
                      check_injectivity(*approx, sampled, seed + 1, env.cfg.budget),
                      check_window_closure(*approx, mode, seed + 2, env.cfg.budget)});
}

Outcome lef_points(Env const &env, std::mt19937_64 &)
{
  if (!env.ctx)
    return skipped("both factors finite");
  std::string why;
  auto approx = approx_for(env, why);
  if (!approx)
    return skipped(why);
  return lef_reports({check_equivariance(*approx),
                      check_pushforward(*approx, env.cfg.budget),
                      check_point_bijection(*approx)});
}

// dynamics

Outcome folner(Env const &env, std::mt19937_64 &rng)
{
  if (!env.ctx || env.g->kind() != GroupKind::integers)
    return skipped("needs G = Z");
  auto const &ctx = *env.ctx;
  using Q = boost::rational<std::int64_t>;
  int bad = 0;
  auto h = nontrivial(ctx.h(), rng);
  Q prev(1);
  for (std::int64_t n = 1; n <= 100; ++n) {
    auto f = folner_set(env.g, n);
    auto r = folner_ratio(ctx, f, ctx.from_g(Element{1}));
    bad += r != Q(2, 2 * n + 1) || !(r < prev);
    prev = r;
    bad += folner_ratio(ctx, f, ctx.from_h(h)) != Q(0);
  }
  return verdict(bad == 0, "n = 1..100 under G:1 and H:" + ctx.h().format(h) +
                             ", " + count(static_cast<std::uint64_t>(bad),
                                          "inexact ratios"));
}

Outcome free_semigroups(Env const &env, std::mt19937_64 &)
{
  if (!env.integers())
    return skipped("needs Z*Z");
  std::string bad;
  std::uint64_t words = 0;
  for (auto [g, h] : {std::pair{1, 1}, {2, 3}, {-1, 5}}) {
    auto r = free_semigroup_check(*env.ctx, Element{g}, Element{h}, 8);
    words += r.words_checked;
    if (!r.distinct)
      bad += " (" + std::to_string(g) + "," + std::to_string(h) + "): " +
             r.collision->first + " = " + r.collision->second;
  }
  return verdict(bad.empty(), count(words, "words over (1,1), (2,3), (-1,5)") +
                                (bad.empty() ? ", all distinct" : ";" + bad));
}

std::vector<std::pair<std::string, std::vector<CheckDef>>> const &registry()
{
  static std::vector<std::pair<std::string, std::vector<CheckDef>>> const r{
    {"core",
     {{"product_law", product_law},
      {"associativity", associativity},
      {"inverses", inverses},
      {"commutator", commutator},
      {"epimorphism", epimorphism},
      {"monolith", monolith},
      {"pong", pong}}},
    {"finite",
     {{"classification", classification},
      {"classify_symmetric", classify_symmetric},
      {"translation_sign", translation_signs}}},
    {"cube",
     {{"action", cube_action},
      {"transporter", transport},
      {"fixed_pair", fixed_pair},
      {"unbounded_orbit", unbounded_orbit}}},
    {"lef", {{"algebra", lef_algebra}, {"points", lef_points}}},
    {"dynamics", {{"folner", folner}, {"free_semigroup", free_semigroups}}},
  };
  return r;
}

char const *status_name(Status s)
{
  switch (s) {
  case Status::pass:
    return "PASS";
  case Status::fail:
    return "FAIL";
  case Status::skip:
    return "SKIP";
  }
  return "?";
}

} // namespace

bool SuiteReport::ok() const { return failures() == 0; }

std::size_t SuiteReport::failures() const
{
  std::size_t k = 0;
  for (auto const &c : checks)
    k += c.status == Status::fail;
  return k;
}

std::string SuiteReport::text() const
{
  std::ostringstream out;
  for (auto const &c : checks) {
    out << status_name(c.status) << ' ' << c.suite << '.' << c.name << ": "
        << c.detail << '\n';
    if (c.status == Status::fail)
      out << "  reproduce: " << c.repro << '\n';
  }
  out << failures() << " of " << checks.size() << " checks failed\n";
  return out.str();
}

std::string SuiteReport::jsonl() const
{
  std::string out;
  for (auto const &c : checks) {
    nlohmann::json j{{"suite", c.suite},
                     {"check", c.name},
                     {"status", status_name(c.status)},
                     {"detail", c.detail}};
    if (c.status == Status::fail)
      j["repro"] = c.repro;
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<std::string> const &suite_names()
{
  static std::vector<std::string> const names = [] {
    std::vector<std::string> v;
    for (auto const &entry : registry())
      v.push_back(entry.first);
    return v;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, SuiteConfig const &cfg)
{
  bool all = name == "all";
  bool known = all;
  for (auto const &entry : registry())
    known = known || entry.first == name;
  if (!known)
    throw PreconditionError("unknown suite '" + std::string(name) + "'");

  Env env{cfg, parse_group(cfg.left), parse_group(cfg.right), std::nullopt};
  if (!env.g->is_finite() || !env.h->is_finite()) {
    PvOptions opts;
    opts.verify_products = false;
    env.ctx.emplace(env.g, env.h, opts);
  }

  SuiteReport report;
  bool matched = !cfg.only;
  for (auto const &[suite, checks] : registry()) {
    if (!all && suite != name)
      continue;
    for (auto const &def : checks) {
      if (cfg.only && *cfg.only != def.name)
        continue;
      matched = true;
      SuiteCheck c{suite, def.name, Status::pass, {}, repro_line(suite, def.name, cfg)};
      bool needs_ctx = suite != "finite";
      Outcome out;
      if (needs_ctx && !env.ctx) {
        out = skipped("both factors finite; see the finite suite");
      } else {
        auto rng = check_rng(cfg.seed, def.name);
        try {
          out = def.run(env, rng);
        } catch (Error const &e) {
          out = {Status::fail, std::string("error: ") + e.what()};
        }
      }
      c.status = out.status;
      c.detail = std::move(out.detail);
      report.checks.push_back(std::move(c));
    }
  }
  if (!matched)
    throw PreconditionError("no check named '" + *cfg.only + "' in suite '" +
                            std::string(name) + "'");
  return report;
}

} // namespace glued
