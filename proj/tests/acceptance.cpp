// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <glued/cube.hpp>
#include <glued/dynamics.hpp>
#include <glued/error.hpp>
#include <glued/finite_pv.hpp>
#include <glued/lef.hpp>
#include <glued/pv.hpp>
#include <glued/schreier_sims.hpp>

#include "oracles.hpp"

using namespace glued;

namespace
{

constexpr std::uint64_t seed = 20240611;
constexpr std::uint64_t budget = 10'000'000;

PvContext unchecked(GroupHandle g, GroupHandle h)
{
  PvOptions opts;
  opts.verify_products = false;
  return PvContext(std::move(g), std::move(h), opts);
}

struct Outcome
{
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, char const *title, double time_limit,
               std::function<Outcome()> const &body)
{
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (std::exception const &e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start).count();
  if (time_limit > 0 && secs >= time_limit) {
    out.ok = false;
    out.detail += " (time limit " + std::to_string(time_limit) + " s exceeded)";
  }
  failures += !out.ok;
  std::printf("%s %2d %s: %s [%.2f s]\n", out.ok ? "PASS" : "FAIL", id, title,
              out.detail.c_str(), secs);
  std::fflush(stdout);
}

Outcome commutator_law()
{
  std::uint64_t checked = 0, bad = 0;
  for (auto g_spec : {"Z", "F2"}) {
    auto ctx = unchecked(parse_group(g_spec), make_integers());
    std::mt19937_64 rng(seed);
    for (int done = 0; done < 1000;) {
      auto g = ctx.g().random(rng, 6);
      auto h = ctx.h().random(rng, 6);
      if (ctx.g().is_identity(g) || ctx.h().is_identity(h))
        continue;
      ++done;
      auto c = ctx.normalize({GLetter{g}, HLetter{h}, GLetter{ctx.g().inverse(g)},
                              HLetter{ctx.h().inverse(h)}});
      PvElement expected{ctx.g().identity(), ctx.h().identity(),
                         three_cycle(Point::base(), Point::unchecked(Side::g, g),
                                     Point::unchecked(Side::h, h))};
      bad += !(c == expected) || !(ctx.power(c, 3) == ctx.identity());
      ++checked;
    }
  }
  return {bad == 0, std::to_string(checked) + " commutators over Z*Z and F2*Z, " +
                      std::to_string(bad) + " mismatches"};
}

Outcome product_law()
{
  auto ctx = unchecked(make_integers(), make_integers());
  std::mt19937_64 rng(seed + 1);
  std::uint64_t probes = 0, bad = 0;
  for (int t = 0; t < 10'000; ++t) {
    auto s1 = ctx.random_element(rng, 4, 3);
    auto s2 = ctx.random_element(rng, 4, 3);
    auto prod = ctx.multiply(s1, s2);
    auto pts = ctx.product_probe_points(s1, s2, prod);
    for (int k = 0; k < 10; ++k)
      pts.push_back(ctx.random_point(rng, 12));
    for (auto const &p : pts) {
      ++probes;
      bad += oracle::act(ctx.g(), ctx.h(), prod, p) !=
             oracle::act(ctx.g(), ctx.h(), s1, oracle::act(ctx.g(), ctx.h(), s2, p));
    }
  }
  return {bad == 0, "10000 pairs, " + std::to_string(probes) + " probe points, " +
                      std::to_string(bad) + " disagreements"};
}

Outcome finite_classification()
{
  std::vector<char const *> catalog{"Z/2", "Z/3", "Z/4", "Z/2xZ/2", "Z/5", "S3"};
  int pairs = 0, bad = 0;
  std::string notes;
  for (auto gs : catalog)
    for (auto hs : catalog) {
      auto G = parse_group(gs), H = parse_group(hs);
      auto degree = *G->order() + *H->order() - 1;
      if (degree > 10)
        continue;
      ++pairs;
      auto order = schreier_sims_order(realize_finite(G, H));
      auto full = factorial(static_cast<unsigned>(degree));
      auto predicted =
        classify(*G, *H) == FiniteClass::symmetric ? full : BigInt(full / 2);
      if (order != predicted) {
        ++bad;
        notes += std::string(" ") + gs + "," + hs;
      }
    }
  auto ord = [](char const *a, char const *b) {
    return schreier_sims_order(realize_finite(parse_group(a), parse_group(b)));
  };
  bool examples = ord("Z/2", "Z/2") == 6 && ord("Z/3", "Z/3") == 60 &&
                  ord("Z/4", "Z/3") == 720;
  return {bad == 0 && examples,
          std::to_string(pairs) + " ordered pairs, " + std::to_string(bad) +
            " mismatches" + notes + (examples ? "; 6/60/720 reproduced"
                                              : "; worked examples differ")};
}

Outcome epimorphism_monolith()
{
  auto ctx = unchecked(make_integers(), make_integers());
  std::mt19937_64 rng(seed + 3);
  std::uniform_int_distribution<int> coin(0, 3);
  std::uint64_t bad_hom = 0, bad_mono = 0, odd = 0, in_kernel = 0;
  for (int t = 0; t < 10'000; ++t) {
    auto a = ctx.random_element(rng, 4);
    auto b = ctx.random_element(rng, 4);
    // a quarter of the pairs are pushed into the kernel
    if (coin(rng) == 0)
      a = ctx.multiply(ctx.invert(ctx.from_h(a.h)),
                       ctx.multiply(ctx.invert(ctx.from_g(a.g)), a));
    auto p = ctx.multiply(a, b);
    auto [ga, ha] = ctx.project(a);
    auto [gb, hb] = ctx.project(b);
    auto [gp, hp] = ctx.project(p);
    bad_hom += gp != ctx.g().multiply(ga, gb) || hp != ctx.h().multiply(ha, hb);
    for (auto const *s : {&a, &p}) {
      auto [gx, hx] = ctx.project(*s);
      bool trivial = ctx.g().is_identity(gx) && ctx.h().is_identity(hx);
      in_kernel += trivial;
      bad_mono += ctx.in_monolith(*s) != trivial;
    }
    odd += p.residual.parity() == Parity::odd;
  }
  return {bad_hom == 0 && bad_mono == 0 && odd == 0 && in_kernel > 0,
          "10000 pairs: " + std::to_string(bad_hom) + " projection failures, " +
            std::to_string(bad_mono) + " monolith mismatches (" +
            std::to_string(in_kernel) + " kernel elements seen), " +
            std::to_string(odd) + " odd residuals"};
}

CubeVertex random_vertex(PvContext const &ctx, std::mt19937_64 &rng)
{
  std::uniform_int_distribution<int> count(0, 6);
  std::vector<Point> pts;
  for (int i = count(rng); i > 0; --i)
    pts.push_back(ctx.random_point(rng, 5));
  return CubeVertex::toggle(pts);
}

Outcome cube_complex()
{
  auto ctx = unchecked(make_integers(), make_integers());
  std::mt19937_64 rng(seed + 4);
  int bad_s = 0, bad_iso = 0;
  for (int t = 0; t < 1000; ++t) {
    auto s = ctx.random_element(rng, 4);
    auto v = random_vertex(ctx, rng);
    auto w = random_vertex(ctx, rng);
    auto sv = act_vertex(ctx, s, v);
    bad_s += s_invariant(sv) != s_invariant(v);
    bad_iso += distance(sv, act_vertex(ctx, s, w)) != distance(v, w);
  }

  int same = 0, cross = 0, bad_transport = 0, bad_reject = 0;
  while (same < 100 || cross < 100) {
    auto v = random_vertex(ctx, rng);
    auto w = random_vertex(ctx, rng);
    if (s_invariant(v) == s_invariant(w)) {
      if (same == 100)
        continue;
      ++same;
      auto sigma = transporter(ctx, v, w);
      bad_transport += act_vertex(ctx, sigma, v) != w || !ctx.in_monolith(sigma);
    } else {
      if (cross == 100)
        continue;
      ++cross;
      try {
        transporter(ctx, v, w);
        ++bad_reject;
      } catch (FiberMismatch const &) {
      }
    }
  }

  auto pairs = adjacent_fixed_pairs(cube_ball(ctx, 3, 3));
  bool unique = pairs.size() == 1 && pairs[0].first == CubeVertex() &&
                pairs[0].second == CubeVertex::from_sets({Point::base()}, {});

  int short_witness = 0;
  std::size_t prev = 0, reached = 0;
  bool increasing = true;
  for (std::size_t len = 1; len <= 40; ++len) {
    auto w = ctx.normalize(growth_witness(Element{1}, Element{1}, len));
    auto d = distance(act_vertex(ctx, w, CubeVertex()), CubeVertex());
    short_witness += 2 * d < len;
    if (len % 2 == 0) {
      increasing &= d > prev;
      prev = d;
    }
    reached = d;
  }
  bool ok = bad_s == 0 && bad_iso == 0 && bad_transport == 0 &&
            bad_reject == 0 && unique && short_witness == 0 && increasing;
  return {ok, std::to_string(bad_s) + "/" + std::to_string(bad_iso) +
                " invariance/isometry failures in 1000; transporter " +
                std::to_string(100 - bad_transport) + "/100 verified, " +
                std::to_string(100 - bad_reject) + "/100 rejected; " +
                std::to_string(pairs.size()) + " adjacent fixed pair(s); witness "
                "distance " + std::to_string(reached) + " at L=40"};
}

Outcome pong()
{
  auto ctx = unchecked(make_integers(), make_integers());
  auto r = free_semigroup_check(ctx, Element{1}, Element{1}, 8);
  return {r.distinct && r.words_checked == 510,
          std::to_string(r.words_checked) + " words" +
            (r.distinct ? ", pairwise distinct"
                        : ", collision " + r.collision->first + " = " +
                            r.collision->second)};
}

Outcome folner()
{
  auto ctx = unchecked(make_integers(), make_integers());
  int bad = 0;
  for (std::int64_t n = 1; n <= 100; ++n) {
    auto f = folner_set(ctx.g_handle(), n);
    bad += folner_ratio(ctx, f, ctx.from_g(Element{1})) !=
           boost::rational<std::int64_t>(2, 2 * n + 1);
    bad += folner_ratio(ctx, f, ctx.from_h(Element{1})) !=
           boost::rational<std::int64_t>(0);
  }
  return {bad == 0, "n = 1..100, " + std::to_string(bad) + " inexact ratios"};
}

Outcome lef()
{
  auto ctx = unchecked(make_integers(), make_integers());
  auto approx = LefApprox::standard(ctx, 1, 17);
  std::vector<LefReport> reports{
    check_multiplicativity(approx, CheckMode::exhaustive(), seed, budget),
    check_injectivity(approx, CheckMode::sample(100'000), seed, budget),
    check_window_closure(approx, CheckMode::exhaustive(), seed, budget),
    check_equivariance(approx),
    check_pushforward(approx, budget),
  };
  bool ok = reports[0].pairs_checked == 291'600 &&
            reports[1].pairs_checked == 100'000;
  std::string detail;
  for (auto const &r : reports) {
    ok &= r.ok();
    detail += (detail.empty() ? "" : ", ") + r.check + " " +
              std::to_string(r.pairs_checked) + "/" +
              std::to_string(r.failure_count);
  }
  return {ok, detail + " (checked/failed)"};
}

Outcome mixed_lef()
{
  bool ok = true;
  std::string detail;
  for (std::uint64_t k : {2, 3}) {
    auto ctx = unchecked(make_integers(), make_cyclic(k));
    // Z/2 is its own cyclic 2-Sylow, Z/3 has none
    ok &= ctx.allows_odd_residual() == (k == 2);
    auto reports = lef_mixed(ctx, 1, CheckMode::exhaustive(), seed, {}, budget);
    detail += std::string(detail.empty() ? "" : "; ") + "Z/" + std::to_string(k) +
              (ctx.allows_odd_residual() ? " Sym" : " Alt");
    for (auto const &r : reports) {
      ok &= r.ok();
      detail += " " + r.check + " " + std::to_string(r.pairs_checked) + "/" +
                std::to_string(r.failure_count);
    }
  }
  return {ok, detail};
}

Outcome orders()
{
  auto ctx = unchecked(make_integers(), make_integers());
  std::mt19937_64 rng(seed + 10);
  std::uniform_int_distribution<int> dist(1, 20);
  int bad = 0;
  auto power_order = [&](PvElement const &s) {
    auto x = s;
    for (std::uint64_t k = 1; k <= 60; ++k, x = ctx.multiply(x, s))
      if (x == ctx.identity())
        return k;
    return std::uint64_t(0);
  };
  for (int t = 0; t < 100; ++t) {
    Element g{dist(rng)}, h{-dist(rng)};
    Element g2{g[0] + dist(rng)}, h2{h[0] - dist(rng)};
    auto c = ctx.commutator(g, h);
    std::pair<PvElement, std::uint64_t> cases[] = {
      {ctx.multiply(c, ctx.commutator(g2, h2)), 5},
      {ctx.multiply(c, ctx.commutator(g, h2)), 2},
      {ctx.multiply(c, c), 3},
    };
    for (auto const &[s, expect] : cases) {
      auto o = ctx.element_order(s, 1000);
      bad += o.kind != PvOrder::Kind::finite || o.value != expect ||
             power_order(s) != expect;
    }
  }
  return {bad == 0, "100 instantiations x 3 cases, " + std::to_string(bad) +
                      " wrong orders"};
}

} // namespace

int main()
{
  criterion(1, "commutator law", 1.0, commutator_law);
  criterion(2, "product-law soundness", 5.0, product_law);
  criterion(3, "finite classification", 10.0, finite_classification);
  criterion(4, "epimorphism and monolith", 0, epimorphism_monolith);
  criterion(5, "cube complex", 30.0, cube_complex);
  criterion(6, "pong", 1.0, pong);
  criterion(7, "Folner ratios", 0, folner);
  criterion(8, "LEF over Z*Z", 60.0, lef);
  criterion(9, "mixed LEF", 30.0, mixed_lef);
  criterion(10, "order combinatorics", 0, orders);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
