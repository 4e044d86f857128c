#include <doctest.h>

#include <random>

#include <glued/error.hpp>
#include <glued/pv.hpp>

#include "oracles.hpp"

using namespace glued;

namespace
{

PvContext unchecked(GroupHandle g, GroupHandle h)
{
  PvOptions opts;
  opts.verify_products = false;
  return PvContext(std::move(g), std::move(h), opts);
}

std::uint64_t order_by_powers(PvContext const &ctx, PvElement const &s,
                              std::uint64_t cap)
{
  auto x = s;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (x == ctx.identity())
      return k;
    x = ctx.multiply(x, s);
  }
  return 0;
}

void check_products(PvContext const &ctx, unsigned trials, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  for (unsigned t = 0; t < trials; ++t) {
    auto s1 = ctx.random_element(rng, 3);
    auto s2 = ctx.random_element(rng, 3);
    auto prod = ctx.multiply(s1, s2);
    REQUIRE(ctx.is_valid(prod));
    auto probes = ctx.product_probe_points(s1, s2, prod);
    for (int k = 0; k < 10; ++k)
      probes.push_back(ctx.random_point(rng, 8));
    for (auto const &p : probes) {
      auto lhs = oracle::act(ctx.g(), ctx.h(), prod, p);
      auto rhs = oracle::act(ctx.g(), ctx.h(), s1,
                             oracle::act(ctx.g(), ctx.h(), s2, p));
      REQUIRE(lhs == rhs);
    }
  }
}

} // namespace

TEST_CASE("evaluation examples")
{
  auto ctx = unchecked(make_integers(), make_integers());
  CHECK(ctx.format(ctx.eval("G:1 H:1 G:-1 H:-1")) == "g=0 h=0 a=(e g:1 h:1)");
  CHECK(ctx.format(ctx.eval("")) == "g=0 h=0 a=()");
  CHECK(ctx.format(ctx.eval("G:2 G:3")) == "g=5 h=0 a=()");
  CHECK(ctx.format(ctx.eval("PERM:(e g:1 h:1) PERM:(e g:1 h:1) PERM:(e g:1 h:1)")) ==
        "g=0 h=0 a=()");
}

TEST_CASE("parse errors carry positions")
{
  auto ctx = unchecked(make_integers(), make_integers());
  try {
    ctx.eval("G:1 X:2");
    FAIL("expected a parse error");
  } catch (ParseError const &e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(ctx.eval("G:1 H:x"), ParseError);
  CHECK_THROWS_AS(ctx.eval("PERM:(e g:1"), ParseError);
  // odd residual letters are not elements when both factors are infinite
  CHECK_THROWS_AS(ctx.eval("PERM:(g:1 g:2)"), PreconditionError);
}

TEST_CASE("regimes")
{
  CHECK(unchecked(make_integers(), make_cyclic(3)).regime() == Regime::mixed);
  CHECK_THROWS_AS(unchecked(make_cyclic(3), make_integers()), RegimeError);
  CHECK_THROWS_AS(unchecked(make_cyclic(3), make_cyclic(2)), RegimeError);
  auto mixed = unchecked(make_integers(), make_cyclic(3));
  CHECK_THROWS_AS(mixed.project(mixed.identity()), RegimeError);
}

TEST_CASE("commutators are 3-cycles")
{
  for (auto h_spec : {"Z", "F2"}) {
    auto ctx = unchecked(parse_group(h_spec), make_integers());
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
      auto g = ctx.g().random(rng, 4);
      auto h = ctx.h().random(rng, 4);
      if (ctx.g().is_identity(g) || ctx.h().is_identity(h))
        continue;
      auto c = ctx.commutator(g, h);
      CHECK(c.residual == three_cycle(Point::base(), Point::unchecked(Side::g, g),
                                      Point::unchecked(Side::h, h)));
      CHECK(ctx.power(c, 3) == ctx.identity());
      CHECK(ctx.in_monolith(c));
      // the defining word agrees
      CHECK(ctx.normalize({GLetter{g}, HLetter{h}, GLetter{ctx.g().inverse(g)},
                           HLetter{ctx.h().inverse(h)}}) == c);
    }
  }
}

TEST_CASE("products agree with the action")
{
  check_products(unchecked(make_integers(), make_integers()), 500, 1);
  check_products(unchecked(parse_group("F2"), make_integers()), 300, 2);
  check_products(unchecked(parse_group("Z^2"), parse_group("F2")), 300, 3);
  check_products(unchecked(make_integers(), make_cyclic(4)), 300, 4);
  check_products(unchecked(make_integers(), parse_group("S3")), 300, 5);
}

TEST_CASE("group axioms")
{
  auto ctx = unchecked(make_integers(), parse_group("F2"));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    auto a = ctx.random_element(rng, 3);
    auto b = ctx.random_element(rng, 3);
    auto c = ctx.random_element(rng, 3);
    CHECK(ctx.multiply(ctx.multiply(a, b), c) == ctx.multiply(a, ctx.multiply(b, c)));
    CHECK(ctx.multiply(a, ctx.invert(a)) == ctx.identity());
    CHECK(ctx.multiply(ctx.invert(a), a) == ctx.identity());
    CHECK(ctx.multiply(a, ctx.identity()) == a);
    CHECK(ctx.multiply(a, b).residual.parity() == Parity::even);
  }
}

TEST_CASE("projection and monolith")
{
  auto ctx = unchecked(make_integers(), make_integers());
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    auto a = ctx.random_element(rng, 3);
    auto b = ctx.random_element(rng, 3);
    auto [ga, ha] = ctx.project(a);
    auto [gb, hb] = ctx.project(b);
    auto [gp, hp] = ctx.project(ctx.multiply(a, b));
    CHECK(gp == ctx.g().multiply(ga, gb));
    CHECK(hp == ctx.h().multiply(ha, hb));
    CHECK(ctx.in_monolith(a) == (ctx.g().is_identity(ga) && ctx.h().is_identity(ha)));
  }
}

TEST_CASE("orders of products of two commutators")
{
  auto ctx = unchecked(make_integers(), make_integers());
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> dist(1, 9);
  for (int t = 0; t < 30; ++t) {
    Element g{dist(rng)}, h{dist(rng)};
    Element g2{g[0] + dist(rng)}, h2{h[0] + dist(rng)};
    auto distinct = ctx.multiply(ctx.commutator(g, h), ctx.commutator(g2, h2));
    auto same_g = ctx.multiply(ctx.commutator(g, h), ctx.commutator(g, h2));
    auto equal = ctx.multiply(ctx.commutator(g, h), ctx.commutator(g, h));
    CHECK(order_by_powers(ctx, distinct, 100) == 5);
    CHECK(order_by_powers(ctx, same_g, 100) == 2);
    CHECK(order_by_powers(ctx, equal, 100) == 3);
    CHECK(ctx.element_order(distinct, 1000).value == 5);
    CHECK(ctx.element_order(same_g, 1000).value == 2);
    CHECK(ctx.element_order(equal, 1000).value == 3);
  }
  CHECK(ctx.element_order(ctx.from_g(Element{1}), 100).kind ==
        PvOrder::Kind::infinite);
}

TEST_CASE("element orders in the mixed regime")
{
  auto ctx = unchecked(make_integers(), make_cyclic(4));
  auto y = ctx.from_h(Element{1});
  CHECK(order_by_powers(ctx, y, 100) == 4);
  CHECK(ctx.element_order(y, 100).value == 4);
  auto s = ctx.multiply(y, ctx.from_perm(three_cycle(
                               Point::unchecked(Side::g, Element{1}),
                               Point::unchecked(Side::g, Element{2}),
                               Point::unchecked(Side::g, Element{3}))));
  CHECK(ctx.element_order(s, 100).value == order_by_powers(ctx, s, 100));
}

TEST_CASE("mixed membership follows the 2-Sylow criterion")
{
  auto odd_perm = [](PvContext const &ctx) {
    return ctx.eval("PERM:(g:1 g:2)");
  };
  auto c2 = unchecked(make_integers(), make_cyclic(2));
  CHECK(c2.allows_odd_residual());
  CHECK_NOTHROW(odd_perm(c2));
  auto c3 = unchecked(make_integers(), make_cyclic(3));
  CHECK_FALSE(c3.allows_odd_residual());
  CHECK_THROWS_AS(odd_perm(c3), PreconditionError);
  auto v4 = unchecked(make_integers(), parse_group("Z/2xZ/2"));
  CHECK_FALSE(v4.allows_odd_residual());
  // H-letters are odd on Z/2, even on Z/3
  CHECK(c2.from_h(Element{1}).residual.parity() == Parity::odd);
  CHECK(c3.from_h(Element{1}).residual.parity() == Parity::even);
  CHECK(has_cyclic_two_sylow(*make_cyclic(4)));
  CHECK(has_cyclic_two_sylow(*parse_group("S3")));
  CHECK_FALSE(has_cyclic_two_sylow(*make_cyclic(3)));
  CHECK_FALSE(has_cyclic_two_sylow(*parse_group("Z/2xZ/2")));
}

TEST_CASE("stabilizer lifts fix G")
{
  auto ctx = unchecked(make_integers(), make_integers());
  auto s = ctx.stabilizer_lift(Element{2}, Element{5});
  CHECK(ctx.act(s, Point::base()) == Point::base());
  for (int k = -5; k <= 5; ++k) {
    auto p = Point::on(Side::g, ctx.g(), Element{k});
    CHECK(ctx.act(s, p) == p);
  }
  CHECK(ctx.project(s).second == Element{2});
}

TEST_CASE("verification mode catches nothing on valid products")
{
  PvOptions opts;
  opts.verify_products = true;
  PvContext ctx(make_integers(), make_integers(), opts);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t)
    CHECK_NOTHROW(ctx.multiply(ctx.random_element(rng, 4), ctx.random_element(rng, 4)));
}
