#include <doctest.h>

#include <random>

#include <glued/error.hpp>
#include <glued/naturality.hpp>

using namespace glued;

TEST_CASE("scaling embeddings")
{
  auto Z = make_integers();
  auto three = scaling_embedding(Z, 3);
  CHECK(three(Element{4}) == Element{12});
  CHECK(three.preimage(Element{12}) == Element{4});
  CHECK_FALSE(three.preimage(Element{13}).has_value());
  std::mt19937_64 rng(1);
  CHECK_NOTHROW(verify_embedding(three, rng));
  CHECK_THROWS_AS(scaling_embedding(Z, 0), PreconditionError);
}

TEST_CASE("free substitution")
{
  auto F2 = parse_group("F2");
  auto m = free_substitution(F2, F2, {F2->parse("aa"), F2->parse("b")});
  CHECK(F2->format(m(F2->parse("aB"))) == "aaB");
  std::mt19937_64 rng(2);
  CHECK_NOTHROW(verify_embedding(m, rng, 3, 50));
  auto collapse = free_substitution(F2, F2, {F2->parse("a"), F2->parse("a")});
  CHECK_THROWS_AS(verify_embedding(collapse, rng, 2, 10), PreconditionError);
}

TEST_CASE("embedding is a homomorphism and restriction inverts it")
{
  auto Z = make_integers();
  PvOptions opts;
  opts.verify_products = false;
  PvContext small(Z, Z, opts), large(Z, Z, opts);
  auto ig = scaling_embedding(Z, 2);
  auto ih = scaling_embedding(Z, 3);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    auto a = small.random_element(rng, 3);
    auto b = small.random_element(rng, 3);
    auto ea = embed(small, large, a, ig, ih);
    CHECK(large.is_valid(ea));
    CHECK(embed(small, large, small.multiply(a, b), ig, ih) ==
          large.multiply(ea, embed(small, large, b, ig, ih)));
    auto back = restrict_to(large, small, ea, ig, ih);
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
  // a residual touching g:1, which is not in 2Z
  auto outside = large.eval("PERM:(e g:1 h:3)");
  CHECK_FALSE(restrict_to(large, small, outside, ig, ih).has_value());
}

TEST_CASE("embedding needs infinite sources")
{
  auto Z = make_integers();
  PvContext mixed(Z, make_cyclic(3));
  PvContext large(Z, Z);
  GroupMorphism ih{make_cyclic(3), Z, [](Element const &x) { return x; }, {}};
  CHECK_THROWS_AS(embed(mixed, large, mixed.identity(), scaling_embedding(Z, 1), ih),
                  RegimeError);
}
