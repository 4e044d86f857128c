#include <doctest.h>

#include <glued/error.hpp>
#include <glued/finite_pv.hpp>

#include "oracles.hpp"

using namespace glued;

TEST_CASE("pointed union indexing")
{
  FiniteUnion u(make_cyclic(3), make_cyclic(4));
  CHECK(u.degree() == 6);
  CHECK(u.point_at(0).is_base());
  for (std::uint32_t i = 0; i < u.degree(); ++i)
    CHECK(u.index_of(u.point_at(i)) == i);
  auto t = u.translation(Side::g, Element{1});
  // fixes the H block
  for (std::uint32_t i = 3; i < 6; ++i)
    CHECK(t[i] == i);
  CHECK(t.order() == 3);
}

TEST_CASE("translation sign matches an explicit parity count")
{
  for (auto spec : {"Z/2", "Z/3", "Z/4", "Z/6", "Z/8", "Z/2xZ/2", "S3", "S4",
                    "Z/2xZ/4"}) {
    auto G = parse_group(spec);
    for (auto const &x : G->elements()) {
      auto images = regular_translation(*G, x).images();
      CHECK_MESSAGE(translation_sign(*G, x) == oracle::sign_by_inversions(images),
                    spec);
    }
  }
}

TEST_CASE("classification examples")
{
  auto z2 = make_cyclic(2), z3 = make_cyclic(3), z4 = make_cyclic(4);
  auto v4 = parse_group("Z/2xZ/2");
  CHECK(classify(*z2, *z2) == FiniteClass::symmetric);
  CHECK(classify(*z3, *z3) == FiniteClass::alternating);
  CHECK(classify(*z4, *z3) == FiniteClass::symmetric);
  CHECK(classify(*v4, *z3) == FiniteClass::alternating);
  CHECK(classify(*v4, *v4) == FiniteClass::alternating);
  CHECK(describe(FiniteClass::alternating, 5) == "Alt(5)");
  CHECK_THROWS_AS(classify(*make_cyclic(1), *z3), PreconditionError);
  CHECK_THROWS_AS(classify(*make_integers(), *z3), RegimeError);
}

TEST_CASE("generated groups agree with closure")
{
  struct Case
  {
    char const *g, *h;
  };
  for (auto c : {Case{"Z/2", "Z/2"}, Case{"Z/2", "Z/3"}, Case{"Z/3", "Z/3"},
                 Case{"Z/2", "Z/4"}, Case{"Z/2xZ/2", "Z/2"},
                 Case{"Z/2xZ/2", "Z/3"}}) {
    auto G = parse_group(c.g), H = parse_group(c.h);
    auto gens = realize_finite(G, H);
    auto degree = *G->order() + *H->order() - 1;
    auto closure = oracle::closure_order(gens, degree);
    auto v = verify_classification(G, H);
    CHECK_MESSAGE(v.order == closure, c.g, " ", c.h);
    CHECK(v.ok);
    auto full = oracle::factorial(static_cast<unsigned>(degree));
    CHECK(closure == (v.predicted == FiniteClass::symmetric ? full : full / 2));
  }
}

TEST_CASE("degree cap")
{
  CHECK_THROWS_AS(realize_finite(make_cyclic(40), make_cyclic(40), 64),
                  BudgetError);
}
