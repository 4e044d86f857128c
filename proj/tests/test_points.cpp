#include <doctest.h>

#include <glued/error.hpp>
#include <glued/point.hpp>

using namespace glued;

TEST_CASE("identity payloads collapse to the basepoint")
{
  auto Z = make_integers();
  CHECK(Point::on(Side::g, *Z, Element{0}).is_base());
  CHECK(Point::on(Side::h, *Z, Element{0}) == Point::base());
  CHECK(Point::on(Side::g, *Z, Element{1}) != Point::on(Side::h, *Z, Element{1}));
}

TEST_CASE("points are ordered base, G, H")
{
  auto Z = make_integers();
  auto g = Point::on(Side::g, *Z, Element{5});
  auto h = Point::on(Side::h, *Z, Element{-5});
  CHECK(Point::base() < g);
  CHECK(g < h);
}

TEST_CASE("factor action is regular on its side and trivial elsewhere")
{
  auto Z = make_integers();
  auto g1 = Point::on(Side::g, *Z, Element{1});
  auto h1 = Point::on(Side::h, *Z, Element{1});
  CHECK(apply_factor(Side::g, *Z, Element{-1}, g1).is_base());
  CHECK(apply_factor(Side::g, *Z, Element{2}, Point::base()) ==
        Point::on(Side::g, *Z, Element{2}));
  CHECK(apply_factor(Side::g, *Z, Element{2}, h1) == h1);
  CHECK(apply_factor(Side::h, *Z, Element{3}, g1) == g1);
}

TEST_CASE("point literals")
{
  PointFormat fmt{make_integers(), parse_group("F2")};
  CHECK(fmt.format(Point::base()) == "e");
  auto p = fmt.parse("h:aB");
  CHECK(p.side() == Side::h);
  CHECK(fmt.format(p) == "h:aB");
  CHECK(fmt.parse("g:0").is_base());
  CHECK(fmt.parse("h:1").is_base());
  CHECK_THROWS_AS(fmt.parse("x:1"), ParseError);
  CHECK_THROWS_AS(fmt.parse("g:abc"), ParseError);
}
