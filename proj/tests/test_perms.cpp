#include <doctest.h>

#include <random>

#include <glued/dense_perm.hpp>
#include <glued/error.hpp>
#include <glued/fin_perm.hpp>

#include "oracles.hpp"

using namespace glued;

namespace
{

PointFormat zz() { return {make_integers(), make_integers()}; }

Point gp(std::int64_t k) { return Point::on(Side::g, *make_integers(), Element{k}); }
Point hp(std::int64_t k) { return Point::on(Side::h, *make_integers(), Element{k}); }

} // namespace

TEST_CASE("three cycles")
{
  auto c = three_cycle(Point::base(), gp(1), hp(1));
  CHECK(c(Point::base()) == gp(1));
  CHECK(c(gp(1)) == hp(1));
  CHECK(c(hp(1)) == Point::base());
  CHECK(c(gp(2)) == gp(2));
  CHECK(c.parity() == Parity::even);
  CHECK(c.order() == 3);
  CHECK((c * c * c).is_identity());
  CHECK(c.format(zz()) == "(e g:1 h:1)");
  CHECK_THROWS_AS(three_cycle(gp(1), gp(1), hp(1)), PreconditionError);
}

TEST_CASE("parse and format round trip")
{
  auto fmt = zz();
  auto a = FinPerm::parse("(g:2 g:3) (e g:1 h:1)", fmt);
  CHECK(a.format(fmt) == "(e g:1 h:1) (g:2 g:3)");
  CHECK(a.parity() == Parity::odd);
  CHECK(a.order() == 6);
  CHECK(FinPerm::parse("()", fmt).is_identity());
  CHECK(FinPerm::identity().format(fmt) == "()");
  CHECK_THROWS_AS(FinPerm::parse("(e g:1) (g:1 h:2)", fmt), Error);
  CHECK_THROWS_AS(FinPerm::parse("(e g:1", fmt), ParseError);
}

TEST_CASE("composition applies the right factor first")
{
  auto a = FinPerm::transposition(gp(1), gp(2));
  auto b = FinPerm::transposition(gp(2), gp(3));
  auto ab = a * b;
  CHECK(ab(gp(3)) == gp(1));
  CHECK(ab(gp(1)) == gp(2));
  CHECK((ab * ab.inverse()).is_identity());
}

TEST_CASE("relabel conjugates")
{
  auto a = three_cycle(gp(1), gp(2), hp(1));
  auto shifted = a.relabel([](Point const &p) {
    if (p.side() != Side::g)
      return p;
    return Point::on(Side::g, *make_integers(), Element{p.payload()[0] + 10});
  });
  CHECK(shifted == three_cycle(gp(11), gp(12), hp(1)));
}

TEST_CASE("random compositions against index arrays")
{
  std::mt19937_64 rng(3);
  std::vector<Point> pts;
  for (int k = -3; k <= 3; ++k)
    pts.push_back(k == 0 ? Point::base() : gp(k));
  for (int k = 1; k <= 3; ++k)
    pts.push_back(hp(k));

  auto random_perm = [&] {
    std::vector<std::uint32_t> idx(pts.size());
    for (std::uint32_t i = 0; i < idx.size(); ++i)
      idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    return idx;
  };
  auto to_fin = [&](std::vector<std::uint32_t> const &idx) {
    FinPerm::Mapping m;
    for (std::size_t i = 0; i < idx.size(); ++i)
      m.emplace_back(pts[i], pts[idx[i]]);
    return FinPerm::from_mapping(std::move(m));
  };

  for (int t = 0; t < 200; ++t) {
    auto x = random_perm();
    auto y = random_perm();
    std::vector<std::uint32_t> xy(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      xy[i] = x[y[i]];
    CHECK(to_fin(x) * to_fin(y) == to_fin(xy));
    auto sign = oracle::sign_by_inversions(x);
    CHECK((to_fin(x).parity() == Parity::even) == (sign == 1));
    CHECK(DensePerm(x).parity() == to_fin(x).parity());
  }
}

TEST_CASE("dense permutations")
{
  auto p = DensePerm::from_cycles(5, {{0, 1, 2}, {3, 4}});
  CHECK(p.str() == "(0 1 2)(3 4)");
  CHECK(p.order() == 6);
  CHECK(p.parity() == Parity::odd);
  CHECK((p * p.inverse()).is_identity());
  CHECK(DensePerm(4).str() == "()");
  CHECK_THROWS_AS(DensePerm(std::vector<std::uint32_t>{0, 0, 1}), Error);
}
