#include "glued/dynamics.hpp"

#include <algorithm>
#include <iterator>
#include <map>

#include "glued/error.hpp"

namespace glued
{

SemigroupReport free_semigroup_check(PvContext const &ctx, Element const &g,
                                     Element const &h, std::size_t length,
                                     std::size_t cap)
{
  if (length > cap)
    throw BudgetError("word length " + std::to_string(length) +
                      " above cap " + std::to_string(cap));
  if (ctx.g().element_order(g) != ElementOrder::infinite() ||
      ctx.h().element_order(h) != ElementOrder::infinite())
    throw PreconditionError("both letters need infinite order");

  auto letters = [&](std::size_t len, std::uint64_t mask) {
    std::string text;
    for (std::size_t i = 0; i < len; ++i) {
      if (i)
        text += ' ';
      text += (mask >> (len - 1 - i)) & 1 ? "H:" + ctx.h().format(h)
                                          : "G:" + ctx.g().format(g);
    }
    return text;
  };

  auto const gs = ctx.from_g(g);
  auto const hs = ctx.from_h(h);
  SemigroupReport report;
  std::map<std::string, std::pair<std::size_t, std::uint64_t>> seen;
  // Words of length len+1 extend those of length len on the left.
  std::vector<PvElement> layer{ctx.identity()};
  for (std::size_t len = 1; len <= length; ++len) {
    std::vector<PvElement> next;
    next.reserve(layer.size() * 2);
    for (std::uint64_t top = 0; top < 2; ++top)
      for (std::uint64_t rest = 0; rest < layer.size(); ++rest) {
        auto mask = (top << (len - 1)) | rest;
        next.push_back(ctx.multiply(top ? hs : gs, layer[rest]));
        auto [it, fresh] =
          seen.emplace(ctx.format(next.back()), std::pair{len, mask});
        ++report.words_checked;
        if (!fresh && report.distinct) {
          report.distinct = false;
          report.collision.emplace(
            letters(it->second.first, it->second.second), letters(len, mask));
        }
      }
    layer = std::move(next);
  }
  return report;
}

FolnerSet folner_set(GroupHandle const &group, std::int64_t n)
{
  if (n < 0)
    throw PreconditionError("Folner index must be non-negative");
  FolnerSet set;
  set.n = n;
  if (group->kind() == GroupKind::integers) {
    set.shift = Element{n + 1};
    for (std::int64_t k = -n; k <= n; ++k)
      set.points.push_back(Point::on(Side::g, *group, Element{k + n + 1}));
  } else if (group->kind() == GroupKind::lattice) {
    auto d = group->identity().size();
    Element::Storage shift(d, 0);
    shift[0] = n + 1;
    set.shift = Element(shift);
    Element::Storage x(d, -n);
    for (;;) {
      set.points.push_back(
        Point::on(Side::g, *group, group->multiply(Element(x), set.shift)));
      std::size_t k = 0;
      while (k < d && x[k] == n)
        x[k++] = -n;
      if (k == d)
        break;
      ++x[k];
    }
  } else {
    throw PreconditionError("no Folner scheme for " + group->name());
  }
  std::sort(set.points.begin(), set.points.end());
  return set;
}

boost::rational<std::int64_t> folner_ratio(PvContext const &ctx,
                                           FolnerSet const &set,
                                           PvElement const &sigma)
{
  if (set.points.empty())
    throw PreconditionError("empty Folner set");
  std::vector<Point> moved;
  moved.reserve(set.points.size());
  for (auto const &p : set.points)
    moved.push_back(ctx.act(sigma, p));
  std::sort(moved.begin(), moved.end());
  std::vector<Point> diff;
  std::set_symmetric_difference(set.points.begin(), set.points.end(),
                                moved.begin(), moved.end(),
                                std::back_inserter(diff));
  return {static_cast<std::int64_t>(diff.size()),
          static_cast<std::int64_t>(set.points.size())};
}

std::string format_rational(boost::rational<std::int64_t> const &r)
{
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace glued
