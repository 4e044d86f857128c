#include "glued/point.hpp"

#include "glued/error.hpp"

namespace glued
{

Point Point::on(Side side, Group const &group, Element x)
{
  if (side == Side::base || group.is_identity(x))
    return base();
  return Point(side, std::move(x));
}

Point apply_factor(Side side, Group const &group, Element const &x,
                   Point const &p)
{
  if (p.is_base())
    return Point::on(side, group, x);
  if (p.side() != side)
    return p;
  return Point::on(side, group, group.multiply(x, p.payload()));
}

std::string PointFormat::format(Point const &p) const
{
  switch (p.side()) {
  case Side::base:
    return "e";
  case Side::g:
    return "g:" + g->format(p.payload());
  case Side::h:
    return "h:" + h->format(p.payload());
  }
  return {};
}

Point PointFormat::parse(std::string_view literal) const
{
  if (literal == "e")
    return Point::base();
  if (literal.size() >= 2 && literal[1] == ':' &&
      (literal[0] == 'g' || literal[0] == 'h')) {
    auto side = literal[0] == 'g' ? Side::g : Side::h;
    try {
      return Point::on(side, group(side), group(side).parse(literal.substr(2)));
    } catch (ParseError const &e) {
      throw ParseError(std::string("bad point literal '") +
                         std::string(literal) + "': " + e.message(),
                       2 + e.position());
    }
  }
  throw ParseError("point literal must be 'e', 'g:<lit>' or 'h:<lit>', got '" +
                   std::string(literal) + "'", 0);
}

} // namespace glued
