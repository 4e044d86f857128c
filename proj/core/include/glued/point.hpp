#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "element.hpp"
#include "group.hpp"

namespace glued
{

enum class Side : unsigned char
{
  base = 0,
  g = 1,
  h = 2
};

// A point of the pointed union of the two factors: the shared basepoint,
// or a non-identity element of one factor tagged with its side.
//
// Points are totally ordered: base, then G-side by payload, then H-side by
// payload.
class Point
{
public:
  Point() = default;

  static Point base() { return Point(); }

  /// Returns base() when x is the identity of `group`.
  static Point on(Side side, Group const &group, Element x);

  /// Caller guarantees x is not the identity.
  static Point unchecked(Side side, Element x)
  { return Point(side, std::move(x)); }

  Side side() const { return _side; }
  bool is_base() const { return _side == Side::base; }
  Element const &payload() const { return _payload; }

  /// The element of the factor on `side` this point stands for; the
  /// identity for base and for points on the other side.
  Element element_on(Side side, Group const &group) const
  { return _side == side ? _payload : group.identity(); }

  bool operator==(Point const &other) const
  { return _side == other._side && _payload == other._payload; }

  std::strong_ordering operator<=>(Point const &other) const
  {
    if (auto c = _side <=> other._side; c != 0)
      return c;
    return _payload <=> other._payload;
  }

  std::size_t hash() const
  { return _payload.hash() * 3 + static_cast<std::size_t>(_side); }

private:
  Point(Side side, Element x) : _side(side), _payload(std::move(x)) {}

  Side _side = Side::base;
  Element _payload;
};

/// Regular left action of a factor on its own side, trivial on the other.
Point apply_factor(Side side, Group const &group, Element const &x,
                   Point const &p);

/// The two factors whose pointed union the points live in; used to format
/// and parse point literals "e", "g:<lit>", "h:<lit>".
struct PointFormat
{
  GroupHandle g;
  GroupHandle h;

  std::string format(Point const &p) const;

  /// Identity payloads collapse to the basepoint.
  Point parse(std::string_view literal) const;

  Group const &group(Side side) const { return side == Side::h ? *h : *g; }
};

} // namespace glued

template<>
struct std::hash<glued::Point>
{
  std::size_t operator()(glued::Point const &p) const noexcept
  { return p.hash(); }
};
