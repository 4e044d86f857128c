#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

#include <boost/container/small_vector.hpp>

namespace glued
{

// An element of some factor group, stored as a short vector of integer
// coordinates whose meaning is fixed by the owning group kind:
//
//   integers        {k}
//   lattice(d)      {x_1, ..., x_d}
//   cyclic(n)       {r} with 0 <= r < n
//   finite table    {index}
//   free(rank)      reduced word, letter i > 0 is generator i, -i its inverse
//
// Equal elements of the same group always have equal coordinates, so
// equality, ordering and hashing never need the group.
class Element
{
public:
  using Storage = boost::container::small_vector<std::int64_t, 2>;

  Element() = default;
  Element(std::initializer_list<std::int64_t> coords) : _coords(coords) {}
  explicit Element(Storage coords) : _coords(std::move(coords)) {}

  template<typename It>
  Element(It first, It last) : _coords(first, last) {}

  static Element scalar(std::int64_t value) { return Element{value}; }

  std::span<std::int64_t const> coords() const
  { return {_coords.data(), _coords.size()}; }

  Storage &storage() { return _coords; }
  Storage const &storage() const { return _coords; }

  std::size_t size() const { return _coords.size(); }
  std::int64_t operator[](std::size_t i) const { return _coords[i]; }

  bool operator==(Element const &other) const
  { return std::equal(_coords.begin(), _coords.end(),
                      other._coords.begin(), other._coords.end()); }

  std::strong_ordering operator<=>(Element const &other) const
  {
    return std::lexicographical_compare_three_way(
      _coords.begin(), _coords.end(),
      other._coords.begin(), other._coords.end());
  }

  std::size_t hash() const
  {
    std::size_t seed = _coords.size();
    for (auto c : _coords)
      seed ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ull +
              (seed << 6) + (seed >> 2);
    return seed;
  }

private:
  Storage _coords;
};

} // namespace glued

template<>
struct std::hash<glued::Element>
{
  std::size_t operator()(glued::Element const &e) const noexcept
  { return e.hash(); }
};
