#pragma once

// Reference computations used to check the library. They rely only on the
// factor group laws and on plain permutation arrays, never on the glued
// product arithmetic under test.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include <glued/dense_perm.hpp>
#include <glued/group.hpp>
#include <glued/point.hpp>
#include <glued/pv.hpp>

namespace oracle
{

/// g(h(a(p))) straight from the definition of the pointed union action.
inline glued::Point act(glued::Group const &G, glued::Group const &H,
                        glued::PvElement const &s, glued::Point const &p)
{
  using glued::Point;
  using glued::Side;
  Point q = s.residual(p);
  if (q.is_base() || q.side() == Side::h) {
    auto y = H.multiply(s.h, q.element_on(Side::h, H));
    q = Point::on(Side::h, H, y);
  }
  if (q.is_base() || q.side() == Side::g) {
    auto x = G.multiply(s.g, q.element_on(Side::g, G));
    q = Point::on(Side::g, G, x);
  }
  return q;
}

/// Sign by counting inversions.
inline int sign_by_inversions(std::vector<std::uint32_t> const &images)
{
  std::size_t inv = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      inv += images[i] > images[j];
  return inv % 2 ? -1 : 1;
}

/// Order of the group generated by `gens`, by closing under multiplication.
inline std::uint64_t closure_order(std::vector<glued::DensePerm> const &gens,
                                   std::size_t degree)
{
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> frontier;
  std::vector<std::uint32_t> id(degree);
  for (std::uint32_t i = 0; i < degree; ++i)
    id[i] = i;
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    auto x = std::move(frontier.back());
    frontier.pop_back();
    for (auto const &g : gens) {
      std::vector<std::uint32_t> y(degree);
      for (std::size_t i = 0; i < degree; ++i)
        y[i] = g[x[i]];
      if (seen.insert(y).second)
        frontier.push_back(std::move(y));
    }
  }
  return seen.size();
}

inline std::uint64_t factorial(unsigned n)
{
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i)
    r *= i;
  return r;
}

} // namespace oracle
