#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dense_perm.hpp"
#include "group.hpp"
#include "point.hpp"
#include "schreier_sims.hpp"

namespace glued
{

// Indexing of the pointed union of two finite groups: 0 is the basepoint,
// then the non-identity elements of G in enumeration order, then those of H.
class FiniteUnion
{
public:
  FiniteUnion(GroupHandle g, GroupHandle h);

  std::size_t degree() const { return _points.size(); }
  Group const &g() const { return *_g; }
  Group const &h() const { return *_h; }
  GroupHandle const &g_handle() const { return _g; }
  GroupHandle const &h_handle() const { return _h; }

  std::uint32_t index_of(Point const &p) const;
  Point const &point_at(std::uint32_t i) const { return _points[i]; }
  std::vector<Point> const &points() const { return _points; }

  /// Left translation by x on its own block, identity on the other.
  DensePerm translation(Side side, Element const &x) const;

private:
  GroupHandle _g;
  GroupHandle _h;
  std::vector<Point> _points;
  std::unordered_map<Point, std::uint32_t> _index;
};

enum class FiniteClass
{
  alternating,
  symmetric
};

/// "Alt(N)" or "Sym(N)".
std::string describe(FiniteClass cls, std::size_t degree);

/// One generator per non-identity element of each factor, or per element of
/// the given generator lists.
std::vector<DensePerm>
realize_finite(FiniteUnion const &u,
               std::optional<std::vector<Element>> const &g_generators = {},
               std::optional<std::vector<Element>> const &h_generators = {});

std::vector<DensePerm>
realize_finite(GroupHandle const &g, GroupHandle const &h,
               std::size_t degree_cap = default_degree_cap);

/// Permutation of {0..|G|-1} induced by left multiplication by x, with
/// elements indexed as in Group::elements().
DensePerm regular_translation(Group const &group, Element const &x);

/// Sign of the left translation by x, from the element order alone:
/// (-1)^((|G|/k)(k-1)) with k the order of x.
int translation_sign(Group const &group, Element const &x);

/// Sym when G or H has a nontrivial cyclic 2-Sylow, Alt otherwise.
FiniteClass classify(Group const &g, Group const &h);

struct Verification
{
  FiniteClass predicted;
  std::size_t degree;
  BigInt order;    // from Schreier-Sims
  BigInt expected; // N! or N!/2
  bool ok;
};

Verification verify_classification(GroupHandle const &g, GroupHandle const &h,
                                   std::size_t degree_cap = default_degree_cap);

} // namespace glued
