#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "point.hpp"
#include "pv.hpp"

namespace glued
{

// A vertex of the cube complex: a subset v of the pointed union with
// v symmetric-difference G finite. Only that difference is stored, split
// into the G-points missing from v and the H-points added to it.
class CubeVertex
{
public:
  /// The vertex G itself.
  CubeVertex() = default;

  /// Throws PreconditionError unless removed lies in G (base included) and
  /// added lies in H minus the basepoint.
  static CubeVertex from_sets(std::vector<Point> removed,
                              std::vector<Point> added);
  /// G symmetric-difference `toggled`.
  static CubeVertex toggle(std::vector<Point> toggled);

  std::vector<Point> const &removed() const { return _removed; }
  std::vector<Point> const &added() const { return _added; }
  /// Every point of v symmetric-difference G, sorted.
  std::vector<Point> toggled() const;

  /// Membership of p in the represented set.
  bool contains(Point const &p) const;

  bool operator==(CubeVertex const &) const = default;
  std::strong_ordering operator<=>(CubeVertex const &other) const;

private:
  std::vector<Point> _removed;
  std::vector<Point> _added;
};

/// |v \ G| - |G \ v|.
std::int64_t s_invariant(CubeVertex const &v);

/// The vertex sigma(v). Both-infinite regime.
CubeVertex act_vertex(PvContext const &ctx, PvElement const &sigma,
                      CubeVertex const &v);

/// |v symmetric-difference w|.
std::size_t distance(CubeVertex const &v, CubeVertex const &w);
inline bool adjacent(CubeVertex const &v, CubeVertex const &w)
{ return distance(v, w) == 1; }

bool fixed_by_g(CubeVertex const &v);
bool fixed_by_h(CubeVertex const &v);

/// The first |n| points of H minus e (n >= 0) or of G (n < 0), in ball
/// order.
std::vector<Point> template_points(PvContext const &ctx, std::int64_t n);
/// The base vertex of the fiber s = n: G plus or minus template_points.
CubeVertex template_vertex(PvContext const &ctx, std::int64_t n);

/// An element of [G,H] carrying v to w, composed through the template
/// vertex of their common fiber. Throws FiberMismatch when s differs.
PvElement transporter(PvContext const &ctx, CubeVertex const &v,
                      CubeVertex const &w);

/// The 1-skeleton around G: all vertices at distance <= radius from G whose
/// toggled points have payload length <= payload_bound, and the edges
/// between them.
struct CubeBall
{
  std::vector<CubeVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

CubeBall cube_ball(PvContext const &ctx, std::size_t radius,
                   std::int64_t payload_bound);

/// All adjacent pairs (x, y) in the ball with x fixed by G and y fixed by H.
std::vector<std::pair<CubeVertex, CubeVertex>>
adjacent_fixed_pairs(CubeBall const &ball);

/// The alternating word ... G:g H:h G:g H:h of length L, rightmost letter
/// H:h. Its distance from G grows without bound in L over Z*Z.
Word growth_witness(Element const &g, Element const &h, std::size_t length);

/// "{e g:1 h:2}" lists the toggled points; "{}" is G.
std::string format_vertex(CubeVertex const &v, PointFormat const &fmt);
CubeVertex parse_vertex(std::string_view text, PointFormat const &fmt);

std::string to_dot(CubeBall const &ball, PointFormat const &fmt);
/// One {"removed": [...], "added": [...], "s": n} record per vertex.
std::string to_jsonl(CubeBall const &ball, PointFormat const &fmt);

} // namespace glued
