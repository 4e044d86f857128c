#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "point.hpp"

namespace glued
{

enum class Parity
{
  even,
  odd
};

inline Parity operator^(Parity a, Parity b)
{ return a == b ? Parity::even : Parity::odd; }

// A finitely supported permutation of the pointed union. Only moved points
// are stored, sorted by source point; the identity is the empty mapping.
class FinPerm
{
public:
  using Mapping = std::vector<std::pair<Point, Point>>;

  FinPerm() = default;

  static FinPerm identity() { return FinPerm(); }

  /// Pairs p -> q; fixed pairs are dropped. Throws unless the pairs form a
  /// bijection of their key set.
  static FinPerm from_mapping(Mapping pairs);

  /// Each cycle (p0 p1 ... pk) maps p_i -> p_{i+1} and pk -> p0. Cycles
  /// must be pairwise disjoint.
  static FinPerm from_cycles(std::vector<std::vector<Point>> const &cycles);

  /// p -> q -> r -> p; throws PreconditionError unless pairwise distinct.
  static FinPerm three_cycle(Point const &p, Point const &q, Point const &r);
  static FinPerm transposition(Point const &p, Point const &q);

  Point operator()(Point const &p) const;

  bool is_identity() const { return _moved.empty(); }
  std::size_t support_size() const { return _moved.size(); }
  Mapping const &mapping() const { return _moved; }
  std::vector<Point> support() const;
  bool moves(Point const &p) const;

  FinPerm inverse() const;
  Parity parity() const;

  /// Cycles of length >= 2, each starting at its least point, ordered by
  /// that point.
  std::vector<std::vector<Point>> cycles() const;

  /// lcm of the cycle lengths.
  std::uint64_t order() const;

  /// Transport through a bijection f of the ambient set: the result maps
  /// f(p) to f(this(p)), i.e. it is f * this * f^-1.
  template<typename F>
  FinPerm relabel(F &&f) const
  {
    Mapping pairs;
    pairs.reserve(_moved.size());
    for (auto const &[from, to] : _moved)
      pairs.emplace_back(f(from), f(to));
    return from_sorted_or_unsorted(std::move(pairs));
  }

  bool operator==(FinPerm const &other) const = default;

  std::string format(PointFormat const &fmt) const;
  static FinPerm parse(std::string_view text, PointFormat const &fmt);

  /// Parses cycles starting at `pos`; advances `pos` past the last cycle.
  static FinPerm parse_prefix(std::string_view text, std::size_t &pos,
                              PointFormat const &fmt);

  /// Lengths of the nontrivial cycles, in order of their least point.
  std::vector<std::size_t> cycle_lengths() const;

private:
  friend FinPerm compose(FinPerm const &a, FinPerm const &b);

  static FinPerm from_sorted_or_unsorted(Mapping pairs);

  Mapping _moved;
};

/// (a * b)(p) = a(b(p)).
FinPerm compose(FinPerm const &a, FinPerm const &b);

inline FinPerm operator*(FinPerm const &a, FinPerm const &b)
{ return compose(a, b); }

inline Parity parity(FinPerm const &a) { return a.parity(); }

inline FinPerm three_cycle(Point const &p, Point const &q, Point const &r)
{ return FinPerm::three_cycle(p, q, r); }

} // namespace glued
