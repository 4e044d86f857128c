#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "group.hpp"
#include "point.hpp"
#include "pv.hpp"

namespace glued
{

inline constexpr std::size_t default_word_length_cap = 20;

struct SemigroupReport
{
  std::uint64_t words_checked = 0;
  bool distinct = true;
  /// First two words (as "G:.. H:.." text) with equal normal forms.
  std::optional<std::pair<std::string, std::string>> collision;
};

/// Normalizes every nonempty word of length <= L in the letters g and h
/// and reports whether all of them are distinct. Both letters must have
/// infinite order.
SemigroupReport free_semigroup_check(PvContext const &ctx, Element const &g,
                                     Element const &h, std::size_t length,
                                     std::size_t cap = default_word_length_cap);

// A finite subset of G, away from the basepoint.
struct FolnerSet
{
  std::vector<Point> points; // sorted
  std::int64_t n = 0;
  Element shift;
};

/// Z: [-n..n] shifted by n+1, i.e. {1..2n+1}. Z^d: the box [-n..n]^d
/// shifted by n+1 in the first coordinate.
FolnerSet folner_set(GroupHandle const &group, std::int64_t n);

/// |sigma F symmetric-difference F| / |F|.
boost::rational<std::int64_t> folner_ratio(PvContext const &ctx,
                                           FolnerSet const &set,
                                           PvElement const &sigma);

/// "p/q"
std::string format_rational(boost::rational<std::int64_t> const &r);

} // namespace glued
