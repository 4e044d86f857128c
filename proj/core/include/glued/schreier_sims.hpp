#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dense_perm.hpp"

namespace glued
{

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t default_degree_cap = 64;

// Base and strong generating set of a permutation group of {0..N-1},
// built by the deterministic Schreier-Sims algorithm with sifting.
class StabilizerChain
{
public:
  StabilizerChain(std::vector<DensePerm> const &generators, std::size_t degree);

  BigInt order() const;
  bool contains(DensePerm const &perm) const;

  std::vector<std::uint32_t> base() const;
  std::size_t degree() const { return _degree; }

private:
  struct Level
  {
    std::uint32_t base_point;
    std::vector<DensePerm> generators;
    std::vector<std::uint32_t> orbit;
    std::vector<std::optional<DensePerm>> transversal;
    std::vector<std::vector<bool>> tested; // [orbit index][generator index]
  };

  void add_level(std::uint32_t base_point);
  void update_orbit(Level &level) const;

  /// Strips `perm` through levels [from, end). Returns the residue and the
  /// level where sifting stopped (levels.size() if it went through).
  std::pair<DensePerm, std::size_t> sift(DensePerm perm, std::size_t from) const;

  std::size_t _degree;
  std::vector<Level> _levels;
};

/// Exact order of the group generated by `generators`, all of degree N.
/// Throws PreconditionError on mixed degrees and BudgetError when
/// N > degree_cap.
BigInt schreier_sims_order(std::vector<DensePerm> const &generators,
                           std::size_t degree_cap = default_degree_cap);

BigInt factorial(unsigned n);

} // namespace glued
