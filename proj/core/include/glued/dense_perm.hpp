#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fin_perm.hpp"

namespace glued
{

// A permutation of {0, ..., N-1} stored as its image array.
class DensePerm
{
public:
  DensePerm() = default;
  explicit DensePerm(std::size_t degree);

  /// Throws PreconditionError unless `images` is a bijection.
  explicit DensePerm(std::vector<std::uint32_t> images);

  static DensePerm identity(std::size_t degree) { return DensePerm(degree); }
  static DensePerm from_cycles(std::size_t degree,
                               std::vector<std::vector<std::uint32_t>> const &cycles);

  std::size_t degree() const { return _images.size(); }
  std::uint32_t operator[](std::size_t i) const { return _images[i]; }
  std::vector<std::uint32_t> const &images() const { return _images; }

  bool is_identity() const;
  DensePerm inverse() const;
  Parity parity() const;
  std::uint64_t order() const;

  /// Cycles of length >= 2 in "(0 1 2)(3 4)" form, "()" for the identity.
  std::string str() const;

  bool operator==(DensePerm const &) const = default;
  auto operator<=>(DensePerm const &) const = default;

private:
  friend DensePerm compose(DensePerm const &a, DensePerm const &b);

  std::vector<std::uint32_t> _images;
};

/// (a * b)(i) = a(b(i)).
DensePerm compose(DensePerm const &a, DensePerm const &b);

inline DensePerm operator*(DensePerm const &a, DensePerm const &b)
{ return compose(a, b); }

} // namespace glued

template<>
struct std::hash<glued::DensePerm>
{
  std::size_t operator()(glued::DensePerm const &p) const noexcept
  {
    std::size_t seed = p.degree();
    for (auto v : p.images())
      seed = seed * 1000003u ^ v;
    return seed;
  }
};
